#pragma once

#include <cstddef>

namespace catq {

// Size cap keeping the cubic associativity sweep tractable.
struct Config {
  std::size_t max_morphisms = 10000;
};

// Default config; honours the CATQ_MAX_SIZE environment variable on first use.
const Config& default_config();

}  // namespace catq
