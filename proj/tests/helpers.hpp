#pragma once

#include <vector>

#include "catq/instances.hpp"

namespace catq::testing {

// Monotone map between chain categories (objects x0 < x1 < ...) given by
// object images; morphisms are forced.
inline Functor chain_functor(const CategoryRef& src, const CategoryRef& dst,
                             const std::vector<int>& img) {
  Functor f;
  f.source = src;
  f.target = dst;
  f.object_map.resize(src->object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(src->object_count()); ++x)
    f.object_map[x] = static_cast<ObjId>(img[x]);
  f.morphism_map.resize(src->morphism_count());
  for (MorId m = 0; m < static_cast<MorId>(src->morphism_count()); ++m) {
    ObjId d = f.object_map[src->morphism(m).dom];
    ObjId c = f.object_map[src->morphism(m).cod];
    f.morphism_map[m] =
        d == c ? dst->identity(d) : dst->hom(d, c).front();
  }
  f.validate();
  return f;
}

}  // namespace catq::testing
