#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "catq/adjunction.hpp"
#include "catq/category.hpp"
#include "catq/functor.hpp"

namespace catq {

// An ambient category with a coreflective/reflective pair of full
// subcategories, optionally carrying expected checker verdicts (keyed by
// slugified condition label).
struct InstanceBundle {
  std::string name;
  CategoryRef ambient;
  Subcategory coreflective;  // M-side
  Subcategory reflective;    // N-side
  std::map<std::string, bool> expected;
  std::string provenance;
};

// Poset as a category: one morphism x -> y iff leq(x, y); composition is
// forced. leq must be reflexive, antisymmetric, and transitive (checked,
// with witness). Morphisms are named le(x,y).
CategoryRef poset_category(const std::string& name,
                           const std::vector<std::string>& elements,
                           const std::vector<std::vector<bool>>& leq,
                           const Config& config = default_config());

// Finite topology on points 1..n, opens given as bitmasks (bit k = point
// k+1). Ambient is the powerset poset; the coreflective side is the opens,
// the reflective side the closeds. Subsets print as {}, {1}, {1,2}, ...
InstanceBundle topology_instance(int points,
                                 const std::vector<std::uint32_t>& opens,
                                 const std::string& name = "topology");

// Same ambient, but restricted to the regular pair: opens u with
// int(cl(u)) = u and closeds c with cl(int(c)) = c.
InstanceBundle regular_pair_instance(int points,
                                     const std::vector<std::uint32_t>& opens,
                                     const std::string& name = "regular");

// Verifies f(x) <= y iff x <= g(y) exhaustively and packages the Galois
// connection as an adjunction; throws NotAdjoint with the failing pair.
Adjunction galois_instance(const Functor& f, const Functor& g);

// Finite layered category over a base: objects (a, level) for levels
// 0..depth, one morphism (a,i) -> (b,j) per base morphism a -> b whenever
// i <= j (level 0 maps out to everything). The level-0 layer is
// coreflective, the level-depth layer reflective, and the two restrict to
// mutually inverse isomorphisms.
InstanceBundle layered_instance(const CategoryRef& base, int depth);

// Deterministic per seed: a random poset (<= max_elements) plus random
// closure- and kernel-operator images as the subcategory pair. Reflectivity
// and coreflectivity hold by construction.
InstanceBundle random_instance(std::uint64_t seed, int max_elements);

// Named fixtures: sierpinski, regsierp, discrete2, partition4,
// layered-chain2, chain3-singletons, diamond.
std::vector<std::string> fixture_names();
InstanceBundle fixture(const std::string& name);

// Opposite ambient with the two subcategories' roles swapped; expected
// verdicts are dropped (callers compare computed reports instead).
InstanceBundle dual_bundle(const InstanceBundle& b);

// Small helpers shared by fixtures and tests.
CategoryRef chain_category(const std::string& name, int n);  // 0 < 1 < ... n-1

}  // namespace catq
