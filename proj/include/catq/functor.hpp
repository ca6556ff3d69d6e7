#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catq/category.hpp"

namespace catq {

inline bool same_category(const CategoryRef& a, const CategoryRef& b) {
  return a == b || *a == *b;
}

// A functor between validated finite categories, stored as explicit object
// and morphism maps (indexed by source ids).
struct Functor {
  CategoryRef source;
  CategoryRef target;
  std::vector<ObjId> object_map;
  std::vector<MorId> morphism_map;

  ObjId on_object(ObjId x) const { return object_map[x]; }
  MorId on_morphism(MorId f) const { return morphism_map[f]; }

  // Checks dom/cod preservation, identities, and all composites; throws
  // ValidationError with the witnessing morphism (pair).
  void validate() const;

  friend bool operator==(const Functor& a, const Functor& b) {
    return same_category(a.source, b.source) &&
           same_category(a.target, b.target) &&
           a.object_map == b.object_map && a.morphism_map == b.morphism_map;
  }
};

Functor identity_functor(CategoryRef c);

// The functor sending everything in `source` to `at` and its identity.
Functor constant_functor(CategoryRef source, CategoryRef target, ObjId at);

// Builds a functor from name-level maps (unlisted identities are implied).
Functor make_functor(CategoryRef source, CategoryRef target,
                     const std::vector<std::pair<std::string, std::string>>& objects,
                     const std::vector<std::pair<std::string, std::string>>& morphisms);

// compose_functors(F, G) applies F first: the result is G after F.
Functor compose_functors(const Functor& first, const Functor& then);

struct FunctorProps {
  bool full = false;
  bool faithful = false;
  bool essentially_surjective = false;
};

// Exhaustive hom-set comparison; essential surjectivity enumerates iso
// classes of the target by union-find.
FunctorProps functor_props(const Functor& f);

// A natural transformation between parallel functors; only the component
// family is stored, naturality is checked.
struct NatTransformation {
  Functor source;
  Functor target;
  std::vector<MorId> components;  // per source-category object

  MorId at(ObjId x) const { return components[x]; }
  void validate() const;

  friend bool operator==(const NatTransformation& a,
                         const NatTransformation& b) {
    return a.source == b.source && a.target == b.target &&
           a.components == b.components;
  }
};

NatTransformation identity_nat(const Functor& f);

NatTransformation make_nat(Functor source, Functor target,
                           std::vector<MorId> components);

// second after first, componentwise.
NatTransformation vertical_compose(const NatTransformation& second,
                                   const NatTransformation& first);

// whisker(F, t): components F(t_x);  whisker(t, F): components t_{Fx}.
NatTransformation whisker(const Functor& post, const NatTransformation& t);
NatTransformation whisker(const NatTransformation& t, const Functor& pre);

struct NatIsoVerdict {
  bool holds = false;
  ObjId witness = kNoObj;  // first non-iso component, declaration order
};

NatIsoVerdict is_natural_isomorphism(const NatTransformation& t);

// Materialization of a subcategory as a category of its own, with the same
// object/morphism names, plus the inclusion functor.
struct SubcategoryView {
  Subcategory sub;
  CategoryRef cat;
  Functor inclusion;
};

SubcategoryView materialize(const Subcategory& s);

}  // namespace catq
