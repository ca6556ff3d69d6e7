#pragma once

#include <optional>

#include "catq/adjunction.hpp"
#include "catq/functor.hpp"

namespace catq {

// The comma category F|G for F : A -> D, G : B -> D, with back-references
// from every constructed object/morphism to its constituents.
class CommaCategory {
 public:
  struct Triple {
    ObjId x;  // object of A
    ObjId y;  // object of B
    MorId f;  // F(x) -> G(y) in D
  };
  struct Pair {
    MorId k;  // in A
    MorId h;  // in B
  };

  CommaCategory(Functor left, Functor right);

  const CategoryRef& category() const { return cat_; }
  const Functor& left() const { return left_; }
  const Functor& right() const { return right_; }

  const Triple& triple(ObjId comma_object) const {
    return triples_[comma_object];
  }
  const Pair& pair(MorId comma_morphism) const {
    return pairs_[comma_morphism];
  }
  ObjId find_object(ObjId x, ObjId y, MorId f) const;

 private:
  Functor left_;
  Functor right_;
  CategoryRef cat_;
  std::vector<Triple> triples_;
  std::vector<Pair> pairs_;
};

// Throws ShapeMismatch unless F and G share a codomain.
CommaCategory comma(const Functor& F, const Functor& G);

// Initial object of x|G (resp. final object of G|x) with its universal
// morphism; declaration-order least when several exist.
std::optional<UniversalMorphism> universal_from(ObjId x, const Functor& G);
std::optional<UniversalMorphism> universal_to(const Functor& G, ObjId x);

// The Lemma-style transport isomorphism FP|Q ~= P|GQ induced by F -| G:
// (a, b, f) |-> (a, b, phi(f)), morphisms fixed componentwise. Both
// composites are identity functors.
struct TransportIso {
  CommaCategory source;  // FP|Q
  CommaCategory target;  // P|GQ
  Functor forward;
  Functor backward;
};

TransportIso transport_iso(const Functor& P, const Adjunction& adj,
                           const Functor& Q);

}  // namespace catq
