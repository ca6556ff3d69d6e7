#pragma once

#include <optional>

#include "catq/functor.hpp"
#include "catq/report.hpp"

namespace catq {

// A universal morphism (u, m): for universal_from, u is an object of the
// functor's source and m: x -> G(u) is initial in x|G; dually for
// universal_to, m: G(u) -> x is final in G|x.
struct UniversalMorphism {
  ObjId object;
  MorId morphism;
};

// An adjunction left -| right, stored with both unit and counit. The hom
// bijection phi is derived on demand.
struct Adjunction {
  Functor left;   // F : C -> D
  Functor right;  // G : D -> C
  NatTransformation unit;    // 1_C => G.F
  NatTransformation counit;  // F.G => 1_D

  const CategoryRef& source() const { return left.source; }
  const CategoryRef& sink() const { return left.target; }

  // phi(g) = G(g) . unit_x for g : Fx -> y.
  MorId phi(ObjId x, MorId g) const;
  // phi_inverse(f) = counit_y . F(f) for f : x -> Gy.
  MorId phi_inverse(ObjId y, MorId f) const;
};

Adjunction identity_adjunction(CategoryRef c);

// Assembles F -| G from a per-object family of universal morphisms to G
// (family indexed by objects of G's target). Each family member is
// re-verified as initial; F is extended to morphisms by unique
// factorization and the counit is derived as phi_inverse(1_Gy).
Adjunction adjunction_from_universal_morphisms(
    const Functor& G, const std::vector<UniversalMorphism>& family);

// Dual assembly: G extended from universal morphisms (Gy, counit_y) from F.
Adjunction adjunction_to_universal_morphisms(
    const Functor& F, const std::vector<UniversalMorphism>& family);

// Triangle identities, bijectivity of phi, and binaturality, each as a
// report row with a first-failure witness.
ConditionReport verify_adjunction(const Adjunction& adj);

// compose_adjunctions(F -| G, H -| K) = H.F -| G.K (the left adjoints
// compose source-first).
Adjunction compose_adjunctions(const Adjunction& inner,
                               const Adjunction& outer);

// The six unit/counit characterizations, each computed on both sides
// (functor properties vs componentwise morphism classification). A pair
// disagreeing is an engine bug and throws InternalInconsistency.
ConditionReport lemma_properties_report(const Adjunction& adj);

struct EquivalenceVerdict {
  bool holds = false;
  ObjId unit_witness = kNoObj;    // first non-iso unit component
  ObjId counit_witness = kNoObj;  // first non-iso counit component
};

EquivalenceVerdict is_adjoint_equivalence(const Adjunction& adj);

}  // namespace catq
