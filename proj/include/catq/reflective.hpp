#pragma once

#include <cstdint>
#include <optional>

#include "catq/adjunction.hpp"
#include "catq/comma.hpp"
#include "catq/functor.hpp"
#include "catq/report.hpp"

namespace catq {

// A reflective subcategory with its synthesized reflector N -| inclusion.
// theta_y = 1_y is forced whenever 1_y is universal, so N restricted to the
// subcategory is literally the identity.
struct ReflectiveStructure {
  CategoryRef ambient;
  SubcategoryView view;      // the subcategory as a category + inclusion J
  Functor reflector;         // N : ambient -> view.cat
  NatTransformation unit;    // theta : 1_C => J.N
  NatTransformation counit;  // rho : N.J => 1_sub

  Adjunction adjunction() const;  // N -| J
};

struct CoreflectiveStructure {
  CategoryRef ambient;
  SubcategoryView view;      // inclusion I
  Functor coreflector;       // M : ambient -> view.cat
  NatTransformation counit;  // psi : I.M => 1_C
  NatTransformation unit;    // sigma : 1_sub => M.I

  Adjunction adjunction() const;  // I -| M
};

// Throws NotReflective listing every object without a universal morphism.
ReflectiveStructure find_reflector(CategoryRef c, const Subcategory& sub);
CoreflectiveStructure find_coreflector(CategoryRef c, const Subcategory& sub);

// The composite adjunction N|M -| M|N between the two subcategories.
Adjunction composite_adjunction(const ReflectiveStructure& refl,
                                const CoreflectiveStructure& corefl);

// (x, theta_x) final in M|Nx for every x in the coreflective subcategory.
ConditionReport check_property_F(const ReflectiveStructure& refl,
                                 const CoreflectiveStructure& corefl);
// (y, psi_y) initial in My|N for every y in the reflective subcategory.
ConditionReport check_property_I(const ReflectiveStructure& refl,
                                 const CoreflectiveStructure& corefl);

// All eight conditions, each computed independently; intra-group
// disagreement throws InternalInconsistency.
ConditionReport check_theorem_main(const ReflectiveStructure& refl,
                                   const CoreflectiveStructure& corefl);

// Adjoint-equivalence verdict cross-checked against (F) and (I).
ConditionReport check_adjoint_equivalence(const ReflectiveStructure& refl,
                                          const CoreflectiveStructure& corefl);

// The factorization hypothesis and its four equivalent formulations.
ConditionReport check_hypothesis_factor_initial(
    const ReflectiveStructure& refl, const CoreflectiveStructure& corefl);

// Natural isomorphisms N ~= N|M . M and M ~= M|N . N, the re-derived
// reflector/coreflector, and the four-way faithfulness equivalence.
// Requires (F), (I), and the factorization hypothesis; throws
// PreconditionUnmet otherwise.
ConditionReport check_section5_corollaries(const ReflectiveStructure& refl,
                                           const CoreflectiveStructure& corefl);

// General form over arbitrary functors I, J with N -| J and I -| M.
ConditionReport theorem31_report(const Functor& I, const Functor& J,
                                 const Adjunction& adjNJ,
                                 const Adjunction& adjIM);

// The label a condition turns into under ambient-category duality (e.g.
// "Prop (F)" <-> "Prop (I)", "Thm-main (i)" <-> "Thm-main (v)"); labels
// of self-dual conditions map to themselves.
std::string dual_label(const std::string& label);

struct Remark58Config {
  std::uint64_t seed = 0;
  int budget = 0;
  int max_elements = 6;
};

struct Remark58Witness {
  std::string provenance;       // generator description of the instance
  std::string witness;          // object whose theta is not epi / psi not mono
  std::string failed_property;  // "theta-not-epi" or "psi-not-mono"
};

// Samples instances satisfying the standing hypotheses plus psi-epi and
// theta-mono, looking for theta_x not epi or psi_x not mono. Exploratory:
// no outcome is asserted.
std::optional<Remark58Witness> search_counterexample_remark58(
    const Remark58Config& config);

}  // namespace catq
