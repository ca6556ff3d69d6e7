#include "catq/reflective.hpp"

#include <utility>

#include "catq/instances.hpp"

namespace catq {

namespace {

bool universal_from_at(ObjId x, const Functor& G, const UniversalMorphism& um) {
  const FinCategory& c = *G.target;
  for (ObjId y = 0; y < static_cast<ObjId>(G.source->object_count()); ++y)
    for (MorId f : c.hom(x, G.on_object(y))) {
      int n = 0;
      for (MorId g : G.source->hom(um.object, y))
        if (c.compose(G.on_morphism(g), um.morphism) == f) ++n;
      if (n != 1) return false;
    }
  return true;
}

bool universal_to_at(const Functor& G, ObjId x, const UniversalMorphism& um) {
  const FinCategory& c = *G.target;
  for (ObjId y = 0; y < static_cast<ObjId>(G.source->object_count()); ++y)
    for (MorId f : c.hom(G.on_object(y), x)) {
      int n = 0;
      for (MorId g : G.source->hom(y, um.object))
        if (c.compose(um.morphism, G.on_morphism(g)) == f) ++n;
      if (n != 1) return false;
    }
  return true;
}

// Ambient object id -> subcategory-category object id (kNoObj outside).
std::vector<ObjId> ambient_to_sub(const SubcategoryView& view) {
  std::vector<ObjId> out(view.inclusion.target->object_count(), kNoObj);
  for (ObjId s = 0; s < static_cast<ObjId>(view.cat->object_count()); ++s)
    out[view.inclusion.on_object(s)] = s;
  return out;
}

Functor const_at(const CategoryRef& c, ObjId x) {
  return constant_functor(terminal_category(), c, x);
}

// First hom-pair witnessing that F is not full or not faithful.
std::optional<std::string> fullness_witness(const Functor& F) {
  const FinCategory& src = *F.source;
  const FinCategory& dst = *F.target;
  for (ObjId x = 0; x < static_cast<ObjId>(src.object_count()); ++x)
    for (ObjId y = 0; y < static_cast<ObjId>(src.object_count()); ++y) {
      const auto& from = src.hom(x, y);
      const auto& to = dst.hom(F.on_object(x), F.on_object(y));
      std::vector<bool> hit(to.size(), false);
      bool injective = true;
      for (std::size_t i = 0; i < from.size(); ++i) {
        MorId img = F.on_morphism(from[i]);
        for (std::size_t j = 0; j < to.size(); ++j)
          if (to[j] == img) hit[j] = true;
        for (std::size_t j = i + 1; j < from.size(); ++j)
          if (F.on_morphism(from[j]) == img) injective = false;
      }
      bool surjective = true;
      for (bool h : hit) surjective = surjective && h;
      if (!surjective || !injective)
        return "hom(" + src.object_name(x) + ", " + src.object_name(y) + ")";
    }
  return std::nullopt;
}

struct Verdict {
  bool holds = true;
  std::optional<std::string> witness;
  void fail(std::string w) {
    if (holds) {
      holds = false;
      witness = std::move(w);
    }
  }
};

void require_agreement(std::initializer_list<std::pair<const char*, bool>> vs,
                       const char* group) {
  bool first = vs.begin()->second;
  for (const auto& [label, v] : vs)
    if (v != first)
      throw InternalInconsistency(std::string("conditions of ") + group +
                                  " disagree at " + label +
                                  ": engine bug, never the instance");
}

}  // namespace

Adjunction ReflectiveStructure::adjunction() const {
  return Adjunction{reflector, view.inclusion, unit, counit};
}

Adjunction CoreflectiveStructure::adjunction() const {
  return Adjunction{view.inclusion, coreflector, unit, counit};
}

ReflectiveStructure find_reflector(CategoryRef c, const Subcategory& sub) {
  SubcategoryView view = materialize(sub);
  std::vector<ObjId> sub_of = ambient_to_sub(view);

  std::vector<UniversalMorphism> family(c->object_count());
  std::vector<std::string> missing;
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
    // Normalization: theta_y = 1_y whenever 1_y is universal.
    if (sub_of[x] != kNoObj) {
      UniversalMorphism forced{sub_of[x], c->identity(x)};
      if (universal_from_at(x, view.inclusion, forced)) {
        family[x] = forced;
        continue;
      }
    }
    auto um = universal_from(x, view.inclusion);
    if (!um) {
      missing.push_back(c->object_name(x));
      continue;
    }
    family[x] = *um;
  }
  if (!missing.empty())
    throw NotReflective("subcategory is not reflective", std::move(missing));

  Adjunction adj = adjunction_from_universal_morphisms(view.inclusion, family);
  return ReflectiveStructure{std::move(c), std::move(view),
                             std::move(adj.left), std::move(adj.unit),
                             std::move(adj.counit)};
}

CoreflectiveStructure find_coreflector(CategoryRef c, const Subcategory& sub) {
  SubcategoryView view = materialize(sub);
  std::vector<ObjId> sub_of = ambient_to_sub(view);

  std::vector<UniversalMorphism> family(c->object_count());
  std::vector<std::string> missing;
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
    if (sub_of[x] != kNoObj) {
      UniversalMorphism forced{sub_of[x], c->identity(x)};
      if (universal_to_at(view.inclusion, x, forced)) {
        family[x] = forced;
        continue;
      }
    }
    auto um = universal_to(view.inclusion, x);
    if (!um) {
      missing.push_back(c->object_name(x));
      continue;
    }
    family[x] = *um;
  }
  if (!missing.empty())
    throw NotCoreflective("subcategory is not coreflective",
                          std::move(missing));

  Adjunction adj = adjunction_to_universal_morphisms(view.inclusion, family);
  return CoreflectiveStructure{std::move(c), std::move(view),
                               std::move(adj.right), std::move(adj.counit),
                               std::move(adj.unit)};
}

Adjunction composite_adjunction(const ReflectiveStructure& refl,
                                const CoreflectiveStructure& corefl) {
  if (!same_category(refl.ambient, corefl.ambient))
    throw ShapeMismatch("composite_adjunction: different ambient categories");
  return compose_adjunctions(corefl.adjunction(), refl.adjunction());
}

namespace {

// (x, theta_{Ix}) final in I | (target object), for x ranging over the
// coreflective side.
Verdict property_F_verdict(const ReflectiveStructure& refl,
                           const CoreflectiveStructure& corefl) {
  const CategoryRef& c = refl.ambient;
  Verdict v;
  for (ObjId x = 0; x < static_cast<ObjId>(corefl.view.cat->object_count());
       ++x) {
    ObjId ax = corefl.view.inclusion.on_object(x);
    ObjId nx_amb =
        refl.view.inclusion.on_object(refl.reflector.on_object(ax));
    CommaCategory cc(corefl.view.inclusion, const_at(c, nx_amb));
    ObjId candidate = cc.find_object(x, 0, refl.unit.at(ax));
    if (candidate == kNoObj || !is_final_object(*cc.category(), candidate)) {
      v.fail(c->object_name(ax));
      break;
    }
  }
  return v;
}

Verdict property_I_verdict(const ReflectiveStructure& refl,
                           const CoreflectiveStructure& corefl) {
  const CategoryRef& c = refl.ambient;
  Verdict v;
  for (ObjId y = 0; y < static_cast<ObjId>(refl.view.cat->object_count());
       ++y) {
    ObjId ay = refl.view.inclusion.on_object(y);
    ObjId my_amb =
        corefl.view.inclusion.on_object(corefl.coreflector.on_object(ay));
    CommaCategory cc(const_at(c, my_amb), refl.view.inclusion);
    ObjId candidate = cc.find_object(0, y, corefl.counit.at(ay));
    if (candidate == kNoObj || !is_initial_object(*cc.category(), candidate)) {
      v.fail(c->object_name(ay));
      break;
    }
  }
  return v;
}

}  // namespace

ConditionReport check_property_F(const ReflectiveStructure& refl,
                                 const CoreflectiveStructure& corefl) {
  ConditionReport report;
  report.title = "property (F)";
  Verdict v = property_F_verdict(refl, corefl);
  report.add("Prop (F)", v.holds, "Prop 4.2 (F)", v.witness);
  return report;
}

ConditionReport check_property_I(const ReflectiveStructure& refl,
                                 const CoreflectiveStructure& corefl) {
  ConditionReport report;
  report.title = "property (I)";
  Verdict v = property_I_verdict(refl, corefl);
  report.add("Prop (I)", v.holds, "Prop 4.2 (I)", v.witness);
  return report;
}

ConditionReport check_theorem_main(const ReflectiveStructure& refl,
                                   const CoreflectiveStructure& corefl) {
  const FinCategory& msub = *corefl.view.cat;
  const FinCategory& nsub = *refl.view.cat;
  Adjunction adj = composite_adjunction(refl, corefl);

  Verdict i = property_F_verdict(refl, corefl);

  FunctorProps lp = functor_props(adj.left);
  Verdict ii;
  if (!(lp.full && lp.faithful)) ii.fail(fullness_witness(adj.left).value());

  NatIsoVerdict unit_iso = is_natural_isomorphism(adj.unit);
  Verdict iii;
  if (!unit_iso.holds) iii.fail(msub.object_name(unit_iso.witness));

  Verdict iv;
  for (ObjId x = 0; x < static_cast<ObjId>(msub.object_count()); ++x) {
    ObjId ax = corefl.view.inclusion.on_object(x);
    MorId m_theta = corefl.coreflector.on_morphism(refl.unit.at(ax));
    if (!morphism_class(msub, m_theta).is_iso) {
      iv.fail(refl.ambient->object_name(ax));
      break;
    }
  }

  require_agreement({{"(i)", i.holds},
                     {"(ii)", ii.holds},
                     {"(iii)", iii.holds},
                     {"(iv)", iv.holds}},
                    "Thm 4.3 (i)-(iv)");

  Verdict v = property_I_verdict(refl, corefl);

  FunctorProps rp = functor_props(adj.right);
  Verdict vi;
  if (!(rp.full && rp.faithful)) vi.fail(fullness_witness(adj.right).value());

  NatIsoVerdict counit_iso = is_natural_isomorphism(adj.counit);
  Verdict vii;
  if (!counit_iso.holds) vii.fail(nsub.object_name(counit_iso.witness));

  Verdict viii;
  for (ObjId y = 0; y < static_cast<ObjId>(nsub.object_count()); ++y) {
    ObjId ay = refl.view.inclusion.on_object(y);
    MorId n_psi = refl.reflector.on_morphism(corefl.counit.at(ay));
    if (!morphism_class(nsub, n_psi).is_iso) {
      viii.fail(refl.ambient->object_name(ay));
      break;
    }
  }

  require_agreement({{"(v)", v.holds},
                     {"(vi)", vi.holds},
                     {"(vii)", vii.holds},
                     {"(viii)", viii.holds}},
                    "Thm 4.3 (v)-(viii)");

  ConditionReport report;
  report.title = "equivalence characterizations";
  report.add("Thm-main (i)", i.holds, "Thm 4.3 (i)", i.witness);
  report.add("Thm-main (ii)", ii.holds, "Thm 4.3 (ii)", ii.witness);
  report.add("Thm-main (iii)", iii.holds, "Thm 4.3 (iii)", iii.witness);
  report.add("Thm-main (iv)", iv.holds, "Thm 4.3 (iv)", iv.witness);
  report.add("Thm-main (v)", v.holds, "Thm 4.3 (v)", v.witness);
  report.add("Thm-main (vi)", vi.holds, "Thm 4.3 (vi)", vi.witness);
  report.add("Thm-main (vii)", vii.holds, "Thm 4.3 (vii)", vii.witness);
  report.add("Thm-main (viii)", viii.holds, "Thm 4.3 (viii)", viii.witness);
  return report;
}

ConditionReport check_adjoint_equivalence(const ReflectiveStructure& refl,
                                          const CoreflectiveStructure& corefl) {
  Adjunction adj = composite_adjunction(refl, corefl);
  EquivalenceVerdict eq = is_adjoint_equivalence(adj);
  Verdict direct;
  if (!eq.holds) {
    if (eq.unit_witness != kNoObj)
      direct.fail("unit at " +
                  corefl.view.cat->object_name(eq.unit_witness));
    else
      direct.fail("counit at " +
                  refl.view.cat->object_name(eq.counit_witness));
  }
  Verdict f = property_F_verdict(refl, corefl);
  Verdict i = property_I_verdict(refl, corefl);
  bool both = f.holds && i.holds;
  if (direct.holds != both)
    throw InternalInconsistency(
        "adjoint-equivalence verdict disagrees with (F) and (I): engine bug");

  ConditionReport report;
  report.title = "adjoint equivalence";
  report.add("Cor-equiv (adjunction)", direct.holds, "Cor 4.4",
             direct.witness);
  report.add("Cor-equiv (properties)", both, "Cor 4.4",
             f.holds ? i.witness : f.witness);
  return report;
}

ConditionReport check_hypothesis_factor_initial(
    const ReflectiveStructure& refl, const CoreflectiveStructure& corefl) {
  const CategoryRef& c = refl.ambient;
  const FinCategory& msub = *corefl.view.cat;
  const FinCategory& nsub = *refl.view.cat;

  Verdict i, ii, iii, iv;
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
    ObjId mx_amb =
        corefl.view.inclusion.on_object(corefl.coreflector.on_object(x));
    ObjId nx = refl.reflector.on_object(x);
    MorId factor = c->compose(refl.unit.at(x), corefl.counit.at(x));

    if (i.holds) {
      CommaCategory cc(const_at(c, mx_amb), refl.view.inclusion);
      ObjId candidate = cc.find_object(0, nx, factor);
      if (candidate == kNoObj ||
          !is_initial_object(*cc.category(), candidate))
        i.fail(c->object_name(x));
    }
    if (ii.holds &&
        !morphism_class(nsub, refl.reflector.on_morphism(corefl.counit.at(x)))
             .is_iso)
      ii.fail(c->object_name(x));
    if (iii.holds) {
      ObjId nx_amb = refl.view.inclusion.on_object(nx);
      CommaCategory cc(corefl.view.inclusion, const_at(c, nx_amb));
      ObjId candidate =
          cc.find_object(corefl.coreflector.on_object(x), 0, factor);
      if (candidate == kNoObj || !is_final_object(*cc.category(), candidate))
        iii.fail(c->object_name(x));
    }
    if (iv.holds &&
        !morphism_class(msub, corefl.coreflector.on_morphism(refl.unit.at(x)))
             .is_iso)
      iv.fail(c->object_name(x));
  }

  require_agreement({{"(i)", i.holds}, {"(ii)", ii.holds}},
                    "Thm 3.5 (i)<->(ii)");
  require_agreement({{"(iii)", iii.holds}, {"(iv)", iv.holds}},
                    "Thm 3.5 (iii)<->(iv)");
  if (is_adjoint_equivalence(composite_adjunction(refl, corefl)).holds)
    require_agreement({{"(i)", i.holds},
                       {"(ii)", ii.holds},
                       {"(iii)", iii.holds},
                       {"(iv)", iv.holds}},
                      "Thm 3.5 under an adjoint equivalence");

  ConditionReport report;
  report.title = "factorization hypothesis";
  report.add("Hyp 5.1", i.holds, "Hyp 5.1", i.witness);
  report.add("Thm-factor (i)", i.holds, "Thm 3.5 (i)", i.witness);
  report.add("Thm-factor (ii)", ii.holds, "Thm 3.5 (ii)", ii.witness);
  report.add("Thm-factor (iii)", iii.holds, "Thm 3.5 (iii)", iii.witness);
  report.add("Thm-factor (iv)", iv.holds, "Thm 3.5 (iv)", iv.witness);
  return report;
}

ConditionReport check_section5_corollaries(
    const ReflectiveStructure& refl, const CoreflectiveStructure& corefl) {
  const CategoryRef& c = refl.ambient;
  const FinCategory& msub = *corefl.view.cat;
  const FinCategory& nsub = *refl.view.cat;

  if (!property_F_verdict(refl, corefl).holds ||
      !property_I_verdict(refl, corefl).holds)
    throw PreconditionUnmet(
        "section 5 requires properties (F) and (I) to hold");
  ConditionReport hyp = check_hypothesis_factor_initial(refl, corefl);
  if (!hyp.verdict("Hyp 5.1"))
    throw PreconditionUnmet(
        "section 5 requires the factorization hypothesis to hold");

  const Functor& N = refl.reflector;
  const Functor& M = corefl.coreflector;
  const Functor& I = corefl.view.inclusion;
  const Functor& J = refl.view.inclusion;
  Functor NIM = compose_functors(M, compose_functors(I, N));
  Functor MJN = compose_functors(N, compose_functors(J, M));

  ConditionReport report;
  report.title = "factorization corollaries";

  // N ~= N|M . M with components N(psi_x).
  {
    Verdict v;
    std::vector<MorId> components(c->object_count());
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
      components[x] = N.on_morphism(corefl.counit.at(x));
    try {
      NatTransformation nu = make_nat(NIM, N, components);
      NatIsoVerdict iso = is_natural_isomorphism(nu);
      if (!iso.holds) v.fail(c->object_name(iso.witness));
    } catch (const ValidationError& e) {
      v.fail(e.violations.front().witness);
    }
    report.add("Prop 5.3", v.holds, "Prop 5.3", v.witness);
  }
  // M ~= M|N . N with components M(theta_x).
  {
    Verdict v;
    std::vector<MorId> components(c->object_count());
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
      components[x] = M.on_morphism(refl.unit.at(x));
    try {
      NatTransformation nu = make_nat(M, MJN, components);
      NatIsoVerdict iso = is_natural_isomorphism(nu);
      if (!iso.holds) v.fail(c->object_name(iso.witness));
    } catch (const ValidationError& e) {
      v.fail(e.violations.front().witness);
    }
    report.add("Cor 5.4", v.holds, "Cor 5.4", v.witness);
  }
  // N|M . M is itself a reflector: unit J(N psi_x)^-1 . theta_x.
  {
    Verdict v;
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
      MorId n_psi = N.on_morphism(corefl.counit.at(x));
      MorId inv = kNoMor;
      const auto& m = nsub.morphism(n_psi);
      for (MorId r : nsub.hom(m.cod, m.dom))
        if (nsub.compose(r, n_psi) == nsub.identity(m.dom) &&
            nsub.compose(n_psi, r) == nsub.identity(m.cod))
          inv = r;
      if (inv == kNoMor) {
        v.fail(c->object_name(x));
        break;
      }
      MorId unit_x = c->compose(J.on_morphism(inv), refl.unit.at(x));
      if (!universal_from_at(x, J, UniversalMorphism{NIM.on_object(x), unit_x})) {
        v.fail(c->object_name(x));
        break;
      }
    }
    report.add("Cor 5.5", v.holds, "Cor 5.5", v.witness);
  }
  // Dually M|N . N is a coreflector: counit psi_x . I(M theta_x)^-1.
  {
    Verdict v;
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
      MorId m_theta = M.on_morphism(refl.unit.at(x));
      MorId inv = kNoMor;
      const auto& m = msub.morphism(m_theta);
      for (MorId r : msub.hom(m.cod, m.dom))
        if (msub.compose(r, m_theta) == msub.identity(m.dom) &&
            msub.compose(m_theta, r) == msub.identity(m.cod))
          inv = r;
      if (inv == kNoMor) {
        v.fail(c->object_name(x));
        break;
      }
      MorId counit_x = c->compose(corefl.counit.at(x), I.on_morphism(inv));
      if (!universal_to_at(I, x, UniversalMorphism{MJN.on_object(x), counit_x})) {
        v.fail(c->object_name(x));
        break;
      }
    }
    report.add("Cor 5.5 (dual)", v.holds, "Cor 5.5", v.witness);
  }
  // Four-way faithfulness equivalence.
  {
    Verdict psi_epi, theta_mono;
    for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
      if (psi_epi.holds && !morphism_class(*c, corefl.counit.at(x)).is_epi)
        psi_epi.fail(c->object_name(x));
      if (theta_mono.holds && !morphism_class(*c, refl.unit.at(x)).is_mono)
        theta_mono.fail(c->object_name(x));
    }
    bool m_faithful = functor_props(M).faithful;
    bool n_faithful = functor_props(N).faithful;
    require_agreement({{"(i)", psi_epi.holds},
                       {"(ii)", m_faithful},
                       {"(iii)", n_faithful},
                       {"(iv)", theta_mono.holds}},
                      "Cor 5.6");
    report.add("Cor 5.6 (i)", psi_epi.holds, "Cor 5.6 (i)", psi_epi.witness);
    report.add("Cor 5.6 (ii)", m_faithful, "Cor 5.6 (ii)");
    report.add("Cor 5.6 (iii)", n_faithful, "Cor 5.6 (iii)");
    report.add("Cor 5.6 (iv)", theta_mono.holds, "Cor 5.6 (iv)",
               theta_mono.witness);
  }
  return report;
}

ConditionReport theorem31_report(const Functor& I, const Functor& J,
                                 const Adjunction& adjNJ,
                                 const Adjunction& adjIM) {
  if (!(adjIM.left == I) || !(adjNJ.right == J))
    throw ShapeMismatch("theorem31_report: expected I -| M and N -| J");
  if (!same_category(I.target, J.target))
    throw ShapeMismatch("theorem31_report: I and J must land in one category");
  if (!verify_adjunction(adjNJ).all_pass() ||
      !verify_adjunction(adjIM).all_pass())
    throw Error("theorem31_report: input adjunctions are invalid");

  const CategoryRef& c = I.target;
  const CategoryRef& mcat = I.source;
  const CategoryRef& ncat = J.source;
  const Functor& N = adjNJ.left;
  const Functor& M = adjIM.right;
  Adjunction adj = compose_adjunctions(adjIM, adjNJ);  // NI -| MJ

  Verdict i;
  for (ObjId x = 0; x < static_cast<ObjId>(mcat->object_count()); ++x) {
    ObjId ix = I.on_object(x);
    ObjId jnix = J.on_object(N.on_object(ix));
    CommaCategory cc(I, const_at(c, jnix));
    ObjId candidate = cc.find_object(x, 0, adjNJ.unit.at(ix));
    if (candidate == kNoObj || !is_final_object(*cc.category(), candidate)) {
      i.fail(mcat->object_name(x));
      break;
    }
  }
  FunctorProps lp = functor_props(adj.left);
  Verdict ii;
  if (!(lp.full && lp.faithful)) ii.fail(fullness_witness(adj.left).value());
  NatIsoVerdict unit_iso = is_natural_isomorphism(adj.unit);
  Verdict iii;
  if (!unit_iso.holds) iii.fail(mcat->object_name(unit_iso.witness));
  Verdict iv;
  for (ObjId x = 0; x < static_cast<ObjId>(mcat->object_count()); ++x) {
    MorId m_theta = M.on_morphism(adjNJ.unit.at(I.on_object(x)));
    if (!morphism_class(*mcat, m_theta).is_iso) {
      iv.fail(mcat->object_name(x));
      break;
    }
  }
  FunctorProps ip = functor_props(I);
  bool i_ff = ip.full && ip.faithful;
  require_agreement({{"(i)", i.holds}, {"(ii)", ii.holds}, {"(iii)", iii.holds}},
                    "Thm 3.1 (i)-(iii)");
  if (i_ff)
    require_agreement({{"(i)", i.holds}, {"(iv)", iv.holds}},
                      "Thm 3.1 (iv) with I full and faithful");

  Verdict v;
  for (ObjId y = 0; y < static_cast<ObjId>(ncat->object_count()); ++y) {
    ObjId jy = J.on_object(y);
    ObjId imjy = I.on_object(M.on_object(jy));
    CommaCategory cc(const_at(c, imjy), J);
    ObjId candidate = cc.find_object(0, y, adjIM.counit.at(jy));
    if (candidate == kNoObj || !is_initial_object(*cc.category(), candidate)) {
      v.fail(ncat->object_name(y));
      break;
    }
  }
  FunctorProps rp = functor_props(adj.right);
  Verdict vi;
  if (!(rp.full && rp.faithful)) vi.fail(fullness_witness(adj.right).value());
  NatIsoVerdict counit_iso = is_natural_isomorphism(adj.counit);
  Verdict vii;
  if (!counit_iso.holds) vii.fail(ncat->object_name(counit_iso.witness));
  Verdict viii;
  for (ObjId y = 0; y < static_cast<ObjId>(ncat->object_count()); ++y) {
    MorId n_psi = N.on_morphism(adjIM.counit.at(J.on_object(y)));
    if (!morphism_class(*ncat, n_psi).is_iso) {
      viii.fail(ncat->object_name(y));
      break;
    }
  }
  FunctorProps jp = functor_props(J);
  bool j_ff = jp.full && jp.faithful;
  require_agreement({{"(v)", v.holds}, {"(vi)", vi.holds}, {"(vii)", vii.holds}},
                    "Thm 3.1 (v)-(vii)");
  if (j_ff)
    require_agreement({{"(v)", v.holds}, {"(viii)", viii.holds}},
                      "Thm 3.1 (viii) with J full and faithful");

  ConditionReport report;
  report.title = "composite adjoint equivalence";
  report.add("Thm-comp (i)", i.holds, "Thm 3.1 (i)", i.witness);
  report.add("Thm-comp (ii)", ii.holds, "Thm 3.1 (ii)", ii.witness);
  report.add("Thm-comp (iii)", iii.holds, "Thm 3.1 (iii)", iii.witness);
  if (i_ff)
    report.add("Thm-comp (iv)", iv.holds, "Thm 3.1 (iv)", iv.witness);
  report.add("Thm-comp (v)", v.holds, "Thm 3.1 (v)", v.witness);
  report.add("Thm-comp (vi)", vi.holds, "Thm 3.1 (vi)", vi.witness);
  report.add("Thm-comp (vii)", vii.holds, "Thm 3.1 (vii)", vii.witness);
  if (j_ff)
    report.add("Thm-comp (viii)", viii.holds, "Thm 3.1 (viii)", viii.witness);
  report.add("I-full-faithful", i_ff, "Thm 3.1 side condition", std::nullopt,
             true);
  report.add("J-full-faithful", j_ff, "Thm 3.1 side condition", std::nullopt,
             true);
  return report;
}

std::string dual_label(const std::string& label) {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"Prop (F)", "Prop (I)"},
      {"Thm-main (i)", "Thm-main (v)"},
      {"Thm-main (ii)", "Thm-main (vi)"},
      {"Thm-main (iii)", "Thm-main (vii)"},
      {"Thm-main (iv)", "Thm-main (viii)"},
      {"Thm-factor (i)", "Thm-factor (iii)"},
      {"Thm-factor (ii)", "Thm-factor (iv)"},
      {"Hyp 5.1", "Thm-factor (iii)"},
      {"Prop 5.3", "Cor 5.4"},
      {"Cor 5.5", "Cor 5.5 (dual)"},
      {"Cor 5.6 (i)", "Cor 5.6 (iv)"},
      {"Cor 5.6 (ii)", "Cor 5.6 (iii)"},
      {"Thm-comp (i)", "Thm-comp (v)"},
      {"Thm-comp (ii)", "Thm-comp (vi)"},
      {"Thm-comp (iii)", "Thm-comp (vii)"},
      {"Thm-comp (iv)", "Thm-comp (viii)"},
      {"I-full-faithful", "J-full-faithful"},
  };
  for (const auto& [a, b] : pairs) {
    if (label == a) return b;
    if (label == b && a != "Hyp 5.1") return a;
  }
  return label;  // self-dual (Cor-equiv rows, lemma pairs)
}

std::optional<Remark58Witness> search_counterexample_remark58(
    const Remark58Config& config) {
  for (int trial = 0; trial < config.budget; ++trial) {
    InstanceBundle bundle = random_instance(
        config.seed * 1000003ull + static_cast<std::uint64_t>(trial),
        config.max_elements);
    ReflectiveStructure refl;
    CoreflectiveStructure corefl;
    try {
      refl = find_reflector(bundle.ambient, bundle.reflective);
      corefl = find_coreflector(bundle.ambient, bundle.coreflective);
    } catch (const NotUniversal&) {
      continue;
    }
    if (!property_F_verdict(refl, corefl).holds) continue;
    if (!property_I_verdict(refl, corefl).holds) continue;
    ConditionReport hyp = check_hypothesis_factor_initial(refl, corefl);
    if (!hyp.verdict("Hyp 5.1")) continue;

    const FinCategory& c = *bundle.ambient;
    bool standing = true;
    for (ObjId x = 0; standing && x < static_cast<ObjId>(c.object_count());
         ++x)
      standing = morphism_class(c, corefl.counit.at(x)).is_epi &&
                 morphism_class(c, refl.unit.at(x)).is_mono;
    if (!standing) continue;

    for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x) {
      if (!morphism_class(c, refl.unit.at(x)).is_epi)
        return Remark58Witness{bundle.provenance, c.object_name(x),
                               "theta-not-epi"};
      if (!morphism_class(c, corefl.counit.at(x)).is_mono)
        return Remark58Witness{bundle.provenance, c.object_name(x),
                               "psi-not-mono"};
    }
  }
  return std::nullopt;
}

}  // namespace catq
