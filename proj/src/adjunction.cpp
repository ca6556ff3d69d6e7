#include "catq/adjunction.hpp"

#include <utility>

namespace catq {

namespace {

// All g : u -> y in D with G(g) . eta = f, for f : x -> Gy in C.
std::vector<MorId> factorizations(const Functor& G, ObjId u, MorId eta,
                                  ObjId y, MorId f) {
  const FinCategory& c = *G.target;
  std::vector<MorId> out;
  for (MorId g : G.source->hom(u, y))
    if (c.compose(G.on_morphism(g), eta) == f) out.push_back(g);
  return out;
}

// All g : y -> u in D with eps . G(g) = f, for f : Gy -> x in C.
std::vector<MorId> cofactorizations(const Functor& G, ObjId u, MorId eps,
                                    ObjId y, MorId f) {
  const FinCategory& c = *G.target;
  std::vector<MorId> out;
  for (MorId g : G.source->hom(y, u))
    if (c.compose(eps, G.on_morphism(g)) == f) out.push_back(g);
  return out;
}

bool is_universal_from(ObjId x, const Functor& G, const UniversalMorphism& um) {
  const FinCategory& c = *G.target;
  for (ObjId y = 0; y < static_cast<ObjId>(G.source->object_count()); ++y)
    for (MorId f : c.hom(x, G.on_object(y)))
      if (factorizations(G, um.object, um.morphism, y, f).size() != 1)
        return false;
  return true;
}

bool is_universal_to(const Functor& G, ObjId x, const UniversalMorphism& um) {
  const FinCategory& c = *G.target;
  for (ObjId y = 0; y < static_cast<ObjId>(G.source->object_count()); ++y)
    for (MorId f : c.hom(G.on_object(y), x))
      if (cofactorizations(G, um.object, um.morphism, y, f).size() != 1)
        return false;
  return true;
}

}  // namespace

MorId Adjunction::phi(ObjId x, MorId g) const {
  return left.source->compose(right.on_morphism(g), unit.at(x));
}

MorId Adjunction::phi_inverse(ObjId y, MorId f) const {
  return left.target->compose(counit.at(y), left.on_morphism(f));
}

Adjunction identity_adjunction(CategoryRef c) {
  Functor id = identity_functor(std::move(c));
  Adjunction adj;
  adj.left = id;
  adj.right = id;
  adj.unit = identity_nat(id);
  adj.counit = identity_nat(id);
  adj.unit.target = compose_functors(id, id);
  adj.counit.source = compose_functors(id, id);
  return adj;
}

Adjunction adjunction_from_universal_morphisms(
    const Functor& G, const std::vector<UniversalMorphism>& family) {
  const CategoryRef& c = G.target;  // the category the reflector acts on
  const CategoryRef& d = G.source;
  if (family.size() != c->object_count())
    throw ShapeMismatch(
        "adjunction_from_universal_morphisms: family must cover every object");

  std::vector<std::string> not_universal;
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
    if (!is_universal_from(x, G, family[x]))
      not_universal.push_back(c->object_name(x));
  if (!not_universal.empty())
    throw NotUniversal("family member is not initial in x|G",
                       std::move(not_universal));

  Functor F;
  F.source = c;
  F.target = d;
  F.object_map.resize(c->object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
    F.object_map[x] = family[x].object;
  F.morphism_map.resize(c->morphism_count());
  for (MorId f = 0; f < static_cast<MorId>(c->morphism_count()); ++f) {
    const auto& m = c->morphism(f);
    MorId target_side = c->compose(family[m.cod].morphism, f);
    auto g = factorizations(G, family[m.dom].object, family[m.dom].morphism,
                            family[m.cod].object, target_side);
    if (g.size() != 1)
      throw InternalInconsistency(
          "FactorizationNotUnique while extending the left adjoint at '" +
          m.name + "'");
    F.morphism_map[f] = g.front();
  }
  F.validate();

  Adjunction adj;
  adj.left = F;
  adj.right = G;
  std::vector<MorId> unit_components(c->object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
    unit_components[x] = family[x].morphism;
  adj.unit = make_nat(identity_functor(c), compose_functors(F, G),
                      std::move(unit_components));

  std::vector<MorId> counit_components(d->object_count());
  for (ObjId y = 0; y < static_cast<ObjId>(d->object_count()); ++y) {
    ObjId gy = G.on_object(y);
    auto g = factorizations(G, family[gy].object, family[gy].morphism, y,
                            c->identity(gy));
    if (g.size() != 1)
      throw InternalInconsistency("counit factorization not unique at '" +
                                  d->object_name(y) + "'");
    counit_components[y] = g.front();
  }
  adj.counit = make_nat(compose_functors(G, F), identity_functor(d),
                        std::move(counit_components));

  ConditionReport check = verify_adjunction(adj);
  if (!check.all_pass())
    throw InternalInconsistency(
        "adjunction_from_universal_morphisms produced an invalid adjunction");
  return adj;
}

Adjunction adjunction_to_universal_morphisms(
    const Functor& F, const std::vector<UniversalMorphism>& family) {
  const CategoryRef& d = F.target;
  const CategoryRef& c = F.source;
  if (family.size() != d->object_count())
    throw ShapeMismatch(
        "adjunction_to_universal_morphisms: family must cover every object");

  std::vector<std::string> not_universal;
  for (ObjId y = 0; y < static_cast<ObjId>(d->object_count()); ++y)
    if (!is_universal_to(F, y, family[y]))
      not_universal.push_back(d->object_name(y));
  if (!not_universal.empty())
    throw NotUniversal("family member is not final in F|y",
                       std::move(not_universal));

  Functor G;
  G.source = d;
  G.target = c;
  G.object_map.resize(d->object_count());
  for (ObjId y = 0; y < static_cast<ObjId>(d->object_count()); ++y)
    G.object_map[y] = family[y].object;
  G.morphism_map.resize(d->morphism_count());
  for (MorId f = 0; f < static_cast<MorId>(d->morphism_count()); ++f) {
    const auto& m = d->morphism(f);
    MorId source_side = d->compose(f, family[m.dom].morphism);
    auto g = cofactorizations(F, family[m.cod].object, family[m.cod].morphism,
                              family[m.dom].object, source_side);
    if (g.size() != 1)
      throw InternalInconsistency(
          "FactorizationNotUnique while extending the right adjoint at '" +
          m.name + "'");
    G.morphism_map[f] = g.front();
  }
  G.validate();

  Adjunction adj;
  adj.left = F;
  adj.right = G;
  std::vector<MorId> counit_components(d->object_count());
  for (ObjId y = 0; y < static_cast<ObjId>(d->object_count()); ++y)
    counit_components[y] = family[y].morphism;
  adj.counit = make_nat(compose_functors(G, F), identity_functor(d),
                        std::move(counit_components));

  std::vector<MorId> unit_components(c->object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
    ObjId fx = F.on_object(x);
    auto g = cofactorizations(F, family[fx].object, family[fx].morphism, x,
                              d->identity(fx));
    if (g.size() != 1)
      throw InternalInconsistency("unit factorization not unique at '" +
                                  c->object_name(x) + "'");
    unit_components[x] = g.front();
  }
  adj.unit = make_nat(identity_functor(c), compose_functors(F, G),
                      std::move(unit_components));

  ConditionReport check = verify_adjunction(adj);
  if (!check.all_pass())
    throw InternalInconsistency(
        "adjunction_to_universal_morphisms produced an invalid adjunction");
  return adj;
}

ConditionReport verify_adjunction(const Adjunction& adj) {
  ConditionReport report;
  report.title = "adjunction validity";
  const FinCategory& c = *adj.source();
  const FinCategory& d = *adj.sink();

  bool unit_ok = true, counit_ok = true;
  std::optional<std::string> unit_witness, counit_witness;
  try {
    adj.unit.validate();
  } catch (const ValidationError& e) {
    unit_ok = false;
    unit_witness = e.violations.front().witness;
  }
  try {
    adj.counit.validate();
  } catch (const ValidationError& e) {
    counit_ok = false;
    counit_witness = e.violations.front().witness;
  }
  report.add("unit-natural", unit_ok, "adjunction definition", unit_witness);
  report.add("counit-natural", counit_ok, "adjunction definition",
             counit_witness);
  if (!unit_ok || !counit_ok) return report;

  bool tri_f = true;
  std::optional<std::string> tri_f_witness;
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()) && tri_f; ++x) {
    ObjId fx = adj.left.on_object(x);
    MorId lhs = d.compose(adj.counit.at(fx), adj.left.on_morphism(adj.unit.at(x)));
    if (lhs != d.identity(fx)) {
      tri_f = false;
      tri_f_witness = c.object_name(x);
    }
  }
  report.add("triangle-left", tri_f, "triangle identities", tri_f_witness);

  bool tri_g = true;
  std::optional<std::string> tri_g_witness;
  for (ObjId y = 0; y < static_cast<ObjId>(d.object_count()) && tri_g; ++y) {
    ObjId gy = adj.right.on_object(y);
    MorId lhs = c.compose(adj.right.on_morphism(adj.counit.at(y)), adj.unit.at(gy));
    if (lhs != c.identity(gy)) {
      tri_g = false;
      tri_g_witness = d.object_name(y);
    }
  }
  report.add("triangle-right", tri_g, "triangle identities", tri_g_witness);

  // phi : D(Fx,y) -> C(x,Gy) bijective for every pair.
  bool bij = true;
  std::optional<std::string> bij_witness;
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()) && bij; ++x) {
    for (ObjId y = 0; y < static_cast<ObjId>(d.object_count()) && bij; ++y) {
      const auto& from = d.hom(adj.left.on_object(x), y);
      const auto& to = c.hom(x, adj.right.on_object(y));
      if (from.size() != to.size()) {
        bij = false;
        bij_witness = "(" + c.object_name(x) + ", " + d.object_name(y) + ")";
        break;
      }
      std::vector<bool> hit(to.size(), false);
      for (MorId g : from) {
        MorId img = adj.phi(x, g);
        for (std::size_t j = 0; j < to.size(); ++j)
          if (to[j] == img && !hit[j]) {
            hit[j] = true;
            img = kNoMor;
            break;
          }
        if (img != kNoMor) {
          bij = false;
          bij_witness = "(" + c.object_name(x) + ", " + d.object_name(y) +
                        ", " + d.morphism_name(g) + ")";
          break;
        }
      }
    }
  }
  report.add("phi-bijective", bij, "hom-set bijection", bij_witness);

  // Naturality of phi in each argument.
  bool nat = true;
  std::optional<std::string> nat_witness;
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()) && nat; ++x) {
    for (ObjId y = 0; y < static_cast<ObjId>(d.object_count()) && nat; ++y) {
      for (MorId g : d.hom(adj.left.on_object(x), y)) {
        MorId pg = adj.phi(x, g);
        // In y: phi(q . g) = G(q) . phi(g).
        for (ObjId y2 = 0; y2 < static_cast<ObjId>(d.object_count()) && nat;
             ++y2)
          for (MorId q : d.hom(y, y2))
            if (adj.phi(x, d.compose(q, g)) !=
                c.compose(adj.right.on_morphism(q), pg)) {
              nat = false;
              nat_witness = "(" + d.morphism_name(g) + ", " +
                            d.morphism_name(q) + ")";
              break;
            }
        // In x: phi(g . F(p)) = phi(g) . p.
        for (ObjId x2 = 0; x2 < static_cast<ObjId>(c.object_count()) && nat;
             ++x2)
          for (MorId p : c.hom(x2, x))
            if (adj.phi(x2, d.compose(g, adj.left.on_morphism(p))) !=
                c.compose(pg, p)) {
              nat = false;
              nat_witness = "(" + d.morphism_name(g) + ", " +
                            c.morphism_name(p) + ")";
              break;
            }
        if (!nat) break;
      }
    }
  }
  report.add("phi-natural", nat, "hom-set bijection naturality", nat_witness);
  return report;
}

Adjunction compose_adjunctions(const Adjunction& inner,
                               const Adjunction& outer) {
  if (!same_category(inner.left.target, outer.left.source))
    throw ShapeMismatch("compose_adjunctions: middle categories disagree");
  const CategoryRef& c = inner.left.source;
  const CategoryRef& e = outer.left.target;

  Adjunction adj;
  adj.left = compose_functors(inner.left, outer.left);
  adj.right = compose_functors(outer.right, inner.right);

  // unit_x = G(unit2_{Fx}) . unit1_x
  std::vector<MorId> unit_components(c->object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x)
    unit_components[x] = c->compose(
        inner.right.on_morphism(outer.unit.at(inner.left.on_object(x))),
        inner.unit.at(x));
  adj.unit = make_nat(identity_functor(c),
                      compose_functors(adj.left, adj.right),
                      std::move(unit_components));

  // counit_y = counit2_y . H(counit1_{Ky})
  std::vector<MorId> counit_components(e->object_count());
  for (ObjId y = 0; y < static_cast<ObjId>(e->object_count()); ++y)
    counit_components[y] = e->compose(
        outer.counit.at(y),
        outer.left.on_morphism(inner.counit.at(outer.right.on_object(y))));
  adj.counit = make_nat(compose_functors(adj.right, adj.left),
                        identity_functor(e), std::move(counit_components));
  return adj;
}

ConditionReport lemma_properties_report(const Adjunction& adj) {
  const FinCategory& c = *adj.source();
  const FinCategory& d = *adj.sink();
  FunctorProps fp = functor_props(adj.left);
  FunctorProps gp = functor_props(adj.right);

  bool unit_mono = true, unit_split_epi = true;
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x) {
    MorphismClass mc = morphism_class(c, adj.unit.at(x));
    unit_mono = unit_mono && mc.is_mono;
    unit_split_epi = unit_split_epi && mc.is_split_epi;
  }
  bool counit_epi = true, counit_split_mono = true;
  for (ObjId y = 0; y < static_cast<ObjId>(d.object_count()); ++y) {
    MorphismClass mc = morphism_class(d, adj.counit.at(y));
    counit_epi = counit_epi && mc.is_epi;
    counit_split_mono = counit_split_mono && mc.is_split_mono;
  }
  bool unit_iso = is_natural_isomorphism(adj.unit).holds;
  bool counit_iso = is_natural_isomorphism(adj.counit).holds;

  struct Pair {
    const char* label;
    const char* anchor;
    bool lhs;
    bool rhs;
  };
  const Pair pairs[] = {
      {"Lem-prop (1)", "Lem 2.2 (1)", fp.faithful, unit_mono},
      {"Lem-prop (2)", "Lem 2.2 (2)", fp.full, unit_split_epi},
      {"Lem-prop (3)", "Lem 2.2 (3)", fp.full && fp.faithful, unit_iso},
      {"Lem-prop (4)", "Lem 2.2 (4)", gp.faithful, counit_epi},
      {"Lem-prop (5)", "Lem 2.2 (5)", gp.full, counit_split_mono},
      {"Lem-prop (6)", "Lem 2.2 (6)", gp.full && gp.faithful, counit_iso},
  };
  ConditionReport report;
  report.title = "unit/counit characterizations";
  for (const Pair& p : pairs) {
    if (p.lhs != p.rhs)
      throw InternalInconsistency(std::string("biconditional ") + p.anchor +
                                  " disagreed: engine bug");
    report.add(p.label, p.lhs, p.anchor);
  }
  return report;
}

EquivalenceVerdict is_adjoint_equivalence(const Adjunction& adj) {
  NatIsoVerdict u = is_natural_isomorphism(adj.unit);
  NatIsoVerdict e = is_natural_isomorphism(adj.counit);
  return {u.holds && e.holds, u.witness, e.witness};
}

}  // namespace catq
