#include "catq/comma.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace catq {

namespace {

std::string triple_name(const FinCategory& a, const FinCategory& b,
                        const FinCategory& d, const CommaCategory::Triple& t) {
  return "(" + a.object_name(t.x) + "|" + b.object_name(t.y) + "|" +
         d.morphism_name(t.f) + ")";
}

}  // namespace

CommaCategory::CommaCategory(Functor left, Functor right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!same_category(left_.target, right_.target))
    throw ShapeMismatch("comma: functors do not share a codomain");
  const FinCategory& a = *left_.source;
  const FinCategory& b = *right_.source;
  const FinCategory& d = *left_.target;

  RawCategory raw;
  raw.name = "(" + a.name() + "|" + b.name() + ")";
  for (ObjId x = 0; x < static_cast<ObjId>(a.object_count()); ++x)
    for (ObjId y = 0; y < static_cast<ObjId>(b.object_count()); ++y)
      for (MorId f : d.hom(left_.on_object(x), right_.on_object(y))) {
        triples_.push_back({x, y, f});
        raw.objects.push_back(triple_name(a, b, d, triples_.back()));
      }

  auto object_of = [&](ObjId x, ObjId y, MorId f) -> ObjId {
    for (ObjId i = 0; i < static_cast<ObjId>(triples_.size()); ++i)
      if (triples_[i].x == x && triples_[i].y == y && triples_[i].f == f)
        return i;
    return kNoObj;
  };

  // A comma morphism is the full square (dom triple, cod triple, k, h):
  // (k, h) with the dom triple alone does not pin down the cod triple.
  std::map<std::tuple<ObjId, ObjId, MorId, MorId>,
           std::pair<std::string, bool>>
      mors;
  for (ObjId s = 0; s < static_cast<ObjId>(triples_.size()); ++s) {
    const Triple& dom = triples_[s];
    for (ObjId t = 0; t < static_cast<ObjId>(triples_.size()); ++t) {
      const Triple& cod = triples_[t];
      for (MorId k : a.hom(dom.x, cod.x))
        for (MorId h : b.hom(dom.y, cod.y)) {
          if (d.compose(cod.f, left_.on_morphism(k)) !=
              d.compose(right_.on_morphism(h), dom.f))
            continue;
          bool is_id = s == t && a.is_identity(k) && b.is_identity(h);
          std::string name =
              is_id ? "id_" + raw.objects[s]
                    : "(" + a.morphism_name(k) + "|" + b.morphism_name(h) +
                          "|" + raw.objects[s] + ">" + raw.objects[t] + ")";
          mors.emplace(std::tuple{s, t, k, h}, std::pair{name, is_id});
          if (!is_id)
            raw.morphisms.push_back({name, raw.objects[s], raw.objects[t]});
        }
    }
  }
  // Componentwise composition.
  for (const auto& [key1, val1] : mors) {
    auto [s, t, k, h] = key1;
    if (val1.second) continue;
    for (const auto& [key2, val2] : mors) {
      auto [t2, u, k2, h2] = key2;
      if (val2.second || t2 != t) continue;
      MorId kk = a.compose(k2, k);
      MorId hh = b.compose(h2, h);
      raw.composites.push_back(
          {val2.first, val1.first, mors.at(std::tuple{s, u, kk, hh}).first});
    }
  }
  cat_ = validate_category(raw);

  pairs_.resize(cat_->morphism_count());
  for (const auto& [key, val] : mors) {
    auto [s, t, k, h] = key;
    (void)s;
    (void)t;
    MorId id = cat_->morphism_id(val.first);
    pairs_[id] = {k, h};
  }
  // Order triples_ to match validated object ids (identical by construction).
  (void)object_of;
}

ObjId CommaCategory::find_object(ObjId x, ObjId y, MorId f) const {
  for (ObjId i = 0; i < static_cast<ObjId>(triples_.size()); ++i)
    if (triples_[i].x == x && triples_[i].y == y && triples_[i].f == f)
      return i;
  return kNoObj;
}

CommaCategory comma(const Functor& F, const Functor& G) {
  return CommaCategory(F, G);
}

namespace {

// Count of factorizations g : u -> y with G(g) . eta = f.
int count_factorizations(const Functor& G, ObjId u, MorId eta, ObjId y,
                         MorId f) {
  int n = 0;
  for (MorId g : G.source->hom(u, y))
    if (G.target->compose(G.on_morphism(g), eta) == f) ++n;
  return n;
}

int count_cofactorizations(const Functor& G, ObjId u, MorId eps, ObjId y,
                           MorId f) {
  int n = 0;
  for (MorId g : G.source->hom(y, u))
    if (G.target->compose(eps, G.on_morphism(g)) == f) ++n;
  return n;
}

}  // namespace

std::optional<UniversalMorphism> universal_from(ObjId x, const Functor& G) {
  const FinCategory& c = *G.target;
  const FinCategory& d = *G.source;
  for (ObjId u = 0; u < static_cast<ObjId>(d.object_count()); ++u) {
    for (MorId eta : c.hom(x, G.on_object(u))) {
      bool universal = true;
      for (ObjId y = 0; universal && y < static_cast<ObjId>(d.object_count());
           ++y)
        for (MorId f : c.hom(x, G.on_object(y)))
          if (count_factorizations(G, u, eta, y, f) != 1) {
            universal = false;
            break;
          }
      if (universal) return UniversalMorphism{u, eta};
    }
  }
  return std::nullopt;
}

std::optional<UniversalMorphism> universal_to(const Functor& G, ObjId x) {
  const FinCategory& c = *G.target;
  const FinCategory& d = *G.source;
  for (ObjId u = 0; u < static_cast<ObjId>(d.object_count()); ++u) {
    for (MorId eps : c.hom(G.on_object(u), x)) {
      bool universal = true;
      for (ObjId y = 0; universal && y < static_cast<ObjId>(d.object_count());
           ++y)
        for (MorId f : c.hom(G.on_object(y), x))
          if (count_cofactorizations(G, u, eps, y, f) != 1) {
            universal = false;
            break;
          }
      if (universal) return UniversalMorphism{u, eps};
    }
  }
  return std::nullopt;
}

TransportIso transport_iso(const Functor& P, const Adjunction& adj,
                           const Functor& Q) {
  if (!same_category(P.target, adj.left.source) ||
      !same_category(Q.target, adj.left.target))
    throw ShapeMismatch("transport_iso: shapes do not match F -| G");

  CommaCategory src(compose_functors(P, adj.left), Q);
  CommaCategory dst(P, compose_functors(Q, adj.right));
  const FinCategory& sc = *src.category();
  const FinCategory& dc = *dst.category();

  Functor fwd;
  fwd.source = src.category();
  fwd.target = dst.category();
  fwd.object_map.resize(sc.object_count());
  for (ObjId i = 0; i < static_cast<ObjId>(sc.object_count()); ++i) {
    const auto& t = src.triple(i);
    MorId phi_f = adj.phi(P.on_object(t.x), t.f);
    ObjId j = dst.find_object(t.x, t.y, phi_f);
    if (j == kNoObj)
      throw InternalInconsistency("transport_iso: phi image missing in P|GQ");
    fwd.object_map[i] = j;
  }
  fwd.morphism_map.resize(sc.morphism_count());
  for (MorId m = 0; m < static_cast<MorId>(sc.morphism_count()); ++m) {
    const auto& pr = src.pair(m);
    ObjId dom = fwd.object_map[sc.morphism(m).dom];
    ObjId cod = fwd.object_map[sc.morphism(m).cod];
    MorId found = kNoMor;
    for (MorId n : dc.hom(dom, cod))
      if (dst.pair(n).k == pr.k && dst.pair(n).h == pr.h) found = n;
    if (found == kNoMor)
      throw InternalInconsistency("transport_iso: pair image missing in P|GQ");
    fwd.morphism_map[m] = found;
  }
  fwd.validate();

  Functor bwd;
  bwd.source = dst.category();
  bwd.target = src.category();
  bwd.object_map.resize(dc.object_count());
  for (ObjId i = 0; i < static_cast<ObjId>(dc.object_count()); ++i) {
    const auto& t = dst.triple(i);
    MorId f = adj.phi_inverse(Q.on_object(t.y), t.f);
    ObjId j = src.find_object(t.x, t.y, f);
    if (j == kNoObj)
      throw InternalInconsistency(
          "transport_iso: phi-inverse image missing in FP|Q");
    bwd.object_map[i] = j;
  }
  bwd.morphism_map.resize(dc.morphism_count());
  for (MorId m = 0; m < static_cast<MorId>(dc.morphism_count()); ++m) {
    const auto& pr = dst.pair(m);
    ObjId dom = bwd.object_map[dc.morphism(m).dom];
    ObjId cod = bwd.object_map[dc.morphism(m).cod];
    MorId found = kNoMor;
    for (MorId n : sc.hom(dom, cod))
      if (src.pair(n).k == pr.k && src.pair(n).h == pr.h) found = n;
    if (found == kNoMor)
      throw InternalInconsistency("transport_iso: pair image missing in FP|Q");
    bwd.morphism_map[m] = found;
  }
  bwd.validate();

  // Isomorphism, not mere equivalence.
  if (!(compose_functors(fwd, bwd) == identity_functor(src.category())) ||
      !(compose_functors(bwd, fwd) == identity_functor(dst.category())))
    throw InternalInconsistency(
        "transport_iso: composites are not identity functors");

  return TransportIso{std::move(src), std::move(dst), std::move(fwd),
                      std::move(bwd)};
}

}  // namespace catq
