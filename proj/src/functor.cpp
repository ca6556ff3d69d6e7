#include "catq/functor.hpp"

#include <numeric>
#include <utility>

namespace catq {

void Functor::validate() const {
  std::vector<Violation> out;
  if (object_map.size() != source->object_count() ||
      morphism_map.size() != source->morphism_count())
    throw ValidationError("functor: map sizes do not match the source",
                          {{"DomCodMismatch", "", "incomplete maps"}});
  for (MorId f = 0; f < static_cast<MorId>(source->morphism_count()); ++f) {
    const auto& m = source->morphism(f);
    const auto& fm = target->morphism(morphism_map[f]);
    if (fm.dom != object_map[m.dom] || fm.cod != object_map[m.cod])
      out.push_back({"DomCodMismatch", m.name,
                     "image endpoints disagree with the object map"});
  }
  if (out.empty()) {
    for (ObjId x = 0; x < static_cast<ObjId>(source->object_count()); ++x)
      if (morphism_map[source->identity(x)] != target->identity(object_map[x]))
        out.push_back({"IdentityNotPreserved", source->object_name(x), ""});
    for (MorId f = 0; f < static_cast<MorId>(source->morphism_count()); ++f)
      for (ObjId z = 0; z < static_cast<ObjId>(source->object_count()); ++z)
        for (MorId g : source->hom(source->morphism(f).cod, z))
          if (morphism_map[source->compose(g, f)] !=
              target->compose(morphism_map[g], morphism_map[f]))
            out.push_back({"CompositionNotPreserved",
                           source->morphism_name(g) + " after " +
                               source->morphism_name(f),
                           ""});
  }
  if (!out.empty()) {
    std::string msg = "invalid functor: " + out.front().kind + " [" +
                      out.front().witness + "]";
    throw ValidationError(msg, std::move(out));
  }
}

Functor identity_functor(CategoryRef c) {
  Functor f;
  f.source = c;
  f.target = std::move(c);
  f.object_map.resize(f.source->object_count());
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  f.morphism_map.resize(f.source->morphism_count());
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
  return f;
}

Functor constant_functor(CategoryRef source, CategoryRef target, ObjId at) {
  Functor f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.object_map.assign(f.source->object_count(), at);
  f.morphism_map.assign(f.source->morphism_count(), f.target->identity(at));
  return f;
}

Functor make_functor(
    CategoryRef source, CategoryRef target,
    const std::vector<std::pair<std::string, std::string>>& objects,
    const std::vector<std::pair<std::string, std::string>>& morphisms) {
  Functor f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.object_map.assign(f.source->object_count(), kNoObj);
  f.morphism_map.assign(f.source->morphism_count(), kNoMor);
  for (const auto& [from, to] : objects) {
    ObjId x = f.source->object_id(from);
    ObjId y = f.target->object_id(to);
    if (x == kNoObj) throw Error("functor: unknown source object '" + from + "'");
    if (y == kNoObj) throw Error("functor: unknown target object '" + to + "'");
    f.object_map[x] = y;
  }
  for (ObjId x = 0; x < static_cast<ObjId>(f.source->object_count()); ++x)
    if (f.object_map[x] == kNoObj)
      throw Error("functor: no image for object '" + f.source->object_name(x) +
                  "'");
  for (const auto& [from, to] : morphisms) {
    MorId a = f.source->morphism_id(from);
    MorId b = f.target->morphism_id(to);
    if (a == kNoMor)
      throw Error("functor: unknown source morphism '" + from + "'");
    if (b == kNoMor)
      throw Error("functor: unknown target morphism '" + to + "'");
    f.morphism_map[a] = b;
  }
  for (ObjId x = 0; x < static_cast<ObjId>(f.source->object_count()); ++x)
    if (f.morphism_map[f.source->identity(x)] == kNoMor)
      f.morphism_map[f.source->identity(x)] =
          f.target->identity(f.object_map[x]);
  for (MorId m = 0; m < static_cast<MorId>(f.source->morphism_count()); ++m)
    if (f.morphism_map[m] == kNoMor)
      throw Error("functor: no image for morphism '" +
                  f.source->morphism_name(m) + "'");
  return f;
}

Functor compose_functors(const Functor& first, const Functor& then) {
  if (!same_category(first.target, then.source))
    throw ShapeMismatch("compose_functors: middle categories disagree");
  Functor f;
  f.source = first.source;
  f.target = then.target;
  f.object_map.reserve(first.object_map.size());
  for (ObjId x : first.object_map) f.object_map.push_back(then.object_map[x]);
  f.morphism_map.reserve(first.morphism_map.size());
  for (MorId m : first.morphism_map)
    f.morphism_map.push_back(then.morphism_map[m]);
  return f;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FunctorProps functor_props(const Functor& f) {
  const FinCategory& src = *f.source;
  const FinCategory& dst = *f.target;
  FunctorProps out;
  out.full = true;
  out.faithful = true;
  for (ObjId x = 0; x < static_cast<ObjId>(src.object_count()); ++x) {
    for (ObjId y = 0; y < static_cast<ObjId>(src.object_count()); ++y) {
      const auto& from = src.hom(x, y);
      const auto& to = dst.hom(f.object_map[x], f.object_map[y]);
      std::vector<bool> hit(to.size(), false);
      for (std::size_t i = 0; i < from.size(); ++i) {
        MorId img = f.morphism_map[from[i]];
        for (std::size_t j = 0; j < to.size(); ++j)
          if (to[j] == img) hit[j] = true;
        for (std::size_t j = i + 1; j < from.size(); ++j)
          if (f.morphism_map[from[j]] == img) out.faithful = false;
      }
      for (bool h : hit)
        if (!h) out.full = false;
    }
  }
  // Iso classes of the target.
  UnionFind uf(dst.object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(dst.object_count()); ++x)
    for (ObjId y = x + 1; y < static_cast<ObjId>(dst.object_count()); ++y)
      for (MorId m : dst.hom(x, y))
        if (morphism_class(dst, m).is_iso) {
          uf.unite(x, y);
          break;
        }
  std::vector<bool> covered(dst.object_count(), false);
  for (ObjId x : f.object_map) covered[uf.find(x)] = true;
  out.essentially_surjective = true;
  for (ObjId y = 0; y < static_cast<ObjId>(dst.object_count()); ++y)
    if (!covered[uf.find(y)]) out.essentially_surjective = false;
  return out;
}

void NatTransformation::validate() const {
  if (!same_category(source.source, target.source) ||
      !same_category(source.target, target.target))
    throw ShapeMismatch("natural transformation: functors are not parallel");
  const FinCategory& src = *source.source;
  const FinCategory& dst = *source.target;
  if (components.size() != src.object_count())
    throw ValidationError("natural transformation: wrong component count",
                          {{"DomCodMismatch", "", ""}});
  std::vector<Violation> out;
  for (ObjId x = 0; x < static_cast<ObjId>(src.object_count()); ++x) {
    const auto& m = dst.morphism(components[x]);
    if (m.dom != source.object_map[x] || m.cod != target.object_map[x])
      out.push_back({"DomCodMismatch", src.object_name(x),
                     "component is not F(x) -> G(x)"});
  }
  if (out.empty()) {
    for (MorId f = 0; f < static_cast<MorId>(src.morphism_count()); ++f) {
      const auto& m = src.morphism(f);
      MorId lhs = dst.compose(target.morphism_map[f], components[m.dom]);
      MorId rhs = dst.compose(components[m.cod], source.morphism_map[f]);
      if (lhs != rhs)
        out.push_back({"NaturalitySquareFails", m.name, ""});
    }
  }
  if (!out.empty()) {
    std::string msg = "invalid natural transformation: " + out.front().kind +
                      " [" + out.front().witness + "]";
    throw ValidationError(msg, std::move(out));
  }
}

NatTransformation identity_nat(const Functor& f) {
  NatTransformation t;
  t.source = f;
  t.target = f;
  t.components.reserve(f.object_map.size());
  for (ObjId x : f.object_map) t.components.push_back(f.target->identity(x));
  return t;
}

NatTransformation make_nat(Functor source, Functor target,
                           std::vector<MorId> components) {
  NatTransformation t{std::move(source), std::move(target),
                      std::move(components)};
  t.validate();
  return t;
}

NatTransformation vertical_compose(const NatTransformation& second,
                                   const NatTransformation& first) {
  if (!(first.target == second.source))
    throw ShapeMismatch("vertical_compose: middle functors disagree");
  NatTransformation t;
  t.source = first.source;
  t.target = second.target;
  const FinCategory& dst = *t.source.target;
  t.components.reserve(first.components.size());
  for (std::size_t x = 0; x < first.components.size(); ++x)
    t.components.push_back(
        dst.compose(second.components[x], first.components[x]));
  return t;
}

NatTransformation whisker(const Functor& post, const NatTransformation& t) {
  if (!same_category(t.source.target, post.source))
    throw ShapeMismatch("whisker: functor does not follow the transformation");
  NatTransformation out;
  out.source = compose_functors(t.source, post);
  out.target = compose_functors(t.target, post);
  out.components.reserve(t.components.size());
  for (MorId c : t.components) out.components.push_back(post.on_morphism(c));
  return out;
}

NatTransformation whisker(const NatTransformation& t, const Functor& pre) {
  if (!same_category(pre.target, t.source.source))
    throw ShapeMismatch("whisker: functor does not precede the transformation");
  NatTransformation out;
  out.source = compose_functors(pre, t.source);
  out.target = compose_functors(pre, t.target);
  out.components.reserve(pre.object_map.size());
  for (ObjId x : pre.object_map) out.components.push_back(t.components[x]);
  return out;
}

NatIsoVerdict is_natural_isomorphism(const NatTransformation& t) {
  const FinCategory& dst = *t.source.target;
  for (ObjId x = 0; x < static_cast<ObjId>(t.components.size()); ++x)
    if (!morphism_class(dst, t.components[x]).is_iso) return {false, x};
  return {true, kNoObj};
}

SubcategoryView materialize(const Subcategory& s) {
  s.validate();
  const FinCategory& parent = *s.parent;
  RawCategory raw;
  raw.name = parent.name() + "|sub";
  for (ObjId x : s.objects) raw.objects.push_back(parent.object_name(x));
  for (MorId f : s.morphisms) {
    if (parent.is_identity(f)) continue;
    const auto& m = parent.morphism(f);
    raw.morphisms.push_back(
        {m.name, parent.object_name(m.dom), parent.object_name(m.cod)});
  }
  for (MorId f : s.morphisms)
    for (MorId g : s.morphisms)
      if (parent.composable(g, f) && !parent.is_identity(f) &&
          !parent.is_identity(g))
        raw.composites.push_back({parent.morphism_name(g),
                                  parent.morphism_name(f),
                                  parent.morphism_name(parent.compose(g, f))});
  SubcategoryView view;
  view.sub = s;
  view.cat = validate_category(raw);
  std::vector<std::pair<std::string, std::string>> objs, mors;
  for (ObjId x : s.objects) {
    const std::string& n = parent.object_name(x);
    objs.emplace_back(n, n);
  }
  for (MorId f : s.morphisms) {
    const std::string& n = parent.morphism_name(f);
    mors.emplace_back(n, n);
  }
  view.inclusion = make_functor(view.cat, s.parent, objs, mors);
  view.inclusion.validate();
  return view;
}

}  // namespace catq
