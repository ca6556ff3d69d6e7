#include "catq/instances.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace catq {

namespace {

std::string subset_name(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int p = 0; p < 32; ++p)
    if (mask & (1u << p)) {
      if (!first) out += ",";
      out += std::to_string(p + 1);
      first = false;
    }
  return out + "}";
}

CategoryRef powerset_poset(int points, const std::string& name) {
  std::uint32_t count = 1u << points;
  std::vector<std::string> elements(count);
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::uint32_t i = 0; i < count; ++i) {
    elements[i] = subset_name(i);
    for (std::uint32_t j = 0; j < count; ++j) leq[i][j] = (i | j) == j;
  }
  return poset_category(name, elements, leq);
}

void check_topology(int points, const std::set<std::uint32_t>& opens) {
  std::uint32_t full = (1u << points) - 1;
  if (!opens.count(0))
    throw NotATopology("the empty set is not open", subset_name(0));
  if (!opens.count(full))
    throw NotATopology("the whole space is not open", subset_name(full));
  for (std::uint32_t u : opens)
    if (u > full)
      throw NotATopology("open set mentions a point outside the space",
                         subset_name(u));
  for (std::uint32_t u : opens)
    for (std::uint32_t v : opens) {
      if (!opens.count(u | v))
        throw NotATopology("opens are not closed under union",
                           subset_name(u) + " | " + subset_name(v));
      if (!opens.count(u & v))
        throw NotATopology("opens are not closed under intersection",
                           subset_name(u) + " & " + subset_name(v));
    }
}

std::uint32_t interior(const std::set<std::uint32_t>& opens,
                       std::uint32_t s) {
  std::uint32_t out = 0;
  for (std::uint32_t u : opens)
    if ((u & ~s) == 0) out |= u;
  return out;
}

std::uint32_t closure(const std::set<std::uint32_t>& opens, int points,
                      std::uint32_t s) {
  // Smallest closed superset = complement of the interior of the complement.
  std::uint32_t full = (1u << points) - 1;
  return full & ~interior(opens, full & ~s);
}

}  // namespace

CategoryRef poset_category(const std::string& name,
                           const std::vector<std::string>& elements,
                           const std::vector<std::vector<bool>>& leq,
                           const Config& config) {
  std::size_t n = elements.size();
  if (leq.size() != n)
    throw ShapeMismatch("poset_category: leq is not square");
  for (const auto& row : leq)
    if (row.size() != n)
      throw ShapeMismatch("poset_category: leq is not square");

  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i][i])
      throw NotAPartialOrder("relation is not reflexive", elements[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw NotAPartialOrder("relation is not antisymmetric",
                               elements[i] + ", " + elements[j]);
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k])
          throw NotAPartialOrder(
              "relation is not transitive",
              elements[i] + ", " + elements[j] + ", " + elements[k]);
    }

  auto le_name = [&](std::size_t i, std::size_t j) {
    return "le(" + elements[i] + "," + elements[j] + ")";
  };
  RawCategory raw;
  raw.name = name;
  raw.objects = elements;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i][j])
        raw.morphisms.push_back({le_name(i, j), elements[i], elements[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (j != k && leq[j][k])
          raw.composites.push_back(
              {le_name(j, k), le_name(i, j), le_name(i, k)});
    }
  return validate_category(raw, config);
}

InstanceBundle topology_instance(int points,
                                 const std::vector<std::uint32_t>& opens,
                                 const std::string& name) {
  std::set<std::uint32_t> open_set(opens.begin(), opens.end());
  check_topology(points, open_set);
  std::uint32_t full = (1u << points) - 1;

  CategoryRef ambient = powerset_poset(points, name + "-ambient");
  std::vector<std::string> open_names, closed_names;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (open_set.count(s)) open_names.push_back(subset_name(s));
    if (open_set.count(full & ~s)) closed_names.push_back(subset_name(s));
  }

  InstanceBundle bundle;
  bundle.name = name;
  bundle.ambient = ambient;
  bundle.coreflective = Subcategory::full_on(ambient, open_names);
  bundle.reflective = Subcategory::full_on(ambient, closed_names);
  bundle.provenance =
      "topology on " + std::to_string(points) + " points, " +
      std::to_string(open_set.size()) + " opens";
  return bundle;
}

InstanceBundle regular_pair_instance(int points,
                                     const std::vector<std::uint32_t>& opens,
                                     const std::string& name) {
  std::set<std::uint32_t> open_set(opens.begin(), opens.end());
  check_topology(points, open_set);
  std::uint32_t full = (1u << points) - 1;

  CategoryRef ambient = powerset_poset(points, name + "-ambient");
  std::vector<std::string> regular_open_names, regular_closed_names;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (open_set.count(s) && interior(open_set, closure(open_set, points, s)) == s)
      regular_open_names.push_back(subset_name(s));
    std::uint32_t c = s;  // candidate closed set
    if (open_set.count(full & ~c) &&
        closure(open_set, points, interior(open_set, c)) == c)
      regular_closed_names.push_back(subset_name(c));
  }

  InstanceBundle bundle;
  bundle.name = name;
  bundle.ambient = ambient;
  bundle.coreflective = Subcategory::full_on(ambient, regular_open_names);
  bundle.reflective = Subcategory::full_on(ambient, regular_closed_names);
  bundle.provenance =
      "regular open/closed pair on " + std::to_string(points) + " points";
  return bundle;
}

Adjunction galois_instance(const Functor& f, const Functor& g) {
  if (!same_category(f.target, g.source) || !same_category(g.target, f.source))
    throw ShapeMismatch("galois_instance: f and g are not opposed");
  const FinCategory& p = *f.source;
  const FinCategory& q = *f.target;
  for (ObjId x = 0; x < static_cast<ObjId>(p.object_count()); ++x)
    for (ObjId y = 0; y < static_cast<ObjId>(q.object_count()); ++y) {
      bool fx_le_y = !q.hom(f.on_object(x), y).empty();
      bool x_le_gy = !p.hom(x, g.on_object(y)).empty();
      if (fx_le_y != x_le_gy)
        throw NotAdjoint("f(x) <= y and x <= g(y) disagree",
                         "(" + p.object_name(x) + ", " + q.object_name(y) +
                             ")");
    }

  Functor gf = compose_functors(f, g);
  Functor fg = compose_functors(g, f);
  std::vector<MorId> unit(p.object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(p.object_count()); ++x)
    unit[x] = p.hom(x, gf.on_object(x)).front();
  std::vector<MorId> counit(q.object_count());
  for (ObjId y = 0; y < static_cast<ObjId>(q.object_count()); ++y)
    counit[y] = q.hom(fg.on_object(y), y).front();

  return Adjunction{
      f, g, make_nat(identity_functor(f.source), gf, std::move(unit)),
      make_nat(fg, identity_functor(g.source), std::move(counit))};
}

InstanceBundle layered_instance(const CategoryRef& base, int depth) {
  if (depth < 0) throw ShapeMismatch("layered_instance: negative depth");
  const FinCategory& b = *base;
  auto obj = [&](ObjId a, int i) {
    return b.object_name(a) + "@" + std::to_string(i);
  };
  auto mor = [&](MorId f, int i, int j) -> std::string {
    if (i == j && b.is_identity(f)) return "id_" + obj(b.morphism(f).dom, i);
    return b.morphism_name(f) + "@" + std::to_string(i) + "-" +
           std::to_string(j);
  };

  RawCategory raw;
  raw.name = b.name() + "-layered";
  for (int i = 0; i <= depth; ++i)
    for (ObjId a = 0; a < static_cast<ObjId>(b.object_count()); ++a)
      raw.objects.push_back(obj(a, i));
  for (int i = 0; i <= depth; ++i)
    for (int j = i; j <= depth; ++j)
      for (MorId f = 0; f < static_cast<MorId>(b.morphism_count()); ++f) {
        if (i == j && b.is_identity(f)) continue;
        raw.morphisms.push_back(
            {mor(f, i, j), obj(b.morphism(f).dom, i),
             obj(b.morphism(f).cod, j)});
      }
  for (int i = 0; i <= depth; ++i)
    for (int j = i; j <= depth; ++j)
      for (int k = j; k <= depth; ++k)
        for (MorId f = 0; f < static_cast<MorId>(b.morphism_count()); ++f) {
          if (i == j && b.is_identity(f)) continue;
          for (MorId g = 0; g < static_cast<MorId>(b.morphism_count()); ++g) {
            if (j == k && b.is_identity(g)) continue;
            if (!b.composable(g, f)) continue;
            raw.composites.push_back(
                {mor(g, j, k), mor(f, i, j), mor(b.compose(g, f), i, k)});
          }
        }
  CategoryRef ambient = validate_category(raw);

  std::vector<std::string> bottom, top;
  for (ObjId a = 0; a < static_cast<ObjId>(b.object_count()); ++a) {
    bottom.push_back(obj(a, 0));
    top.push_back(obj(a, depth));
  }

  InstanceBundle bundle;
  bundle.name = "layered-" + b.name() + "-d" + std::to_string(depth);
  bundle.ambient = ambient;
  bundle.coreflective = Subcategory::full_on(ambient, bottom);
  bundle.reflective = Subcategory::full_on(ambient, top);
  bundle.provenance = "layered over " + b.name() + " (" +
                      std::to_string(b.object_count()) + " objects), depth " +
                      std::to_string(depth);
  return bundle;
}

InstanceBundle random_instance(std::uint64_t seed, int max_elements) {
  if (max_elements < 2)
    throw ShapeMismatch("random_instance: need at least 2 elements");
  std::mt19937_64 rng(seed);
  int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                   max_elements - 1));

  // Random DAG on 0 < 1 < ... (index order), then transitive closure.
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    leq[i][i] = true;
    for (int j = i + 1; j < n; ++j) leq[i][j] = rng() % 5 < 2;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;

  std::vector<std::string> elements(n);
  for (int i = 0; i < n; ++i) elements[i] = "p" + std::to_string(i);

  std::vector<bool> in_n(n), in_m(n);
  for (int i = 0; i < n; ++i) {
    in_n[i] = rng() % 2 == 0;
    in_m[i] = rng() % 2 == 0;
  }
  // Repair until every element has a least upper bound in the reflective
  // side and a greatest lower bound in the coreflective side. Adding the
  // failing element itself fixes it; the loop is monotone, so it stops.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      int least = -1;
      for (int y = 0; y < n; ++y) {
        if (!in_n[y] || !leq[x][y]) continue;
        if (least == -1 || leq[y][least]) least = y;
      }
      bool ok = least != -1;
      for (int y = 0; ok && y < n; ++y)
        if (in_n[y] && leq[x][y] && !leq[least][y]) ok = false;
      if (!ok) {
        in_n[x] = true;
        changed = true;
      }
    }
    for (int x = 0; x < n; ++x) {
      int greatest = -1;
      for (int y = 0; y < n; ++y) {
        if (!in_m[y] || !leq[y][x]) continue;
        if (greatest == -1 || leq[greatest][y]) greatest = y;
      }
      bool ok = greatest != -1;
      for (int y = 0; ok && y < n; ++y)
        if (in_m[y] && leq[y][x] && !leq[y][greatest]) ok = false;
      if (!ok) {
        in_m[x] = true;
        changed = true;
      }
    }
  }

  CategoryRef ambient =
      poset_category("random-" + std::to_string(seed), elements, leq);
  std::vector<std::string> m_names, n_names;
  for (int i = 0; i < n; ++i) {
    if (in_m[i]) m_names.push_back(elements[i]);
    if (in_n[i]) n_names.push_back(elements[i]);
  }

  InstanceBundle bundle;
  bundle.name = "random-" + std::to_string(seed);
  bundle.ambient = ambient;
  bundle.coreflective = Subcategory::full_on(ambient, m_names);
  bundle.reflective = Subcategory::full_on(ambient, n_names);
  bundle.provenance = "random poset, seed " + std::to_string(seed) + ", " +
                      std::to_string(n) + " elements";
  return bundle;
}

InstanceBundle dual_bundle(const InstanceBundle& b) {
  CategoryRef op = opposite(b.ambient);
  auto names = [&](const Subcategory& s) {
    std::vector<std::string> out;
    for (ObjId x : s.objects) out.push_back(b.ambient->object_name(x));
    return out;
  };
  InstanceBundle d;
  d.name = b.name + "-dual";
  d.ambient = op;
  d.coreflective = Subcategory::full_on(op, names(b.reflective));
  d.reflective = Subcategory::full_on(op, names(b.coreflective));
  d.provenance = "dual of: " + b.provenance;
  return d;
}

CategoryRef chain_category(const std::string& name, int n) {
  std::vector<std::string> elements(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    elements[i] = "x" + std::to_string(i);
    for (int j = i; j < n; ++j) leq[i][j] = true;
  }
  return poset_category(name, elements, leq);
}

namespace {

void expect_main(InstanceBundle& b, bool verdict) {
  b.expected[slug("Prop (F)")] = verdict;
  b.expected[slug("Prop (I)")] = verdict;
  static const char* numerals[] = {"i",  "ii",  "iii", "iv",
                                   "v",  "vi",  "vii", "viii"};
  for (const char* r : numerals)
    b.expected[slug(std::string("Thm-main (") + r + ")")] = verdict;
  b.expected[slug("Cor-equiv (adjunction)")] = verdict;
  b.expected[slug("Cor-equiv (properties)")] = verdict;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"sierpinski",     "regsierp",          "discrete2", "partition4",
          "layered-chain2", "chain3-singletons", "diamond"};
}

InstanceBundle fixture(const std::string& name) {
  if (name == "sierpinski") {
    InstanceBundle b = topology_instance(2, {0b00, 0b01, 0b11}, name);
    expect_main(b, false);
    b.expected[slug("Hyp 5.1")] = false;
    return b;
  }
  if (name == "regsierp") {
    InstanceBundle b = regular_pair_instance(2, {0b00, 0b01, 0b11}, name);
    expect_main(b, true);
    b.expected[slug("Hyp 5.1")] = false;
    return b;
  }
  if (name == "discrete2") {
    InstanceBundle b = topology_instance(2, {0b00, 0b01, 0b10, 0b11}, name);
    expect_main(b, true);
    b.expected[slug("Hyp 5.1")] = true;
    return b;
  }
  if (name == "partition4") {
    InstanceBundle b =
        topology_instance(4, {0b0000, 0b0011, 0b1100, 0b1111}, name);
    expect_main(b, true);
    b.expected[slug("Hyp 5.1")] = false;
    return b;
  }
  if (name == "layered-chain2") {
    InstanceBundle b = layered_instance(chain_category("chain2", 2), 2);
    b.name = name;
    expect_main(b, true);
    b.expected[slug("Hyp 5.1")] = true;
    return b;
  }
  if (name == "chain3-singletons") {
    CategoryRef chain = chain_category("chain3", 3);
    InstanceBundle b;
    b.name = name;
    b.ambient = chain;
    b.coreflective = Subcategory::full_on(chain, {"x0"});
    b.reflective = Subcategory::full_on(chain, {"x2"});
    b.provenance = "chain of 3 with singleton bottom/top subcategories";
    expect_main(b, true);
    b.expected[slug("Hyp 5.1")] = true;
    return b;
  }
  if (name == "diamond") {
    std::vector<std::string> elements = {"bot", "a", "b", "top"};
    std::vector<std::vector<bool>> leq = {{true, true, true, true},
                                          {false, true, false, true},
                                          {false, false, true, true},
                                          {false, false, false, true}};
    CategoryRef diamond = poset_category("diamond", elements, leq);
    InstanceBundle b;
    b.name = name;
    b.ambient = diamond;
    b.coreflective = Subcategory::full_on(diamond, {"a", "b"});
    b.reflective = Subcategory::full_on(diamond, {"a", "b"});
    b.provenance = "diamond poset; the antichain {a, b} is neither "
                   "reflective nor coreflective";
    return b;
  }
  throw Error("unknown fixture: " + name);
}

}  // namespace catq
