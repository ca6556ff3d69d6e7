#include "catq/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

namespace catq {

namespace {

std::uint64_t pair_key(MorId g, MorId f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(f);
}

std::string identity_name(const std::string& object) { return "id_" + object; }

}  // namespace

const Config& default_config() {
  static const Config config = [] {
    Config c;
    if (const char* env = std::getenv("CATQ_MAX_SIZE")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) c.max_morphisms = v;
    }
    return c;
  }();
  return config;
}

void FinCategory::build_indexes() {
  object_index_.clear();
  morphism_index_.clear();
  for (ObjId x = 0; x < static_cast<ObjId>(objects_.size()); ++x)
    object_index_.emplace(objects_[x], x);
  for (MorId f = 0; f < static_cast<MorId>(morphisms_.size()); ++f)
    morphism_index_.emplace(morphisms_[f].name, f);
  hom_.assign(objects_.size() * objects_.size(), {});
  for (MorId f = 0; f < static_cast<MorId>(morphisms_.size()); ++f)
    hom_[static_cast<std::size_t>(morphisms_[f].dom) * objects_.size() +
         morphisms_[f].cod]
        .push_back(f);
}

ObjId FinCategory::object_id(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  return it == object_index_.end() ? kNoObj : it->second;
}

MorId FinCategory::morphism_id(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  return it == morphism_index_.end() ? kNoMor : it->second;
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (!composable(g, f))
    throw ShapeMismatch("compose: " + morphisms_[g].name + " after " +
                        morphisms_[f].name + " is not composable");
  return comp_.at(pair_key(g, f));
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (&a == &b) return true;
  if (a.objects_ != b.objects_) return false;
  if (a.morphisms_.size() != b.morphisms_.size()) return false;
  for (std::size_t i = 0; i < a.morphisms_.size(); ++i) {
    const auto& ma = a.morphisms_[i];
    const auto& mb = b.morphisms_[i];
    if (ma.name != mb.name || ma.dom != mb.dom || ma.cod != mb.cod)
      return false;
  }
  if (a.identity_ != b.identity_) return false;
  return a.comp_ == b.comp_;
}

std::vector<Violation> check_category(const RawCategory& raw,
                                      const Config& config) {
  std::vector<Violation> out;
  FinCategory c;
  c.name_ = raw.name;

  std::set<std::string> seen_objects;
  for (const auto& o : raw.objects) {
    if (!seen_objects.insert(o).second) {
      out.push_back({"DuplicateObject", o, "object declared twice"});
      continue;
    }
    c.objects_.push_back(o);
  }
  auto obj_of = [&](const std::string& n) -> ObjId {
    for (ObjId x = 0; x < static_cast<ObjId>(c.objects_.size()); ++x)
      if (c.objects_[x] == n) return x;
    return kNoObj;
  };

  std::set<std::string> seen_morphisms;
  for (const auto& m : raw.morphisms) {
    if (!seen_morphisms.insert(m.name).second) {
      out.push_back({"DuplicateMorphism", m.name, "morphism declared twice"});
      continue;
    }
    ObjId dom = obj_of(m.dom);
    ObjId cod = obj_of(m.cod);
    if (dom == kNoObj)
      out.push_back({"UnknownObject", m.dom, "domain of " + m.name});
    if (cod == kNoObj)
      out.push_back({"UnknownObject", m.cod, "codomain of " + m.name});
    if (dom == kNoObj || cod == kNoObj) continue;
    c.morphisms_.push_back({m.name, dom, cod});
  }
  if (!out.empty()) return out;

  auto mor_of = [&](const std::string& n) -> MorId {
    for (MorId f = 0; f < static_cast<MorId>(c.morphisms_.size()); ++f)
      if (c.morphisms_[f].name == n) return f;
    return kNoMor;
  };

  // Identities: reserved names id_<object>, auto-generated when absent.
  c.identity_.assign(c.objects_.size(), kNoMor);
  for (ObjId x = 0; x < static_cast<ObjId>(c.objects_.size()); ++x) {
    std::string idn = identity_name(c.objects_[x]);
    MorId f = mor_of(idn);
    if (f != kNoMor) {
      if (c.morphisms_[f].dom != x || c.morphisms_[f].cod != x) {
        out.push_back({"MissingIdentity", idn,
                       "reserved identity name with wrong endpoints"});
        continue;
      }
    } else {
      f = static_cast<MorId>(c.morphisms_.size());
      c.morphisms_.push_back({idn, x, x});
    }
    c.identity_[x] = f;
  }
  if (!out.empty()) return out;

  if (c.morphisms_.size() > config.max_morphisms) {
    out.push_back({"CategoryTooLarge", c.name_,
                   std::to_string(c.morphisms_.size()) + " morphisms exceeds cap " +
                       std::to_string(config.max_morphisms)});
    return out;
  }

  for (const auto& e : raw.composites) {
    MorId g = mor_of(e.g);
    MorId f = mor_of(e.f);
    MorId r = mor_of(e.result);
    if (g == kNoMor) out.push_back({"UnknownMorphism", e.g, "in compose line"});
    if (f == kNoMor) out.push_back({"UnknownMorphism", e.f, "in compose line"});
    if (r == kNoMor)
      out.push_back({"UnknownMorphism", e.result, "in compose line"});
    if (g == kNoMor || f == kNoMor || r == kNoMor) continue;
    if (!c.composable(g, f)) {
      out.push_back({"NonComposablePairInTable", e.g + " after " + e.f,
                     "cod(" + e.f + ") != dom(" + e.g + ")"});
      continue;
    }
    if (c.morphisms_[r].dom != c.morphisms_[f].dom ||
        c.morphisms_[r].cod != c.morphisms_[g].cod) {
      out.push_back({"CompositeTypeMismatch", e.result,
                     e.g + " after " + e.f + " must go " +
                         c.objects_[c.morphisms_[f].dom] + " -> " +
                         c.objects_[c.morphisms_[g].cod]});
      continue;
    }
    auto [it, inserted] = c.comp_.emplace(pair_key(g, f), r);
    if (!inserted && it->second != r)
      out.push_back({"ConflictingComposite", e.g + " after " + e.f,
                     "two different results declared"});
  }
  if (!out.empty()) return out;

  // Identity laws fill the remaining identity compositions; explicit entries
  // that disagree are violations.
  for (MorId f = 0; f < static_cast<MorId>(c.morphisms_.size()); ++f) {
    MorId idc = c.identity_[c.morphisms_[f].cod];
    MorId idd = c.identity_[c.morphisms_[f].dom];
    for (auto [g, h, law] : {std::tuple{idc, f, pair_key(idc, f)},
                             std::tuple{f, idd, pair_key(f, idd)}}) {
      (void)g;
      (void)h;
      auto [it, inserted] = c.comp_.emplace(law, f);
      if (!inserted && it->second != f)
        out.push_back({"IdentityLawViolation", c.morphisms_[f].name,
                       "composition with an identity is not " +
                           c.morphisms_[f].name});
    }
  }
  if (!out.empty()) return out;

  // Totality over composable pairs.
  c.build_indexes();
  for (MorId f = 0; f < static_cast<MorId>(c.morphisms_.size()); ++f)
    for (ObjId z = 0; z < static_cast<ObjId>(c.objects_.size()); ++z)
      for (MorId g : c.hom(c.morphisms_[f].cod, z))
        if (!c.comp_.count(pair_key(g, f)))
          out.push_back({"MissingComposite",
                         c.morphisms_[g].name + " after " + c.morphisms_[f].name,
                         "no table entry for a composable pair"});
  if (!out.empty()) return out;

  // Associativity, exhaustively over composable triples.
  for (MorId f = 0; f < static_cast<MorId>(c.morphisms_.size()); ++f) {
    for (ObjId z = 0; z < static_cast<ObjId>(c.objects_.size()); ++z) {
      for (MorId g : c.hom(c.morphisms_[f].cod, z)) {
        MorId gf = c.comp_.at(pair_key(g, f));
        for (ObjId w = 0; w < static_cast<ObjId>(c.objects_.size()); ++w) {
          for (MorId h : c.hom(z, w)) {
            MorId hg = c.comp_.at(pair_key(h, g));
            if (c.comp_.at(pair_key(h, gf)) != c.comp_.at(pair_key(hg, f))) {
              out.push_back({"AssociativityViolation",
                             c.morphisms_[h].name + ", " + c.morphisms_[g].name +
                                 ", " + c.morphisms_[f].name,
                             "h(gf) != (hg)f"});
              return out;
            }
          }
        }
      }
    }
  }
  return out;
}

FinCategory FinCategory::validate(const RawCategory& raw,
                                  const Config& config) {
  auto violations = check_category(raw, config);
  if (!violations.empty()) {
    std::string what =
        "category '" + raw.name + "' is invalid: " + violations.front().kind +
        " [" + violations.front().witness + "]";
    if (violations.size() > 1)
      what += " (+" + std::to_string(violations.size() - 1) + " more)";
    throw ValidationError(what, std::move(violations));
  }
  // Re-run construction; check_category already proved it clean.
  FinCategory c;
  c.name_ = raw.name;
  c.objects_ = raw.objects;
  for (const auto& m : raw.morphisms) {
    ObjId dom = kNoObj, cod = kNoObj;
    for (ObjId x = 0; x < static_cast<ObjId>(c.objects_.size()); ++x) {
      if (c.objects_[x] == m.dom) dom = x;
      if (c.objects_[x] == m.cod) cod = x;
    }
    c.morphisms_.push_back({m.name, dom, cod});
  }
  c.identity_.assign(c.objects_.size(), kNoMor);
  for (ObjId x = 0; x < static_cast<ObjId>(c.objects_.size()); ++x) {
    std::string idn = identity_name(c.objects_[x]);
    MorId f = kNoMor;
    for (MorId i = 0; i < static_cast<MorId>(c.morphisms_.size()); ++i)
      if (c.morphisms_[i].name == idn) f = i;
    if (f == kNoMor) {
      f = static_cast<MorId>(c.morphisms_.size());
      c.morphisms_.push_back({idn, x, x});
    }
    c.identity_[x] = f;
  }
  auto mor_of = [&](const std::string& n) {
    for (MorId i = 0; i < static_cast<MorId>(c.morphisms_.size()); ++i)
      if (c.morphisms_[i].name == n) return i;
    return kNoMor;
  };
  for (const auto& e : raw.composites)
    c.comp_.emplace(pair_key(mor_of(e.g), mor_of(e.f)), mor_of(e.result));
  for (MorId f = 0; f < static_cast<MorId>(c.morphisms_.size()); ++f) {
    c.comp_.emplace(pair_key(c.identity_[c.morphisms_[f].cod], f), f);
    c.comp_.emplace(pair_key(f, c.identity_[c.morphisms_[f].dom]), f);
  }
  c.build_indexes();
  return c;
}

CategoryRef validate_category(const RawCategory& raw, const Config& config) {
  return make_category(FinCategory::validate(raw, config));
}

MorphismClass morphism_class(const FinCategory& c, MorId f) {
  if (f < 0 || f >= static_cast<MorId>(c.morphism_count()))
    throw UnknownMorphism("morphism_class: unknown morphism id");
  const auto& m = c.morphism(f);
  MorphismClass out;

  // Left cancellation over all parallel pairs into dom(f).
  out.is_mono = true;
  for (ObjId z = 0; out.is_mono && z < static_cast<ObjId>(c.object_count());
       ++z) {
    const auto& par = c.hom(z, m.dom);
    for (std::size_t i = 0; out.is_mono && i < par.size(); ++i)
      for (std::size_t j = i + 1; j < par.size(); ++j)
        if (c.compose(f, par[i]) == c.compose(f, par[j])) {
          out.is_mono = false;
          break;
        }
  }
  // Right cancellation.
  out.is_epi = true;
  for (ObjId z = 0; out.is_epi && z < static_cast<ObjId>(c.object_count());
       ++z) {
    const auto& par = c.hom(m.cod, z);
    for (std::size_t i = 0; out.is_epi && i < par.size(); ++i)
      for (std::size_t j = i + 1; j < par.size(); ++j)
        if (c.compose(par[i], f) == c.compose(par[j], f)) {
          out.is_epi = false;
          break;
        }
  }
  // One- and two-sided inverse search.
  for (MorId r : c.hom(m.cod, m.dom)) {
    bool left = c.compose(r, f) == c.identity(m.dom);   // r retracts f
    bool right = c.compose(f, r) == c.identity(m.cod);  // r sections f
    if (left) out.is_split_mono = true;
    if (right) out.is_split_epi = true;
    if (left && right) out.is_iso = true;
  }
  return out;
}

MorphismClass morphism_class(const FinCategory& c, std::string_view name) {
  MorId f = c.morphism_id(name);
  if (f == kNoMor)
    throw UnknownMorphism("morphism_class: unknown morphism '" +
                          std::string(name) + "'");
  return morphism_class(c, f);
}

bool is_initial_object(const FinCategory& c, ObjId x) {
  for (ObjId y = 0; y < static_cast<ObjId>(c.object_count()); ++y)
    if (c.hom(x, y).size() != 1) return false;
  return true;
}

bool is_final_object(const FinCategory& c, ObjId x) {
  for (ObjId y = 0; y < static_cast<ObjId>(c.object_count()); ++y)
    if (c.hom(y, x).size() != 1) return false;
  return true;
}

std::vector<ObjId> find_initial(const FinCategory& c) {
  std::vector<ObjId> out;
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
    if (is_initial_object(c, x)) out.push_back(x);
  return out;
}

std::vector<ObjId> find_final(const FinCategory& c) {
  std::vector<ObjId> out;
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
    if (is_final_object(c, x)) out.push_back(x);
  return out;
}

FinCategory opposite(const FinCategory& c) {
  RawCategory raw;
  raw.name = c.name();
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
    raw.objects.push_back(c.object_name(x));
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    const auto& m = c.morphism(f);
    if (c.is_identity(f)) continue;
    raw.morphisms.push_back(
        {m.name, c.object_name(m.cod), c.object_name(m.dom)});
  }
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
    for (ObjId z = 0; z < static_cast<ObjId>(c.object_count()); ++z)
      for (MorId g : c.hom(c.morphism(f).cod, z)) {
        if (c.is_identity(f) || c.is_identity(g)) continue;
        MorId gf = c.compose(g, f);
        raw.composites.push_back({c.morphism_name(f), c.morphism_name(g),
                                  c.morphism_name(gf)});
      }
  return FinCategory::validate(raw);
}

CategoryRef opposite(const CategoryRef& c) {
  return make_category(opposite(*c));
}

CategoryRef terminal_category() {
  static const CategoryRef c = [] {
    RawCategory raw;
    raw.name = "1";
    raw.objects = {"*"};
    return validate_category(raw);
  }();
  return c;
}

Subcategory Subcategory::full_on(CategoryRef parent,
                                 const std::vector<std::string>& object_names) {
  Subcategory s;
  s.parent = std::move(parent);
  s.full = true;
  std::vector<bool> in(s.parent->object_count(), false);
  for (const auto& n : object_names) {
    ObjId x = s.parent->object_id(n);
    if (x == kNoObj)
      throw Error("subcategory: unknown object '" + n + "'");
    if (!in[x]) {
      in[x] = true;
      s.objects.push_back(x);
    }
  }
  std::sort(s.objects.begin(), s.objects.end());
  for (MorId f = 0; f < static_cast<MorId>(s.parent->morphism_count()); ++f) {
    const auto& m = s.parent->morphism(f);
    if (in[m.dom] && in[m.cod]) s.morphisms.push_back(f);
  }
  return s;
}

Subcategory Subcategory::on(CategoryRef parent,
                            const std::vector<std::string>& object_names,
                            const std::vector<std::string>& morphism_names) {
  Subcategory s;
  s.parent = std::move(parent);
  s.full = false;
  std::vector<bool> in_obj(s.parent->object_count(), false);
  for (const auto& n : object_names) {
    ObjId x = s.parent->object_id(n);
    if (x == kNoObj)
      throw Error("subcategory: unknown object '" + n + "'");
    if (!in_obj[x]) {
      in_obj[x] = true;
      s.objects.push_back(x);
    }
  }
  std::sort(s.objects.begin(), s.objects.end());
  std::vector<bool> in_mor(s.parent->morphism_count(), false);
  for (ObjId x : s.objects) in_mor[s.parent->identity(x)] = true;
  for (const auto& n : morphism_names) {
    MorId f = s.parent->morphism_id(n);
    if (f == kNoMor)
      throw Error("subcategory: unknown morphism '" + n + "'");
    in_mor[f] = true;
  }
  for (MorId f = 0; f < static_cast<MorId>(s.parent->morphism_count()); ++f)
    if (in_mor[f]) s.morphisms.push_back(f);
  return s;
}

bool Subcategory::contains_object(ObjId x) const {
  return std::binary_search(objects.begin(), objects.end(), x);
}

bool Subcategory::contains_morphism(MorId f) const {
  return std::binary_search(morphisms.begin(), morphisms.end(), f);
}

void Subcategory::validate() const {
  std::vector<Violation> out;
  for (MorId f : morphisms) {
    const auto& m = parent->morphism(f);
    if (!contains_object(m.dom) || !contains_object(m.cod))
      out.push_back({"EndpointNotIncluded", m.name,
                     "dom/cod of an included morphism must be included"});
  }
  for (ObjId x : objects)
    if (!contains_morphism(parent->identity(x)))
      out.push_back({"MissingIdentity", parent->object_name(x),
                     "identity of an included object must be included"});
  for (MorId f : morphisms)
    for (MorId g : morphisms)
      if (parent->composable(g, f) &&
          !contains_morphism(parent->compose(g, f)))
        out.push_back({"NotClosedUnderComposition",
                       parent->morphism_name(g) + " after " +
                           parent->morphism_name(f),
                       "composite escapes the subcategory"});
  if (full) {
    for (ObjId x : objects)
      for (ObjId y : objects)
        for (MorId f : parent->hom(x, y))
          if (!contains_morphism(f))
            out.push_back({"FullnessViolation", parent->morphism_name(f),
                           "full subcategory omits a parent morphism "
                           "between included objects"});
  }
  if (!out.empty()) {
    std::string msg = "invalid subcategory: " + out.front().kind + " [" +
                      out.front().witness + "]";
    throw ValidationError(msg, std::move(out));
  }
}

}  // namespace catq
