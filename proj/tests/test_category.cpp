#include <doctest.h>

#include <algorithm>

#include "catq/instances.hpp"

using namespace catq;

namespace {

RawCategory iso_pair_raw() {
  RawCategory raw;
  raw.name = "isopair";
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", "a", "b"}, {"g", "b", "a"}};
  raw.composites = {{"g", "f", "id_a"}, {"f", "g", "id_b"}};
  return raw;
}

RawCategory retract_raw() {
  // s : a -> b split mono (r.s = 1_a), e = s.r idempotent on b.
  RawCategory raw;
  raw.name = "retract";
  raw.objects = {"a", "b"};
  raw.morphisms = {{"s", "a", "b"}, {"r", "b", "a"}, {"e", "b", "b"}};
  raw.composites = {{"r", "s", "id_a"}, {"s", "r", "e"}, {"e", "s", "s"},
                    {"r", "e", "r"},    {"e", "e", "e"}};
  return raw;
}

}  // namespace

TEST_CASE("chain poset as category: counts and composition") {
  CategoryRef c = chain_category("chain3", 3);
  CHECK(c->object_count() == 3);
  CHECK(c->morphism_count() == 6);  // 3 identities + le(0,1), le(0,2), le(1,2)
  MorId f = c->morphism_id("le(x0,x1)");
  MorId g = c->morphism_id("le(x1,x2)");
  CHECK(c->compose(g, f) == c->morphism_id("le(x0,x2)"));
  CHECK(c->hom(0, 2).size() == 1);
  CHECK(c->hom(2, 0).empty());
  CHECK_THROWS_AS(c->compose(f, g), ShapeMismatch);
}

TEST_CASE("identities are auto-generated and obey the identity laws") {
  RawCategory raw;
  raw.name = "one-arrow";
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", "a", "b"}};
  CategoryRef c = validate_category(raw);
  CHECK(c->morphism_count() == 3);
  MorId f = c->morphism_id("f");
  CHECK(c->compose(c->identity(1), f) == f);
  CHECK(c->compose(f, c->identity(0)) == f);
  CHECK(c->is_identity(c->identity(0)));
  CHECK_FALSE(c->is_identity(f));
}

TEST_CASE("validation reports missing composites") {
  RawCategory raw;
  raw.name = "broken";
  raw.objects = {"a", "b", "c"};
  raw.morphisms = {{"f", "a", "b"}, {"g", "b", "c"}};
  auto violations = check_category(raw);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == "MissingComposite");
  CHECK_THROWS_AS(validate_category(raw), ValidationError);
}

TEST_CASE("validation reports unknown objects, duplicates, conflicts") {
  RawCategory raw;
  raw.name = "bad";
  raw.objects = {"a", "a"};
  raw.morphisms = {{"f", "a", "zz"}};
  auto violations = check_category(raw);
  bool dup = false, unknown = false;
  for (const auto& v : violations) {
    dup = dup || v.kind == "DuplicateObject";
    unknown = unknown || v.kind == "UnknownObject";
  }
  CHECK(dup);
  CHECK(unknown);

  RawCategory conflict = iso_pair_raw();
  conflict.composites.push_back({"g", "f", "id_a"});
  CHECK(check_category(conflict).empty());  // duplicate but consistent entry
  conflict.morphisms.push_back({"h", "a", "a"});
  conflict.composites.push_back({"h", "h", "id_a"});
  conflict.composites.push_back({"h", "h", "h"});
  bool conflicting = false;
  for (const auto& v : check_category(conflict))
    conflicting = conflicting || v.kind == "ConflictingComposite";
  CHECK(conflicting);
}

TEST_CASE("associativity is checked exhaustively") {
  // Two idempotents whose table is deliberately non-associative.
  RawCategory raw;
  raw.name = "nonassoc";
  raw.objects = {"a"};
  raw.morphisms = {{"p", "a", "a"}, {"q", "a", "a"}};
  raw.composites = {{"p", "p", "p"}, {"q", "q", "q"}, {"p", "q", "p"},
                    {"q", "p", "q"}};
  // (q.p).p = q.p = q  but  q.(p.p) = q.p = q — tweak to break it:
  raw.composites[2] = {"p", "q", "id_a"};  // p.q = 1, q.p = q
  // then p.(q.p) = p.q = 1 while (p.q).p = 1.p = p.
  auto violations = check_category(raw);
  bool assoc = false;
  for (const auto& v : violations)
    assoc = assoc || v.kind == "AssociativityViolation";
  CHECK(assoc);
}

TEST_CASE("size cap") {
  Config small;
  small.max_morphisms = 3;
  std::vector<std::string> elems = {"x0", "x1", "x2"};
  std::vector<std::vector<bool>> leq(3, std::vector<bool>(3, false));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) leq[i][j] = true;
  try {
    poset_category("capped", elems, leq, small);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE_FALSE(e.violations.empty());
    CHECK(e.violations.front().kind == "CategoryTooLarge");
  }
}

TEST_CASE("morphism classification") {
  CategoryRef chain = chain_category("chain3", 3);
  MorphismClass le = morphism_class(*chain, "le(x0,x2)");
  CHECK(le.is_mono);  // posets: every morphism mono and epi
  CHECK(le.is_epi);
  CHECK_FALSE(le.is_iso);
  CHECK_FALSE(le.is_split_mono);
  CHECK(morphism_class(*chain, chain->identity(1)).is_iso);

  CategoryRef iso = validate_category(iso_pair_raw());
  CHECK(morphism_class(*iso, "f").is_iso);

  CategoryRef retract = validate_category(retract_raw());
  MorphismClass s = morphism_class(*retract, "s");
  CHECK(s.is_split_mono);
  CHECK(s.is_mono);
  CHECK_FALSE(s.is_epi);
  CHECK_FALSE(s.is_iso);
  MorphismClass r = morphism_class(*retract, "r");
  CHECK(r.is_split_epi);
  CHECK_FALSE(r.is_mono);
}

TEST_CASE("initial and final objects") {
  CategoryRef chain = chain_category("chain3", 3);
  CHECK(is_initial_object(*chain, 0));
  CHECK_FALSE(is_initial_object(*chain, 1));
  CHECK(is_final_object(*chain, 2));
  CHECK(find_initial(*chain) == std::vector<ObjId>{0});
  CHECK(find_final(*chain) == std::vector<ObjId>{2});
  CategoryRef term = terminal_category();
  CHECK(term->object_count() == 1);
  CHECK(is_initial_object(*term, 0));
  CHECK(is_final_object(*term, 0));
}

TEST_CASE("opposite swaps initial/final and is involutive") {
  CategoryRef chain = chain_category("chain3", 3);
  CategoryRef op = opposite(chain);
  CHECK(is_final_object(*op, 0));
  CHECK(is_initial_object(*op, 2));
  CHECK(*opposite(op) == *chain);
  CHECK_FALSE(*op == *chain);
}

TEST_CASE("structural equality ignores the category name") {
  CategoryRef a = chain_category("first", 2);
  CategoryRef b = chain_category("second", 2);
  CHECK(*a == *b);
}

TEST_CASE("subcategory closure validation") {
  CategoryRef chain = chain_category("chain3", 3);
  Subcategory good = Subcategory::full_on(chain, {"x0", "x2"});
  good.validate();
  CHECK(good.contains_object(0));
  CHECK_FALSE(good.contains_object(1));

  Subcategory bad = good;
  bad.morphisms.push_back(chain->morphism_id("le(x0,x1)"));
  std::sort(bad.morphisms.begin(), bad.morphisms.end());
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}
