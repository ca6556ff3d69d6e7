#include <doctest.h>

#include "catq/dsl.hpp"
#include "catq/reflective.hpp"

using namespace catq;

TEST_CASE("poset_category rejects non-orders with witnesses") {
  std::vector<std::string> e = {"a", "b"};
  std::vector<std::vector<bool>> not_reflexive = {{false, false},
                                                  {false, true}};
  try {
    poset_category("p", e, not_reflexive);
    FAIL("expected NotAPartialOrder");
  } catch (const NotAPartialOrder& err) {
    CHECK(err.witness == "a");
  }

  std::vector<std::vector<bool>> not_antisym = {{true, true}, {true, true}};
  CHECK_THROWS_AS(poset_category("p", e, not_antisym), NotAPartialOrder);

  std::vector<std::string> e3 = {"a", "b", "c"};
  std::vector<std::vector<bool>> not_trans = {{true, true, false},
                                              {false, true, true},
                                              {false, false, true}};
  try {
    poset_category("p", e3, not_trans);
    FAIL("expected NotAPartialOrder");
  } catch (const NotAPartialOrder& err) {
    CHECK(err.witness == "a, b, c");
  }
}

TEST_CASE("topology_instance checks the axioms") {
  CHECK_THROWS_AS(topology_instance(2, {0b01, 0b11}, "t"), NotATopology);
  CHECK_THROWS_AS(topology_instance(2, {0b00, 0b01}, "t"), NotATopology);
  // {1} and {2} open but their union handled, intersection fine; removing
  // the union breaks closure.
  CHECK_THROWS_AS(topology_instance(2, {0b00, 0b01, 0b10}, "t"),
                  NotATopology);
  InstanceBundle ok = topology_instance(2, {0b00, 0b01, 0b10, 0b11}, "t");
  CHECK(ok.ambient->object_count() == 4);
}

TEST_CASE("powerset ambient declaration order and naming") {
  InstanceBundle s = fixture("sierpinski");
  CHECK(s.ambient->object_name(0) == "{}");
  CHECK(s.ambient->object_name(1) == "{1}");
  CHECK(s.ambient->object_name(2) == "{2}");
  CHECK(s.ambient->object_name(3) == "{1,2}");
  CHECK(s.ambient->morphism_id("le({},{1,2})") != kNoMor);
  // Opens in declaration order: {}, {1}, {1,2}.
  std::vector<std::string> opens;
  for (ObjId x : s.coreflective.objects)
    opens.push_back(s.ambient->object_name(x));
  CHECK(opens == std::vector<std::string>{"{}", "{1}", "{1,2}"});
}

TEST_CASE("regular pair restricts to the clopen core") {
  InstanceBundle r = fixture("regsierp");
  std::vector<std::string> m, n;
  for (ObjId x : r.coreflective.objects)
    m.push_back(r.ambient->object_name(x));
  for (ObjId x : r.reflective.objects)
    n.push_back(r.ambient->object_name(x));
  CHECK(m == std::vector<std::string>{"{}", "{1,2}"});
  CHECK(n == std::vector<std::string>{"{}", "{1,2}"});
}

TEST_CASE("layered instance shape and subcategories") {
  CategoryRef base = chain_category("chain2", 2);
  InstanceBundle b = layered_instance(base, 2);
  CHECK(b.ambient->object_count() == 6);  // 2 objects x 3 levels
  CHECK(b.ambient->object_id("x0@0") != kNoObj);
  CHECK(b.ambient->object_id("x1@2") != kNoObj);
  // One morphism per base morphism and level pair i <= j.
  CHECK(b.ambient->morphism_id("le(x0,x1)@0-2") != kNoMor);
  CHECK(b.ambient->morphism_id("id_x0@0-1") != kNoMor);
  CHECK(b.coreflective.objects.size() == 2);
  CHECK(b.reflective.objects.size() == 2);
  b.coreflective.validate();
  b.reflective.validate();
  CHECK_THROWS_AS(layered_instance(base, -1), ShapeMismatch);
}

TEST_CASE("random instances are deterministic and well-formed by construction") {
  InstanceBundle a = random_instance(42, 8);
  InstanceBundle b = random_instance(42, 8);
  CHECK(emit(a) == emit(b));
  CHECK(*a.ambient == *b.ambient);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    InstanceBundle r = random_instance(seed, 8);
    r.coreflective.validate();
    r.reflective.validate();
    ReflectiveStructure refl = find_reflector(r.ambient, r.reflective);
    CoreflectiveStructure corefl =
        find_coreflector(r.ambient, r.coreflective);
    // Normalization: reflector restricted to the subcategory is identity.
    for (ObjId s = 0; s < static_cast<ObjId>(refl.view.cat->object_count());
         ++s) {
      ObjId amb = refl.view.inclusion.on_object(s);
      CHECK(refl.reflector.on_object(amb) == s);
      CHECK(refl.unit.at(amb) == r.ambient->identity(amb));
    }
    for (ObjId s = 0;
         s < static_cast<ObjId>(corefl.view.cat->object_count()); ++s) {
      ObjId amb = corefl.view.inclusion.on_object(s);
      CHECK(corefl.coreflector.on_object(amb) == s);
    }
  }
}

TEST_CASE("fixture catalog: expected verdicts match checker output") {
  for (const auto& name : fixture_names()) {
    InstanceBundle b = fixture(name);
    if (b.expected.empty()) continue;  // diamond carries no expectations
    ReflectiveStructure refl = find_reflector(b.ambient, b.reflective);
    CoreflectiveStructure corefl =
        find_coreflector(b.ambient, b.coreflective);
    std::vector<ConditionReport> reports = {
        check_property_F(refl, corefl), check_property_I(refl, corefl),
        check_theorem_main(refl, corefl),
        check_adjoint_equivalence(refl, corefl),
        check_hypothesis_factor_initial(refl, corefl)};
    for (const auto& [key, want] : b.expected) {
      bool found = false;
      for (const auto& rep : reports)
        for (const auto& row : rep.rows)
          if (slug(row.label) == key) {
            found = true;
            CHECK_MESSAGE(row.verdict == want,
                          name << " / " << key);
          }
      CHECK_MESSAGE(found, name << " expects unknown label " << key);
    }
  }
}

TEST_CASE("galois_instance rejects non-monotone pairings") {
  CategoryRef chain2 = chain_category("chain2", 2);
  CategoryRef chain3 = chain_category("chain3", 3);
  Functor g = make_functor(chain2, chain3, {{"x0", "x0"}, {"x1", "x2"}},
                           {{"le(x0,x1)", "le(x0,x2)"}});
  CHECK_THROWS_AS(galois_instance(g, g), ShapeMismatch);
}

TEST_CASE("unknown fixture name") {
  CHECK_THROWS_AS(fixture("no-such-fixture"), Error);
}
