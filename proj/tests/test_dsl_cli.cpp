#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "catq/cli.hpp"
#include "catq/dsl.hpp"
#include "catq/reflective.hpp"

using namespace catq;

namespace {

bool same_subcategory(const Subcategory& a, const Subcategory& b) {
  return *a.parent == *b.parent && a.objects == b.objects &&
         a.morphisms == b.morphisms && a.full == b.full;
}

bool same_bundle(const InstanceBundle& a, const InstanceBundle& b) {
  return *a.ambient == *b.ambient &&
         same_subcategory(a.coreflective, b.coreflective) &&
         same_subcategory(a.reflective, b.reflective) &&
         a.expected == b.expected;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "catq_test_" + std::to_string(counter++) + ".cat";
    std::ofstream f(path, std::ios::binary);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("empty file parses to an empty document") {
  SourceDocument doc = parse_document("");
  CHECK(doc.categories.empty());
  CHECK(doc.bundles.empty());
  CHECK(emit(doc).empty());
}

TEST_CASE("explicit category block, comments, one-line style") {
  SourceDocument doc = parse_document(
      "# a chain of two\n"
      "category c2 { objects a b ; mor f : a -> b }\n");
  REQUIRE(doc.categories.size() == 1);
  const FinCategory& c = *doc.categories[0].second;
  CHECK(c.object_count() == 2);
  CHECK(c.morphism_count() == 3);
  CHECK(c.morphism_id("f") != kNoMor);
}

TEST_CASE("poset block derives morphisms and compositions") {
  SourceDocument doc = parse_document(
      "category p {\n"
      "  objects a b c\n"
      "  poset\n"
      "  leq a b\n  leq b c\n  leq a c\n"
      "}\n");
  const FinCategory& c = *doc.categories[0].second;
  CHECK(c.morphism_count() == 6);
  CHECK(c.compose(c.morphism_id("le(b,c)"), c.morphism_id("le(a,b)")) ==
        c.morphism_id("le(a,c)"));
  // Missing transitive pair is an order violation, not silently completed.
  CHECK_THROWS_AS(
      parse_document("category p { objects a b c ; poset ; leq a b ; leq b c }"),
      NotAPartialOrder);
}

TEST_CASE("parse diagnostics carry positions") {
  try {
    parse_document("category c {\n  objects a\n  bogus x\n}\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 3);
  }
  // Unresolved references and law violations surface as errors too.
  CHECK_THROWS_AS(parse_document("subcategory s of nowhere { objects a ; full }"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("category c { objects a ; mor f : a -> b }"),
                  ValidationError);
  CHECK_THROWS_AS(parse_document("category c { objects a"), ParseError);
}

TEST_CASE("duplicate names are rejected per kind") {
  CHECK_THROWS_AS(
      parse_document("category c { objects a }\ncategory c { objects b }\n"),
      ParseError);
}

TEST_CASE("functor blocks resolve and validate") {
  SourceDocument doc = parse_document(
      "category c2 { objects a b ; poset ; leq a b }\n"
      "category c3 { objects p q r ; poset ; leq p q ; leq q r ; leq p r }\n"
      "functor F : c2 -> c3 { obj a -> p ; obj b -> r ; "
      "mor le(a,b) -> le(p,r) }\n");
  REQUIRE(doc.functors.size() == 1);
  CHECK(doc.functors[0].fun.on_object(1) == 2);
  CHECK_THROWS_AS(
      parse_document(
          "category c2 { objects a b ; poset ; leq a b }\n"
          "functor F : c2 -> c2 { obj a -> b ; obj b -> a ; "
          "mor le(a,b) -> le(a,b) }\n"),
      ParseError);  // not order-preserving: no valid morphism images
}

TEST_CASE("bundle round-trip for every fixture") {
  for (const auto& name : fixture_names()) {
    InstanceBundle original = fixture(name);
    std::string text = emit(original);
    SourceDocument doc = parse_document(text);
    REQUIRE(doc.bundles.size() == 1);
    CHECK_MESSAGE(same_bundle(doc.bundles[0].bundle, original), name);
    // Canonicalization is idempotent.
    CHECK(emit(parse_document(emit(doc))) == emit(doc));
  }
}

TEST_CASE("odd whitespace canonicalizes") {
  std::string messy =
      "category   c2 {\n\n   objects a     b\n mor f :   a -> b }\n"
      "subcategory s of c2 { objects a ; full }\n";
  SourceDocument doc = parse_document(messy);
  std::string canon = emit(doc);
  CHECK(emit(parse_document(canon)) == canon);
  CHECK(canon.find("  objects a b\n") != std::string::npos);
}

TEST_CASE("cli: validate, exit codes, json determinism") {
  TempFile file(emit(fixture("sierpinski")));
  std::string out;
  CHECK(cli({"validate", file.path}, &out) == 0);
  CHECK(out.find("[PASS]") != std::string::npos);

  CHECK(cli({"check", file.path}, &out) == 1);
  CHECK(out.find("witness: {1}") != std::string::npos);
  CHECK(out.find("witness: {2}") != std::string::npos);

  std::string err;
  CHECK(cli({"check", "no_such_file.cat"}, &out, &err) == 2);
  CHECK_FALSE(err.empty());
  CHECK(cli({"bogus-subcommand"}, &out, &err) == 2);

  auto strip_timing = [](std::string s) {
    auto pos = s.find("\"timing_ms\"");
    return pos == std::string::npos ? s : s.substr(0, pos);
  };
  std::string j1, j2;
  CHECK(cli({"--json", "check", file.path}, &j1) == 1);
  CHECK(cli({"--json", "check", file.path}, &j2) == 1);
  CHECK(strip_timing(j1) == strip_timing(j2));
  CHECK(j1.find("\"schema\": 1") != std::string::npos);
  CHECK(j1.find("\"anchor\": \"Thm 4.3 (ii)\"") != std::string::npos);
}

TEST_CASE("cli: subcategory selection flags") {
  TempFile file(emit(fixture("regsierp")));
  std::string out;
  CHECK(cli({"check", file.path, "--reflective", "N", "--coreflective", "M"},
            &out) == 0);
  CHECK(cli({"hyp5", file.path}, &out) == 1);  // hypothesis fails here
  CHECK(out.find("[FAIL] Hyp 5.1") != std::string::npos);
}

TEST_CASE("cli: reflector/coreflector and failure witnesses") {
  TempFile file(emit(fixture("sierpinski")));
  std::string out;
  CHECK(cli({"reflector", file.path, "--subcategory", "N"}, &out) == 0);
  CHECK(out.find("N({1}) = {1,2}") != std::string::npos);
  CHECK(cli({"coreflector", file.path, "--subcategory", "M"}, &out) == 0);
  CHECK(out.find("M({2}) = {}") != std::string::npos);

  TempFile diamond(emit(fixture("diamond")));
  CHECK(cli({"reflector", diamond.path, "--subcategory", "N"}, &out) == 1);
  CHECK(out.find("bot") != std::string::npos);
}

TEST_CASE("cli: instance emission parses and reports are writable") {
  std::string out;
  CHECK(cli({"instance", "random", "--seed", "7", "--max-elements", "6"},
            &out) == 0);
  SourceDocument doc = parse_document(out);
  CHECK(doc.bundles.size() == 1);
  CHECK(cli({"instance", "unknown-fixture"}, &out) == 2);

  TempFile file(emit(fixture("discrete2")));
  CHECK(cli({"--report", "catq_test_report.json", "check", file.path}, &out) ==
        0);
  std::ifstream rep("catq_test_report.json");
  REQUIRE(rep.good());
  std::stringstream ss;
  ss << rep.rdbuf();
  CHECK(ss.str().find("\"verdict\": true") != std::string::npos);
  rep.close();
  std::remove("catq_test_report.json");
}

TEST_CASE("cli: thm31 over declared inclusions") {
  TempFile file(
      "category c3 { objects p q r ; poset ; leq p q ; leq q r ; leq p r }\n"
      "category bot { objects m }\n"
      "category top { objects n }\n"
      "functor I : bot -> c3 { obj m -> p }\n"
      "functor J : top -> c3 { obj n -> r }\n");
  std::string out;
  CHECK(cli({"thm31", file.path, "--i", "I", "--j", "J"}, &out) == 0);
  CHECK(out.find("Thm-comp (i)") != std::string::npos);
  CHECK(cli({"thm31", file.path, "--i", "I", "--j", "missing"}, &out) == 2);
}

TEST_CASE("cli: dual and search subcommands") {
  TempFile file(emit(fixture("partition4")));
  std::string out;
  CHECK(cli({"dual", file.path}, &out) == 0);
  CHECK(out.find("duality comparison") != std::string::npos);
  CHECK(cli({"search-remark58", "--budget", "25", "--seed", "3"}, &out) == 0);
  CHECK(out.find("no counterexample in 25 samples") != std::string::npos);
}
