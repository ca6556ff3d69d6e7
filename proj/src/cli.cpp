#include "catq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catq/dsl.hpp"
#include "catq/reflective.hpp"

namespace catq {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "catq 1.0.0";

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accumulates sections/notes for one invocation and renders them as text or
// JSON with stable key order (timing last, so byte comparisons can strip it).
struct Run {
  std::string command;
  std::string input_name;
  std::string input_bytes;
  std::vector<ConditionReport> sections;
  std::vector<std::string> notes;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  bool all_pass() const {
    for (const auto& s : sections)
      if (!s.all_pass()) return false;
    return true;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["input"] = input_name;
    j["input_digest"] = fnv1a_digest(input_bytes);
    j["sections"] = ordered_json::array();
    for (const auto& s : sections) {
      ordered_json js;
      js["title"] = s.title;
      js["rows"] = ordered_json::array();
      for (const auto& r : s.rows) {
        ordered_json jr;
        jr["label"] = r.label;
        jr["anchor"] = r.anchor;
        jr["verdict"] = r.verdict;
        if (r.witness) {
          jr["witness"] = *r.witness;
          jr["witness_informative"] = r.witness_informative;
        }
        js["rows"].push_back(std::move(jr));
      }
      j["sections"].push_back(std::move(js));
    }
    j["notes"] = notes;
    j["verdict"] = all_pass();
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    return j;
  }

  void render_text(std::ostream& out) const {
    for (const auto& s : sections) {
      out << "== " << s.title << "\n";
      for (const auto& r : s.rows) {
        out << "  [" << (r.verdict ? "PASS" : "FAIL") << "] " << r.label
            << "  (" << r.anchor << ")";
        if (r.witness) out << "  witness: " << *r.witness;
        out << "\n";
      }
    }
    for (const auto& n : notes) out << "note: " << n << "\n";
    out << "verdict: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  }

  int finish(std::ostream& out, bool json, const std::string& report_path) {
    if (json)
      out << to_json().dump(2) << "\n";
    else
      render_text(out);
    if (!report_path.empty()) {
      std::ofstream f(report_path, std::ios::binary);
      if (!f) throw Error("cannot write report file: " + report_path);
      f << to_json().dump(2) << "\n";
    }
    return all_pass() ? 0 : 1;
  }
};

const ConditionRow* find_row(const std::vector<ConditionReport>& sections,
                             const std::string& label) {
  for (const auto& s : sections)
    if (const ConditionRow* r = s.find(label)) return r;
  return nullptr;
}

InstanceBundle select_bundle(const SourceDocument& doc,
                             const std::string& bundle_name,
                             const std::string& reflective_name,
                             const std::string& coreflective_name) {
  if (!reflective_name.empty() || !coreflective_name.empty()) {
    if (reflective_name.empty() || coreflective_name.empty())
      throw Error("--reflective and --coreflective must be given together");
    const auto* n = doc.subcategory(reflective_name);
    const auto* m = doc.subcategory(coreflective_name);
    if (!n) throw Error("unknown subcategory: " + reflective_name);
    if (!m) throw Error("unknown subcategory: " + coreflective_name);
    if (n->parent != m->parent)
      throw Error("the two subcategories live in different categories");
    if (!n->sub.full || !m->sub.full)
      throw Error("checkers require full subcategories");
    InstanceBundle b;
    b.name = "(command line)";
    b.ambient = n->sub.parent;
    b.coreflective = m->sub;
    b.reflective = n->sub;
    b.provenance = "subcategories " + coreflective_name + ", " +
                   reflective_name + " selected on the command line";
    return b;
  }
  if (!bundle_name.empty()) {
    const auto* b = doc.bundle(bundle_name);
    if (!b) throw Error("unknown bundle: " + bundle_name);
    return b->bundle;
  }
  if (doc.bundles.size() == 1) return doc.bundles.front().bundle;
  throw Error(doc.bundles.empty()
                  ? "no bundle in file; pass --reflective/--coreflective"
                  : "several bundles in file; pass --bundle <name>");
}

// The reports behind `check`: (F), (I), all eight equivalence conditions,
// and the adjoint-equivalence cross-check.
std::vector<ConditionReport> run_check_family(const InstanceBundle& bundle) {
  ReflectiveStructure refl =
      find_reflector(bundle.ambient, bundle.reflective);
  CoreflectiveStructure corefl =
      find_coreflector(bundle.ambient, bundle.coreflective);
  return {check_property_F(refl, corefl), check_property_I(refl, corefl),
          check_theorem_main(refl, corefl),
          check_adjoint_equivalence(refl, corefl)};
}

// Compares the bundle's expected verdicts (slug-keyed) against matching
// report rows; mismatches become failing rows.
void apply_expectations(Run& run, const InstanceBundle& bundle) {
  if (bundle.expected.empty()) return;
  ConditionReport section;
  section.title = "declared expectations";
  for (const auto& [key, want] : bundle.expected) {
    const ConditionRow* match = nullptr;
    for (const auto& s : run.sections)
      for (const auto& r : s.rows)
        if (slug(r.label) == key) match = &r;
    if (!match) continue;  // label not produced by this command
    bool ok = match->verdict == want;
    section.add("expect " + key, ok, "declared in bundle",
                ok ? std::nullopt
                   : std::optional<std::string>(
                         std::string("expected ") + (want ? "true" : "false") +
                         ", got " + (match->verdict ? "true" : "false")));
  }
  if (!section.rows.empty()) run.sections.push_back(std::move(section));
}

void note_universal_failure(Run& run, const char* what,
                            const NotUniversal& e) {
  ConditionReport section;
  section.title = what;
  std::string witness;
  for (const auto& w : e.witnesses) {
    if (!witness.empty()) witness += ", ";
    witness += w;
  }
  section.add(what, false, "universal-morphism search", witness);
  run.sections.push_back(std::move(section));
  run.notes.push_back(std::string(e.what()));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"finite-category reflective/coreflective checker"};
  app.require_subcommand(1);

  bool json = false;
  std::string report_path;
  std::size_t max_size = 0;
  app.add_flag("--json", json, "emit the JSON report on stdout");
  app.add_option("--report", report_path, "write the JSON report to a file");
  app.add_option("--max-size", max_size, "override the morphism-count cap");

  std::string file, bundle_name, reflective_name, coreflective_name;
  std::string functor_i, functor_j, instance_name;
  std::uint64_t seed = 0;
  int budget = 1000, max_elements = 6;

  auto add_bundle_opts = [&](CLI::App* sub) {
    sub->add_option("file", file, "DSL input file")->required();
    sub->add_option("--bundle", bundle_name, "bundle to check");
    sub->add_option("--reflective", reflective_name,
                    "reflective subcategory name");
    sub->add_option("--coreflective", coreflective_name,
                    "coreflective subcategory name");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and law-check");
  validate->add_option("file", file, "DSL input file")->required();

  CLI::App* reflector =
      app.add_subcommand("reflector", "synthesize a reflector");
  reflector->add_option("file", file, "DSL input file")->required();
  std::string sub_name;
  reflector->add_option("--subcategory", sub_name, "subcategory name")
      ->required();

  CLI::App* coreflector =
      app.add_subcommand("coreflector", "synthesize a coreflector");
  coreflector->add_option("file", file, "DSL input file")->required();
  coreflector->add_option("--subcategory", sub_name, "subcategory name")
      ->required();

  add_bundle_opts(app.add_subcommand(
      "check", "properties (F)/(I), the eight conditions, and the "
               "adjoint-equivalence cross-check"));
  add_bundle_opts(app.add_subcommand(
      "hyp5", "factorization hypothesis and its corollaries"));
  add_bundle_opts(
      app.add_subcommand("dual", "compare verdicts against the dual input"));

  CLI::App* thm31 = app.add_subcommand(
      "thm31", "composite-equivalence conditions for declared inclusions");
  thm31->add_option("file", file, "DSL input file")->required();
  thm31->add_option("--i", functor_i, "coreflective-side inclusion functor")
      ->required();
  thm31->add_option("--j", functor_j, "reflective-side inclusion functor")
      ->required();

  CLI::App* instance =
      app.add_subcommand("instance", "emit a generated bundle as DSL");
  instance->add_option("name", instance_name, "fixture name or 'random'")
      ->required();
  instance->add_option("--seed", seed, "random seed");
  instance->add_option("--max-elements", max_elements,
                       "poset size bound for random instances");

  CLI::App* remark58 = app.add_subcommand(
      "search-remark58", "search for a unit-not-epi/counit-not-mono example");
  remark58->add_option("--budget", budget, "number of instances to sample");
  remark58->add_option("--seed", seed, "random seed");
  remark58->add_option("--max-elements", max_elements,
                       "poset size bound for sampled instances");

  std::vector<std::string> argv = args;
  try {
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Config config = default_config();
  if (max_size > 0) config.max_morphisms = max_size;

  Run run;
  run.command = app.get_subcommands().front()->get_name();

  try {
    if (*instance) {
      InstanceBundle b = instance_name == "random"
                             ? random_instance(seed, max_elements)
                             : fixture(instance_name);
      run.input_name = instance_name;
      out << emit(b);
      return 0;
    }
    if (*remark58) {
      run.input_name = "random search";
      auto found =
          search_counterexample_remark58({seed, budget, max_elements});
      ConditionReport section;
      section.title = "counterexample search";
      if (found) {
        section.add("Search completed", true, "Rem 5.8",
                    "counterexample: " + found->provenance + "; object " +
                        found->witness + "; " + found->failed_property,
                    true);
        run.notes.push_back(
            "a standing-hypothesis instance where the dual property fails");
      } else {
        section.add("Search completed", true, "Rem 5.8",
                    "no counterexample in " + std::to_string(budget) +
                        " samples",
                    true);
      }
      run.sections.push_back(std::move(section));
      if (json)
        out << run.to_json().dump(2) << "\n";
      else
        run.render_text(out);
      if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        f << run.to_json().dump(2) << "\n";
      }
      return 0;  // exploratory: either outcome is a successful run
    }

    run.input_name = file;
    run.input_bytes = read_file(file);
    SourceDocument doc = parse_document(run.input_bytes, config);

    if (*validate) {
      ConditionReport section;
      section.title = "validation";
      for (const auto& [name, cat] : doc.categories)
        section.add("category " + name, true, "category laws",
                    std::to_string(cat->object_count()) + " objects, " +
                        std::to_string(cat->morphism_count()) + " morphisms",
                    true);
      for (const auto& s : doc.subcategories)
        section.add("subcategory " + s.name, true, "subcategory closure");
      for (const auto& f : doc.functors)
        section.add("functor " + f.name, true, "functoriality");
      for (const auto& b : doc.bundles)
        section.add("bundle " + b.name, true, "bundle shape");
      run.sections.push_back(std::move(section));
      return run.finish(out, json, report_path);
    }

    if (*reflector || *coreflector) {
      const auto* s = doc.subcategory(sub_name);
      if (!s) throw Error("unknown subcategory: " + sub_name);
      ConditionReport section;
      try {
        if (*reflector) {
          ReflectiveStructure r = find_reflector(s->sub.parent, s->sub);
          section.title = "reflector";
          section.add("Reflective", true, "universal-morphism search");
          const FinCategory& c = *r.ambient;
          for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
            run.notes.push_back(
                "N(" + c.object_name(x) + ") = " +
                r.view.cat->object_name(r.reflector.on_object(x)) +
                ", unit " + c.morphism_name(r.unit.at(x)));
        } else {
          CoreflectiveStructure r = find_coreflector(s->sub.parent, s->sub);
          section.title = "coreflector";
          section.add("Coreflective", true, "universal-morphism search");
          const FinCategory& c = *r.ambient;
          for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
            run.notes.push_back(
                "M(" + c.object_name(x) + ") = " +
                r.view.cat->object_name(r.coreflector.on_object(x)) +
                ", counit " + c.morphism_name(r.counit.at(x)));
        }
        run.sections.push_back(std::move(section));
      } catch (const NotUniversal& e) {
        note_universal_failure(
            run, *reflector ? "Reflective" : "Coreflective", e);
      }
      return run.finish(out, json, report_path);
    }

    if (app.got_subcommand("check") || app.got_subcommand("hyp5") ||
        app.got_subcommand("dual")) {
      InstanceBundle bundle =
          select_bundle(doc, bundle_name, reflective_name, coreflective_name);
      try {
        if (app.got_subcommand("check")) {
          run.sections = run_check_family(bundle);
          apply_expectations(run, bundle);
        } else if (app.got_subcommand("hyp5")) {
          ReflectiveStructure refl =
              find_reflector(bundle.ambient, bundle.reflective);
          CoreflectiveStructure corefl =
              find_coreflector(bundle.ambient, bundle.coreflective);
          run.sections.push_back(
              check_hypothesis_factor_initial(refl, corefl));
          try {
            run.sections.push_back(check_section5_corollaries(refl, corefl));
          } catch (const PreconditionUnmet& e) {
            run.notes.push_back(std::string("corollaries skipped: ") +
                                e.what());
          }
          apply_expectations(run, bundle);
        } else {
          std::vector<ConditionReport> primal = run_check_family(bundle);
          std::vector<ConditionReport> dual =
              run_check_family(dual_bundle(bundle));
          ConditionReport section;
          section.title = "duality comparison";
          for (const auto& s : primal)
            for (const auto& r : s.rows) {
              const ConditionRow* d = find_row(dual, dual_label(r.label));
              bool agrees = d && d->verdict == r.verdict;
              section.add(
                  r.label, agrees, "duality of " + r.anchor,
                  agrees ? std::nullopt
                         : std::optional<std::string>(
                               "primal " + std::string(r.verdict ? "true"
                                                                 : "false") +
                               ", dual " +
                               (d ? (d->verdict ? "true" : "false")
                                  : "missing")));
            }
          run.sections.push_back(std::move(section));
        }
      } catch (const NotReflective& e) {
        note_universal_failure(run, "Reflective", e);
      } catch (const NotCoreflective& e) {
        note_universal_failure(run, "Coreflective", e);
      }
      return run.finish(out, json, report_path);
    }

    if (*thm31) {
      const auto* fi = doc.functor(functor_i);
      const auto* fj = doc.functor(functor_j);
      if (!fi) throw Error("unknown functor: " + functor_i);
      if (!fj) throw Error("unknown functor: " + functor_j);
      const Functor& I = fi->fun;
      const Functor& J = fj->fun;
      if (!same_category(I.target, J.target))
        throw Error("the two inclusions must land in the same category");
      const CategoryRef& c = I.target;
      try {
        std::vector<UniversalMorphism> n_family(c->object_count());
        std::vector<std::string> missing;
        for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
          auto um = universal_from(x, J);
          if (um)
            n_family[x] = *um;
          else
            missing.push_back(c->object_name(x));
        }
        if (!missing.empty())
          throw NotReflective("no left adjoint to " + functor_j,
                              std::move(missing));
        Adjunction adjNJ = adjunction_from_universal_morphisms(J, n_family);

        std::vector<UniversalMorphism> m_family(c->object_count());
        missing.clear();
        for (ObjId x = 0; x < static_cast<ObjId>(c->object_count()); ++x) {
          auto um = universal_to(I, x);
          if (um)
            m_family[x] = *um;
          else
            missing.push_back(c->object_name(x));
        }
        if (!missing.empty())
          throw NotCoreflective("no right adjoint to " + functor_i,
                                std::move(missing));
        Adjunction adjIM = adjunction_to_universal_morphisms(I, m_family);

        run.sections.push_back(theorem31_report(I, J, adjNJ, adjIM));
      } catch (const NotReflective& e) {
        note_universal_failure(run, "Reflective", e);
      } catch (const NotCoreflective& e) {
        note_universal_failure(run, "Coreflective", e);
      }
      return run.finish(out, json, report_path);
    }

    err << "unhandled subcommand\n";
    return 2;
  } catch (const InternalInconsistency&) {
    throw;  // engine bug: must stay loud, never downgraded to an exit code
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace catq
