#include "catq/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace catq {

const CategoryRef* SourceDocument::category(const std::string& name) const {
  for (const auto& [n, c] : categories)
    if (n == name) return &c;
  return nullptr;
}

const SourceDocument::SubDecl* SourceDocument::subcategory(
    const std::string& name) const {
  for (const auto& s : subcategories)
    if (s.name == name) return &s;
  return nullptr;
}

const SourceDocument::FunDecl* SourceDocument::functor(
    const std::string& name) const {
  for (const auto& f : functors)
    if (f.name == name) return &f;
  return nullptr;
}

const SourceDocument::BundleDecl* SourceDocument::bundle(
    const std::string& name) const {
  for (const auto& b : bundles)
    if (b.name == name) return &b;
  return nullptr;
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// One statement = tokens up to ';' or end of line.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> statements;
  std::vector<Token> current;
  auto flush = [&] {
    if (!current.empty()) statements.push_back(std::move(current));
    current.clear();
  };
  int line = 1;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i >= raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::string tok = raw.substr(start, i - start);
      if (tok[0] == '#') {
        i = raw.size();
        break;
      }
      if (tok == ";") {
        flush();
        continue;
      }
      Token token{std::move(tok), line, static_cast<int>(start) + 1};
      if (token.text == "{") {
        // A header ends at '{'; '}' always stands alone. This keeps the
        // one-line style `category c { objects a ; mor ... }` parseable.
        current.push_back(std::move(token));
        flush();
        continue;
      }
      if (token.text == "}") {
        flush();
        current.push_back(std::move(token));
        flush();
        continue;
      }
      current.push_back(std::move(token));
    }
    flush();
    ++line;
  }
  return statements;
}

class Parser {
 public:
  Parser(const std::string& text, const Config& config)
      : statements_(tokenize(text)), config_(config) {}

  SourceDocument run() {
    while (pos_ < statements_.size()) {
      const auto& st = statements_[pos_];
      const std::string& kw = st[0].text;
      if (kw == "category")
        parse_category();
      else if (kw == "subcategory")
        parse_subcategory();
      else if (kw == "functor")
        parse_functor();
      else if (kw == "bundle")
        parse_bundle();
      else
        fail(st[0], "expected category, subcategory, functor, or bundle");
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw ParseError(msg + " (near '" + at.text + "')", at.line, at.column);
  }

  // Header must end with '{'; returns the header without it.
  std::vector<Token> header(std::size_t expected_size) {
    const auto& st = statements_[pos_];
    if (st.back().text != "{")
      fail(st.back(), "expected '{' at the end of the block header");
    if (st.size() != expected_size + 1)
      fail(st[0], "malformed block header");
    ++pos_;
    return {st.begin(), st.end() - 1};
  }

  // Returns body statements up to the matching '}' and consumes it.
  std::vector<std::vector<Token>> body() {
    std::vector<std::vector<Token>> out;
    while (pos_ < statements_.size()) {
      const auto& st = statements_[pos_];
      if (st.size() == 1 && st[0].text == "}") {
        ++pos_;
        return out;
      }
      out.push_back(st);
      ++pos_;
    }
    const auto& last = statements_.back();
    fail(last.back(), "unterminated block: missing '}'");
  }

  void unique_name(const Token& name, bool taken) {
    if (taken) fail(name, "duplicate name");
  }

  CategoryRef resolve_category(const Token& name) {
    if (const CategoryRef* c = doc_.category(name.text)) return *c;
    fail(name, "unresolved category reference");
  }

  void parse_category() {
    auto head = header(2);
    const Token& name = head[1];
    unique_name(name, doc_.category(name.text) != nullptr);

    RawCategory raw;
    raw.name = name.text;
    bool poset = false;
    std::vector<std::pair<Token, Token>> leq_pairs;
    bool has_explicit = false;

    for (const auto& st : body()) {
      const std::string& kw = st[0].text;
      if (kw == "objects") {
        if (st.size() < 2) fail(st[0], "objects: expected at least one name");
        for (std::size_t i = 1; i < st.size(); ++i)
          raw.objects.push_back(st[i].text);
      } else if (kw == "mor") {
        // mor f : a -> b
        if (st.size() != 6 || st[2].text != ":" || st[4].text != "->")
          fail(st[0], "expected: mor <name> : <dom> -> <cod>");
        has_explicit = true;
        raw.morphisms.push_back({st[1].text, st[3].text, st[5].text});
      } else if (kw == "compose") {
        // compose g f = h
        if (st.size() != 5 || st[3].text != "=")
          fail(st[0], "expected: compose <g> <f> = <result>");
        has_explicit = true;
        raw.composites.push_back({st[1].text, st[2].text, st[4].text});
      } else if (kw == "poset") {
        if (st.size() != 1) fail(st[0], "poset takes no arguments");
        poset = true;
      } else if (kw == "leq") {
        if (st.size() != 3) fail(st[0], "expected: leq <a> <b>");
        leq_pairs.emplace_back(st[1], st[2]);
      } else {
        fail(st[0], "unknown statement in category block");
      }
    }

    CategoryRef cat;
    if (poset) {
      if (has_explicit)
        fail(name, "a poset category cannot also declare mor/compose lines");
      std::size_t n = raw.objects.size();
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      auto index = [&](const Token& t) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
          if (raw.objects[i] == t.text) return i;
        fail(t, "unresolved object reference in leq");
      };
      for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
      for (const auto& [a, b] : leq_pairs) leq[index(a)][index(b)] = true;
      cat = poset_category(raw.name, raw.objects, leq, config_);
    } else {
      if (!leq_pairs.empty())
        fail(leq_pairs.front().first,
             "leq lines require the poset keyword in this block");
      cat = validate_category(raw, config_);
    }
    doc_.categories.emplace_back(name.text, std::move(cat));
  }

  void parse_subcategory() {
    auto head = header(4);
    const Token& name = head[1];
    if (head[2].text != "of")
      fail(head[2], "expected: subcategory <name> of <category>");
    unique_name(name, doc_.subcategory(name.text) != nullptr);
    CategoryRef parent = resolve_category(head[3]);

    std::vector<std::string> objects, morphisms;
    bool full_marker = false, has_mors = false;
    for (const auto& st : body()) {
      const std::string& kw = st[0].text;
      if (kw == "objects") {
        for (std::size_t i = 1; i < st.size(); ++i)
          objects.push_back(st[i].text);
      } else if (kw == "mors") {
        has_mors = true;
        for (std::size_t i = 1; i < st.size(); ++i)
          morphisms.push_back(st[i].text);
      } else if (kw == "full") {
        if (st.size() != 1) fail(st[0], "full takes no arguments");
        full_marker = true;
      } else {
        fail(st[0], "unknown statement in subcategory block");
      }
    }
    if (full_marker && has_mors)
      fail(name, "a subcategory is either full or lists mors, not both");

    Subcategory sub;
    try {
      sub = has_mors ? Subcategory::on(parent, objects, morphisms)
                     : Subcategory::full_on(parent, objects);
    } catch (const Error& e) {
      fail(name, e.what());
    }
    sub.validate();
    doc_.subcategories.push_back(
        {name.text, head[3].text, std::move(sub)});
  }

  void parse_functor() {
    auto head = header(6);
    const Token& name = head[1];
    if (head[2].text != ":" || head[4].text != "->")
      fail(head[2], "expected: functor <name> : <source> -> <target>");
    unique_name(name, doc_.functor(name.text) != nullptr);
    CategoryRef source = resolve_category(head[3]);
    CategoryRef target = resolve_category(head[5]);

    std::vector<std::pair<std::string, std::string>> objects, morphisms;
    for (const auto& st : body()) {
      const std::string& kw = st[0].text;
      if ((kw != "obj" && kw != "mor") || st.size() != 4 ||
          st[2].text != "->")
        fail(st[0], "expected: obj|mor <name> -> <name>");
      auto& into = kw == "obj" ? objects : morphisms;
      into.emplace_back(st[1].text, st[3].text);
    }

    Functor fun;
    try {
      fun = make_functor(source, target, objects, morphisms);
      fun.validate();
    } catch (const Error& e) {
      fail(name, e.what());
    }
    doc_.functors.push_back({name.text, head[3].text, head[5].text,
                             std::move(fun)});
  }

  void parse_bundle() {
    auto head = header(2);
    const Token& name = head[1];
    unique_name(name, doc_.bundle(name.text) != nullptr);

    std::optional<Token> ambient, coreflective, reflective;
    std::map<std::string, bool> expected;
    for (const auto& st : body()) {
      const std::string& kw = st[0].text;
      if (kw == "ambient" || kw == "coreflective" || kw == "reflective") {
        if (st.size() != 2) fail(st[0], "expected: " + kw + " <name>");
        (kw == "ambient" ? ambient
                         : kw == "coreflective" ? coreflective : reflective) =
            st[1];
      } else if (kw == "expect") {
        if (st.size() < 3) fail(st[0], "expected: expect <label> true|false");
        const std::string& verdict = st.back().text;
        if (verdict != "true" && verdict != "false")
          fail(st.back(), "expect verdict must be true or false");
        std::string label;
        for (std::size_t i = 1; i + 1 < st.size(); ++i) {
          if (i > 1) label += " ";
          label += st[i].text;
        }
        expected[slug(label)] = verdict == "true";
      } else {
        fail(st[0], "unknown statement in bundle block");
      }
    }
    if (!ambient || !coreflective || !reflective)
      fail(name, "bundle needs ambient, coreflective, and reflective lines");

    CategoryRef cat = resolve_category(*ambient);
    auto resolve_sub = [&](const Token& t) -> const SourceDocument::SubDecl* {
      const auto* s = doc_.subcategory(t.text);
      if (!s) fail(t, "unresolved subcategory reference");
      if (s->parent != ambient->text)
        fail(t, "subcategory does not live in the bundle's ambient category");
      if (!s->sub.full) fail(t, "bundle subcategories must be full");
      return s;
    };
    InstanceBundle b;
    b.name = name.text;
    b.ambient = cat;
    b.coreflective = resolve_sub(*coreflective)->sub;
    b.reflective = resolve_sub(*reflective)->sub;
    b.expected = std::move(expected);
    b.provenance = "parsed bundle " + name.text;
    doc_.bundles.push_back({name.text, ambient->text, coreflective->text,
                            reflective->text, std::move(b)});
  }

  std::vector<std::vector<Token>> statements_;
  std::size_t pos_ = 0;
  const Config& config_;
  SourceDocument doc_;
};

void emit_category(std::ostream& out, const std::string& name,
                   const FinCategory& c) {
  out << "category " << name << " {\n";
  out << "  objects";
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x)
    out << " " << c.object_name(x);
  out << "\n";
  for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
    if (c.is_identity(f)) continue;
    const auto& m = c.morphism(f);
    out << "  mor " << m.name << " : " << c.object_name(m.dom) << " -> "
        << c.object_name(m.cod) << "\n";
  }
  for (MorId g = 0; g < static_cast<MorId>(c.morphism_count()); ++g) {
    if (c.is_identity(g)) continue;
    for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
      if (c.is_identity(f) || !c.composable(g, f)) continue;
      out << "  compose " << c.morphism_name(g) << " " << c.morphism_name(f)
          << " = " << c.morphism_name(c.compose(g, f)) << "\n";
    }
  }
  out << "}\n";
}

void emit_subcategory(std::ostream& out, const std::string& name,
                      const std::string& parent_name, const Subcategory& s) {
  out << "subcategory " << name << " of " << parent_name << " {\n";
  out << "  objects";
  for (ObjId x : s.objects) out << " " << s.parent->object_name(x);
  out << "\n";
  if (s.full) {
    out << "  full\n";
  } else {
    out << "  mors";
    for (MorId f : s.morphisms)
      if (!s.parent->is_identity(f)) out << " " << s.parent->morphism_name(f);
    out << "\n";
  }
  out << "}\n";
}

void emit_bundle(std::ostream& out, const std::string& name,
                 const std::string& ambient, const std::string& coreflective,
                 const std::string& reflective,
                 const std::map<std::string, bool>& expected) {
  out << "bundle " << name << " {\n";
  out << "  ambient " << ambient << "\n";
  out << "  coreflective " << coreflective << "\n";
  out << "  reflective " << reflective << "\n";
  for (const auto& [label, verdict] : expected)
    out << "  expect " << label << " " << (verdict ? "true" : "false") << "\n";
  out << "}\n";
}

}  // namespace

SourceDocument parse_document(const std::string& text, const Config& config) {
  return Parser(text, config).run();
}

std::string emit(const SourceDocument& doc) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << "\n";
    first = false;
  };
  for (const auto& [name, cat] : doc.categories) {
    sep();
    emit_category(out, name, *cat);
  }
  for (const auto& s : doc.subcategories) {
    sep();
    emit_subcategory(out, s.name, s.parent, s.sub);
  }
  for (const auto& f : doc.functors) {
    sep();
    out << "functor " << f.name << " : " << f.source << " -> " << f.target
        << " {\n";
    const FinCategory& src = *f.fun.source;
    const FinCategory& dst = *f.fun.target;
    for (ObjId x = 0; x < static_cast<ObjId>(src.object_count()); ++x)
      out << "  obj " << src.object_name(x) << " -> "
          << dst.object_name(f.fun.on_object(x)) << "\n";
    for (MorId m = 0; m < static_cast<MorId>(src.morphism_count()); ++m) {
      if (src.is_identity(m)) continue;
      out << "  mor " << src.morphism_name(m) << " -> "
          << dst.morphism_name(f.fun.on_morphism(m)) << "\n";
    }
    out << "}\n";
  }
  for (const auto& b : doc.bundles) {
    sep();
    emit_bundle(out, b.name, b.ambient, b.coreflective, b.reflective,
                b.bundle.expected);
  }
  return out.str();
}

std::string emit(const InstanceBundle& bundle) {
  std::ostringstream out;
  std::string ambient_name = bundle.ambient->name().empty()
                                 ? bundle.name + "-ambient"
                                 : bundle.ambient->name();
  if (!bundle.provenance.empty()) out << "# " << bundle.provenance << "\n";
  emit_category(out, ambient_name, *bundle.ambient);
  out << "\n";
  emit_subcategory(out, "M", ambient_name, bundle.coreflective);
  out << "\n";
  emit_subcategory(out, "N", ambient_name, bundle.reflective);
  out << "\n";
  emit_bundle(out, bundle.name, ambient_name, "M", "N", bundle.expected);
  return out.str();
}

}  // namespace catq
