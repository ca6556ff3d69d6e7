#pragma once

#include <string>
#include <vector>

#include "catq/instances.hpp"

namespace catq {

// A parsed, fully resolved DSL file. Declarations keep their order per kind;
// names are unique per kind.
struct SourceDocument {
  struct SubDecl {
    std::string name;
    std::string parent;
    Subcategory sub;
  };
  struct FunDecl {
    std::string name;
    std::string source;
    std::string target;
    Functor fun;
  };
  struct BundleDecl {
    std::string name;
    std::string ambient;
    std::string coreflective;
    std::string reflective;
    InstanceBundle bundle;
  };

  std::vector<std::pair<std::string, CategoryRef>> categories;
  std::vector<SubDecl> subcategories;
  std::vector<FunDecl> functors;
  std::vector<BundleDecl> bundles;

  const CategoryRef* category(const std::string& name) const;
  const SubDecl* subcategory(const std::string& name) const;
  const FunDecl* functor(const std::string& name) const;
  const BundleDecl* bundle(const std::string& name) const;
};

// Line-oriented, whitespace-tokenized: '{', '}', ';', ':', '->', '=' are
// ordinary tokens and must be whitespace-separated (object names such as
// {1,2} are single tokens). '#' starts a comment, ';' acts as a newline.
// Throws ParseError with line/column; category laws are checked eagerly.
SourceDocument parse_document(const std::string& text,
                              const Config& config = default_config());

// Canonical formatting; emit(parse(emit(x))) == emit(x).
std::string emit(const SourceDocument& doc);
// Standalone bundle: ambient category plus subcategories named M and N.
std::string emit(const InstanceBundle& bundle);

}  // namespace catq
