#pragma once

#include <optional>
#include <string>
#include <vector>

namespace catq {

// One decided condition: a stable label, the verdict, an optional witness
// (object/morphism identifiers), and the anchor naming the statement the
// condition comes from (e.g. "Thm 4.3 (ii)").
struct ConditionRow {
  std::string label;
  bool verdict = false;
  std::optional<std::string> witness;
  bool witness_informative = false;  // witness present on a true verdict
  std::string anchor;
};

struct ConditionReport {
  std::string title;
  std::vector<ConditionRow> rows;

  void add(std::string label, bool verdict, std::string anchor,
           std::optional<std::string> witness = std::nullopt,
           bool informative = false);
  const ConditionRow* find(const std::string& label) const;
  bool verdict(const std::string& label) const;  // throws if absent
  bool all_pass() const;
};

// Lowercase alphanumeric slug, runs joined by '-': "Thm-main (ii)" ->
// "thm-main-ii". Used to match DSL expect labels against report labels.
std::string slug(const std::string& label);

}  // namespace catq
