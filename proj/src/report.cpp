#include "catq/report.hpp"

#include <cctype>

#include "catq/error.hpp"

namespace catq {

void ConditionReport::add(std::string label, bool verdict, std::string anchor,
                          std::optional<std::string> witness,
                          bool informative) {
  for (const auto& r : rows)
    if (r.label == label)
      throw InternalInconsistency("duplicate report label '" + label + "'");
  rows.push_back({std::move(label), verdict, std::move(witness), informative,
                  std::move(anchor)});
}

const ConditionRow* ConditionReport::find(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

bool ConditionReport::verdict(const std::string& label) const {
  const ConditionRow* r = find(label);
  if (!r) throw Error("report '" + title + "' has no row '" + label + "'");
  return r->verdict;
}

bool ConditionReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.verdict) return false;
  return true;
}

std::string slug(const std::string& label) {
  std::string out;
  bool pending_sep = false;
  for (char ch : label) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      if (pending_sep && !out.empty()) out.push_back('-');
      pending_sep = false;
      out.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    } else {
      pending_sep = true;
    }
  }
  return out;
}

}  // namespace catq
