#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bergeham/conditions/conditions.hpp"

namespace bergeham {

inline std::string describe(const Violation& v) {
  std::ostringstream out;
  out << "condition " << tag_label(v.tag) << " i=" << v.index << ": requires d_" << v.position
      << (v.relation == Violation::Relation::greater ? " > " : " >= ") << v.bound << ", actual " << v.actual;
  return out.str();
}

// Line-oriented `key: value` rendering of a report.
inline void write_report(std::ostream& out, const ConditionReport& report) {
  out << "theorem: " << theorem_name(report.theorem) << '\n';
  out << "n: " << report.n << '\n';
  out << "r: " << (report.r ? std::to_string(*report.r) : std::string("non-uniform")) << '\n';
  if (report.forced) out << "forced: true (outside the theorem's range of n)\n";
  out << "satisfied: " << (report.satisfied() ? "true" : "false") << '\n';
  for (const auto& v : report.violations) out << "violation: " << describe(v) << '\n';
}

inline nlohmann::json report_to_json(const ConditionReport& report) {
  nlohmann::json j;
  j["theorem"] = theorem_name(report.theorem);
  j["n"] = report.n;
  if (report.r)
    j["r"] = *report.r;
  else
    j["r"] = "non-uniform";
  j["forced"] = report.forced;
  j["satisfied"] = report.satisfied();
  j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back({{"condition", tag_label(v.tag)},
                               {"index", v.index},
                               {"position", v.position},
                               {"relation", v.relation == Violation::Relation::greater ? ">" : ">="},
                               {"bound", v.bound.str()},
                               {"actual", v.actual}});
  return j;
}

}  // namespace bergeham
