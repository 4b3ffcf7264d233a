#include "ivalg/lp_json.hpp"

#include <json.hpp>

namespace ivalg {

namespace {

using nlohmann::json;

GInterval class_from_json(const json& j) {
  if (!j.is_object() || !j.contains("inf") || !j.contains("sup"))
    throw ParseError("rhs must be an object with inf and sup");
  return {j.at("inf").get<double>(), j.at("sup").get<double>()};
}

json class_to_json(const GInterval& g) {
  return json{{"inf", g.inf}, {"sup", g.sup}};
}

}  // namespace

IntervalLP lp_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    IntervalLP lp;
    lp.c = j.at("maximize").get<std::vector<double>>();
    for (const json& row : j.at("constraints")) {
      lp.A.push_back(row.at("coeffs").get<std::vector<double>>());
      lp.B.push_back(class_from_json(row.at("rhs")));
      const std::string sense = row.value("sense", "<=");
      if (sense != "<=" && sense != "=")
        throw ParseError("sense must be \"<=\" or \"=\"");
      lp.equality.push_back(sense == "=");
    }
    lp.max_iter = j.value("max_iter", 100);
    return lp;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad problem description: ") + e.what());
  }
}

std::string lp_solution_to_json_text(const LPSolution& s) {
  json j;
  switch (s.status) {
    case LPStatus::Optimal: j["status"] = "optimal"; break;
    case LPStatus::Unbounded: j["status"] = "unbounded"; break;
    case LPStatus::IterationLimit: j["status"] = "iteration_limit"; break;
  }
  json assignment = json::array();
  for (int i = 0; i < s.num_vars && i < static_cast<int>(s.assignment.size()); ++i)
    assignment.push_back(class_to_json(s.assignment[static_cast<std::size_t>(i)]));
  j["assignment"] = assignment;
  j["objective"] = class_to_json(s.objective_value);
  json trace = json::array();
  for (const auto& rc : s.trace) trace.push_back(json::array({rc[0], rc[1]}));
  j["trace"] = trace;
  return j.dump(2) + "\n";
}

}  // namespace ivalg
