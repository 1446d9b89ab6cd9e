#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "partition.hpp"
#include "tower.hpp"

namespace twocore {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json parts_json(const Partition& lambda) { return lambda.parts(); }

// {"n", "depth", "nodes": {"<binary string>": [parts...]}, "row_weights"}.
// Every node of rows 0..depth-1 is listed; empty labels are [].
inline nlohmann::json tower_json(const CoreTower& t) {
  nlohmann::json nodes = nlohmann::json::object();
  for (int r = 0; r < t.depth(); ++r)
    for (const auto& node : CoreTower::row_nodes(r)) nodes[node] = parts_json(t.label(node));
  return {{"n", t.n()}, {"depth", t.depth()}, {"nodes", nodes}, {"row_weights", t.row_weights()}};
}

inline nlohmann::json census_json(const oracle::CensusMod4& c) {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t r = 0; r < 4; ++r) counts["a" + std::to_string(r)] = to_decimal(c.counts[r]);
  return {{"n", c.n}, {"counts", counts}, {"total", to_decimal(c.total())}};
}

inline nlohmann::json report_json(const oracle::VerificationReport& report, bool with_timings = false) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry{{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}};
    entry["counterexample"] = c.counterexample ? nlohmann::json(*c.counterexample) : nlohmann::json(nullptr);
    if (with_timings) entry["seconds"] = c.seconds;
    checks.push_back(std::move(entry));
  }
  return {{"n_range", {report.n_min, report.n_max}}, {"passed", report.all_passed()}, {"checks", checks}};
}

}  // namespace twocore
