#pragma once

#include "radial/identifiability.hpp"
#include "radial/placement.hpp"
#include "radial/tree.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace radial {

struct Feeder {
  std::string name;
  RadialTree tree;
  CostModel costs;
};

/// Reads a feeder document:
///
///   {"name": "...", "root": 1,
///    "nodes": [{"id": 1, "zero_injection": false, "node_cost": 2}, ...],
///    "edges": [{"from": 1, "to": 2, "line_cost": "3/10"}, ...]}
///
/// Costs are JSON numbers, decimal strings or "p/q" strings. Edges given
/// child -> parent are reoriented. The result is validated; the first issue is
/// thrown as an Error.
Feeder parse_feeder(std::string_view text);
Feeder read_feeder_file(const std::filesystem::path& path);

std::string serialize_feeder(const Feeder& feeder);
std::string serialize_feeder(const RadialTree& tree, const CostModel& costs,
                             std::string_view name = {});

nlohmann::json cost_to_json(const Rational& value);
Rational cost_from_json(const nlohmann::json& value);

nlohmann::json placement_to_json(const Placement& placement);
Placement placement_from_json(const nlohmann::json& doc);
Placement parse_placement(std::string_view text);

nlohmann::json trace_to_json(const DpTrace& trace);
nlohmann::json constraint_report_to_json(const ConstraintReport& report);
nlohmann::json validation_report_to_json(const ValidationReport& report);
nlohmann::json measured_sets_to_json(const MeasuredSets& measured);
nlohmann::json hypothesis_to_json(const OutageHypothesis& h);

/// Both hypotheses, the measured sets, a per-measurement comparison of the two
/// signatures and, in worst-case mode, the coinciding load vector.
nlohmann::json witness_to_json(const RadialTree& tree, const Witness& witness, OracleMode mode);

/// Graphviz digraph. Node sensors are filled red, line-sensor edges green.
std::string export_dot(const RadialTree& tree, const Placement& placement);

}  // namespace radial
