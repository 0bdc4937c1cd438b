#pragma once

#include "radial/tree.hpp"

#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace radial {

/// A sensor placement: node sensors V_P and line sensors E_P.
struct Placement {
  std::set<NodeId> node_sensors;
  std::set<Edge> line_sensors;

  bool empty() const noexcept { return node_sensors.empty() && line_sensors.empty(); }
  std::size_t sensor_count() const noexcept { return node_sensors.size() + line_sensors.size(); }
  void merge(const Placement& other);

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Throws UnknownNode / UnknownEdge if the placement names anything outside the tree.
void require_in_tree(const RadialTree& tree, const Placement& placement);

/// Node sensors everywhere; measures every flow and every voltage.
Placement maximal_placement(const RadialTree& tree);

struct ConstraintReport {
  bool root_ok = true;
  std::vector<NodeId> branch_violations;
  std::vector<NodeId> zero_injection_violations;

  bool feasible() const noexcept {
    return root_ok && branch_violations.empty() && zero_injection_violations.empty();
  }
};

/// Evaluates the root, branching-node and zero-injection constraints of the
/// placement problem and lists every violation.
ConstraintReport check_constraints(const RadialTree& tree, const Placement& placement);

/// Sum of node-sensor and line-sensor costs.
Rational placement_cost(const Placement& placement, const CostModel& costs);

/// Subset in the measured-set sense: every flow and voltage measured by `p1`
/// is also measured by `p2`.
bool is_subset_placement(const Placement& p1, const Placement& p2, const RadialTree& tree);

/// Root, nodes of degree >= 3, and zero-injection nodes, ascending.
std::vector<NodeId> critical_set(const RadialTree& tree);

/// m_i = min(a_i, b_(p_i, i)): the cheapest way to monitor the parent edge of i.
Rational tie_cost(NodeId node, const RadialTree& tree, const CostModel& costs);

/// Children of q with neither a node sensor nor a line sensor on (q, child), ascending.
std::vector<NodeId> no_sensor_child(NodeId q, const RadialTree& tree, const Placement& placement);

struct FindMaxResult {
  NodeId max_node;
  std::vector<NodeId> rest;
};

/// Picks the child with the largest tie cost (ties: smaller degree, then
/// smaller id) and returns it together with the remaining children.
FindMaxResult find_max(std::span<const NodeId> list, const RadialTree& tree, const CostModel& costs);

enum class Branch {
  RootNodeSensor,
  RootChildSensors,
  ZeroInjectionNodeSensor,
  ZeroInjectionParentLine,
  NodeSensor,
  ChildSensors,
  ChildSensorsAndParentLine,
  AlreadyMonitored,
};

std::string_view to_string(Branch branch);

struct StepOutcome {
  Placement placement;
  Branch branch;
  Placement added;
};

/// Solves the subproblem at critical node q given that every deeper critical
/// node has been processed. Only ever adds sensors.
StepOutcome placement_step(NodeId q, const RadialTree& tree, const CostModel& costs,
                           const Placement& placement);

struct TraceStep {
  NodeId node;
  Branch branch;
  Placement added;
};

struct TraceIteration {
  std::size_t k;
  std::size_t depth;
  std::vector<NodeId> queue;
  std::vector<TraceStep> steps;
};

struct DpTrace {
  std::vector<TraceIteration> iterations;

  std::size_t step_count() const noexcept;
};

struct DpResult {
  Placement placement;
  DpTrace trace;
};

/// Bottom-up sweep over the critical nodes, deepest first.
DpResult dp_place(const RadialTree& tree, const CostModel& costs);

}  // namespace radial
