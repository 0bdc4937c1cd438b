#include "radial/placement.hpp"

#include "radial/measurement.hpp"

#include <algorithm>

namespace radial {

void Placement::merge(const Placement& other) {
  node_sensors.insert(other.node_sensors.begin(), other.node_sensors.end());
  line_sensors.insert(other.line_sensors.begin(), other.line_sensors.end());
}

void require_in_tree(const RadialTree& tree, const Placement& placement) {
  for (NodeId id : placement.node_sensors) {
    if (!tree.contains(id)) throw Error(ErrorCode::UnknownNode, "node sensor at " + std::to_string(id));
  }
  for (const Edge& e : placement.line_sensors) {
    if (!tree.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "line sensor on " + to_string(e));
  }
}

Placement maximal_placement(const RadialTree& tree) {
  Placement p;
  p.node_sensors.insert(tree.nodes().begin(), tree.nodes().end());
  return p;
}

namespace {

// Left-hand side of the child-edge monitoring constraint at node k:
// d_k x_k + sum_{j in C_k} x_j + sum_j y_(k,j).
std::size_t monitored_children(NodeId k, const RadialTree& tree, const Placement& p) {
  if (p.node_sensors.contains(k)) return tree.degree(k);
  std::size_t count = 0;
  for (NodeId j : tree.children(k)) {
    count += p.node_sensors.contains(j) ? 1 : 0;
    count += p.line_sensors.contains(Edge{k, j}) ? 1 : 0;
  }
  return count;
}

}  // namespace

ConstraintReport check_constraints(const RadialTree& tree, const Placement& placement) {
  require_in_tree(tree, placement);
  ConstraintReport report;
  const NodeId root = tree.root();
  report.root_ok = monitored_children(root, tree, placement) + 1 >= tree.degree(root);
  for (NodeId k : tree.nodes()) {
    if (k == root) continue;
    const std::size_t d = tree.degree(k);
    if (d >= 3 && monitored_children(k, tree, placement) + 2 < d) {
      report.branch_violations.push_back(k);
    }
    if (tree.is_zero_injection(k) && !placement.node_sensors.contains(k) &&
        !placement.line_sensors.contains(tree.parent_edge(k))) {
      report.zero_injection_violations.push_back(k);
    }
  }
  return report;
}

Rational placement_cost(const Placement& placement, const CostModel& costs) {
  Rational total = 0;
  for (NodeId id : placement.node_sensors) {
    auto it = costs.node_cost.find(id);
    if (it == costs.node_cost.end()) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(id));
    total += it->second;
  }
  for (const Edge& e : placement.line_sensors) {
    auto it = costs.line_cost.find(e);
    if (it == costs.line_cost.end()) throw Error(ErrorCode::UnknownEdge, "edge " + to_string(e));
    total += it->second;
  }
  return total;
}

bool is_subset_placement(const Placement& p1, const Placement& p2, const RadialTree& tree) {
  const MeasuredSets m1 = measured_sets(tree, p1);
  const MeasuredSets m2 = measured_sets(tree, p2);
  return std::includes(m2.flow_edges.begin(), m2.flow_edges.end(), m1.flow_edges.begin(),
                       m1.flow_edges.end()) &&
         std::includes(m2.voltage_nodes.begin(), m2.voltage_nodes.end(),
                       m1.voltage_nodes.begin(), m1.voltage_nodes.end());
}

std::vector<NodeId> critical_set(const RadialTree& tree) {
  std::vector<NodeId> out;
  for (NodeId id : tree.nodes()) {
    if (id == tree.root() || tree.degree(id) >= 3 || tree.is_zero_injection(id)) out.push_back(id);
  }
  return out;
}

Rational tie_cost(NodeId node, const RadialTree& tree, const CostModel& costs) {
  const Edge parent_edge = tree.parent_edge(node);
  return std::min(costs.node(node), costs.line(parent_edge));
}

std::vector<NodeId> no_sensor_child(NodeId q, const RadialTree& tree, const Placement& placement) {
  std::vector<NodeId> out;
  for (NodeId c : tree.children(q)) {
    if (!placement.node_sensors.contains(c) && !placement.line_sensors.contains(Edge{q, c})) {
      out.push_back(c);
    }
  }
  return out;
}

FindMaxResult find_max(std::span<const NodeId> list, const RadialTree& tree, const CostModel& costs) {
  if (list.empty()) throw Error(ErrorCode::EmptyList, "find_max on an empty list");
  std::size_t best = 0;
  Rational best_cost = tie_cost(list[0], tree, costs);
  for (std::size_t i = 1; i < list.size(); ++i) {
    Rational m = tie_cost(list[i], tree, costs);
    const NodeId a = list[i];
    const NodeId b = list[best];
    const bool better =
        m > best_cost ||
        (m == best_cost && (tree.degree(a) < tree.degree(b) ||
                            (tree.degree(a) == tree.degree(b) && a < b)));
    if (better) {
      best = i;
      best_cost = std::move(m);
    }
  }
  FindMaxResult result{list[best], {}};
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i != best) result.rest.push_back(list[i]);
  }
  return result;
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::RootNodeSensor: return "root-node-sensor";
    case Branch::RootChildSensors: return "root-child-sensors";
    case Branch::ZeroInjectionNodeSensor: return "zero-injection-node-sensor";
    case Branch::ZeroInjectionParentLine: return "zero-injection-parent-line";
    case Branch::NodeSensor: return "node-sensor";
    case Branch::ChildSensors: return "child-sensors";
    case Branch::ChildSensorsAndParentLine: return "child-sensors-and-parent-line";
    case Branch::AlreadyMonitored: return "already-monitored";
  }
  return "unknown";
}

namespace {

Rational sum_tie_costs(std::span<const NodeId> list, const RadialTree& tree, const CostModel& costs) {
  Rational total = 0;
  for (NodeId i : list) total += tie_cost(i, tree, costs);
  return total;
}

// Monitor each listed child of q the cheaper way; a tie prefers the node sensor.
void sensor_children(NodeId q, std::span<const NodeId> list, const RadialTree&,
                     const CostModel& costs, Placement& added) {
  for (NodeId i : list) {
    if (costs.node(i) <= costs.line(Edge{q, i})) {
      added.node_sensors.insert(i);
    } else {
      added.line_sensors.insert(Edge{q, i});
    }
  }
}

// Applies the subproblem at q to `acc` in place and reports what was added.
TraceStep apply_step(NodeId q, const RadialTree& tree, const CostModel& costs, Placement& acc) {
  TraceStep step{q, Branch::AlreadyMonitored, {}};
  const std::vector<NodeId> list = no_sensor_child(q, tree, acc);
  const Rational& a_q = costs.node(q);
  const bool zero_injection = tree.is_zero_injection(q);

  if (q == tree.root()) {
    if (!list.empty() && a_q <= sum_tie_costs(list, tree, costs)) {
      step.branch = Branch::RootNodeSensor;
      step.added.node_sensors.insert(q);
    } else {
      step.branch = list.empty() ? Branch::AlreadyMonitored : Branch::RootChildSensors;
      sensor_children(q, list, tree, costs, step.added);
    }
  } else if (zero_injection && list.size() <= 1) {
    const Edge parent_edge = tree.parent_edge(q);
    if (a_q <= costs.line(parent_edge)) {
      step.branch = Branch::ZeroInjectionNodeSensor;
      step.added.node_sensors.insert(q);
    } else {
      step.branch = Branch::ZeroInjectionParentLine;
      step.added.line_sensors.insert(parent_edge);
    }
  } else if (list.empty()) {
    step.branch = Branch::AlreadyMonitored;
  } else {
    const FindMaxResult fm = find_max(list, tree, costs);
    const Rational rest = sum_tie_costs(fm.rest, tree, costs);
    if (zero_injection) {
      const Edge parent_edge = tree.parent_edge(q);
      if (a_q <= costs.line(parent_edge) + rest) {
        step.branch = Branch::NodeSensor;
        step.added.node_sensors.insert(q);
      } else {
        // The node sensor at q lost, so the zero-injection constraint needs the parent line.
        step.branch = Branch::ChildSensorsAndParentLine;
        sensor_children(q, fm.rest, tree, costs, step.added);
        step.added.line_sensors.insert(parent_edge);
      }
    } else if (a_q <= rest) {
      step.branch = Branch::NodeSensor;
      step.added.node_sensors.insert(q);
    } else {
      step.branch = Branch::ChildSensors;
      sensor_children(q, fm.rest, tree, costs, step.added);
    }
  }

  // Report only what is new; the accumulator never loses sensors.
  Placement fresh;
  for (NodeId id : step.added.node_sensors) {
    if (acc.node_sensors.insert(id).second) fresh.node_sensors.insert(id);
  }
  for (const Edge& e : step.added.line_sensors) {
    if (acc.line_sensors.insert(e).second) fresh.line_sensors.insert(e);
  }
  step.added = std::move(fresh);
  return step;
}

bool is_critical(NodeId id, const RadialTree& tree) {
  return id == tree.root() || tree.degree(id) >= 3 || tree.is_zero_injection(id);
}

}  // namespace

StepOutcome placement_step(NodeId q, const RadialTree& tree, const CostModel& costs,
                           const Placement& placement) {
  if (!is_critical(q, tree)) {
    throw Error(ErrorCode::NodeNotCritical, "node " + std::to_string(q) + " is not critical");
  }
  StepOutcome out{placement, Branch::AlreadyMonitored, {}};
  TraceStep step = apply_step(q, tree, costs, out.placement);
  out.branch = step.branch;
  out.added = std::move(step.added);
  return out;
}

std::size_t DpTrace::step_count() const noexcept {
  std::size_t n = 0;
  for (const auto& it : iterations) n += it.steps.size();
  return n;
}

DpResult dp_place(const RadialTree& tree, const CostModel& costs) {
  const std::size_t f_max = tree.max_depth();
  std::vector<std::vector<NodeId>> by_depth(f_max + 1);
  for (NodeId id : tree.nodes()) {
    if (is_critical(id, tree)) by_depth[tree.depth(id)].push_back(id);
  }

  // Leaves at the deepest level only matter when they are zero-injection
  // (or when the tree is the bare root); then the sweep starts one level lower.
  const std::size_t start = (f_max == 0 || !by_depth[f_max].empty()) ? f_max : f_max - 1;

  DpResult result;
  std::size_t k = 1;
  for (std::size_t depth = start + 1; depth-- > 0; ++k) {
    TraceIteration iteration{k, depth, by_depth[depth], {}};
    for (NodeId q : by_depth[depth]) {
      iteration.steps.push_back(apply_step(q, tree, costs, result.placement));
    }
    result.trace.iterations.push_back(std::move(iteration));
  }
  return result;
}

}  // namespace radial
