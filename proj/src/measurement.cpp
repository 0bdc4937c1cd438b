#include "radial/measurement.hpp"

namespace radial {

MeasuredSets measured_sets(const RadialTree& tree, const Placement& placement) {
  require_in_tree(tree, placement);
  MeasuredSets out;
  for (NodeId i : placement.node_sensors) {
    out.voltage_nodes.insert(i);
    if (auto p = tree.parent(i)) out.flow_edges.insert(Edge{*p, i});
    for (NodeId c : tree.children(i)) out.flow_edges.insert(Edge{i, c});
  }
  for (const Edge& e : placement.line_sensors) {
    out.flow_edges.insert(e);
    out.voltage_nodes.insert(e.to);
  }
  return out;
}

std::set<Edge> flow_closure(const RadialTree& tree, const std::set<Edge>& measured) {
  for (const Edge& e : measured) {
    if (!tree.has_edge(e)) throw Error(ErrorCode::UnknownEdge, to_string(e));
  }
  std::set<Edge> known = measured;
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v : tree.nodes()) {
      if (v == tree.root()) continue;
      std::vector<Edge> incident{tree.parent_edge(v)};
      for (NodeId c : tree.children(v)) incident.push_back(Edge{v, c});
      std::size_t unknown = 0;
      Edge missing{};
      for (const Edge& e : incident) {
        if (!known.contains(e)) {
          ++unknown;
          missing = e;
        }
      }
      if (unknown == 1 && incident.size() > 1) {
        known.insert(missing);
        changed = true;
      }
    }
  }
  return known;
}

}  // namespace radial
