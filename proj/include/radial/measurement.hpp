#pragma once

#include "radial/placement.hpp"
#include "radial/tree.hpp"

#include <compare>
#include <set>

namespace radial {

/// Flows (S_P) and voltages (M_P) observed by a placement.
///
/// A node sensor at i measures every edge incident to i and the voltage at i.
/// A line sensor on (i, j) sits at the j end: it measures the flow on (i, j)
/// and the voltage at j.
struct MeasuredSets {
  std::set<Edge> flow_edges;
  std::set<NodeId> voltage_nodes;

  friend auto operator<=>(const MeasuredSets&, const MeasuredSets&) = default;
};

MeasuredSets measured_sets(const RadialTree& tree, const Placement& placement);

/// Edges whose flow follows from the measured ones by flow conservation at
/// non-root nodes with known loads. At a node where every incident edge but one
/// is known (and at least one is), the last is inferred; repeated to a fixpoint.
std::set<Edge> flow_closure(const RadialTree& tree, const std::set<Edge>& measured);

}  // namespace radial
