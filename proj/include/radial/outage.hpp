#pragma once

#include "radial/measurement.hpp"
#include "radial/placement.hpp"
#include "radial/tree.hpp"

#include <bitset>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace radial {

/// Largest feeder the signature machinery accepts. Node sets are fixed-width
/// bitsets over tree indices.
inline constexpr std::size_t kMaxOracleNodes = 256;
using NodeMask = std::bitset<kMaxOracleNodes>;

inline constexpr std::size_t kDefaultHypothesisCap = 200000;

/// A set of simultaneously open lines, sorted.
struct OutageHypothesis {
  std::vector<Edge> outaged_edges;

  OutageHypothesis() = default;
  explicit OutageHypothesis(std::vector<Edge> edges);

  std::size_t size() const noexcept { return outaged_edges.size(); }
  friend auto operator<=>(const OutageHypothesis&, const OutageHypothesis&) = default;
};

std::string to_string(const OutageHypothesis& h);

/// True when no outaged edge lies downstream of another (membership in H_U).
bool is_antichain(const RadialTree& tree, const OutageHypothesis& h);

/// Outaged edges that have no outaged edge upstream of them.
OutageHypothesis antichain_reduction(const RadialTree& tree, const OutageHypothesis& h);

/// The empty hypothesis followed by every antichain of edges with
/// 1 <= |H| <= max_outages (unbounded when nullopt), ordered by size and then
/// lexicographically. Throws CombinatorialLimit when more than `cap`
/// hypotheses would be produced.
std::vector<OutageHypothesis> enumerate_hypotheses(const RadialTree& tree,
                                                   std::optional<std::size_t> max_outages,
                                                   std::size_t cap = kDefaultHypothesisCap);

struct OutageForest {
  std::vector<NodeId> energized;
  /// Island index (1-based, in the order of the outaged edges) for every
  /// de-energized node.
  std::map<NodeId, std::size_t> island_of;
  std::size_t island_count = 0;

  std::vector<NodeId> island(std::size_t index) const;
};

OutageForest outage_forest(const RadialTree& tree, const OutageHypothesis& h);

/// Noise-free measurements as symbolic load sums.
///
/// For each measured edge (i, j) the flow is the set of energized,
/// non-zero-injection nodes downstream of it (empty when the edge is open or
/// de-energized). Voltages are reduced to an energized flag. Node sets are
/// masks over tree indices; use nodes_of() to translate.
struct MeasurementSignature {
  std::vector<Edge> flow_edges;
  std::vector<NodeMask> flow;
  std::vector<NodeId> voltage_nodes;
  std::vector<bool> energized;

  friend bool operator==(const MeasurementSignature&, const MeasurementSignature&) = default;
};

std::vector<NodeId> nodes_of(const RadialTree& tree, const NodeMask& mask);

MeasurementSignature signature(const RadialTree& tree, const Placement& placement,
                               const OutageHypothesis& h);
MeasurementSignature signature(const RadialTree& tree, const MeasuredSets& measured,
                               const OutageHypothesis& h);

/// Generic loads: different symbolic sums never coincide.
bool distinguishable_generic(const MeasurementSignature& a, const MeasurementSignature& b);

struct WorstCaseVerdict {
  bool distinguishable = true;
  /// When not distinguishable: a strictly positive load per non-zero-injection
  /// non-root node (tree order) under which every measurement coincides.
  std::map<NodeId, Rational> coinciding_loads;
};

/// Adversarial loads: indistinguishable iff voltage flags agree and some
/// strictly positive load vector equalises every measured flow.
WorstCaseVerdict worst_case_verdict(const MeasurementSignature& a, const MeasurementSignature& b,
                                    const RadialTree& tree);
bool distinguishable_worst_case(const MeasurementSignature& a, const MeasurementSignature& b,
                                const RadialTree& tree);

}  // namespace radial
