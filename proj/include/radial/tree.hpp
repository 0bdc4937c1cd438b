#pragma once

#include "radial/error.hpp"
#include "radial/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace radial {

using NodeId = std::uint32_t;

/// A directed feeder line, always stored parent -> child.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

struct NodeSpec {
  NodeId id = 0;
  bool zero_injection = false;
};

/// Radial feeder topology rooted at the substation.
///
/// Construction enforces the graph structure: ids are unique, every edge names
/// declared nodes, and the edges form a spanning tree. Edges given child ->
/// parent are reoriented. Feeder-level rules that are not structural (root
/// must carry load, costs must be complete) are checked by validate().
///
/// Node degree counts the grid connection at the root, so degree(root) is
/// |children(root)| + 1 like every other node.
class RadialTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  RadialTree(NodeId root, std::vector<NodeSpec> nodes, std::vector<Edge> edges);

  NodeId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return ids_.size(); }

  /// Node ids in ascending order.
  std::span<const NodeId> nodes() const noexcept { return ids_; }
  /// Edges sorted by (from, to).
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains(NodeId id) const { return index_.contains(id); }
  bool has_edge(const Edge& e) const;

  std::size_t index_of(NodeId id) const;
  NodeId id_at(std::size_t index) const { return ids_[index]; }

  std::optional<NodeId> parent(NodeId id) const;
  Edge parent_edge(NodeId id) const;
  std::span<const NodeId> children(NodeId id) const { return children_[index_of(id)]; }
  std::size_t degree(NodeId id) const { return children(id).size() + 1; }
  std::size_t depth(NodeId id) const { return depth_[index_of(id)]; }
  std::size_t max_depth() const noexcept { return max_depth_; }

  bool is_zero_injection(NodeId id) const { return zero_injection_[index_of(id)]; }
  /// Zero-injection node ids, ascending.
  std::vector<NodeId> zero_injection() const;

  /// True when `ancestor` lies strictly above `node` on its root path.
  bool is_ancestor(NodeId ancestor, NodeId node) const;
  /// Nodes of the subtree rooted at `id`, ascending.
  std::vector<NodeId> subtree(NodeId id) const;

  /// Index-level view used by the oracle sweeps.
  std::size_t parent_index(std::size_t index) const { return parent_[index]; }
  std::span<const std::size_t> breadth_first() const noexcept { return bfs_; }

  friend bool operator==(const RadialTree& a, const RadialTree& b) {
    return a.root_ == b.root_ && a.ids_ == b.ids_ && a.edges_ == b.edges_ &&
           a.zero_injection_ == b.zero_injection_;
  }

 private:
  NodeId root_;
  std::vector<NodeId> ids_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::size_t> depth_;
  std::vector<bool> zero_injection_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> bfs_;
  std::size_t max_depth_ = 0;
};

/// Node-sensor costs a_i and line-sensor costs b_(i,j).
struct CostModel {
  std::map<NodeId, Rational> node_cost;
  std::map<Edge, Rational> line_cost;

  const Rational& node(NodeId id) const;
  const Rational& line(const Edge& e) const;

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

CostModel uniform_costs(const RadialTree& tree, const Rational& node_cost,
                        const Rational& line_cost);

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

using ValidationReport = std::vector<ValidationIssue>;

/// Every violated feeder invariant; empty iff the instance is usable.
ValidationReport validate(const RadialTree& tree, const CostModel& costs);

/// Throws the first issue of a non-empty report.
void require_valid(const RadialTree& tree, const CostModel& costs);

}  // namespace radial
