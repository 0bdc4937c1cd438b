#include "radial/tree.hpp"

#include <algorithm>
#include <set>

namespace radial {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

RadialTree::RadialTree(NodeId root, std::vector<NodeSpec> nodes, std::vector<Edge> edges)
    : root_(root) {
  std::sort(nodes.begin(), nodes.end(),
            [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i].id == nodes[i - 1].id) {
      throw Error(ErrorCode::DuplicateId, "node " + std::to_string(nodes[i].id) + " declared twice");
    }
  }
  const std::size_t n = nodes.size();
  ids_.reserve(n);
  zero_injection_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids_.push_back(nodes[i].id);
    zero_injection_.push_back(nodes[i].zero_injection);
    index_.emplace(nodes[i].id, i);
  }
  if (!index_.contains(root)) {
    throw Error(ErrorCode::DanglingEdge, "root " + std::to_string(root) + " is not a declared node");
  }

  std::vector<std::vector<std::size_t>> adjacency(n);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges) {
    auto a = index_.find(e.from);
    auto b = index_.find(e.to);
    if (a == index_.end() || b == index_.end()) {
      throw Error(ErrorCode::DanglingEdge, "edge " + to_string(e) + " references an undeclared node");
    }
    if (e.from == e.to) {
      throw Error(ErrorCode::NotATree, "self loop at node " + std::to_string(e.from));
    }
    auto key = std::minmax(e.from, e.to);
    if (!seen.insert({key.first, key.second}).second) {
      throw Error(ErrorCode::NotATree, "parallel edge " + to_string(e));
    }
    adjacency[a->second].push_back(b->second);
    adjacency[b->second].push_back(a->second);
  }
  if (edges.size() + 1 != n) {
    throw Error(ErrorCode::NotATree, std::to_string(n) + " nodes need " + std::to_string(n - 1) +
                                         " edges, got " + std::to_string(edges.size()));
  }

  parent_.assign(n, npos);
  depth_.assign(n, 0);
  children_.assign(n, {});
  std::vector<bool> visited(n, false);
  const std::size_t r = index_.at(root);
  visited[r] = true;
  bfs_.push_back(r);
  for (std::size_t head = 0; head < bfs_.size(); ++head) {
    const std::size_t u = bfs_[head];
    std::sort(adjacency[u].begin(), adjacency[u].end());
    for (std::size_t v : adjacency[u]) {
      if (visited[v]) {
        if (v != parent_[u]) {
          throw Error(ErrorCode::NotATree, "cycle through node " + std::to_string(ids_[v]));
        }
        continue;
      }
      visited[v] = true;
      parent_[v] = u;
      depth_[v] = depth_[u] + 1;
      max_depth_ = std::max(max_depth_, depth_[v]);
      children_[u].push_back(ids_[v]);
      edges_.push_back(Edge{ids_[u], ids_[v]});
      bfs_.push_back(v);
    }
  }
  if (bfs_.size() != n) {
    throw Error(ErrorCode::NotATree, "feeder is disconnected");
  }
  std::sort(edges_.begin(), edges_.end());
}

bool RadialTree::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t RadialTree::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(id));
  return it->second;
}

std::optional<NodeId> RadialTree::parent(NodeId id) const {
  const std::size_t p = parent_[index_of(id)];
  if (p == npos) return std::nullopt;
  return ids_[p];
}

Edge RadialTree::parent_edge(NodeId id) const {
  auto p = parent(id);
  if (!p) throw Error(ErrorCode::RootHasNoParentEdge, "node " + std::to_string(id) + " is the root");
  return Edge{*p, id};
}

std::vector<NodeId> RadialTree::zero_injection() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (zero_injection_[i]) out.push_back(ids_[i]);
  }
  return out;
}

bool RadialTree::is_ancestor(NodeId ancestor, NodeId node) const {
  const std::size_t a = index_of(ancestor);
  std::size_t v = parent_[index_of(node)];
  while (v != npos) {
    if (v == a) return true;
    v = parent_[v];
  }
  return false;
}

std::vector<NodeId> RadialTree::subtree(NodeId id) const {
  std::vector<NodeId> out{id};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (NodeId c : children(out[head])) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Rational& CostModel::node(NodeId id) const {
  auto it = node_cost.find(id);
  if (it == node_cost.end()) {
    throw Error(ErrorCode::MissingCost, "no node cost for " + std::to_string(id));
  }
  return it->second;
}

const Rational& CostModel::line(const Edge& e) const {
  auto it = line_cost.find(e);
  if (it == line_cost.end()) throw Error(ErrorCode::MissingCost, "no line cost for " + to_string(e));
  return it->second;
}

CostModel uniform_costs(const RadialTree& tree, const Rational& node_cost,
                        const Rational& line_cost) {
  CostModel costs;
  for (NodeId id : tree.nodes()) costs.node_cost.emplace(id, node_cost);
  for (const Edge& e : tree.edges()) costs.line_cost.emplace(e, line_cost);
  return costs;
}

ValidationReport validate(const RadialTree& tree, const CostModel& costs) {
  ValidationReport report;
  auto add = [&](ErrorCode code, std::string message) {
    report.push_back(ValidationIssue{code, std::move(message)});
  };

  if (tree.is_zero_injection(tree.root())) {
    add(ErrorCode::RootHasZeroInjection, "root " + std::to_string(tree.root()) + " is marked zero-injection");
  }

  std::size_t child_total = 0;
  for (NodeId id : tree.nodes()) {
    child_total += tree.children(id).size();
    if (auto p = tree.parent(id); p && tree.depth(id) != tree.depth(*p) + 1) {
      add(ErrorCode::NotATree, "depth of " + std::to_string(id) + " is inconsistent");
    }
  }
  if (child_total + 1 != tree.size()) add(ErrorCode::NotATree, "child count does not match N-1");

  for (NodeId id : tree.nodes()) {
    auto it = costs.node_cost.find(id);
    if (it == costs.node_cost.end()) {
      add(ErrorCode::MissingCost, "node " + std::to_string(id) + " has no node cost");
    } else if (it->second < 0) {
      add(ErrorCode::NegativeCost, "node " + std::to_string(id) + " cost " + format_rational(it->second));
    }
  }
  for (const Edge& e : tree.edges()) {
    auto it = costs.line_cost.find(e);
    if (it == costs.line_cost.end()) {
      add(ErrorCode::MissingCost, "edge " + to_string(e) + " has no line cost");
    } else if (it->second < 0) {
      add(ErrorCode::NegativeCost, "edge " + to_string(e) + " cost " + format_rational(it->second));
    }
  }
  for (const auto& [id, cost] : costs.node_cost) {
    if (!tree.contains(id)) add(ErrorCode::UnknownNode, "cost given for unknown node " + std::to_string(id));
  }
  for (const auto& [e, cost] : costs.line_cost) {
    if (!tree.has_edge(e)) add(ErrorCode::UnknownEdge, "cost given for unknown edge " + to_string(e));
  }
  return report;
}

void require_valid(const RadialTree& tree, const CostModel& costs) {
  auto report = validate(tree, costs);
  if (!report.empty()) throw Error(report.front().code, report.front().message);
}

}  // namespace radial
