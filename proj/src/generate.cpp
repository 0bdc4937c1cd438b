#include "radial/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace radial {

RadialTree random_radial_tree(std::size_t n, std::uint64_t seed, std::size_t max_children,
                              double z_fraction) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be at least 1");
  if (!(z_fraction >= 0.0 && z_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "z_fraction must lie in [0, 1)");
  }
  if (n > 1 && max_children == 0) {
    throw Error(ErrorCode::InvalidParameter, "max_children must be positive");
  }

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<std::size_t> child_count(n + 1, 0);
  std::vector<NodeId> open{1};
  for (NodeId v = 2; v <= n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t slot = pick(rng);
    const NodeId parent = open[slot];
    edges.push_back(Edge{parent, v});
    if (++child_count[parent] == max_children) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(v);
  }

  std::vector<NodeSpec> nodes;
  for (NodeId v = 1; v <= n; ++v) nodes.push_back(NodeSpec{v, false});
  const auto z_count = static_cast<std::size_t>(std::floor(z_fraction * static_cast<double>(n - 1)));
  std::vector<NodeId> candidates(n - 1);
  std::iota(candidates.begin(), candidates.end(), NodeId{2});
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (std::size_t i = 0; i < z_count; ++i) nodes[candidates[i] - 1].zero_injection = true;
  return RadialTree(1, std::move(nodes), std::move(edges));
}

CostModel random_costs(const RadialTree& tree, std::uint64_t seed, int max_numerator,
                       int max_denominator) {
  if (max_numerator < 0 || max_denominator < 1) {
    throw Error(ErrorCode::InvalidParameter, "bad cost range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, max_numerator);
  std::uniform_int_distribution<int> den(1, max_denominator);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  CostModel costs;
  for (NodeId id : tree.nodes()) costs.node_cost.emplace(id, draw());
  for (const Edge& e : tree.edges()) costs.line_cost.emplace(e, draw());
  return costs;
}

RadialTree with_zero_injection(const RadialTree& tree, std::span<const NodeId> zero_injection) {
  std::vector<NodeSpec> nodes;
  for (NodeId id : tree.nodes()) {
    const bool z = std::find(zero_injection.begin(), zero_injection.end(), id) != zero_injection.end();
    nodes.push_back(NodeSpec{id, z});
  }
  for (NodeId id : zero_injection) {
    if (!tree.contains(id)) throw Error(ErrorCode::UnknownNode, "zero-injection node " + std::to_string(id));
  }
  return RadialTree(tree.root(), std::move(nodes),
                    std::vector<Edge>(tree.edges().begin(), tree.edges().end()));
}

std::vector<RadialTree> rooted_tree_shapes(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be at least 1");
  std::vector<RadialTree> out;
  auto emit = [&](const std::vector<std::size_t>& level) {
    // Level sequence in preorder: node i+1 hangs under the latest node one level up.
    std::vector<NodeSpec> nodes;
    std::vector<Edge> edges;
    std::vector<NodeId> last_at_level(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const NodeId id = static_cast<NodeId>(i + 1);
      nodes.push_back(NodeSpec{id, false});
      if (level[i] > 1) edges.push_back(Edge{last_at_level[level[i] - 1], id});
      last_at_level[level[i]] = id;
    }
    out.emplace_back(1, std::move(nodes), std::move(edges));
  };

  // Beyer-Hedetniemi successor rule over canonical level sequences, starting
  // from the path and ending at the star.
  std::vector<std::size_t> level(n);
  std::iota(level.begin(), level.end(), std::size_t{1});
  for (;;) {
    emit(level);
    std::size_t p = n;
    while (p > 0 && level[p - 1] <= 2) --p;
    if (p == 0) break;
    const std::size_t pi = p - 1;
    std::size_t q = pi;
    while (q > 0 && level[q - 1] != level[pi] - 1) --q;
    const std::size_t qi = q - 1;
    for (std::size_t i = pi; i < n; ++i) level[i] = level[i - (pi - qi)];
  }
  return out;
}

}  // namespace radial
