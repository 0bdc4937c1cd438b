#include "radial/outage.hpp"

#include "radial/exact_lp.hpp"
#include "signature_core.hpp"

#include <algorithm>
#include <numeric>

namespace radial {

OutageHypothesis::OutageHypothesis(std::vector<Edge> edges) : outaged_edges(std::move(edges)) {
  std::sort(outaged_edges.begin(), outaged_edges.end());
  outaged_edges.erase(std::unique(outaged_edges.begin(), outaged_edges.end()), outaged_edges.end());
}

std::string to_string(const OutageHypothesis& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.outaged_edges.size(); ++i) {
    if (i) out += ",";
    out += to_string(h.outaged_edges[i]);
  }
  return out + "}";
}

namespace {

void require_edges(const RadialTree& tree, const OutageHypothesis& h) {
  for (const Edge& e : h.outaged_edges) {
    if (!tree.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "outaged edge " + to_string(e));
  }
}

// Pre/post-order stamps for O(1) ancestor queries on tree indices.
struct EulerTour {
  std::vector<std::size_t> enter, leave;

  explicit EulerTour(const RadialTree& tree) : enter(tree.size()), leave(tree.size()) {
    std::size_t clock = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{tree.index_of(tree.root()), 0}};
    enter[stack.back().first] = clock++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto kids = tree.children(tree.id_at(v));
      if (next < kids.size()) {
        const std::size_t c = tree.index_of(kids[next++]);
        enter[c] = clock++;
        stack.push_back({c, 0});
      } else {
        leave[v] = clock++;
        stack.pop_back();
      }
    }
  }

  bool comparable(std::size_t a, std::size_t b) const {
    return (enter[a] <= enter[b] && leave[b] <= leave[a]) ||
           (enter[b] <= enter[a] && leave[a] <= leave[b]);
  }
};

}  // namespace

bool is_antichain(const RadialTree& tree, const OutageHypothesis& h) {
  require_edges(tree, h);
  for (const Edge& a : h.outaged_edges) {
    for (const Edge& b : h.outaged_edges) {
      if (a != b && tree.is_ancestor(a.to, b.to)) return false;
    }
  }
  return true;
}

OutageHypothesis antichain_reduction(const RadialTree& tree, const OutageHypothesis& h) {
  require_edges(tree, h);
  std::vector<Edge> kept;
  for (const Edge& e : h.outaged_edges) {
    const bool shadowed = std::any_of(h.outaged_edges.begin(), h.outaged_edges.end(),
                                      [&](const Edge& up) { return up != e && tree.is_ancestor(up.to, e.to); });
    if (!shadowed) kept.push_back(e);
  }
  return OutageHypothesis(std::move(kept));
}

std::vector<OutageHypothesis> enumerate_hypotheses(const RadialTree& tree,
                                                   std::optional<std::size_t> max_outages,
                                                   std::size_t cap) {
  const EulerTour tour(tree);
  const auto edges = tree.edges();
  std::vector<std::size_t> child(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) child[i] = tree.index_of(edges[i].to);
  const std::size_t limit = max_outages.value_or(edges.size());

  std::vector<OutageHypothesis> out{OutageHypothesis{}};
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == limit) return;
    for (std::size_t i = start; i < edges.size(); ++i) {
      const bool ok = std::none_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return tour.comparable(child[c], child[i]);
      });
      if (!ok) continue;
      chosen.push_back(i);
      if (out.size() >= cap) {
        throw Error(ErrorCode::CombinatorialLimit,
                    "more than " + std::to_string(cap) + " outage hypotheses");
      }
      OutageHypothesis h;
      for (std::size_t c : chosen) h.outaged_edges.push_back(edges[c]);
      out.push_back(std::move(h));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(out.begin(), out.end(), [](const OutageHypothesis& a, const OutageHypothesis& b) {
    return a.size() < b.size();
  });
  return out;
}

std::vector<NodeId> OutageForest::island(std::size_t index) const {
  std::vector<NodeId> out;
  for (const auto& [id, island] : island_of) {
    if (island == index) out.push_back(id);
  }
  return out;
}

OutageForest outage_forest(const RadialTree& tree, const OutageHypothesis& h) {
  require_edges(tree, h);
  const std::set<Edge> open(h.outaged_edges.begin(), h.outaged_edges.end());
  auto reach = [&](NodeId start) {
    std::vector<NodeId> seen{start};
    for (std::size_t head = 0; head < seen.size(); ++head) {
      for (NodeId c : tree.children(seen[head])) {
        if (!open.contains(Edge{seen[head], c})) seen.push_back(c);
      }
    }
    return seen;
  };

  OutageForest forest;
  forest.energized = reach(tree.root());
  std::sort(forest.energized.begin(), forest.energized.end());
  for (const Edge& e : h.outaged_edges) {
    ++forest.island_count;
    for (NodeId v : reach(e.to)) forest.island_of[v] = forest.island_count;
  }
  return forest;
}

std::vector<NodeId> nodes_of(const RadialTree& tree, const NodeMask& mask) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (mask[i]) out.push_back(tree.id_at(i));
  }
  return out;
}

namespace detail {

SignatureEngine::SignatureEngine(const RadialTree& tree) : tree_(&tree), subtree_(tree.size()) {
  if (tree.size() > kMaxOracleNodes) {
    throw Error(ErrorCode::InstanceTooLarge, "signature oracle supports at most " +
                                                 std::to_string(kMaxOracleNodes) + " nodes");
  }
  auto order = tree.breadth_first();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    subtree_[v].set(v);
    const std::size_t p = tree.parent_index(v);
    if (p != RadialTree::npos) subtree_[p] |= subtree_[v];
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    all_.set(i);
    const NodeId id = tree.id_at(i);
    if (id != tree.root() && !tree.is_zero_injection(id)) loads_.set(i);
  }
}

NodeMask SignatureEngine::energized(const OutageHypothesis& h) const {
  NodeMask dark;
  for (const Edge& e : h.outaged_edges) dark |= subtree_[tree_->index_of(e.to)];
  return all_ & ~dark;
}

WorstCaseVerdict worst_case_core(std::span<const FlowPair> flows, bool voltages_differ,
                                 const SignatureEngine& engine, bool want_loads) {
  if (voltages_differ) return {true, {}};

  std::vector<FlowPair> rows;
  NodeMask involved;
  for (const FlowPair& f : flows) {
    if (f.a == f.b) continue;
    const NodeMask only_a = f.a & ~f.b;
    const NodeMask only_b = f.b & ~f.a;
    // One sum strictly contains the other: positive loads keep them apart.
    if (only_a.none() || only_b.none()) return {true, {}};
    rows.push_back({only_a, only_b});
    involved |= only_a | only_b;
  }

  const RadialTree& tree = engine.tree();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (involved[i]) vars.push_back(i);
  }

  std::vector<Rational> solution;
  if (!rows.empty()) {
    std::vector<std::vector<int>> matrix;
    for (const FlowPair& r : rows) {
      std::vector<int> row(vars.size(), 0);
      for (std::size_t k = 0; k < vars.size(); ++k) {
        row[k] = r.a[vars[k]] ? 1 : (r.b[vars[k]] ? -1 : 0);
      }
      if (std::find(matrix.begin(), matrix.end(), row) == matrix.end()) matrix.push_back(std::move(row));
    }
    solution = strictly_positive_kernel_vector(matrix, vars.size());
    if (solution.empty()) return {true, {}};
  }

  WorstCaseVerdict verdict{false, {}};
  if (!want_loads) return verdict;
  // Scale the witness to integers; loads that appear in no equation get 1.
  BigInt scale = 1;
  for (const Rational& r : solution) {
    const BigInt den = boost::multiprecision::denominator(r);
    scale = scale / boost::multiprecision::gcd(scale, den) * den;
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (!engine.loads()[i]) continue;
    if (k < vars.size() && vars[k] == i) {
      verdict.coinciding_loads[tree.id_at(i)] = solution[k] * scale;
      ++k;
    } else {
      verdict.coinciding_loads[tree.id_at(i)] = 1;
    }
  }
  return verdict;
}

}  // namespace detail

MeasurementSignature signature(const RadialTree& tree, const MeasuredSets& measured,
                               const OutageHypothesis& h) {
  require_edges(tree, h);
  const detail::SignatureEngine engine(tree);
  const NodeMask en = engine.energized(h);
  MeasurementSignature sig;
  for (const Edge& e : measured.flow_edges) {
    if (!tree.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "measured edge " + to_string(e));
    sig.flow_edges.push_back(e);
    sig.flow.push_back(engine.flow(tree.index_of(e.to), en));
  }
  for (NodeId v : measured.voltage_nodes) {
    sig.voltage_nodes.push_back(v);
    sig.energized.push_back(en[tree.index_of(v)]);
  }
  return sig;
}

MeasurementSignature signature(const RadialTree& tree, const Placement& placement,
                               const OutageHypothesis& h) {
  return signature(tree, measured_sets(tree, placement), h);
}

namespace {

void require_same_measurements(const MeasurementSignature& a, const MeasurementSignature& b) {
  if (a.flow_edges != b.flow_edges || a.voltage_nodes != b.voltage_nodes ||
      a.flow.size() != a.flow_edges.size() || b.flow.size() != b.flow_edges.size() ||
      a.energized.size() != a.voltage_nodes.size() || b.energized.size() != b.voltage_nodes.size()) {
    throw Error(ErrorCode::MismatchedMeasuredSets, "signatures cover different measurements");
  }
}

}  // namespace

bool distinguishable_generic(const MeasurementSignature& a, const MeasurementSignature& b) {
  require_same_measurements(a, b);
  return a.flow != b.flow || a.energized != b.energized;
}

WorstCaseVerdict worst_case_verdict(const MeasurementSignature& a, const MeasurementSignature& b,
                                    const RadialTree& tree) {
  require_same_measurements(a, b);
  const detail::SignatureEngine engine(tree);
  std::vector<detail::FlowPair> flows;
  for (std::size_t k = 0; k < a.flow.size(); ++k) flows.push_back({a.flow[k], b.flow[k]});
  return detail::worst_case_core(flows, a.energized != b.energized, engine, true);
}

bool distinguishable_worst_case(const MeasurementSignature& a, const MeasurementSignature& b,
                                const RadialTree& tree) {
  return worst_case_verdict(a, b, tree).distinguishable;
}

}  // namespace radial
