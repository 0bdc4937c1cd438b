#include "radial/exhaustive.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <tuple>

namespace radial {

namespace {

struct Constraint {
  long rhs = 0;
  long lhs = 0;
  long potential = 0;
};

struct Term {
  std::size_t constraint;
  long coef;
};

// One binary decision: a node sensor (edge == nullopt) or a line sensor.
struct Variable {
  NodeId node = 0;
  std::optional<Edge> edge;
  std::vector<Term> terms;
};

template <typename Cost>
class Search {
 public:
  Search(const RadialTree& tree, std::vector<Variable> vars, std::vector<Cost> price,
         std::vector<Constraint> constraints, const IdentifiabilityChecker* oracle)
      : tree_(tree), vars_(std::move(vars)), price_(std::move(price)),
        constraints_(std::move(constraints)), oracle_(oracle), chosen_(vars_.size(), false) {}

  void seed(const Placement& p, const Cost& cost) {
    best_ = p;
    best_cost_ = cost;
  }

  void run() { visit(0, Cost(0), 0); }

  const std::optional<Placement>& best() const { return best_; }

 private:
  bool improves(const Cost& cost, std::size_t count) const {
    if (!best_) return true;
    if (cost != best_cost_) return cost < best_cost_;
    return count <= best_->sensor_count();
  }

  bool assign(std::size_t v, bool value) {
    bool ok = true;
    for (const Term& t : vars_[v].terms) {
      Constraint& c = constraints_[t.constraint];
      c.potential -= t.coef;
      if (value) c.lhs += t.coef;
      if (c.lhs + c.potential < c.rhs) ok = false;
    }
    return ok;
  }

  void unassign(std::size_t v, bool value) {
    for (const Term& t : vars_[v].terms) {
      Constraint& c = constraints_[t.constraint];
      c.potential += t.coef;
      if (value) c.lhs -= t.coef;
    }
  }

  void visit(std::size_t v, const Cost& cost, std::size_t count) {
    if (!improves(cost, count)) return;
    if (v == vars_.size()) {
      leaf(cost);
      return;
    }
    for (bool value : {false, true}) {
      const bool ok = assign(v, value);
      chosen_[v] = value;
      if (ok) {
        if (value) {
          visit(v + 1, cost + price_[v], count + 1);
        } else {
          visit(v + 1, cost, count);
        }
      }
      chosen_[v] = false;
      unassign(v, value);
    }
  }

  void leaf(const Cost& cost) {
    Placement p;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (!chosen_[v]) continue;
      if (vars_[v].edge) {
        p.line_sensors.insert(*vars_[v].edge);
      } else {
        p.node_sensors.insert(vars_[v].node);
      }
    }
    if (best_ && cost == best_cost_ && p.sensor_count() == best_->sensor_count() &&
        std::tie(best_->node_sensors, best_->line_sensors) <= std::tie(p.node_sensors, p.line_sensors)) {
      return;
    }
    if (oracle_ && !identifiable(p)) return;
    best_ = std::move(p);
    best_cost_ = cost;
  }

  bool identifiable(const Placement& p) {
    MeasuredSets m = measured_sets(tree_, p);
    auto key = std::pair(std::vector<Edge>(m.flow_edges.begin(), m.flow_edges.end()),
                         std::vector<NodeId>(m.voltage_nodes.begin(), m.voltage_nodes.end()));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const bool ok = oracle_->check(m, OracleMode::WorstCase, false).identifiable;
    cache_.emplace(std::move(key), ok);
    return ok;
  }

  const RadialTree& tree_;
  std::vector<Variable> vars_;
  std::vector<Cost> price_;
  std::vector<Constraint> constraints_;
  const IdentifiabilityChecker* oracle_;
  std::vector<bool> chosen_;
  std::optional<Placement> best_;
  Cost best_cost_{};
  std::map<std::pair<std::vector<Edge>, std::vector<NodeId>>, bool> cache_;
};

// Common-denominator integer costs when they fit comfortably in 64 bits.
std::optional<std::vector<std::int64_t>> as_integers(const std::vector<Rational>& prices) {
  BigInt lcm = 1;
  for (const Rational& r : prices) {
    const BigInt den = boost::multiprecision::denominator(r);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<std::int64_t> out;
  BigInt total = 0;
  const BigInt bound = BigInt(1) << 60;
  for (const Rational& r : prices) {
    const BigInt scaled = boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r));
    total += scaled;
    if (total > bound) return std::nullopt;
    out.push_back(scaled.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace

ExhaustiveResult exhaustive_min_cost(const RadialTree& tree, const CostModel& costs,
                                     Feasibility feasibility, const ExhaustiveOptions& options) {
  if (tree.size() > options.max_nodes) {
    throw Error(ErrorCode::InstanceTooLarge, std::to_string(tree.size()) + " nodes exceeds the brute-force cap of " +
                                                 std::to_string(options.max_nodes));
  }
  require_valid(tree, costs);

  // Deepest nodes first; each node's variable is followed by its parent-edge
  // variable, so every constraint closes as early as possible.
  std::vector<Variable> vars;
  std::vector<Rational> prices;
  const auto order = tree.breadth_first();
  std::map<NodeId, std::size_t> node_var;
  std::map<Edge, std::size_t> edge_var;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = tree.id_at(*it);
    node_var[v] = vars.size();
    vars.push_back(Variable{v, std::nullopt, {}});
    prices.push_back(costs.node(v));
    if (v != tree.root()) {
      const Edge e = tree.parent_edge(v);
      edge_var[e] = vars.size();
      vars.push_back(Variable{v, e, {}});
      prices.push_back(costs.line(e));
    }
  }

  std::vector<Constraint> constraints;
  if (feasibility == Feasibility::Constraints) {
    auto add = [&](std::vector<std::pair<std::size_t, long>> terms, long rhs) {
      const std::size_t c = constraints.size();
      Constraint con{rhs, 0, 0};
      for (auto [var, coef] : terms) {
        vars[var].terms.push_back(Term{c, coef});
        con.potential += coef;
      }
      constraints.push_back(con);
    };
    for (NodeId k : tree.nodes()) {
      const long d = static_cast<long>(tree.degree(k));
      const bool root = k == tree.root();
      if (root || d >= 3) {
        std::vector<std::pair<std::size_t, long>> terms{{node_var[k], d}};
        for (NodeId j : tree.children(k)) {
          terms.push_back({node_var[j], 1});
          terms.push_back({edge_var[Edge{k, j}], 1});
        }
        add(std::move(terms), root ? d - 1 : d - 2);
      }
      if (!root && tree.is_zero_injection(k)) {
        add({{node_var[k], 1}, {edge_var[tree.parent_edge(k)], 1}}, 1);
      }
    }
  }

  std::optional<IdentifiabilityChecker> oracle;
  if (feasibility == Feasibility::OracleWorstCase) oracle.emplace(tree, options.max_outages);
  const IdentifiabilityChecker* oracle_ptr = oracle ? &*oracle : nullptr;

  auto finish = [&](const std::optional<Placement>& best) {
    if (!best) throw Error(ErrorCode::InvalidParameter, "no feasible placement found");
    return ExhaustiveResult{*best, placement_cost(*best, costs)};
  };

  // Node sensors everywhere measure everything; use it as the opening bound
  // when the chosen predicate accepts it.
  const Placement everything = maximal_placement(tree);
  const bool seed = oracle_ptr ? oracle_ptr->check(measured_sets(tree, everything), OracleMode::WorstCase, false).identifiable
                               : check_constraints(tree, everything).feasible();

  auto run = [&](auto search, const auto& seed_cost) {
    if (seed) search.seed(everything, seed_cost);
    search.run();
    return finish(search.best());
  };
  if (auto ints = as_integers(prices)) {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (!vars[v].edge) total += (*ints)[v];
    }
    return run(Search<std::int64_t>(tree, std::move(vars), std::move(*ints), std::move(constraints), oracle_ptr),
               total);
  }
  Rational total = 0;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (!vars[v].edge) total += prices[v];
  }
  return run(Search<Rational>(tree, std::move(vars), std::move(prices), std::move(constraints), oracle_ptr),
             total);
}

}  // namespace radial
