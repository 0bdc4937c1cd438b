#include "radial/identifiability.hpp"

#include "signature_core.hpp"

#include <unordered_map>

namespace radial {

std::string_view to_string(OracleMode mode) {
  return mode == OracleMode::Generic ? "generic" : "worst_case";
}

struct IdentifiabilityChecker::Impl {
  const RadialTree* tree;
  detail::SignatureEngine engine;
  std::vector<OutageHypothesis> hypotheses;
  std::vector<NodeMask> energized;
  std::vector<NodeMask> energized_loads;

  Impl(const RadialTree& t, std::optional<std::size_t> max_outages, std::size_t cap)
      : tree(&t), engine(t), hypotheses(enumerate_hypotheses(t, max_outages, cap)) {
    energized.reserve(hypotheses.size());
    for (const auto& h : hypotheses) {
      energized.push_back(engine.energized(h));
      energized_loads.push_back(energized.back() & engine.loads());
    }
  }
};

IdentifiabilityChecker::IdentifiabilityChecker(const RadialTree& tree,
                                               std::optional<std::size_t> max_outages,
                                               std::size_t cap)
    : impl_(std::make_unique<Impl>(tree, max_outages, cap)) {}
IdentifiabilityChecker::~IdentifiabilityChecker() = default;
IdentifiabilityChecker::IdentifiabilityChecker(IdentifiabilityChecker&&) noexcept = default;
IdentifiabilityChecker& IdentifiabilityChecker::operator=(IdentifiabilityChecker&&) noexcept = default;

std::size_t IdentifiabilityChecker::hypothesis_count() const noexcept {
  return impl_->hypotheses.size();
}

const std::vector<OutageHypothesis>& IdentifiabilityChecker::hypotheses() const noexcept {
  return impl_->hypotheses;
}

IdentifiabilityResult IdentifiabilityChecker::check(const MeasuredSets& measured, OracleMode mode,
                                                    bool want_witness) const {
  const Impl& im = *impl_;
  const RadialTree& tree = *im.tree;
  const std::size_t count = im.hypotheses.size();

  std::vector<const NodeMask*> flow_masks;
  for (const Edge& e : measured.flow_edges) {
    if (!tree.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "measured edge " + to_string(e));
    flow_masks.push_back(&im.engine.subtree(tree.index_of(e.to)));
  }
  NodeMask volt;
  for (NodeId v : measured.voltage_nodes) volt.set(tree.index_of(v));

  IdentifiabilityResult result{true, std::nullopt, count};
  std::optional<std::pair<std::size_t, std::size_t>> worst;
  std::size_t worst_size = 0;
  auto consider = [&](std::size_t i, std::size_t j) {
    const std::size_t s = im.hypotheses[i].size() + im.hypotheses[j].size();
    if (!worst || s < worst_size || (s == worst_size && std::pair(i, j) < *worst)) {
      worst = std::pair(i, j);
      worst_size = s;
    }
  };

  auto same_measurements = [&](std::size_t i, std::size_t j) {
    if (((im.energized[i] ^ im.energized[j]) & volt).any()) return false;
    for (const NodeMask* sub : flow_masks) {
      if ((*sub & im.energized_loads[i]) != (*sub & im.energized_loads[j])) return false;
    }
    return true;
  };

  if (mode == OracleMode::Generic) {
    // Bucket by a hash of the measurement vector, then confirm exact equality.
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    const std::hash<NodeMask> hasher;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t key = hasher(im.energized[i] & volt);
      for (const NodeMask* sub : flow_masks) {
        key = key * 1000003u ^ hasher(*sub & im.energized_loads[i]);
      }
      auto& bucket = buckets[key];
      for (std::size_t j : bucket) {
        if (same_measurements(j, i)) {
          consider(j, i);
          if (!want_witness) break;
        }
      }
      if (worst && !want_witness) break;
      bucket.push_back(i);
    }
  } else {
    std::vector<detail::FlowPair> flows(flow_masks.size());
    for (std::size_t i = 0; i < count && !(worst && !want_witness); ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (worst && im.hypotheses[i].size() + im.hypotheses[j].size() > worst_size) break;
        if (((im.energized[i] ^ im.energized[j]) & volt).any()) continue;
        // Cheap screen: a strictly nested flow set separates the pair for any
        // positive loads; only incomparable differences need the LP.
        bool separated = false;
        bool differs = false;
        for (std::size_t k = 0; k < flow_masks.size(); ++k) {
          flows[k].a = *flow_masks[k] & im.energized_loads[i];
          flows[k].b = *flow_masks[k] & im.energized_loads[j];
          if (flows[k].a == flows[k].b) continue;
          differs = true;
          if ((flows[k].a & ~flows[k].b).none() || (flows[k].b & ~flows[k].a).none()) {
            separated = true;
            break;
          }
        }
        if (separated) continue;
        if (differs && detail::worst_case_core(flows, false, im.engine, false).distinguishable) continue;
        consider(i, j);
        if (!want_witness) break;
      }
    }
  }

  if (!worst) return result;
  result.identifiable = false;
  if (want_witness) {
    const auto [i, j] = *worst;
    Witness w;
    w.first = im.hypotheses[i];
    w.second = im.hypotheses[j];
    w.measured = measured;
    w.first_signature = signature(tree, measured, w.first);
    w.second_signature = signature(tree, measured, w.second);
    if (mode == OracleMode::WorstCase) {
      w.loads = worst_case_verdict(w.first_signature, w.second_signature, tree).coinciding_loads;
    }
    result.witness = std::move(w);
  }
  return result;
}

IdentifiabilityResult is_outage_identifiable(const RadialTree& tree, const Placement& placement,
                                             OracleMode mode, std::optional<std::size_t> max_outages,
                                             std::size_t cap) {
  const IdentifiabilityChecker checker(tree, max_outages, cap);
  return checker.check(measured_sets(tree, placement), mode, true);
}

}  // namespace radial
