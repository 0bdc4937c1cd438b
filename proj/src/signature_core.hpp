#pragma once

// Shared between the public signature API and the identifiability sweeps.

#include "radial/outage.hpp"

#include <span>

namespace radial::detail {

/// Precomputed subtree and load masks for one feeder.
class SignatureEngine {
 public:
  explicit SignatureEngine(const RadialTree& tree);

  const RadialTree& tree() const noexcept { return *tree_; }
  const NodeMask& subtree(std::size_t index) const { return subtree_[index]; }
  const NodeMask& loads() const noexcept { return loads_; }
  const NodeMask& everything() const noexcept { return all_; }

  NodeMask energized(const OutageHypothesis& h) const;

  /// Flow set of the edge whose child has tree index `child`.
  NodeMask flow(std::size_t child, const NodeMask& energized) const {
    return subtree_[child] & energized & loads_;
  }

 private:
  const RadialTree* tree_;
  std::vector<NodeMask> subtree_;
  NodeMask loads_;
  NodeMask all_;
};

struct FlowPair {
  NodeMask a;
  NodeMask b;
};

/// Worst-case comparison of two measurement vectors given as per-edge flow
/// pairs plus whether any measured voltage flag differs.
WorstCaseVerdict worst_case_core(std::span<const FlowPair> flows, bool voltages_differ,
                                 const SignatureEngine& engine, bool want_loads);

}  // namespace radial::detail
