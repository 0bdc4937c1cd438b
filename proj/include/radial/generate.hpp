#pragma once

#include "radial/tree.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace radial {

/// Random feeder with nodes 1..n rooted at 1. Each new node attaches to a
/// uniformly chosen earlier node that still has fewer than `max_children`
/// children; floor(z_fraction * (n - 1)) non-root nodes are zero-injection.
/// Deterministic for a given seed.
RadialTree random_radial_tree(std::size_t n, std::uint64_t seed, std::size_t max_children,
                              double z_fraction);

/// Heterogeneous exact costs: numerators 0..max_numerator over denominators 1..max_denominator.
CostModel random_costs(const RadialTree& tree, std::uint64_t seed, int max_numerator = 10,
                       int max_denominator = 4);

/// Same topology with the given zero-injection set.
RadialTree with_zero_injection(const RadialTree& tree, std::span<const NodeId> zero_injection);

/// Every rooted unlabeled tree on n nodes, once each, labelled 1..n in preorder.
std::vector<RadialTree> rooted_tree_shapes(std::size_t n);

}  // namespace radial
