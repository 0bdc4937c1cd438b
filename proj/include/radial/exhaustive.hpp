#pragma once

#include "radial/identifiability.hpp"
#include "radial/placement.hpp"

#include <optional>

namespace radial {

enum class Feasibility { Constraints, OracleWorstCase };

struct ExhaustiveOptions {
  std::size_t max_nodes = 12;
  /// Hypothesis bound for the OracleWorstCase predicate.
  std::optional<std::size_t> max_outages;
};

struct ExhaustiveResult {
  Placement placement;
  Rational cost;
};

/// Minimum-cost feasible placement by exhaustive search over every node and
/// line sensor combination, with branch-and-bound on cost. Ties go to fewer
/// sensors, then to the lexicographically smaller (node ids, edges) pair.
ExhaustiveResult exhaustive_min_cost(const RadialTree& tree, const CostModel& costs,
                                     Feasibility feasibility, const ExhaustiveOptions& options = {});

}  // namespace radial
