#pragma once

#include "radial/outage.hpp"

#include <memory>
#include <optional>

namespace radial {

enum class OracleMode { Generic, WorstCase };

std::string_view to_string(OracleMode mode);

/// Two hypotheses that produce the same measurements, with the evidence.
struct Witness {
  OutageHypothesis first;
  OutageHypothesis second;
  MeasuredSets measured;
  MeasurementSignature first_signature;
  MeasurementSignature second_signature;
  /// Worst-case mode only: strictly positive loads realising the coincidence.
  std::map<NodeId, Rational> loads;
};

struct IdentifiabilityResult {
  bool identifiable = true;
  std::optional<Witness> witness;
  std::size_t hypotheses = 0;
};

/// Precomputes the hypothesis list and energized sets of one feeder so that
/// many placements can be checked against it.
class IdentifiabilityChecker {
 public:
  IdentifiabilityChecker(const RadialTree& tree, std::optional<std::size_t> max_outages,
                         std::size_t cap = kDefaultHypothesisCap);
  ~IdentifiabilityChecker();
  IdentifiabilityChecker(IdentifiabilityChecker&&) noexcept;
  IdentifiabilityChecker& operator=(IdentifiabilityChecker&&) noexcept;

  std::size_t hypothesis_count() const noexcept;
  const std::vector<OutageHypothesis>& hypotheses() const noexcept;

  /// With `want_witness` the returned witness minimises |H1| + |H2| (then
  /// enumeration order); without it the sweep stops at the first failure.
  IdentifiabilityResult check(const MeasuredSets& measured, OracleMode mode,
                              bool want_witness = true) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Every pair of distinct hypotheses (empty hypothesis included, at most
/// `max_outages` outages each, unbounded when nullopt) is distinguishable.
IdentifiabilityResult is_outage_identifiable(const RadialTree& tree, const Placement& placement,
                                             OracleMode mode,
                                             std::optional<std::size_t> max_outages = 3,
                                             std::size_t cap = kDefaultHypothesisCap);

}  // namespace radial
