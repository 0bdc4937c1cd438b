#pragma once

#include "radial/placement.hpp"

#include <string>
#include <vector>

namespace radial {

/// One row of the placement benchmark table.
struct BenchRecord {
  std::string feeder;
  std::size_t nodes = 0;
  std::size_t critical = 0;
  std::size_t node_sensors = 0;
  std::size_t line_sensors = 0;
  Rational cost;
  double seconds = 0.0;
};

struct NamedFeeder {
  std::string name;
  RadialTree tree;
  CostModel costs;
};

/// Runs dp_place `repeats` times (at least 11) and records the median wall time.
BenchRecord bench_feeder(const NamedFeeder& feeder, std::size_t repeats = 11);
std::vector<BenchRecord> bench_suite(const std::vector<NamedFeeder>& feeders, std::size_t repeats = 11);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace radial
