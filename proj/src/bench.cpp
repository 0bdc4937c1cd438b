#include "radial/bench.hpp"

#include <algorithm>
#include <chrono>

namespace radial {

BenchRecord bench_feeder(const NamedFeeder& feeder, std::size_t repeats) {
  repeats = std::max<std::size_t>(repeats, 11);
  std::vector<double> times;
  DpResult result;
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    result = dp_place(feeder.tree, feeder.costs);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::nth_element(times.begin(), times.begin() + static_cast<long>(times.size() / 2), times.end());

  BenchRecord rec;
  rec.feeder = feeder.name;
  rec.nodes = feeder.tree.size();
  rec.critical = critical_set(feeder.tree).size();
  rec.node_sensors = result.placement.node_sensors.size();
  rec.line_sensors = result.placement.line_sensors.size();
  rec.cost = placement_cost(result.placement, feeder.costs);
  rec.seconds = times[times.size() / 2];
  return rec;
}

std::vector<BenchRecord> bench_suite(const std::vector<NamedFeeder>& feeders, std::size_t repeats) {
  std::vector<BenchRecord> out;
  for (const auto& f : feeders) out.push_back(bench_feeder(f, repeats));
  return out;
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::InvalidParameter, "linear fit needs two or more paired samples");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = (sxx > 0 && syy > 0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

}  // namespace radial
