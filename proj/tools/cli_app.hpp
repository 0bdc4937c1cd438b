#pragma once

#include "radial/identifiability.hpp"
#include "radial/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace radial::cli {

enum class Command { Place, Check, Identifiable, Oracle, Bench, Gen, Export };

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kNotIdentifiable = 3,
  kOracleGap = 4,
  kResourceCap = 5,
};

struct RunConfig {
  Command command = Command::Place;
  std::vector<std::string> inputs;
  std::optional<std::filesystem::path> placement;
  std::optional<Rational> node_cost;
  std::optional<Rational> line_cost;
  OracleMode mode = OracleMode::WorstCase;
  std::optional<std::size_t> max_outages = 3;
  std::size_t cap = kDefaultHypothesisCap;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> dot;
  bool trace = true;
  std::string format = "json";

  // oracle
  std::size_t random_instances = 0;
  std::size_t min_nodes = 5;
  std::size_t max_nodes = 12;
  bool heterogeneous = false;
  bool oracle_feasibility = false;

  // bench
  std::size_t repeats = 11;

  // gen
  std::size_t nodes = 30;
  std::size_t max_children = 3;
  double z_fraction = 0.0;
};

/// Resolves a feeder argument: an existing path, else `<corpus>/<name>.json`
/// where the corpus directory comes from RADIAL_CORPUS_DIR or the build default.
std::filesystem::path resolve_feeder(const std::string& name);

/// Executes one command. Results go to `out` (or the configured output file),
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace radial::cli
