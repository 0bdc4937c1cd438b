#include "cli_app.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using radial::cli::Command;
using radial::cli::RunConfig;

struct Raw {
  std::string a, b, mode = "worst_case";
  std::size_t max_outages = 3;
  bool unlimited = false;
  bool no_trace = false;
  std::string output, dot, placement;
};

void add_costs(CLI::App* sub, Raw& raw) {
  sub->add_option("--a", raw.a, "Uniform node-sensor cost override (decimal or p/q)");
  sub->add_option("--b", raw.b, "Uniform line-sensor cost override (decimal or p/q)");
}

void add_output(CLI::App* sub, Raw& raw) {
  sub->add_option("-o,--output", raw.output, "Write the result to this file instead of stdout");
}

void add_oracle_bounds(CLI::App* sub, Raw& raw, RunConfig& cfg) {
  sub->add_option("--max-outages", raw.max_outages, "Largest hypothesis size considered")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--unlimited", raw.unlimited, "Consider hypotheses of every size");
  sub->add_option("--cap", cfg.cap, "Largest hypothesis count before giving up")->check(CLI::PositiveNumber);
}

radial::Rational parse_cost(const std::string& text) {
  radial::Rational r = radial::parse_rational(text);
  if (r < 0) throw radial::Error(radial::ErrorCode::NegativeCost, "cost override must be nonnegative");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sensor placement for outage identifiability on radial feeders"};
  app.require_subcommand(1);
  RunConfig cfg;
  Raw raw;

  auto* place = app.add_subcommand("place", "Compute the dynamic-programming placement");
  place->add_option("feeder", cfg.inputs, "Feeder file or corpus name")->required();
  add_costs(place, raw);
  add_output(place, raw);
  place->add_option("--dot", raw.dot, "Also write a DOT figure of the placement");
  place->add_flag("--no-trace", raw.no_trace, "Omit the iteration trace");

  auto* check = app.add_subcommand("check", "Check a placement against the identifiability constraints");
  check->add_option("feeder", cfg.inputs, "Feeder file or corpus name")->required();
  check->add_option("-p,--placement", raw.placement, "Placement file")->required();
  add_output(check, raw);

  auto* ident = app.add_subcommand("identifiable", "Decide outage identifiability by pairwise comparison");
  ident->add_option("feeder", cfg.inputs, "Feeder file or corpus name")->required();
  ident->add_option("-p,--placement", raw.placement, "Placement file (default: the DP placement)");
  ident->add_option("--mode", raw.mode, "Load model")->check(CLI::IsMember({"generic", "worst_case"}));
  add_oracle_bounds(ident, raw, cfg);
  add_costs(ident, raw);
  add_output(ident, raw);

  auto* oracle = app.add_subcommand("oracle", "Compare the DP cost against exhaustive search");
  oracle->add_option("feeder", cfg.inputs, "Feeder files or corpus names");
  oracle->add_option("--random", cfg.random_instances, "Number of seeded random instances");
  oracle->add_option("--seed", cfg.seed, "Seed for the random instances");
  oracle->add_option("--min-nodes", cfg.min_nodes, "Smallest random instance")->check(CLI::PositiveNumber);
  oracle->add_option("--max-nodes", cfg.max_nodes, "Largest instance")->check(CLI::PositiveNumber);
  oracle->add_flag("--heterogeneous", cfg.heterogeneous, "Random rational costs for random instances");
  oracle->add_flag("--identifiability", cfg.oracle_feasibility,
                   "Brute force over worst-case identifiable placements instead of the constraints");
  add_oracle_bounds(oracle, raw, cfg);
  add_costs(oracle, raw);
  add_output(oracle, raw);

  auto* bench = app.add_subcommand("bench", "Time the DP on feeders (default: the bundled corpus)");
  bench->add_option("feeder", cfg.inputs, "Feeder files or corpus names");
  bench->add_option("--repeats", cfg.repeats, "Timed runs per feeder (at least 11)");
  bench->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  add_costs(bench, raw);
  add_output(bench, raw);

  auto* gen = app.add_subcommand("gen", "Write a random feeder document");
  gen->add_option("-n,--nodes", cfg.nodes, "Number of nodes")->check(CLI::PositiveNumber);
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("--max-children", cfg.max_children, "Largest child count")->check(CLI::PositiveNumber);
  gen->add_option("--z-fraction", cfg.z_fraction, "Share of non-root zero-injection nodes")
      ->check(CLI::Range(0.0, 0.999999));
  gen->add_flag("--heterogeneous", cfg.heterogeneous, "Random rational costs");
  add_costs(gen, raw);
  add_output(gen, raw);

  auto* exp = app.add_subcommand("export", "Write a DOT figure of a placement");
  exp->add_option("feeder", cfg.inputs, "Feeder file or corpus name")->required();
  exp->add_option("-p,--placement", raw.placement, "Placement file (default: the DP placement)");
  add_costs(exp, raw);
  add_output(exp, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : radial::cli::kUsage;
  }

  try {
    if (!raw.a.empty()) cfg.node_cost = parse_cost(raw.a);
    if (!raw.b.empty()) cfg.line_cost = parse_cost(raw.b);
  } catch (const radial::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return radial::cli::kUsage;
  }
  cfg.mode = raw.mode == "generic" ? radial::OracleMode::Generic : radial::OracleMode::WorstCase;
  cfg.max_outages = raw.unlimited ? std::nullopt : std::optional<std::size_t>(raw.max_outages);
  cfg.trace = !raw.no_trace;
  if (!raw.output.empty()) cfg.output = raw.output;
  if (!raw.dot.empty()) cfg.dot = raw.dot;
  if (!raw.placement.empty()) cfg.placement = raw.placement;

  if (place->parsed()) cfg.command = Command::Place;
  else if (check->parsed()) cfg.command = Command::Check;
  else if (ident->parsed()) cfg.command = Command::Identifiable;
  else if (oracle->parsed()) cfg.command = Command::Oracle;
  else if (bench->parsed()) cfg.command = Command::Bench;
  else if (gen->parsed()) cfg.command = Command::Gen;
  else cfg.command = Command::Export;

  return radial::cli::run(cfg, std::cout, std::cerr);
}
