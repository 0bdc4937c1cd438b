#include "cli_app.hpp"

#include "radial/bench.hpp"
#include "radial/exhaustive.hpp"
#include "radial/feeder_io.hpp"
#include "radial/generate.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#ifndef RADIAL_DEFAULT_CORPUS_DIR
#define RADIAL_DEFAULT_CORPUS_DIR "data"
#endif

namespace radial::cli {

using nlohmann::json;

namespace {

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("RADIAL_CORPUS_DIR"); env && *env) return env;
  return RADIAL_DEFAULT_CORPUS_DIR;
}

Feeder load_feeder(const std::string& name, const RunConfig& config) {
  Feeder f = read_feeder_file(resolve_feeder(name));
  if (config.node_cost) {
    for (NodeId id : f.tree.nodes()) f.costs.node_cost[id] = *config.node_cost;
  }
  if (config.line_cost) {
    for (const Edge& e : f.tree.edges()) f.costs.line_cost[e] = *config.line_cost;
  }
  require_valid(f.tree, f.costs);
  return f;
}

Placement load_placement(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open placement file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_placement(buf.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write " + path.string());
  out << text;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output) {
    write_text(*config.output, text);
  } else {
    out << text;
  }
}

void require_single_input(const RunConfig& config) {
  if (config.inputs.size() != 1) {
    throw Error(ErrorCode::InvalidParameter, "this command takes exactly one feeder");
  }
}

Placement placement_or_dp(const RunConfig& config, const Feeder& f) {
  if (config.placement) return load_placement(*config.placement);
  return dp_place(f.tree, f.costs).placement;
}

int cmd_place(const RunConfig& config, std::ostream& out) {
  require_single_input(config);
  const Feeder f = load_feeder(config.inputs.front(), config);
  const DpResult result = dp_place(f.tree, f.costs);
  json doc = {{"feeder", f.name},
              {"placement", placement_to_json(result.placement)},
              {"cost", format_rational(placement_cost(result.placement, f.costs))}};
  if (config.trace) doc["trace"] = trace_to_json(result.trace);
  emit(config, out, doc.dump(2) + "\n");
  if (config.dot) write_text(*config.dot, export_dot(f.tree, result.placement));
  return kOk;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  require_single_input(config);
  if (!config.placement) throw Error(ErrorCode::InvalidParameter, "check needs --placement");
  const Feeder f = load_feeder(config.inputs.front(), config);
  const Placement p = load_placement(*config.placement);
  const ConstraintReport report = check_constraints(f.tree, p);
  json doc = constraint_report_to_json(report);
  doc["cost"] = format_rational(placement_cost(p, f.costs));
  emit(config, out, doc.dump(2) + "\n");
  return report.feasible() ? kOk : kInfeasible;
}

int cmd_identifiable(const RunConfig& config, std::ostream& out) {
  require_single_input(config);
  const Feeder f = load_feeder(config.inputs.front(), config);
  const Placement p = placement_or_dp(config, f);
  require_in_tree(f.tree, p);
  const auto result = is_outage_identifiable(f.tree, p, config.mode, config.max_outages, config.cap);
  json doc = {{"identifiable", result.identifiable},
              {"mode", std::string(to_string(config.mode))},
              {"max_outages", config.max_outages ? json(*config.max_outages) : json("unlimited")},
              {"hypotheses", result.hypotheses},
              {"placement", placement_to_json(p)}};
  if (result.witness) doc["witness"] = witness_to_json(f.tree, *result.witness, config.mode);
  emit(config, out, doc.dump(2) + "\n");
  return result.identifiable ? kOk : kNotIdentifiable;
}

json oracle_row(const std::string& name, const RadialTree& tree, const CostModel& costs,
                const RunConfig& config, bool& gap) {
  const DpResult dp = dp_place(tree, costs);
  const Rational dp_cost = placement_cost(dp.placement, costs);
  ExhaustiveOptions opts;
  opts.max_nodes = std::max<std::size_t>(config.max_nodes, tree.size());
  opts.max_outages = config.max_outages;
  const auto brute = exhaustive_min_cost(
      tree, costs, config.oracle_feasibility ? Feasibility::OracleWorstCase : Feasibility::Constraints, opts);
  const Rational diff = dp_cost - brute.cost;
  json row = {{"instance", name},
              {"n", tree.size()},
              {"dp_cost", format_rational(dp_cost)},
              {"brute_force_cost", format_rational(brute.cost)},
              {"gap", format_rational(diff)}};
  if (diff != 0) {
    gap = true;
    row["witness"] = {{"feeder", json::parse(serialize_feeder(tree, costs, name))},
                      {"dp_placement", placement_to_json(dp.placement)},
                      {"brute_force_placement", placement_to_json(brute.placement)}};
  }
  return row;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  if (config.inputs.empty() && config.random_instances == 0) {
    throw Error(ErrorCode::InvalidParameter, "oracle needs feeders or --random N");
  }
  if (config.min_nodes < 1 || config.min_nodes > config.max_nodes) {
    throw Error(ErrorCode::InvalidParameter, "need 1 <= --min-nodes <= --max-nodes");
  }
  bool gap = false;
  json rows = json::array();
  for (const auto& name : config.inputs) {
    const Feeder f = load_feeder(name, config);
    if (f.tree.size() > config.max_nodes) {
      throw Error(ErrorCode::InstanceTooLarge, f.name + " exceeds --max-nodes");
    }
    rows.push_back(oracle_row(f.name, f.tree, f.costs, config, gap));
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick_n(config.min_nodes, config.max_nodes);
  std::uniform_int_distribution<std::size_t> pick_children(2, 4);
  for (std::size_t i = 0; i < config.random_instances; ++i) {
    const std::size_t n = pick_n(rng);
    const double z = (rng() & 1) ? 0.2 : 0.0;
    const std::size_t children = pick_children(rng);
    const std::uint64_t tree_seed = rng();
    const RadialTree tree = random_radial_tree(n, tree_seed, children, z);
    CostModel costs = config.heterogeneous ? random_costs(tree, tree_seed)
                                           : uniform_costs(tree, config.node_cost.value_or(2),
                                                           config.line_cost.value_or(1));
    rows.push_back(oracle_row("random-" + std::to_string(i), tree, costs, config, gap));
  }
  json doc = {{"instances", rows.size()}, {"gap_free", !gap}, {"results", std::move(rows)}};
  emit(config, out, doc.dump(2) + "\n");
  return gap ? kOracleGap : kOk;
}

std::vector<std::string> bench_inputs(const RunConfig& config) {
  if (!config.inputs.empty()) return config.inputs;
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

int cmd_bench(const RunConfig& config, std::ostream& out) {
  std::vector<NamedFeeder> feeders;
  for (const auto& name : bench_inputs(config)) {
    Feeder f = load_feeder(name, config);
    feeders.push_back({f.name, std::move(f.tree), std::move(f.costs)});
  }
  const auto records = bench_suite(feeders, config.repeats);
  std::ostringstream text;
  if (config.format == "table") {
    text << std::left << std::setw(16) << "feeder" << std::right << std::setw(7) << "N" << std::setw(8)
         << "V_eval" << std::setw(6) << "V_P" << std::setw(6) << "E_P" << std::setw(10) << "cost"
         << std::setw(14) << "seconds" << "\n";
    for (const auto& r : records) {
      text << std::left << std::setw(16) << r.feeder << std::right << std::setw(7) << r.nodes
           << std::setw(8) << r.critical << std::setw(6) << r.node_sensors << std::setw(6) << r.line_sensors
           << std::setw(10) << format_rational(r.cost) << std::setw(14) << std::scientific
           << std::setprecision(3) << r.seconds << std::defaultfloat << "\n";
    }
  } else {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"feeder", r.feeder},
                      {"n", r.nodes},
                      {"v_eval", r.critical},
                      {"v_p", r.node_sensors},
                      {"e_p", r.line_sensors},
                      {"cost", format_rational(r.cost)},
                      {"seconds", r.seconds}});
    }
    text << rows.dump(2) << "\n";
  }
  emit(config, out, text.str());
  return kOk;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
  const RadialTree tree = random_radial_tree(config.nodes, config.seed, config.max_children, config.z_fraction);
  const CostModel costs = config.heterogeneous
                              ? random_costs(tree, config.seed)
                              : uniform_costs(tree, config.node_cost.value_or(2), config.line_cost.value_or(1));
  emit(config, out, serialize_feeder(tree, costs, "random-" + std::to_string(config.seed)));
  return kOk;
}

int cmd_export(const RunConfig& config, std::ostream& out) {
  require_single_input(config);
  const Feeder f = load_feeder(config.inputs.front(), config);
  const std::string dot = export_dot(f.tree, placement_or_dp(config, f));
  emit(config, out, dot);
  if (config.dot) write_text(*config.dot, dot);
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CombinatorialLimit:
    case ErrorCode::InstanceTooLarge:
      return kResourceCap;
    default:
      return kUsage;
  }
}

}  // namespace

std::filesystem::path resolve_feeder(const std::string& name) {
  std::filesystem::path p(name);
  if (std::filesystem::exists(p)) return p;
  auto in_corpus = corpus_dir() / p;
  if (!in_corpus.has_extension()) in_corpus += ".json";
  if (std::filesystem::exists(in_corpus)) return in_corpus;
  throw Error(ErrorCode::ParseError, "feeder not found: " + name);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Place: return cmd_place(config, out);
      case Command::Check: return cmd_check(config, out);
      case Command::Identifiable: return cmd_identifiable(config, out);
      case Command::Oracle: return cmd_oracle(config, out);
      case Command::Bench: return cmd_bench(config, out);
      case Command::Gen: return cmd_gen(config, out);
      case Command::Export: return cmd_export(config, out);
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace radial::cli
