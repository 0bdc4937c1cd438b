#include "radial/feeder_io.hpp"

#include <fstream>
#include <sstream>

namespace radial {

using nlohmann::json;

namespace {

NodeId node_id_from_json(const json& value, std::string_view what) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > static_cast<long long>(UINT32_MAX)) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a nonnegative integer id");
  }
  return static_cast<NodeId>(value.get<long long>());
}

Edge edge_from_json(const json& value) {
  if (!value.is_array() || value.size() != 2) {
    throw Error(ErrorCode::ParseError, "edge must be a two-element array [from, to]");
  }
  return {node_id_from_json(value[0], "edge endpoint"), node_id_from_json(value[1], "edge endpoint")};
}

Feeder parse_document(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "feeder document must be a JSON object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw Error(ErrorCode::ParseError, "feeder document needs a \"nodes\" array");
  }
  const json edges_doc = doc.value("edges", json::array());
  if (!edges_doc.is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");

  const NodeId root = doc.contains("root") ? node_id_from_json(doc["root"], "root") : NodeId{1};
  std::string name = doc.value("name", std::string{});

  std::vector<NodeSpec> nodes;
  CostModel costs;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_object() || !n.contains("id")) throw Error(ErrorCode::ParseError, "node entry needs an \"id\"");
    NodeSpec spec;
    spec.id = node_id_from_json(n["id"], "node id");
    if (n.contains("zero_injection")) {
      if (!n["zero_injection"].is_boolean()) {
        throw Error(ErrorCode::ParseError, "zero_injection must be a boolean");
      }
      spec.zero_injection = n["zero_injection"].get<bool>();
    }
    if (n.contains("node_cost")) costs.node_cost[spec.id] = cost_from_json(n["node_cost"]);
    nodes.push_back(spec);
  }

  std::vector<Edge> edges;
  std::vector<std::pair<Edge, Rational>> edge_costs;
  for (const auto& e : edges_doc) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to")) {
      throw Error(ErrorCode::ParseError, "edge entry needs \"from\" and \"to\"");
    }
    Edge edge{node_id_from_json(e["from"], "from"), node_id_from_json(e["to"], "to")};
    edges.push_back(edge);
    if (e.contains("line_cost")) edge_costs.emplace_back(edge, cost_from_json(e["line_cost"]));
  }

  RadialTree tree(root, std::move(nodes), std::move(edges));
  for (auto& [edge, cost] : edge_costs) {
    const Edge oriented = tree.has_edge(edge) ? edge : Edge{edge.to, edge.from};
    costs.line_cost[oriented] = std::move(cost);
  }
  require_valid(tree, costs);
  return Feeder{std::move(name), std::move(tree), std::move(costs)};
}

}  // namespace

json cost_to_json(const Rational& value) {
  if (is_terminating_decimal(value)) {
    const double d = to_double(value);
    if (rational_from_double(d) == value) {
      if (denominator(value) == 1 && abs(value) < Rational(1LL << 53)) {
        return json(static_cast<long long>(d));
      }
      return json(d);
    }
  }
  return json(format_rational(value));
}

Rational cost_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw Error(ErrorCode::ParseError, "cost must be a number or a string such as \"3/10\"");
}

Feeder parse_feeder(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed feeder document: ") + e.what());
  }
  try {
    return parse_document(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed feeder document: ") + e.what());
  }
}

Feeder read_feeder_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open feeder file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Feeder f = parse_feeder(buf.str());
  if (f.name.empty()) f.name = path.stem().string();
  return f;
}

std::string serialize_feeder(const RadialTree& tree, const CostModel& costs, std::string_view name) {
  json doc = json::object();
  if (!name.empty()) doc["name"] = std::string(name);
  doc["root"] = tree.root();
  json nodes = json::array();
  for (NodeId id : tree.nodes()) {
    json n = {{"id", id}, {"zero_injection", tree.is_zero_injection(id)}};
    if (auto it = costs.node_cost.find(id); it != costs.node_cost.end()) n["node_cost"] = cost_to_json(it->second);
    nodes.push_back(std::move(n));
  }
  json edges = json::array();
  for (const Edge& e : tree.edges()) {
    json j = {{"from", e.from}, {"to", e.to}};
    if (auto it = costs.line_cost.find(e); it != costs.line_cost.end()) j["line_cost"] = cost_to_json(it->second);
    edges.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string serialize_feeder(const Feeder& feeder) {
  return serialize_feeder(feeder.tree, feeder.costs, feeder.name);
}

json placement_to_json(const Placement& placement) {
  json lines = json::array();
  for (const Edge& e : placement.line_sensors) lines.push_back({e.from, e.to});
  return {{"node_sensors", placement.node_sensors}, {"line_sensors", std::move(lines)}};
}

Placement placement_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "placement must be a JSON object");
    const json& src = doc.contains("placement") ? doc["placement"] : doc;
    Placement p;
    for (const auto& v : src.value("node_sensors", json::array())) {
      p.node_sensors.insert(node_id_from_json(v, "node sensor"));
    }
    for (const auto& v : src.value("line_sensors", json::array())) p.line_sensors.insert(edge_from_json(v));
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed placement: ") + e.what());
  }
}

Placement parse_placement(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed placement: ") + e.what());
  }
  return placement_from_json(doc);
}

json trace_to_json(const DpTrace& trace) {
  json out = json::array();
  for (const auto& it : trace.iterations) {
    json steps = json::array();
    for (const auto& s : it.steps) {
      steps.push_back({{"node", s.node},
                       {"branch", std::string(to_string(s.branch))},
                       {"added", placement_to_json(s.added)}});
    }
    out.push_back({{"k", it.k}, {"depth", it.depth}, {"queue", it.queue}, {"steps", std::move(steps)}});
  }
  return out;
}

json constraint_report_to_json(const ConstraintReport& report) {
  return {{"feasible", report.feasible()},
          {"root_ok", report.root_ok},
          {"branch_violations", report.branch_violations},
          {"zero_injection_violations", report.zero_injection_violations}};
}

json validation_report_to_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& issue : report) {
    out.push_back({{"code", std::string(to_string(issue.code))}, {"message", issue.message}});
  }
  return out;
}

json measured_sets_to_json(const MeasuredSets& measured) {
  json flows = json::array();
  for (const Edge& e : measured.flow_edges) flows.push_back({e.from, e.to});
  return {{"flow_edges", std::move(flows)}, {"voltage_nodes", measured.voltage_nodes}};
}

json hypothesis_to_json(const OutageHypothesis& h) {
  json out = json::array();
  for (const Edge& e : h.outaged_edges) out.push_back({e.from, e.to});
  return out;
}

json witness_to_json(const RadialTree& tree, const Witness& witness, OracleMode mode) {
  json flows = json::array();
  const auto& a = witness.first_signature;
  const auto& b = witness.second_signature;
  for (std::size_t i = 0; i < a.flow_edges.size(); ++i) {
    const Edge& e = a.flow_edges[i];
    flows.push_back({{"edge", {e.from, e.to}},
                     {"first", nodes_of(tree, a.flow[i])},
                     {"second", nodes_of(tree, b.flow[i])},
                     {"equal", a.flow[i] == b.flow[i]}});
  }
  json volts = json::array();
  for (std::size_t i = 0; i < a.voltage_nodes.size(); ++i) {
    volts.push_back({{"node", a.voltage_nodes[i]},
                     {"first_energized", static_cast<bool>(a.energized[i])},
                     {"second_energized", static_cast<bool>(b.energized[i])}});
  }
  json out = {{"mode", std::string(to_string(mode))},
              {"first", hypothesis_to_json(witness.first)},
              {"second", hypothesis_to_json(witness.second)},
              {"measured", measured_sets_to_json(witness.measured)},
              {"flows", std::move(flows)},
              {"voltages", std::move(volts)}};
  if (mode == OracleMode::WorstCase) {
    json loads = json::object();
    for (const auto& [node, value] : witness.loads) loads[std::to_string(node)] = format_rational(value);
    out["loads"] = std::move(loads);
  }
  return out;
}

std::string export_dot(const RadialTree& tree, const Placement& placement) {
  require_in_tree(tree, placement);
  std::ostringstream out;
  out << "digraph feeder {\n";
  for (NodeId id : tree.nodes()) {
    out << "  " << id;
    if (placement.node_sensors.contains(id)) out << " [style=filled, fillcolor=red]";
    out << ";\n";
  }
  for (const Edge& e : tree.edges()) {
    out << "  " << e.from << " -> " << e.to;
    if (placement.line_sensors.contains(e)) out << " [color=green, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace radial
