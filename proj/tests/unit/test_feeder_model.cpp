#include "oracles.hpp"

#include "radial/feeder_io.hpp"
#include "radial/generate.hpp"

#include <doctest.h>

using namespace radial;

namespace {

std::string example_doc(const std::string& extra_edges = "", bool root_zero = false) {
  std::string nodes;
  for (int i = 1; i <= 9; ++i) {
    nodes += (i > 1 ? "," : "") + std::string("{\"id\":") + std::to_string(i) +
             ",\"node_cost\":2" + (i == 1 && root_zero ? ",\"zero_injection\":true" : "") + "}";
  }
  return R"({"root":1,"nodes":[)" + nodes + R"(],"edges":[
    {"from":1,"to":2,"line_cost":1},{"from":1,"to":3,"line_cost":1},{"from":2,"to":4,"line_cost":1},
    {"from":3,"to":5,"line_cost":1},{"from":3,"to":6,"line_cost":0.3},{"from":3,"to":7,"line_cost":"3/10"},
    {"from":5,"to":8,"line_cost":1},{"from":9,"to":6,"line_cost":1})" + extra_edges + "]}";
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational("7/3") == Rational(7, 3));
  CHECK(parse_rational("-1.25e-2") == Rational(-1, 80));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("0.75") == Rational(3, 4));
  CHECK(parse_rational("010/8") == Rational(5, 4));
  CHECK(parse_rational("007") == 7);
  CHECK(rational_from_double(0.3) == Rational(3, 10));
  CHECK(format_rational(Rational(13, 5)) == "2.6");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("abc"); }) == ErrorCode::ParseError);
}

TEST_CASE("parse_feeder builds the nine-node example") {
  const Feeder f = parse_feeder(example_doc());
  const RadialTree& t = f.tree;
  CHECK(t.size() == 9);
  CHECK(t.degree(3) == 4);
  CHECK(std::vector<NodeId>(t.children(3).begin(), t.children(3).end()) == std::vector<NodeId>{5, 6, 7});
  CHECK(t.parent(3) == NodeId{1});
  CHECK(t.has_edge({6, 9}));
  CHECK_FALSE(t.has_edge({9, 6}));
  CHECK(f.costs.line({6, 9}) == 1);
  CHECK(f.costs.line({3, 6}) == Rational(3, 10));
  CHECK(f.costs.line({3, 7}) == Rational(3, 10));
  CHECK(t.max_depth() == 3);
  CHECK(t.degree(1) == 3);
}

TEST_CASE("parse_feeder accepts a lone root") {
  const Feeder f = parse_feeder(R"({"nodes":[{"id":1,"node_cost":2}],"edges":[]})");
  CHECK(f.tree.size() == 1);
  CHECK(f.tree.edges().empty());
  CHECK(f.tree.degree(1) == 1);
}

TEST_CASE("parse_feeder rejects malformed feeders") {
  CHECK(code_of([] { parse_feeder(example_doc(R"(,{"from":4,"to":5,"line_cost":1})")); }) == ErrorCode::NotATree);
  CHECK(code_of([] { parse_feeder(example_doc("", true)); }) == ErrorCode::RootHasZeroInjection);
  CHECK(code_of([] { parse_feeder(example_doc(R"(,{"from":4,"to":10,"line_cost":1})")); }) ==
        ErrorCode::DanglingEdge);
  CHECK(code_of([] {
          parse_feeder(R"({"nodes":[{"id":1,"node_cost":2},{"id":1,"node_cost":2}],"edges":[]})");
        }) == ErrorCode::DuplicateId);
  CHECK(code_of([] {
          parse_feeder(R"({"nodes":[{"id":1,"node_cost":2},{"id":2,"node_cost":-1}],
                           "edges":[{"from":1,"to":2,"line_cost":1}]})");
        }) == ErrorCode::NegativeCost);
  CHECK(code_of([] {
          parse_feeder(R"({"nodes":[{"id":1,"node_cost":2},{"id":2,"node_cost":1},{"id":3,"node_cost":1}],
                           "edges":[{"from":1,"to":2,"line_cost":1}]})");
        }) == ErrorCode::NotATree);
  CHECK(code_of([] { parse_feeder("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_feeder(R"({"nodes":[{"id":"x"}]})"); }) == ErrorCode::ParseError);
}

TEST_CASE("validate reports every issue") {
  const Feeder f = oracle::nine_bus();
  CHECK(validate(f.tree, f.costs).empty());

  CostModel missing = f.costs;
  missing.line_cost.erase({3, 6});
  const auto report = validate(f.tree, missing);
  REQUIRE(report.size() == 1);
  CHECK(report[0].code == ErrorCode::MissingCost);

  const std::vector<NodeId> z = {1};
  const RadialTree rooted_zero = with_zero_injection(f.tree, z);
  bool found = false;
  for (const auto& issue : validate(rooted_zero, f.costs)) found = found || issue.code == ErrorCode::RootHasZeroInjection;
  CHECK(found);
}

TEST_CASE("feeder serialization round-trips") {
  const Feeder f = oracle::nine_bus();
  const Feeder back = parse_feeder(serialize_feeder(f));
  CHECK(back.tree == f.tree);
  CHECK(back.costs == f.costs);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const RadialTree t = random_radial_tree(1 + seed % 17, seed, 1 + seed % 4, 0.3);
    const CostModel c = random_costs(t, seed, 10, 7);
    const Feeder r = parse_feeder(serialize_feeder(t, c));
    CHECK(r.tree == t);
    CHECK(r.costs == c);
  }
}

TEST_CASE("tree structure invariants") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RadialTree t = random_radial_tree(1 + seed * 3 % 40, seed, 1 + seed % 5, 0.25);
    std::size_t children = 0;
    for (NodeId v : t.nodes()) {
      children += t.children(v).size();
      if (v != t.root()) CHECK(t.depth(v) == t.depth(*t.parent(v)) + 1);
    }
    CHECK(children == t.size() - 1);
    CHECK(t.depth(t.root()) == 0);
  }
}

TEST_CASE("random_radial_tree") {
  const RadialTree one = random_radial_tree(1, 5, 3, 0.0);
  CHECK(one.size() == 1);
  CHECK(random_radial_tree(9, 7, 3, 0.0).zero_injection().empty());
  CHECK(random_radial_tree(12, 42, 3, 0.3) == random_radial_tree(12, 42, 3, 0.3));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const double z = (seed % 5) * 0.2;
    const RadialTree t = random_radial_tree(n, seed, 1 + seed % 4, z);
    CHECK(t.size() == n);
    CHECK(t.zero_injection().size() == static_cast<std::size_t>(z * static_cast<double>(n - 1)));
    CHECK(validate(t, uniform_costs(t, 2, 1)).empty());
    for (NodeId v : t.nodes()) CHECK(t.children(v).size() <= 1 + seed % 4);
  }
  CHECK(code_of([] { random_radial_tree(0, 1, 3, 0.0); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { random_radial_tree(5, 1, 3, 1.0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("rooted_tree_shapes counts unlabeled rooted trees") {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto shapes = rooted_tree_shapes(n);
    CHECK(shapes.size() == expected[n - 1]);
    for (const auto& s : shapes) CHECK(s.size() == n);
  }
}

TEST_CASE("export_dot colours sensors") {
  const Feeder f = oracle::nine_bus();
  const std::string dot = export_dot(f.tree, oracle::example_placement());
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("1 [style=filled, fillcolor=red]") != std::string::npos);
  CHECK(dot.find("3 -> 6 [color=green") != std::string::npos);
  CHECK(dot.find("3 -> 7 [color=green") != std::string::npos);
  std::size_t greens = 0;
  for (std::size_t pos = 0; (pos = dot.find("color=green", pos)) != std::string::npos; ++pos) ++greens;
  CHECK(greens == 2);

  const std::string plain = export_dot(f.tree, Placement{});
  CHECK(plain.find("red") == std::string::npos);
  CHECK(plain.find("green") == std::string::npos);

  Placement wrong;
  wrong.line_sensors = {{9, 6}};
  CHECK(code_of([&] { export_dot(f.tree, wrong); }) == ErrorCode::UnknownEdge);
  Placement ghost;
  ghost.node_sensors = {42};
  CHECK(code_of([&] { export_dot(f.tree, ghost); }) == ErrorCode::UnknownNode);
}

TEST_CASE("placement documents round-trip") {
  const Placement p = oracle::example_placement();
  CHECK(placement_from_json(placement_to_json(p)) == p);
  CHECK(parse_placement(R"({"node_sensors":[1],"line_sensors":[[3,6],[3,7]]})") == p);
  CHECK(code_of([] { parse_placement(R"({"line_sensors":[[3]]})"); }) == ErrorCode::ParseError);
}
