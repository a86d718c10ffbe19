#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snarkforge/family.hpp"
#include "snarkforge/io.hpp"
#include "snarkforge/solvers.hpp"
#include "test_util.hpp"

using namespace snarkforge;

namespace {

std::vector<PortedGraph> named(std::initializer_list<const char*> names) {
  std::vector<PortedGraph> out;
  for (const char* n : names) out.push_back(builtin_ported(n));
  return out;
}

int expected_vertices(const std::vector<PortedGraph>& bases) {
  int k = static_cast<int>(bases.size());
  int total = 3 * k + std::max(k - 2, 0);
  for (const auto& b : bases) total += b.graph.vertex_count() - 2;
  return total;
}

}  // namespace

TEST_CASE("builtins match their pinned adjacency lists and default ports") {
  Multigraph p = petersen_graph();
  std::vector<std::pair<std::string, std::string>> petersen_edges{
      {"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"},
      {"0", "5"}, {"1", "6"}, {"2", "7"}, {"3", "8"}, {"4", "9"},
      {"5", "7"}, {"6", "8"}, {"7", "9"}, {"8", "5"}, {"9", "6"}};
  REQUIRE(p.edge_count() == 15);
  for (int i = 0; i < 15; ++i) {
    const Edge& ed = p.edges()[i];
    CHECK(p.vertex_name(ed.u) == petersen_edges[i].first);
    CHECK(p.vertex_name(ed.v) == petersen_edges[i].second);
  }
  PortedGraph pp = builtin_ported("petersen");
  CHECK(pp.ports.x == "0");
  CHECK(pp.ports.y == "1");
  CHECK(pp.ports.x0 == "4");
  CHECK(pp.ports.x1 == "5");
  CHECK(pp.ports.y0 == "2");
  CHECK(pp.ports.y1 == "6");

  PortedGraph pk = builtin_ported("k4");
  CHECK(pk.graph.edge_count() == 6);
  CHECK(pk.ports.x0 == "2");
  CHECK(pk.ports.y1 == "3");
  PortedGraph pr = builtin_ported("prism");
  CHECK(pr.graph.edge_count() == 9);
  CHECK(pr.ports.x == "0");
  CHECK(pr.ports.y == "3");
}

TEST_CASE("base of two K4s: 10 vertices, 15 edges, cubic") {
  auto [g, d] = build_base(builtin_ported("k4"), builtin_ported("k4"));
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
  CHECK(g.is_cubic());
  CHECK(d.k == 2);
}

TEST_CASE("base of two Petersens: 22 vertices, 33 edges, cubic, bridgeless") {
  auto [g, d] = build_base(builtin_ported("petersen"), builtin_ported("petersen"));
  CHECK(g.vertex_count() == 22);
  CHECK(g.edge_count() == 33);
  CHECK(g.is_cubic());
  CHECK(g.is_connected());
  CHECK(g.is_bridgeless());
  CHECK(d.chain.size() == 1);
}

TEST_CASE("invalid ports are rejected") {
  CHECK_THROWS_WITH_AS(PortedGraph::create(petersen_graph(), {"0", "1", "4", "4", "2", "6"}),
                       doctest::Contains("distinct"), GraphError);
  CHECK_THROWS_AS(PortedGraph::create(petersen_graph(), {"0", "2", "4", "5", "1", "3"}),
                  GraphError);  // 0-2 is not an edge
}

TEST_CASE("extend grows an all-Petersen family by 12 vertices per step") {
  auto [g2, d2] = build_base(builtin_ported("petersen"), builtin_ported("petersen"));
  auto [g3, d3] = extend(g2, d2, builtin_ported("petersen"));
  CHECK(g3.vertex_count() == 34);
  CHECK(g3.is_cubic());
  auto [g4, d4] = extend(g3, d3, builtin_ported("petersen"));
  CHECK(g4.vertex_count() == 46);
  auto [g5, d5] = extend(g4, d4, builtin_ported("petersen"));
  CHECK(g5.vertex_count() == 58);
  CHECK(g5.is_cubic());
  CHECK(d5.k == 5);
  CHECK(d5.v.size() == 3);
}

TEST_CASE("extend rejects a non-cubic block") {
  auto [g, d] = build_base(builtin_ported("k4"), builtin_ported("k4"));
  Multigraph square = Multigraph::make(
      {"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}});
  PortRoles roles{"0", "1", "3", "3", "2", "2"};
  CHECK_THROWS_AS(extend(g, d, PortedGraph::create(square, roles)), GraphError);
}

TEST_CASE("build_family k=2 two-K4 gives the 10-vertex graph") {
  auto [g, d] = build_family(named({"k4", "k4"}));
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
  CHECK(g.is_bridgeless());
  (void)d;
}

TEST_CASE("build_family k=3 satisfies the spot-checked adjacency contract") {
  auto [g, d] = build_family(named({"petersen", "petersen", "petersen"}));
  CHECK(g.vertex_count() == 34);
  // a2 ~ x0^0-image (cyclic wrap) and c2 ~ v0.
  const BlockInfo& b0 = d.blocks[0];
  std::string x00 = b0.vertex_image.at(b0.source.ports.x0);
  CHECK(g.edge_between("a2", x00).has_value());
  CHECK(g.edge_between("c2", "v0").has_value());
  CHECK(g.edge_between("c0", "v0").has_value());
  CHECK(g.edge_between("v0", "c1").has_value());
}

TEST_CASE("build_family k=5 mixed bases is cubic and bridgeless") {
  auto [g, d] = build_family(named({"petersen", "k4", "petersen", "k4", "petersen"}));
  CHECK(g.is_cubic());
  CHECK(g.is_connected());
  CHECK(g.is_bridgeless());
  CHECK(g.vertex_count() == expected_vertices(named({"petersen", "k4", "petersen", "k4", "petersen"})));
  CHECK(g.edge_count() * 2 == g.vertex_count() * 3);
  (void)d;
}

TEST_CASE("vertex count formula holds for k = 2..6 all-Petersen (12k-2)") {
  std::vector<PortedGraph> bases;
  for (int k = 2; k <= 6; ++k) {
    bases.clear();
    for (int i = 0; i < k; ++i) bases.push_back(builtin_ported("petersen"));
    auto [g, d] = build_family(bases);
    CHECK(g.vertex_count() == 12 * k - 2);
    CHECK(g.vertex_count() == expected_vertices(bases));
    CHECK(static_cast<int>(d.v.size()) == k - 2);
    CHECK(static_cast<int>(d.chain.size()) == (k == 2 ? 1 : k - 1));
  }
}

TEST_CASE("descriptor contract holds by direct query on every build") {
  for (auto bases : {named({"k4", "k4"}), named({"petersen", "k4", "prism"}),
                     named({"prism", "prism", "k4", "petersen"})}) {
    auto [g, d] = build_family(bases);
    CHECK_NOTHROW(validate_family(g, d));
    CHECK(g.is_cubic());
  }
}

TEST_CASE("map_block_edges maps interiors and rejects boundary edges") {
  auto [g, d] = build_family(named({"k4", "k4"}));
  CHECK(map_block_edges(d, 0, {}).empty());

  // K4 block: the lone interior edge is 2-3 (x=0, y=1 removed).
  const PortedGraph& base = d.blocks[0].source;
  EdgeId interior = *base.graph.edge_between("2", "3");
  EdgeSet image = map_block_edges(d, 0, {interior});
  REQUIRE(image.size() == 1);
  const Edge& ce = g.edge(image[0]);
  CHECK(g.vertex_name(ce.u).substr(0, 3) == "g0:");
  CHECK(g.vertex_name(ce.v).substr(0, 3) == "g0:");

  EdgeId xy = base.xy_edge;
  CHECK_THROWS_WITH_AS(map_block_edges(d, 0, {xy}),
                       doctest::Contains("subtract boundary terms first"), GraphError);
}

TEST_CASE("rebuilding with identical inputs is deterministic") {
  auto bases = named({"petersen", "k4", "petersen"});
  auto [g1, d1] = build_family(bases);
  auto [g2, d2] = build_family(bases);
  CHECK(family_to_json(g1, d1) == family_to_json(g2, d2));
}

TEST_CASE("chain structure for k >= 3: k-2 subdivision vertices with spokes") {
  auto [g, d] = build_family(named({"petersen", "petersen", "petersen", "petersen", "petersen"}));
  int k = 5;
  REQUIRE(static_cast<int>(d.v.size()) == k - 2);
  CHECK(g.edge_between("c0", d.v[k - 3]).has_value());
  for (int i = k - 3; i > 0; --i) CHECK(g.edge_between(d.v[i], d.v[i - 1]).has_value());
  CHECK(g.edge_between(d.v[0], "c1").has_value());
  for (int i = 2; i <= k - 1; ++i)
    CHECK(g.edge_between(d.c[i], d.v[i - 2]).has_value());
}
