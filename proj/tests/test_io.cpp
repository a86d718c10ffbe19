#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "snarkforge/io.hpp"
#include "snarkforge/solvers.hpp"
#include "test_util.hpp"

using namespace snarkforge;
using nlohmann::json;

namespace {

std::set<std::pair<std::string, std::string>> edge_pairs(const Multigraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& ed : g.edges()) {
    auto a = g.vertex_name(ed.u), b = g.vertex_name(ed.v);
    if (a > b) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

}  // namespace

TEST_CASE("graph JSON round trip preserves names and positional edge ids") {
  Multigraph g = petersen_graph();
  json j = graph_to_json(g);
  Multigraph back = graph_from_json(j);
  CHECK(back.vertex_names() == g.vertex_names());
  CHECK(back.edge_count() == g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    CHECK(back.edges()[i].id == i);
    CHECK(back.edges()[i].u == g.edges()[i].u);
    CHECK(back.edges()[i].v == g.edges()[i].v);
  }
}

TEST_CASE("cover and certificate JSON round trips validate edge ids") {
  Multigraph g = petersen_graph();
  CoverSearchResult r = find_fulkerson_cover(g);
  REQUIRE(r.status == CoverSearchStatus::Found);
  json cj = cover_to_json(r.cover);
  FulkersonCover back = cover_from_json(g, cj);
  CHECK(back.matchings == r.cover.matchings);

  json bad = cj;
  bad["matchings"][0][0] = 99;
  CHECK_THROWS_AS(cover_from_json(g, bad), GraphError);

  Certificate cert{{0, 3}, {1, 7}};
  Certificate cback = certificate_from_json(g, certificate_to_json(cert));
  CHECK(cback.e0 == cert.e0);
  CHECK(cback.e2 == cert.e2);
}

TEST_CASE("graph6 round trip: Petersen decodes back to the same edge set") {
  Multigraph g = petersen_graph();
  std::string line = to_graph6(g);
  Multigraph back = from_graph6_line(line);
  CHECK(back.vertex_count() == 10);
  CHECK(edge_pairs(back) == edge_pairs(g));
  CHECK(testutil::girth(back) == 5);
}

TEST_CASE("graph6 header is tolerated and long sizes round trip") {
  Multigraph g = prism_graph();
  Multigraph back = from_graph6_line(">>graph6<<" + to_graph6(g));
  CHECK(edge_pairs(back) == edge_pairs(g));

  // A 70-cycle forces the long size form.
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < 70; ++i) v.push_back(std::to_string(i));
  for (int i = 0; i < 70; ++i)
    e.emplace_back(std::to_string(i), std::to_string((i + 1) % 70));
  Multigraph cycle = Multigraph::make(v, e);
  Multigraph cback = from_graph6_line(to_graph6(cycle));
  CHECK(cback.vertex_count() == 70);
  CHECK(edge_pairs(cback) == edge_pairs(cycle));
}

TEST_CASE("graph6 export rejects multigraphs") {
  Multigraph g = Multigraph::make({"a", "b", "c", "d"},
                                  {{"a", "b"}, {"a", "b"}, {"c", "d"}});
  CHECK_THROWS_WITH_AS(to_graph6(g), doctest::Contains("simple"), GraphError);
}

TEST_CASE("DOT output carries vertex labels") {
  Multigraph g = k4_graph();
  std::string dot = to_dot(g);
  CHECK(dot.find("graph G {") != std::string::npos);
  CHECK(dot.find("\"0\" [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("family JSON round trip revalidates the contract") {
  std::vector<PortedGraph> bases{builtin_ported("petersen"), builtin_ported("k4"),
                                 builtin_ported("petersen")};
  auto [g, d] = build_family(bases);
  json j = family_to_json(g, d);
  auto [g2, d2] = family_from_json(j);
  CHECK(g2.vertex_count() == g.vertex_count());
  CHECK(d2.k == d.k);
  CHECK(family_to_json(g2, d2) == j);
}

TEST_CASE("bases JSON accepts builtin names with default ports") {
  json j = json::parse(R"({"bases": ["petersen", {"graph": "k4"},
    {"graph": "prism", "xy": ["0","3"], "x0":"1","x1":"2","y0":"4","y1":"5"}]})");
  auto bases = bases_from_json(j);
  REQUIRE(bases.size() == 3);
  CHECK(bases[0].graph.vertex_count() == 10);
  CHECK(bases[1].graph.vertex_count() == 4);
  CHECK(bases[2].ports.x0 == "1");
}

TEST_CASE("certificate reports serialize verdict, certificate and colorings") {
  Multigraph g = prism_graph();
  CertificateReport rep = verify_certificate(g, Certificate{});
  REQUIRE(rep.pass);
  json j = certificate_report_to_json(rep);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("certificate").at("e0").empty());
  CHECK(j.at("coloring0").at("colors").size() == 9);

  rep = verify_certificate(g, Certificate{{0}, {0}});
  json bad = certificate_report_to_json(rep);
  CHECK(bad.at("verdict") == "fail");
  CHECK(bad.at("reason").get<std::string>().find("disjoint") != std::string::npos);
}

TEST_CASE("coloring JSON uses stringified edge-id keys") {
  Multigraph g = k4_graph();
  auto col = three_edge_coloring(g);
  REQUIRE(col.has_value());
  json j = coloring_to_json(*col);
  REQUIRE(j.contains("colors"));
  CHECK(j.at("colors").size() == 6);
  for (const auto& [key, val] : j.at("colors").items()) {
    CHECK(g.has_edge(std::stoi(key)));
    CHECK(val.get<int>() >= 1);
    CHECK(val.get<int>() <= 3);
  }
}

TEST_CASE("digest is stable and input-sensitive") {
  CHECK(digest_hex("abc") == digest_hex("abc"));
  CHECK(digest_hex("abc") != digest_hex("abd"));
  CHECK(digest_hex("").size() == 16);
}
