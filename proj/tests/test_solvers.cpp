#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "snarkforge/family.hpp"
#include "snarkforge/fulkerson.hpp"
#include "snarkforge/solvers.hpp"
#include "test_util.hpp"

using namespace snarkforge;

TEST_CASE("K4 coloring classes are its three perfect matchings") {
  Multigraph g = k4_graph();
  auto col = three_edge_coloring(g);
  REQUIRE(col.has_value());
  CHECK(is_proper_coloring(g, *col));
  auto pms = enumerate_perfect_matchings(g);
  std::set<EdgeSet> pm_set(pms.begin(), pms.end());
  for (int c = 1; c <= 3; ++c) {
    EdgeSet cls;
    for (const auto& [e, color] : *col)
      if (color == c) cls.push_back(e);
    CHECK(pm_set.count(edgeset::normalized(cls)) == 1);
  }
}

TEST_CASE("Petersen admits no proper 3-edge-coloring") {
  CHECK_FALSE(three_edge_coloring(petersen_graph()).has_value());
}

TEST_CASE("cubic multigraph with parallel pairs is colorable") {
  Multigraph g = Multigraph::make(
      {"b", "c", "bp", "cp"},
      {{"b", "c"}, {"b", "c"}, {"bp", "cp"}, {"bp", "cp"}, {"b", "bp"}, {"c", "cp"}});
  auto col = three_edge_coloring(g);
  REQUIRE(col.has_value());
  CHECK(is_proper_coloring(g, *col));
}

TEST_CASE("coloring rejects non-cubic input") {
  Multigraph path = Multigraph::make({"a", "b"}, {{"a", "b"}});
  CHECK_THROWS_AS(three_edge_coloring(path), GraphError);
}

TEST_CASE("the flower snark J5 is a snark (completed exhaustive search)") {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  auto name = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
  for (char c : {'a', 'b', 'c', 'd'})
    for (int i = 0; i < 5; ++i) v.push_back(name(c, i));
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(name('a', i), name('b', i));
    e.emplace_back(name('a', i), name('c', i));
    e.emplace_back(name('a', i), name('d', i));
    e.emplace_back(name('b', i), name('b', (i + 1) % 5));
  }
  for (int i = 0; i < 4; ++i) e.emplace_back(name('c', i), name('c', i + 1));
  e.emplace_back(name('c', 4), name('d', 0));
  for (int i = 0; i < 4; ++i) e.emplace_back(name('d', i), name('d', i + 1));
  e.emplace_back(name('d', 4), name('c', 0));
  Multigraph j5 = Multigraph::make(v, e);
  REQUIRE(j5.is_cubic());
  CHECK(is_snark(j5));
}

TEST_CASE("every corpus coloring is proper; colorings are deterministic") {
  for (const Multigraph& g : testutil::pinned_cubic_corpus()) {
    auto col = three_edge_coloring(g);
    if (!col) continue;
    CHECK(is_proper_coloring(g, *col));
    auto again = three_edge_coloring(g);
    REQUIRE(again.has_value());
    CHECK(*again == *col);
  }
}

TEST_CASE("perfect matching counts: K4=3, Petersen=6, prism matches brute force") {
  CHECK(enumerate_perfect_matchings(k4_graph()).size() == 3);
  CHECK(enumerate_perfect_matchings(petersen_graph()).size() == 6);
  Multigraph prism = prism_graph();
  long long brute = testutil::brute_pm_count(prism);
  CHECK(enumerate_perfect_matchings(prism).size() == static_cast<size_t>(brute));
  // One all-vertical matching plus one per triangle edge.
  CHECK(brute == 4);
}

TEST_CASE("matching enumeration matches the subset oracle on the corpus") {
  for (const Multigraph& g : testutil::pinned_cubic_corpus()) {
    if (g.vertex_count() > 14) continue;
    auto pms = enumerate_perfect_matchings(g);
    CHECK(static_cast<long long>(pms.size()) == testutil::brute_pm_count(g));
    // Duplicate-free, canonical order, every member 1-regular spanning.
    for (size_t i = 1; i < pms.size(); ++i) CHECK(pms[i - 1] < pms[i]);
    for (const auto& m : pms) {
      std::vector<int> at(g.vertex_count(), 0);
      for (EdgeId e : m) {
        const Edge& ed = g.edge(e);
        ++at[ed.u];
        ++at[ed.v];
      }
      for (int v = 0; v < g.vertex_count(); ++v) CHECK(at[v] == 1);
    }
  }
}

TEST_CASE("matching enumeration respects the vertex cap") {
  CHECK_THROWS_WITH_AS(enumerate_perfect_matchings(petersen_graph(), 8),
                       doctest::Contains("cap exceeded"), GraphError);
}

TEST_CASE("snark detection") {
  CHECK(is_snark(petersen_graph()));
  CHECK_FALSE(is_snark(k4_graph()));
  CHECK_FALSE(is_snark(prism_graph()));
}

TEST_CASE("excessive index: K4=3, Petersen=5, prism=3") {
  CHECK(excessive_index(k4_graph(), 6).value == 3);
  ExcessiveIndex p = excessive_index(petersen_graph(), 6);
  CHECK_FALSE(p.exceeds_limit);
  CHECK(p.value == 5);
  CHECK(excessive_index(prism_graph(), 6).value == 3);
  ExcessiveIndex capped = excessive_index(petersen_graph(), 4);
  CHECK(capped.exceeds_limit);
}

TEST_CASE("excessive index refuses oversized subset searches") {
  // The k=3 all-Petersen composition has 144 perfect matchings; the subset
  // search over them is far past desk scale and must fail fast.
  auto [g, d] = build_family({builtin_ported("petersen"), builtin_ported("petersen"),
                              builtin_ported("petersen")});
  (void)d;
  CHECK_THROWS_WITH_AS(excessive_index(g, 6), doctest::Contains("cap exceeded"),
                       GraphError);
}

TEST_CASE("cover oracle: K4 doubles its coloring classes") {
  CoverSearchResult r = find_fulkerson_cover(k4_graph());
  REQUIRE(r.status == CoverSearchStatus::Found);
  REQUIRE(r.cover.matchings.size() == 6);
  CHECK(r.cover.matchings[0] == r.cover.matchings[1]);
  CHECK(r.cover.matchings[2] == r.cover.matchings[3]);
  CHECK(r.cover.matchings[4] == r.cover.matchings[5]);
  CHECK(verify_cover(k4_graph(), r.cover).pass);
}

TEST_CASE("cover oracle: Petersen uses its six distinct matchings") {
  Multigraph g = petersen_graph();
  CoverSearchResult r = find_fulkerson_cover(g);
  REQUIRE(r.status == CoverSearchStatus::Found);
  std::set<EdgeSet> distinct(r.cover.matchings.begin(), r.cover.matchings.end());
  CHECK(distinct.size() == 6);
  CHECK(verify_cover(g, r.cover).pass);
  auto pms = enumerate_perfect_matchings(g);
  CHECK(distinct == std::set<EdgeSet>(pms.begin(), pms.end()));
}

TEST_CASE("cover oracle: prism has a cover") {
  CoverSearchResult r = find_fulkerson_cover(prism_graph());
  REQUIRE(r.status == CoverSearchStatus::Found);
  CHECK(verify_cover(prism_graph(), r.cover).pass);
}

TEST_CASE("colorable graphs always admit covers (doubling)") {
  for (const Multigraph& g : testutil::pinned_cubic_corpus()) {
    if (!three_edge_coloring(g).has_value()) continue;
    CoverSearchResult r = find_fulkerson_cover(g);
    CHECK(r.status == CoverSearchStatus::Found);
    CHECK(verify_cover(g, r.cover).pass);
  }
}

TEST_CASE("pruned cover search finds the same first cover as the naive search") {
  for (const Multigraph& g : testutil::pinned_cubic_corpus()) {
    if (g.vertex_count() > 12) continue;
    auto ms = enumerate_perfect_matchings(g);
    auto naive = testutil::naive_cover_indices(g, ms);
    CoverSearchResult pruned = find_fulkerson_cover(g);
    REQUIRE(naive.has_value() == (pruned.status == CoverSearchStatus::Found));
    if (naive) {
      std::vector<PerfectMatching> expect;
      for (int i : *naive) expect.push_back(ms[i]);
      CHECK(pruned.cover.matchings == expect);
    }
  }
}

TEST_CASE("cover search reports budget exhaustion separately") {
  CoverSearchResult r = find_fulkerson_cover(petersen_graph(), 2);
  CHECK(r.status == CoverSearchStatus::BudgetExceeded);
}

TEST_CASE("solver outputs are independent of the worker cap") {
  // Solvers are sequential by construction; pin the env var both ways and
  // compare a full pipeline-relevant output.
  Multigraph g = petersen_graph();
  setenv("SNARKFORGE_THREADS", "1", 1);
  auto a = enumerate_perfect_matchings(g);
  auto ca = find_fulkerson_cover(g);
  setenv("SNARKFORGE_THREADS", "4", 1);
  auto b = enumerate_perfect_matchings(g);
  auto cb = find_fulkerson_cover(g);
  unsetenv("SNARKFORGE_THREADS");
  CHECK(a == b);
  CHECK(ca.cover.matchings == cb.cover.matchings);
}
