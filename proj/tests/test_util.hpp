#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "snarkforge/family.hpp"
#include "snarkforge/multigraph.hpp"
#include "snarkforge/solvers.hpp"

namespace testutil {

using namespace snarkforge;

inline int component_count(const Multigraph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (EdgeId e : g.incident_edges(v)) {
        int w = g.other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return count;
}

// Oracle for is_bridgeless: delete each edge in turn and count components.
inline bool brute_force_bridgeless(const Multigraph& g) {
  int base = component_count(g);
  for (const Edge& ed : g.edges()) {
    Multigraph h = g.delete_edges({ed.id});
    if (component_count(h) > base) return false;
  }
  return true;
}

// Girth by BFS from every vertex; parallel edges give girth 2.
inline int girth(const Multigraph& g) {
  int n = g.vertex_count();
  int best = 1 << 29;
  std::set<std::pair<int, int>> pairs;
  for (const Edge& ed : g.edges()) {
    auto key = std::minmax(ed.u, ed.v);
    if (!pairs.insert({key.first, key.second}).second) best = std::min(best, 2);
  }
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<EdgeId> via(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (EdgeId e : g.incident_edges(v)) {
        if (e == via[v]) continue;
        int w = g.other_end(e, v);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          q.push(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

// Independent perfect-matching oracle: test every edge subset of size n/2.
inline long long brute_pm_count(const Multigraph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (n % 2 != 0) return 0;
  int want = n / 2;
  std::vector<EdgeId> ids;
  for (const Edge& ed : g.edges()) ids.push_back(ed.id);
  long long count = 0;
  std::vector<int> pick;
  std::vector<int> covered(n, 0);
  std::function<void(int)> rec = [&](int begin) {
    if (static_cast<int>(pick.size()) == want) {
      ++count;
      return;
    }
    for (int i = begin; i <= m - (want - static_cast<int>(pick.size())); ++i) {
      const Edge& ed = g.edge(ids[i]);
      if (covered[ed.u] || covered[ed.v]) continue;
      covered[ed.u] = covered[ed.v] = 1;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
      covered[ed.u] = covered[ed.v] = 0;
    }
  };
  rec(0);
  return count;
}

// Naive no-pruning cover oracle: every non-decreasing 6-tuple of matching
// indices, lexicographic, first whose histogram is all twos.
inline std::optional<std::vector<int>> naive_cover_indices(
    const Multigraph& g, const std::vector<PerfectMatching>& ms) {
  int count = static_cast<int>(ms.size());
  std::vector<int> tuple(6, 0);
  std::function<std::optional<std::vector<int>>(int, int)> rec =
      [&](int slot, int start) -> std::optional<std::vector<int>> {
    if (slot == 6) {
      std::map<EdgeId, int> hist;
      for (const Edge& ed : g.edges()) hist[ed.id] = 0;
      for (int s = 0; s < 6; ++s)
        for (EdgeId e : ms[tuple[s]]) ++hist[e];
      for (const auto& [e, c] : hist)
        if (c != 2) return std::nullopt;
      return tuple;
    }
    for (int i = start; i < count; ++i) {
      tuple[slot] = i;
      if (auto r = rec(slot + 1, i)) return r;
    }
    return std::nullopt;
  };
  return rec(0, 0);
}

// Deterministic sample of connected bridgeless simple cubic graphs via the
// pairing model. mt19937 output is pinned by the standard; modulo draws keep
// it portable across library implementations.
inline std::optional<Multigraph> try_cubic_sample(std::mt19937& rng, int n) {
  std::vector<int> stubs;
  stubs.reserve(3 * n);
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 3; ++s) stubs.push_back(v);
  for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
    std::swap(stubs[i], stubs[rng() % (i + 1)]);
  std::set<std::pair<int, int>> pairs;
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return std::nullopt;
    auto key = std::minmax(u, v);
    if (!pairs.insert({key.first, key.second}).second) return std::nullopt;
    edges.emplace_back(std::to_string(u), std::to_string(v));
  }
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
  Multigraph g = Multigraph::make(names, edges);
  if (!g.is_connected() || !g.is_bridgeless()) return std::nullopt;
  return g;
}

// K4, prism, Petersen plus a pinned deterministic sample: 13 graphs each on
// 6, 8, 10, 12 vertices (55 total).
inline std::vector<Multigraph> pinned_cubic_corpus() {
  std::vector<Multigraph> out{k4_graph(), prism_graph(), petersen_graph()};
  std::mt19937 rng(20260810u);
  for (int n : {6, 8, 10, 12}) {
    int got = 0;
    while (got < 13) {
      if (auto g = try_cubic_sample(rng, n)) {
        out.push_back(std::move(*g));
        ++got;
      }
    }
  }
  return out;
}

inline std::array<int, 3> nth_triple(int idx) {
  int pos = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int l = j + 1; l <= 6; ++l)
        if (pos++ == idx) return {i, j, l};
  throw std::out_of_range("triple index");
}

}  // namespace testutil
