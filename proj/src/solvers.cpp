#include "snarkforge/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>

#include "snarkforge/fulkerson.hpp"

namespace snarkforge {

namespace {

// Backtracking 3-edge-coloring over a fixed BFS edge order. Forced moves
// (an uncolored edge left with a single available color) propagate
// immediately; per-component root edges are pinned to colors 1,2,3, which is
// sound because any proper coloring can be permuted per component.
class ColoringSolver {
 public:
  explicit ColoringSolver(const Multigraph& g) : g_(g), m_(g.edge_count()) {
    for (int i = 0; i < m_; ++i) pos_[g_.edges()[i].id] = i;
    adj_.assign(m_, {});
    for (int v = 0; v < g_.vertex_count(); ++v) {
      const auto& inc = g_.incident_edges(v);
      for (size_t a = 0; a < inc.size(); ++a)
        for (size_t b = a + 1; b < inc.size(); ++b) {
          adj_[pos_.at(inc[a])].push_back(pos_.at(inc[b]));
          adj_[pos_.at(inc[b])].push_back(pos_.at(inc[a]));
        }
    }
    for (auto& lst : adj_) {
      std::sort(lst.begin(), lst.end());
      lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    build_order();
  }

  std::optional<ColoringAssignment> solve() {
    color_.assign(m_, 0);
    avail_.assign(m_, 0b111);
    trail_.clear();
    colored_.clear();
    // Pin each component root's three edges to 1,2,3 in id order.
    for (int root : roots_) {
      std::vector<EdgeId> inc = g_.incident_edges(root);
      std::sort(inc.begin(), inc.end());
      int c = 1;
      for (EdgeId e : inc) {
        int p = pos_.at(e);
        // Propagation from the earlier pins may already have forced this
        // edge; the forced value always matches the pin.
        if (color_[p] == c) {
          ++c;
          continue;
        }
        if (color_[p] != 0) return std::nullopt;
        if (!(avail_[p] & (1 << (c - 1)))) return std::nullopt;
        if (!assign_and_propagate(p, c)) return std::nullopt;
        ++c;
      }
    }
    if (!search(0)) return std::nullopt;
    ColoringAssignment out;
    for (int i = 0; i < m_; ++i) out[g_.edges()[i].id] = color_[i];
    return out;
  }

 private:
  void build_order() {
    int n = g_.vertex_count();
    std::vector<char> vseen(n, 0), eseen(m_, 0);
    for (int s = 0; s < n; ++s) {
      if (vseen[s]) continue;
      roots_.push_back(s);
      std::queue<int> q;
      q.push(s);
      vseen[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        std::vector<EdgeId> inc = g_.incident_edges(v);
        std::sort(inc.begin(), inc.end());
        for (EdgeId e : inc) {
          int p = pos_.at(e);
          if (!eseen[p]) {
            eseen[p] = 1;
            order_.push_back(p);
          }
          int w = g_.other_end(e, v);
          if (!vseen[w]) {
            vseen[w] = 1;
            q.push(w);
          }
        }
      }
    }
  }

  struct Mod {
    int pos;
    uint8_t prev;
  };

  bool assign(int p, int c, std::vector<int>& forced) {
    color_[p] = c;
    colored_.push_back(p);
    for (int q : adj_[p]) {
      if (color_[q] != 0) {
        if (color_[q] == c) return false;
        continue;
      }
      uint8_t a = avail_[q];
      uint8_t bit = static_cast<uint8_t>(1 << (c - 1));
      if (a & bit) {
        trail_.push_back({q, a});
        a &= static_cast<uint8_t>(~bit);
        avail_[q] = a;
        if (a == 0) return false;
        if (std::popcount(a) == 1) forced.push_back(q);
      }
    }
    return true;
  }

  bool assign_and_propagate(int p, int c) {
    std::vector<int> forced;
    if (!assign(p, c, forced)) return false;
    for (size_t i = 0; i < forced.size(); ++i) {
      int q = forced[i];
      if (color_[q] != 0) continue;
      int fc = std::countr_zero(avail_[q]) + 1;
      if (!assign(q, fc, forced)) return false;
    }
    return true;
  }

  void undo_to(size_t trail_mark, size_t colored_mark) {
    while (colored_.size() > colored_mark) {
      color_[colored_.back()] = 0;
      colored_.pop_back();
    }
    while (trail_.size() > trail_mark) {
      avail_[trail_.back().pos] = trail_.back().prev;
      trail_.pop_back();
    }
  }

  bool search(size_t oi) {
    while (oi < order_.size() && color_[order_[oi]] != 0) ++oi;
    if (oi == order_.size()) return true;
    int p = order_[oi];
    for (int c = 1; c <= 3; ++c) {
      if (!(avail_[p] & (1 << (c - 1)))) continue;
      size_t tm = trail_.size(), cm = colored_.size();
      if (assign_and_propagate(p, c) && search(oi + 1)) return true;
      undo_to(tm, cm);
    }
    return false;
  }

  const Multigraph& g_;
  int m_;
  std::map<EdgeId, int> pos_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;
  std::vector<int> roots_;
  std::vector<int> color_;
  std::vector<uint8_t> avail_;
  std::vector<Mod> trail_;
  std::vector<int> colored_;
};

}  // namespace

std::optional<ColoringAssignment> three_edge_coloring(const Multigraph& g) {
  if (!g.is_cubic())
    throw GraphError("three_edge_coloring requires a cubic graph");
  if (g.edge_count() == 0) return ColoringAssignment{};
  ColoringSolver solver(g);
  return solver.solve();
}

bool is_proper_coloring(const Multigraph& g, const ColoringAssignment& col) {
  for (const Edge& ed : g.edges()) {
    auto it = col.find(ed.id);
    if (it == col.end() || it->second < 1 || it->second > 3) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    uint8_t seen = 0;
    for (EdgeId e : g.incident_edges(v)) {
      uint8_t bit = static_cast<uint8_t>(1 << (col.at(e) - 1));
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const Multigraph& g,
                                                         int vertex_cap) {
  if (!g.is_cubic())
    throw GraphError("enumerate_perfect_matchings requires a cubic graph");
  if (g.vertex_count() > vertex_cap)
    throw GraphError("cap exceeded: " + std::to_string(g.vertex_count()) +
                     " vertices > cap " + std::to_string(vertex_cap));
  int n = g.vertex_count();
  std::vector<PerfectMatching> out;
  if (n % 2 != 0) return out;

  std::vector<char> matched(n, 0);
  EdgeSet current;
  // Branch on the lowest-index uncovered vertex; each matching is generated
  // exactly once.
  std::function<void(int)> rec = [&](int covered) {
    if (covered == n) {
      out.push_back(edgeset::normalized(current));
      return;
    }
    int v = 0;
    while (matched[v]) ++v;
    std::vector<EdgeId> inc = g.incident_edges(v);
    std::sort(inc.begin(), inc.end());
    for (EdgeId e : inc) {
      int w = g.other_end(e, v);
      if (matched[w]) continue;
      matched[v] = matched[w] = 1;
      current.push_back(e);
      rec(covered + 2);
      current.pop_back();
      matched[v] = matched[w] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_snark(const Multigraph& g) {
  if (!g.is_cubic()) throw GraphError("is_snark requires a cubic graph");
  return g.is_bridgeless() && !three_edge_coloring(g).has_value();
}

ExcessiveIndex excessive_index(const Multigraph& g, int limit, int vertex_cap) {
  std::vector<PerfectMatching> ms = enumerate_perfect_matchings(g, vertex_cap);
  EdgeSet all;
  for (const Edge& ed : g.edges()) all.push_back(ed.id);

  EdgeSet total;
  for (const auto& m : ms) total = edgeset::set_union(total, m);
  if (total != all) return {true, limit};

  int count = static_cast<int>(ms.size());
  // Subset search is exponential in the matching count; refuse clearly
  // oversized instances instead of hanging.
  double space = 0;
  for (int k = 1; k <= std::min(limit, count); ++k) {
    double c = 1;
    for (int i = 0; i < k; ++i) c = c * (count - i) / (i + 1);
    space += c;
  }
  if (space > 2e8)
    throw GraphError("cap exceeded: excessive-index search space too large (" +
                     std::to_string(count) + " matchings)");
  std::vector<int> pick;
  std::function<bool(int, int)> rec = [&](int begin, int remaining) {
    if (remaining == 0) {
      EdgeSet u;
      for (int i : pick) u = edgeset::set_union(u, ms[i]);
      return u == all;
    }
    for (int i = begin; i <= count - remaining; ++i) {
      pick.push_back(i);
      bool ok = rec(i + 1, remaining - 1);
      pick.pop_back();
      if (ok) return true;
    }
    return false;
  };
  for (int k = 1; k <= limit; ++k) {
    if (k > count) break;
    if (rec(0, k)) return {false, k};
  }
  return {true, limit};
}

CoverSearchResult find_fulkerson_cover(const Multigraph& g, long long node_budget,
                                       int vertex_cap) {
  if (!g.is_cubic() || !g.is_bridgeless())
    throw GraphError("find_fulkerson_cover requires a bridgeless cubic graph");
  std::vector<PerfectMatching> ms = enumerate_perfect_matchings(g, vertex_cap);
  CoverSearchResult res;
  int count = static_cast<int>(ms.size());
  if (count == 0) return res;  // proven none

  std::map<EdgeId, int> epos;
  int m = g.edge_count();
  for (int i = 0; i < m; ++i) epos[g.edges()[i].id] = i;
  // For each edge, the largest matching index containing it (feasibility:
  // a deficient edge must still be coverable by matchings at or past the
  // current start index, repeats allowed).
  std::vector<int> max_idx(m, -1);
  std::vector<std::vector<int>> member_pos(count);
  for (int i = 0; i < count; ++i) {
    for (EdgeId e : ms[i]) {
      int p = epos.at(e);
      member_pos[i].push_back(p);
      max_idx[p] = i;
    }
  }

  std::vector<int> cov(m, 0), chosen;
  bool budget_hit = false;
  std::function<bool(int, int)> rec = [&](int slot, int start) {
    if (res.nodes++ >= node_budget) {
      budget_hit = true;
      return false;
    }
    if (slot == 6) {
      for (int p = 0; p < m; ++p)
        if (cov[p] != 2) return false;
      return true;
    }
    int remaining = 6 - slot;
    for (int p = 0; p < m; ++p) {
      int deficit = 2 - cov[p];
      if (deficit > remaining) return false;
      if (deficit > 0 && max_idx[p] < start) return false;
    }
    for (int i = start; i < count; ++i) {
      bool fits = true;
      for (int p : member_pos[i])
        if (cov[p] >= 2) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int p : member_pos[i]) ++cov[p];
      chosen.push_back(i);
      if (rec(slot + 1, i)) return true;
      chosen.pop_back();
      for (int p : member_pos[i]) --cov[p];
      if (budget_hit) return false;
    }
    return false;
  };

  if (rec(0, 0)) {
    res.status = CoverSearchStatus::Found;
    for (int i : chosen) res.cover.matchings.push_back(ms[i]);
    return res;
  }
  res.status = budget_hit ? CoverSearchStatus::BudgetExceeded
                          : CoverSearchStatus::ProvenNone;
  return res;
}

}  // namespace snarkforge
