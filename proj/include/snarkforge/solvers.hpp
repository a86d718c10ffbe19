#pragma once

#include <map>
#include <optional>
#include <vector>

#include "snarkforge/multigraph.hpp"

namespace snarkforge {

// Total proper edge coloring with colors 1..3.
using ColoringAssignment = std::map<EdgeId, int>;

using PerfectMatching = EdgeSet;

// Six perfect matchings covering every edge exactly twice (multiset
// semantics: a repeated matching counts with multiplicity).
struct FulkersonCover {
  std::vector<PerfectMatching> matchings;
};

inline constexpr int kDefaultVertexCap = 40;
inline constexpr long long kDefaultNodeBudget = 50'000'000;

// Exhaustive backtracking with forced-move propagation over a fixed BFS edge
// order; returns nullopt only after completed search. Deterministic.
std::optional<ColoringAssignment> three_edge_coloring(const Multigraph& g);

bool is_proper_coloring(const Multigraph& g, const ColoringAssignment& col);

// Complete, duplicate-free, canonically ordered (each matching sorted by
// edge id, list sorted lexicographically).
std::vector<PerfectMatching> enumerate_perfect_matchings(const Multigraph& g,
                                                         int vertex_cap = kDefaultVertexCap);

bool is_snark(const Multigraph& g);

struct ExcessiveIndex {
  bool exceeds_limit = false;
  int value = 0;  // meaningful when !exceeds_limit
};

ExcessiveIndex excessive_index(const Multigraph& g, int limit,
                               int vertex_cap = kDefaultVertexCap);

enum class CoverSearchStatus { Found, ProvenNone, BudgetExceeded };

struct CoverSearchResult {
  CoverSearchStatus status = CoverSearchStatus::ProvenNone;
  FulkersonCover cover;
  long long nodes = 0;
};

// Search over 6-multisets of enumerated perfect matchings with per-edge
// coverage pruning. Budget is a node count, not wall clock.
CoverSearchResult find_fulkerson_cover(const Multigraph& g,
                                       long long node_budget = kDefaultNodeBudget,
                                       int vertex_cap = kDefaultVertexCap);

}  // namespace snarkforge
