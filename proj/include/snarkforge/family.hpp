#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "snarkforge/fulkerson.hpp"
#include "snarkforge/multigraph.hpp"

namespace snarkforge {

// A cubic base graph with a designated edge xy and ordered neighbor labels
// x0,x1 (of x) and y0,y1 (of y).
struct PortedGraph {
  Multigraph graph;
  PortRoles ports;
  EdgeId xy_edge = -1;

  static PortedGraph create(Multigraph g, PortRoles roles);
};

struct BlockInfo {
  PortedGraph source;
  // V(G_i) \ {x_i, y_i}  ->  composed vertex names
  std::map<std::string, std::string> vertex_image;
  // interior G_i edge id -> composed edge id
  std::map<EdgeId, EdgeId> edge_image;
  // "x0","x1","y0","y1" -> the composed edge replacing that removed
  // half-connection (x0 attaches to a_{i-1 mod k}, x1 to b_{i-1 mod k},
  // y0 to a_i, y1 to b_i)
  std::map<std::string, EdgeId> boundary;
};

struct FamilyDescriptor {
  int k = 0;
  std::vector<BlockInfo> blocks;
  std::vector<std::string> a, b, c;  // landmark vertex names, size k
  std::vector<std::string> v;        // size max(k-2, 0)
  // chain edges ordered from c0 to c1: c0-v_{k-3}, ..., v0-c1 (just c0-c1
  // when no v exists)
  std::vector<EdgeId> chain;
};

std::pair<Multigraph, FamilyDescriptor> build_base(const PortedGraph& p0,
                                                   const PortedGraph& p1);

std::pair<Multigraph, FamilyDescriptor> extend(const Multigraph& g,
                                               const FamilyDescriptor& d,
                                               const PortedGraph& p);

// build_base followed by k-2 extends; edge ids compacted to 0..m-1 and the
// full adjacency contract checked.
std::pair<Multigraph, FamilyDescriptor> build_family(const std::vector<PortedGraph>& ports);

// Image of an interior edge set of G_i under the block edge map. Edges
// touching x_i or y_i are rejected ("subtract boundary terms first").
EdgeSet map_block_edges(const FamilyDescriptor& d, int block, const EdgeSet& s);

// Queries every adjacency of the descriptor contract; throws on violation.
void validate_family(const Multigraph& g, const FamilyDescriptor& d);

// Builtin base graphs with pinned adjacency and default port selection.
Multigraph petersen_graph();
Multigraph k4_graph();
Multigraph prism_graph();
bool is_builtin_name(const std::string& name);
PortedGraph builtin_ported(const std::string& name);

}  // namespace snarkforge
