#pragma once

#include <map>
#include <string>
#include <vector>

#include "snarkforge/multigraph.hpp"

namespace snarkforge {

// Result of suppressing degree-2 vertices after an edge deletion.
// path_map maps each suppressed-graph edge to the ordered edge sequence of
// the maximal path it replaces, oriented from the edge's first endpoint (u)
// to its second (v). vertex_image maps surviving original vertices to
// suppressed-graph vertices.
struct SuppressionResult {
  Multigraph suppressed;
  std::map<EdgeId, std::vector<EdgeId>> path_map;
  std::map<std::string, std::string> vertex_image;
};

// Components of G\Y that are pure circuits of degree-2 vertices carry no
// degree-3 endpoint and cannot be suppressed into edges; they are reported
// separately as ordered circuit edge lists.
struct SplitSuppression {
  SuppressionResult cubic;
  std::vector<std::vector<EdgeId>> circuits;
};

// Requires every vertex of G\Y to have degree 2 or 3. Circuit-only
// components are allowed here and returned in `circuits`.
SplitSuppression suppress_components(const Multigraph& g, const EdgeSet& deleted);

// Strict form: additionally requires every component of G\Y to contain a
// degree-3 vertex; throws "suppression undefined on circuit component".
SuppressionResult suppress(const Multigraph& g, const EdgeSet& deleted);

struct EvenComponents {
  bool ok = false;
  std::string reason;
  // Ordered circuit edge lists; consecutive edges share a vertex and the
  // last edge closes back to the first.
  std::vector<std::vector<EdgeId>> circuits;
};

// Succeeds iff the sub-multigraph induced by S is 2-regular on its support
// and every circuit has even length.
EvenComponents even_components(const Multigraph& g, const EdgeSet& s);

// True iff no edge-cut of size < t splits G into two sides each containing a
// circuit. Exhaustive enumeration; t is capped at 4.
bool cyclic_edge_connectivity_at_least(const Multigraph& g, int t);

}  // namespace snarkforge
