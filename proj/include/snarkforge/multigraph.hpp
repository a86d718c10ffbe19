#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snarkforge {

using EdgeId = int;

// Sorted, duplicate-free list of edge ids referencing one host graph.
using EdgeSet = std::vector<EdgeId>;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  EdgeId id;
  int u, v;  // vertex indices; the pair is unordered but the stored order is stable
};

// Loop-free multigraph with stable edge identifiers. Values are immutable
// after construction; every operation returns a new graph.
class Multigraph {
 public:
  Multigraph() = default;

  static Multigraph make(const std::vector<std::string>& vertex_ids,
                         const std::vector<std::pair<std::string, std::string>>& endpoints);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }
  int vertex_index(const std::string& name) const;
  const std::string& vertex_name(int v) const { return names_.at(v); }

  bool has_edge(EdgeId e) const;
  const Edge& edge(EdgeId e) const;
  const std::vector<EdgeId>& incident_edges(int v) const { return inc_.at(v); }

  int degree(int v) const { return static_cast<int>(inc_.at(v).size()); }
  int degree(const std::string& name) const { return degree(vertex_index(name)); }
  int other_end(EdgeId e, int v) const;

  // Lowest-id edge between two vertices, if any.
  std::optional<EdgeId> edge_between(const std::string& a, const std::string& b) const;

  bool is_cubic() const;
  bool is_connected() const;
  bool is_bridgeless() const;

  void validate_edge_set(const EdgeSet& s) const;

  Multigraph delete_edges(const EdgeSet& s) const;

  // Replaces edge e by two edges sharing the fresh vertex; returns them in
  // (old first endpoint, v) / (v, old second endpoint) order.
  std::pair<Multigraph, std::pair<EdgeId, EdgeId>> insert_vertex_on_edge(
      EdgeId e, const std::string& v) const;

  // Appends vertices and edges; returns the new edge ids in input order.
  std::pair<Multigraph, std::vector<EdgeId>> with_additions(
      const std::vector<std::string>& new_vertices,
      const std::vector<std::pair<std::string, std::string>>& new_edges) const;

  // Renumbers edge ids to 0..m-1 in current order; returns the old->new map.
  std::pair<Multigraph, std::map<EdgeId, EdgeId>> compacted() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;  // ascending by id
  std::vector<std::vector<EdgeId>> inc_;
  EdgeId next_id_ = 0;

  int edge_pos(EdgeId e) const;
  void add_vertex(const std::string& name);
  void add_edge(int u, int v);
};

namespace edgeset {

EdgeSet normalized(EdgeSet s);
bool contains(const EdgeSet& s, EdgeId e);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet intersection(const EdgeSet& a, const EdgeSet& b);
EdgeSet difference(const EdgeSet& a, const EdgeSet& b);

}  // namespace edgeset

}  // namespace snarkforge
