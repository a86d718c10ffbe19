#include "snarkforge/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace snarkforge {

void Multigraph::add_vertex(const std::string& name) {
  if (index_.count(name)) throw GraphError("duplicate vertex-id '" + name + "'");
  index_[name] = static_cast<int>(names_.size());
  names_.push_back(name);
  inc_.emplace_back();
}

void Multigraph::add_edge(int u, int v) {
  if (u == v) throw GraphError("loop at vertex '" + names_[u] + "' not allowed");
  EdgeId id = next_id_++;
  edges_.push_back(Edge{id, u, v});
  inc_[u].push_back(id);
  inc_[v].push_back(id);
}

Multigraph Multigraph::make(const std::vector<std::string>& vertex_ids,
                            const std::vector<std::pair<std::string, std::string>>& endpoints) {
  Multigraph g;
  for (const auto& name : vertex_ids) g.add_vertex(name);
  for (const auto& [a, b] : endpoints) {
    auto ia = g.index_.find(a);
    auto ib = g.index_.find(b);
    if (ia == g.index_.end()) throw GraphError("unknown vertex '" + a + "'");
    if (ib == g.index_.end()) throw GraphError("unknown vertex '" + b + "'");
    g.add_edge(ia->second, ib->second);
  }
  return g;
}

int Multigraph::vertex_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw GraphError("unknown vertex '" + name + "'");
  return it->second;
}

int Multigraph::edge_pos(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& ed, EdgeId id) { return ed.id < id; });
  if (it == edges_.end() || it->id != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Multigraph::has_edge(EdgeId e) const { return edge_pos(e) >= 0; }

const Edge& Multigraph::edge(EdgeId e) const {
  int pos = edge_pos(e);
  if (pos < 0) throw GraphError("stale edge-id " + std::to_string(e));
  return edges_[pos];
}

int Multigraph::other_end(EdgeId e, int v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw GraphError("edge " + std::to_string(e) + " not incident to vertex '" +
                   vertex_name(v) + "'");
}

std::optional<EdgeId> Multigraph::edge_between(const std::string& a,
                                               const std::string& b) const {
  int ia = vertex_index(a), ib = vertex_index(b);
  std::optional<EdgeId> best;
  for (EdgeId e : inc_[ia]) {
    const Edge& ed = edge(e);
    int other = (ed.u == ia) ? ed.v : ed.u;
    if (other == ib && (!best || e < *best)) best = e;
  }
  return best;
}

bool Multigraph::is_cubic() const {
  for (const auto& lst : inc_)
    if (lst.size() != 3) return false;
  return true;
}

bool Multigraph::is_connected() const {
  int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (EdgeId e : inc_[v]) {
      int w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n;
}

// Iterative lowpoint search; the entering edge is skipped by id, so parallel
// edges act as back edges and never count as bridges.
bool Multigraph::is_bridgeless() const {
  int n = vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int v;
    EdgeId in_edge;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc_[f.v].size()) {
        EdgeId e = inc_[f.v][f.next++];
        if (e == f.in_edge) continue;
        int w = other_end(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        EdgeId in_edge = f.in_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent] && in_edge != -1) return false;  // bridge
        }
      }
    }
  }
  return true;
}

void Multigraph::validate_edge_set(const EdgeSet& s) const {
  EdgeId prev = -1;
  for (EdgeId e : s) {
    if (e <= prev) throw GraphError("edge set not sorted/duplicate-free");
    if (!has_edge(e)) throw GraphError("stale edge-id " + std::to_string(e));
    prev = e;
  }
}

Multigraph Multigraph::delete_edges(const EdgeSet& s) const {
  validate_edge_set(s);
  Multigraph g;
  g.names_ = names_;
  g.index_ = index_;
  g.inc_.assign(names_.size(), {});
  g.next_id_ = next_id_;
  for (const Edge& ed : edges_) {
    if (edgeset::contains(s, ed.id)) continue;
    g.edges_.push_back(ed);
    g.inc_[ed.u].push_back(ed.id);
    g.inc_[ed.v].push_back(ed.id);
  }
  return g;
}

std::pair<Multigraph, std::pair<EdgeId, EdgeId>> Multigraph::insert_vertex_on_edge(
    EdgeId e, const std::string& v) const {
  const Edge ed = edge(e);
  Multigraph g = delete_edges({e});
  g.add_vertex(v);
  int nv = g.index_.at(v);
  EdgeId first = g.next_id_;
  g.add_edge(ed.u, nv);
  EdgeId second = g.next_id_;
  g.add_edge(nv, ed.v);
  return {std::move(g), {first, second}};
}

std::pair<Multigraph, std::vector<EdgeId>> Multigraph::with_additions(
    const std::vector<std::string>& new_vertices,
    const std::vector<std::pair<std::string, std::string>>& new_edges) const {
  Multigraph g = *this;
  for (const auto& name : new_vertices) g.add_vertex(name);
  std::vector<EdgeId> ids;
  ids.reserve(new_edges.size());
  for (const auto& [a, b] : new_edges) {
    int ia = g.vertex_index(a), ib = g.vertex_index(b);
    ids.push_back(g.next_id_);
    g.add_edge(ia, ib);
  }
  return {std::move(g), std::move(ids)};
}

std::pair<Multigraph, std::map<EdgeId, EdgeId>> Multigraph::compacted() const {
  Multigraph g;
  g.names_ = names_;
  g.index_ = index_;
  g.inc_.assign(names_.size(), {});
  std::map<EdgeId, EdgeId> remap;
  for (const Edge& ed : edges_) {
    remap[ed.id] = g.next_id_;
    g.add_edge(ed.u, ed.v);
  }
  return {std::move(g), std::move(remap)};
}

namespace edgeset {

EdgeSet normalized(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const EdgeSet& s, EdgeId e) {
  return std::binary_search(s.begin(), s.end(), e);
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace edgeset

}  // namespace snarkforge
