#include "snarkforge/graph_ops.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace snarkforge {

namespace {

// Component labels of g, BFS from lowest vertex index.
std::vector<int> component_labels(const Multigraph& g, int* count_out) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (EdgeId e : g.incident_edges(v)) {
        int w = g.other_end(e, v);
        if (comp[w] == -1) {
          comp[w] = count;
          q.push(w);
        }
      }
    }
    ++count;
  }
  if (count_out) *count_out = count;
  return comp;
}

}  // namespace

SplitSuppression suppress_components(const Multigraph& g, const EdgeSet& deleted) {
  g.validate_edge_set(deleted);
  Multigraph h = g.delete_edges(deleted);
  int n = h.vertex_count();
  for (int v = 0; v < n; ++v) {
    int d = h.degree(v);
    if (d != 2 && d != 3)
      throw GraphError("invalid certificate deletion: vertex '" + h.vertex_name(v) +
                       "' has degree " + std::to_string(d) + " after deletion");
  }

  int comp_count = 0;
  std::vector<int> comp = component_labels(h, &comp_count);
  std::vector<char> comp_has_deg3(comp_count, 0);
  for (int v = 0; v < n; ++v)
    if (h.degree(v) == 3) comp_has_deg3[comp[v]] = 1;

  SplitSuppression out;

  // Circuit-only components, each walked from its lowest incident edge id.
  std::vector<char> circuit_seen(comp_count, 0);
  for (const Edge& ed : h.edges()) {
    int c = comp[ed.u];
    if (comp_has_deg3[c] || circuit_seen[c]) continue;
    circuit_seen[c] = 1;
    std::vector<EdgeId> circuit{ed.id};
    int start = ed.u;
    int cur = ed.v;
    EdgeId last = ed.id;
    while (cur != start) {
      EdgeId next = -1;
      for (EdgeId e : h.incident_edges(cur))
        if (e != last) next = e;
      circuit.push_back(next);
      cur = h.other_end(next, cur);
      last = next;
    }
    out.circuits.push_back(std::move(circuit));
  }

  // Degree-3 survivors plus one suppressed edge per maximal path.
  std::vector<std::string> sup_names;
  for (int v = 0; v < n; ++v)
    if (h.degree(v) == 3) sup_names.push_back(h.vertex_name(v));

  std::vector<std::pair<std::string, std::string>> sup_edges;
  std::vector<std::vector<EdgeId>> paths;
  std::vector<char> used(g.edges().empty() ? 0 : g.edges().back().id + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (h.degree(v) != 3) continue;
    for (EdgeId e : h.incident_edges(v)) {
      if (used[e]) continue;
      std::vector<EdgeId> path{e};
      used[e] = 1;
      EdgeId last = e;
      int cur = h.other_end(e, v);
      while (h.degree(cur) == 2) {
        EdgeId next = -1;
        for (EdgeId f : h.incident_edges(cur))
          if (f != last) next = f;
        path.push_back(next);
        used[next] = 1;
        cur = h.other_end(next, cur);
        last = next;
      }
      if (cur == v)
        throw GraphError("suppression would create a loop at vertex '" +
                         h.vertex_name(v) + "': invalid certificate");
      sup_edges.emplace_back(h.vertex_name(v), h.vertex_name(cur));
      paths.push_back(std::move(path));
    }
  }

  out.cubic.suppressed = Multigraph::make(sup_names, sup_edges);
  for (size_t i = 0; i < paths.size(); ++i)
    out.cubic.path_map[static_cast<EdgeId>(i)] = std::move(paths[i]);
  for (const auto& name : sup_names) out.cubic.vertex_image[name] = name;
  return out;
}

SuppressionResult suppress(const Multigraph& g, const EdgeSet& deleted) {
  SplitSuppression split = suppress_components(g, deleted);
  if (!split.circuits.empty())
    throw GraphError("suppression undefined on circuit component");
  return std::move(split.cubic);
}

EvenComponents even_components(const Multigraph& g, const EdgeSet& s) {
  g.validate_edge_set(s);
  EvenComponents out;

  std::map<int, std::vector<EdgeId>> support;  // vertex -> incident s-edges
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    support[ed.u].push_back(e);
    support[ed.v].push_back(e);
  }
  for (const auto& [v, lst] : support) {
    if (lst.size() != 2) {
      out.reason = "vertex '" + g.vertex_name(v) + "' has degree " +
                   std::to_string(lst.size()) + " in the edge set";
      return out;
    }
  }

  std::vector<char> used;
  if (!s.empty()) used.assign(s.back() + 1, 0);
  for (EdgeId start_edge : s) {
    if (used[start_edge]) continue;
    const Edge& ed = g.edge(start_edge);
    std::vector<EdgeId> circuit{start_edge};
    used[start_edge] = 1;
    int start = ed.u;
    int cur = ed.v;
    EdgeId last = start_edge;
    while (cur != start) {
      const auto& lst = support.at(cur);
      EdgeId next = (lst[0] == last) ? lst[1] : lst[0];
      circuit.push_back(next);
      used[next] = 1;
      cur = g.other_end(next, cur);
      last = next;
    }
    if (circuit.size() % 2 != 0) {
      out.reason = "odd circuit of length " + std::to_string(circuit.size()) +
                   " through vertex '" + g.vertex_name(start) + "'";
      return out;
    }
    out.circuits.push_back(std::move(circuit));
  }
  out.ok = true;
  return out;
}

bool cyclic_edge_connectivity_at_least(const Multigraph& g, int t) {
  if (t > 4) throw GraphError("desk-scale limit: cyclic connectivity capped at t=4");
  if (!g.is_cubic() || !g.is_connected())
    throw GraphError("cyclic_edge_connectivity_at_least requires a connected cubic graph");
  if (t <= 1) return true;

  int m = g.edge_count();
  std::vector<EdgeId> ids;
  ids.reserve(m);
  for (const Edge& ed : g.edges()) ids.push_back(ed.id);

  // Two components each containing a circuit: a connected component has a
  // circuit iff it has at least as many edges as vertices.
  auto splits_two_circuits = [&](const EdgeSet& cut) {
    Multigraph h = g.delete_edges(cut);
    int comp_count = 0;
    std::vector<int> comp = component_labels(h, &comp_count);
    if (comp_count < 2) return false;
    std::vector<int> vcount(comp_count, 0), ecount(comp_count, 0);
    for (int v = 0; v < h.vertex_count(); ++v) vcount[comp[v]]++;
    for (const Edge& ed : h.edges()) ecount[comp[ed.u]]++;
    int with_circuit = 0;
    for (int c = 0; c < comp_count; ++c)
      if (ecount[c] >= vcount[c]) ++with_circuit;
    return with_circuit >= 2;
  };

  EdgeSet cut;
  // All subsets of size 1..t-1, lexicographic.
  std::function<bool(int, int)> rec = [&](int begin, int remaining) {
    if (!cut.empty() && splits_two_circuits(cut)) return true;
    if (remaining == 0) return false;
    for (int i = begin; i < m; ++i) {
      cut.push_back(ids[i]);
      bool found = rec(i + 1, remaining - 1);
      cut.pop_back();
      if (found) return true;
    }
    return false;
  };
  return !rec(0, t - 1);
}

}  // namespace snarkforge
