#include "snarkforge/fulkerson.hpp"

#include <algorithm>

namespace snarkforge {

CoverVerification verify_cover(const Multigraph& g, const FulkersonCover& cover) {
  CoverVerification out;
  for (const Edge& ed : g.edges()) out.histogram[ed.id] = 0;
  if (cover.matchings.size() != 6) {
    out.reason = "expected 6 matchings, got " + std::to_string(cover.matchings.size());
    return out;
  }
  for (size_t i = 0; i < 6; ++i) {
    const PerfectMatching& m = cover.matchings[i];
    std::vector<int> at(g.vertex_count(), 0);
    EdgeId prev = -1;
    for (EdgeId e : m) {
      if (e <= prev) {
        out.reason = "matching " + std::to_string(i + 1) + " is not sorted/duplicate-free";
        return out;
      }
      prev = e;
      if (!g.has_edge(e)) {
        out.reason = "matching " + std::to_string(i + 1) + " references unknown edge-id " +
                     std::to_string(e);
        return out;
      }
      const Edge& ed = g.edge(e);
      ++at[ed.u];
      ++at[ed.v];
      ++out.histogram[e];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (at[v] != 1) {
        out.reason = "matching " + std::to_string(i + 1) + " is not a perfect matching: vertex '" +
                     g.vertex_name(v) + "' covered " + std::to_string(at[v]) + " times";
        return out;
      }
    }
  }
  for (const auto& [e, c] : out.histogram) {
    if (c != 2) {
      out.reason = "edge " + std::to_string(e) + " covered " + std::to_string(c) +
                   " times, expected 2";
      return out;
    }
  }
  out.pass = true;
  return out;
}

Certificate extract_certificate(const Multigraph& g, const FulkersonCover& cover,
                                const std::array<int, 3>& triple) {
  std::array<int, 3> t = triple;
  std::sort(t.begin(), t.end());
  if (t[0] < 1 || t[2] > 6 || t[0] == t[1] || t[1] == t[2])
    throw GraphError("triple must be a 3-subset of distinct slots in 1..6");
  CoverVerification cv = verify_cover(g, cover);
  if (!cv.pass) throw GraphError("unverified cover: " + cv.reason);

  std::map<EdgeId, int> cov3;
  for (const Edge& ed : g.edges()) cov3[ed.id] = 0;
  for (int slot : t)
    for (EdgeId e : cover.matchings[slot - 1]) ++cov3[e];

  Certificate cert;
  for (const auto& [e, c] : cov3) {
    if (c == 0) cert.e0.push_back(e);
    if (c == 2) cert.e2.push_back(e);
  }
  return cert;
}

namespace {

bool is_matching(const Multigraph& g, const EdgeSet& s, std::string* why) {
  std::vector<int> at(g.vertex_count(), 0);
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    if (++at[ed.u] > 1 || ++at[ed.v] > 1) {
      *why = "two edges share vertex '" +
             g.vertex_name(at[ed.u] > 1 ? ed.u : ed.v) + "'";
      return false;
    }
  }
  return true;
}

// True if the ordered circuit alternates between membership of a and b.
bool alternates(const std::vector<EdgeId>& circuit, const EdgeSet& a, const EdgeSet& b,
                std::string* why) {
  if (circuit.size() % 2 != 0) {
    *why = "odd circuit";
    return false;
  }
  for (size_t i = 0; i < circuit.size(); ++i) {
    bool in_a = edgeset::contains(a, circuit[i]);
    bool in_b = edgeset::contains(b, circuit[i]);
    if (in_a == in_b) {
      *why = "edge " + std::to_string(circuit[i]) + " not in exactly one side";
      return false;
    }
    bool next_in_a = edgeset::contains(a, circuit[(i + 1) % circuit.size()]);
    if (in_a == next_in_a) {
      *why = "consecutive edges on the same side at edge " + std::to_string(circuit[i]);
      return false;
    }
  }
  return true;
}

}  // namespace

CertificateStructure check_certificate_structure(const Multigraph& g,
                                                 const Certificate& cert) {
  CertificateStructure out;
  g.validate_edge_set(cert.e0);
  g.validate_edge_set(cert.e2);

  if (!edgeset::intersection(cert.e0, cert.e2).empty()) {
    out.reason = "e0 and e2 are not disjoint";
    return out;
  }
  std::string why;
  if (!is_matching(g, cert.e0, &why)) {
    out.reason = "e0 is not a matching: " + why;
    return out;
  }
  if (!is_matching(g, cert.e2, &why)) {
    out.reason = "e2 is not a matching: " + why;
    return out;
  }

  EdgeSet cycle_edges = edgeset::set_union(cert.e0, cert.e2);
  EvenComponents ec = even_components(g, cycle_edges);
  if (!ec.ok) {
    out.reason = "e0 ∪ e2 is not an even cycle: " + ec.reason;
    return out;
  }
  for (const auto& circuit : ec.circuits) {
    if (!alternates(circuit, cert.e0, cert.e2, &why)) {
      out.reason = "e0 ∪ e2 does not alternate: " + why;
      return out;
    }
  }
  out.cycle = ec.circuits;

  try {
    out.sup0 = suppress_components(g, cert.e0);
    out.sup2 = suppress_components(g, cert.e2);
  } catch (const GraphError& err) {
    out.reason = std::string("suppression failed: ") + err.what();
    return out;
  }
  if (!out.sup0.cubic.suppressed.is_cubic() || !out.sup2.cubic.suppressed.is_cubic()) {
    out.reason = "suppressed graph is not cubic";
    return out;
  }
  // Circuit components of G \ e0 must alternate e2/other edges (and evenness
  // follows); symmetrically for G \ e2.
  for (const auto& circuit : out.sup0.circuits) {
    EdgeSet rest;
    for (EdgeId e : circuit)
      if (!edgeset::contains(cert.e2, e)) rest.push_back(e);
    rest = edgeset::normalized(rest);
    if (!alternates(circuit, cert.e2, rest, &why)) {
      out.reason = "circuit component of G\\e0 does not alternate with e2: " + why;
      return out;
    }
  }
  for (const auto& circuit : out.sup2.circuits) {
    EdgeSet rest;
    for (EdgeId e : circuit)
      if (!edgeset::contains(cert.e0, e)) rest.push_back(e);
    rest = edgeset::normalized(rest);
    if (!alternates(circuit, cert.e0, rest, &why)) {
      out.reason = "circuit component of G\\e2 does not alternate with e0: " + why;
      return out;
    }
  }
  out.pass = true;
  return out;
}

namespace {

CertificateReport finish_report(const Multigraph&, const Certificate& cert,
                                CertificateStructure structure,
                                ColoringAssignment col0, ColoringAssignment col2) {
  CertificateReport rep;
  rep.cert = cert;
  rep.structure = std::move(structure);
  rep.coloring0 = std::move(col0);
  rep.coloring2 = std::move(col2);
  rep.pass = true;
  return rep;
}

}  // namespace

CertificateReport verify_certificate(const Multigraph& g, const Certificate& cert) {
  CertificateReport rep;
  rep.cert = cert;
  rep.structure = check_certificate_structure(g, cert);
  if (!rep.structure.pass) {
    rep.reason = rep.structure.reason;
    return rep;
  }
  auto col0 = three_edge_coloring(rep.structure.sup0.cubic.suppressed);
  if (!col0) {
    rep.reason = "suppressed graph of G\\e0 is not 3-edge-colorable";
    return rep;
  }
  auto col2 = three_edge_coloring(rep.structure.sup2.cubic.suppressed);
  if (!col2) {
    rep.reason = "suppressed graph of G\\e2 is not 3-edge-colorable";
    return rep;
  }
  return finish_report(g, cert, std::move(rep.structure), std::move(*col0),
                       std::move(*col2));
}

CertificateReport verify_certificate_with_colorings(const Multigraph& g,
                                                    const Certificate& cert,
                                                    const ColoringAssignment& col0,
                                                    const ColoringAssignment& col2) {
  CertificateReport rep;
  rep.cert = cert;
  rep.structure = check_certificate_structure(g, cert);
  if (!rep.structure.pass) {
    rep.reason = rep.structure.reason;
    return rep;
  }
  if (!is_proper_coloring(rep.structure.sup0.cubic.suppressed, col0)) {
    rep.reason = "provided coloring for G\\e0 is not proper";
    return rep;
  }
  if (!is_proper_coloring(rep.structure.sup2.cubic.suppressed, col2)) {
    rep.reason = "provided coloring for G\\e2 is not proper";
    return rep;
  }
  return finish_report(g, cert, std::move(rep.structure), col0, col2);
}

namespace {

// One side of the lift: distributes every path (and circuit component) of
// the suppression of G minus `deleted` over three matchings. Edges of
// `doubled` (the other certificate side) land in the two off-color
// matchings; all other path edges land in the on-color matching. Circuit
// components alternate doubled/other edges: their other edges go to the
// first matching, the doubled ones to the remaining two.
void lift_side(const Multigraph& g, const SplitSuppression& sup,
               const ColoringAssignment& col, const EdgeSet& doubled,
               std::array<EdgeSet, 3>& out) {
  for (const auto& [sid, path] : sup.cubic.path_map) {
    int c = col.at(sid);
    if (path.size() % 2 != 1)
      throw GraphError("invalid certificate: mapped path of even length");
    for (size_t i = 0; i < path.size(); ++i) {
      bool in_doubled = edgeset::contains(doubled, path[i]);
      if (i % 2 == 0) {
        if (in_doubled)
          throw GraphError("invalid certificate: alternation violation on mapped path");
        out[c - 1].push_back(path[i]);
      } else {
        if (!in_doubled)
          throw GraphError("invalid certificate: alternation violation on mapped path");
        for (int other = 1; other <= 3; ++other)
          if (other != c) out[other - 1].push_back(path[i]);
      }
    }
  }
  for (const auto& circuit : sup.circuits) {
    for (EdgeId e : circuit) {
      if (edgeset::contains(doubled, e)) {
        out[1].push_back(e);
        out[2].push_back(e);
      } else {
        out[0].push_back(e);
      }
    }
  }
  (void)g;
}

}  // namespace

FulkersonCover lift_certificate(const Multigraph& g, const CertificateReport& report) {
  if (!report.pass) throw GraphError("lift_certificate requires a passing report");

  std::array<EdgeSet, 3> first, second;
  lift_side(g, report.structure.sup0, report.coloring0, report.cert.e2, first);
  lift_side(g, report.structure.sup2, report.coloring2, report.cert.e0, second);

  FulkersonCover cover;
  for (auto& m : first) cover.matchings.push_back(edgeset::normalized(std::move(m)));
  for (auto& m : second) cover.matchings.push_back(edgeset::normalized(std::move(m)));

  // Postcondition guard: perfect matchings with the exact coverage split.
  CoverVerification cv = verify_cover(g, cover);
  if (!cv.pass) throw GraphError("lift postcondition violated: " + cv.reason);
  std::map<EdgeId, int> front;
  for (const Edge& ed : g.edges()) front[ed.id] = 0;
  for (int i = 0; i < 3; ++i)
    for (EdgeId e : cover.matchings[i]) ++front[e];
  for (const Edge& ed : g.edges()) {
    int expected = 1;
    if (edgeset::contains(report.cert.e2, ed.id)) expected = 2;
    if (edgeset::contains(report.cert.e0, ed.id)) expected = 0;
    if (front[ed.id] != expected)
      throw GraphError("lift postcondition violated: coverage split mismatch at edge " +
                       std::to_string(ed.id));
  }
  return cover;
}

Normalization normalize_certificate(const Multigraph& g, const FulkersonCover& cover,
                                    EdgeId xy, NormalizeMode mode,
                                    const PortRoles& current) {
  const Edge& ed = g.edge(xy);
  int x = g.vertex_index(current.x), y = g.vertex_index(current.y);
  if (!((ed.u == x && ed.v == y) || (ed.u == y && ed.v == x)))
    throw GraphError("normalize_certificate: edge does not join the designated x and y");
  if (g.degree(x) != 3 || g.degree(y) != 3)
    throw GraphError("normalize_certificate: endpoints must have degree 3");
  CoverVerification cv = verify_cover(g, cover);
  if (!cv.pass) throw GraphError("unverified cover: " + cv.reason);

  auto certificate_touches = [&](const Certificate& cert, int v) {
    for (EdgeId e : cert.e0) {
      const Edge& c = g.edge(e);
      if (c.u == v || c.v == v) return true;
    }
    for (EdgeId e : cert.e2) {
      const Edge& c = g.edge(e);
      if (c.u == v || c.v == v) return true;
    }
    return false;
  };

  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int l = j + 1; l <= 6; ++l) {
        std::array<int, 3> triple{i, j, l};
        Certificate cert = extract_certificate(g, cover, triple);
        if (mode == NormalizeMode::Avoid) {
          if (certificate_touches(cert, x) || certificate_touches(cert, y)) continue;
          return {triple, current};
        }
        if (!edgeset::contains(cert.e2, xy)) continue;
        // xy in e2 forces exactly one e0 edge at each endpoint; its far end
        // becomes the 0-labeled port.
        auto e0_port = [&](int v) -> std::optional<int> {
          for (EdgeId e : g.incident_edges(v))
            if (edgeset::contains(cert.e0, e)) return g.other_end(e, v);
          return std::nullopt;
        };
        auto px = e0_port(x), py = e0_port(y);
        if (!px || !py) continue;
        if (*px == x || *px == y || *py == x || *py == y) continue;
        auto third_port = [&](int v, int zero_port) -> std::optional<int> {
          for (EdgeId e : g.incident_edges(v)) {
            if (e == xy) continue;
            int w = g.other_end(e, v);
            if (w == zero_port) {
              zero_port = -1;  // consume one occurrence
              continue;
            }
            return w;
          }
          return std::nullopt;
        };
        auto qx = third_port(x, *px), qy = third_port(y, *py);
        if (!qx || !qy) continue;
        if (*qx == x || *qx == y || *qy == x || *qy == y) continue;
        PortRoles roles = current;
        roles.x0 = g.vertex_name(*px);
        roles.x1 = g.vertex_name(*qx);
        roles.y0 = g.vertex_name(*py);
        roles.y1 = g.vertex_name(*qy);
        return {triple, roles};
      }
  throw GraphError("normalize_certificate: no qualifying triple for mode " +
                   std::string(mode == NormalizeMode::Through ? "through" : "avoid"));
}

ColoringAssignment two_factor_to_coloring(const Multigraph& g, const TwoFactor& f) {
  g.validate_edge_set(f.members);
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : f.members) {
    const Edge& ed = g.edge(e);
    ++deg[ed.u];
    ++deg[ed.v];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[v] != 2)
      throw GraphError("two_factor_to_coloring: not spanning 2-regular at vertex '" +
                       g.vertex_name(v) + "'");
  EvenComponents ec = even_components(g, f.members);
  if (!ec.ok) throw GraphError("two_factor_to_coloring: " + ec.reason);
  for (const auto& circuit : ec.circuits)
    if (circuit.size() % 2 != 0)
      throw GraphError("two_factor_to_coloring: odd circuit present");

  ColoringAssignment col;
  for (const auto& circuit : ec.circuits) {
    int c = 1;
    for (EdgeId e : circuit) {
      col[e] = c;
      c = 3 - c;
    }
  }
  for (const Edge& ed : g.edges())
    if (!col.count(ed.id)) col[ed.id] = 3;
  if (!is_proper_coloring(g, col))
    throw GraphError("two_factor_to_coloring: produced coloring is not proper");
  return col;
}

std::optional<TwoFactor> coloring_to_two_factor(const Multigraph& g,
                                                const ColoringAssignment& col,
                                                const EdgeSet& must_contain,
                                                const EdgeSet& must_avoid) {
  if (!is_proper_coloring(g, col))
    throw GraphError("coloring_to_two_factor requires a proper coloring");
  const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& [ca, cb] : pairs) {
    EdgeSet members;
    for (const Edge& ed : g.edges()) {
      int c = col.at(ed.id);
      if (c == ca || c == cb) members.push_back(ed.id);
    }
    members = edgeset::normalized(members);
    bool ok = true;
    for (EdgeId e : must_contain)
      if (!edgeset::contains(members, e)) {
        ok = false;
        break;
      }
    if (ok)
      for (EdgeId e : must_avoid)
        if (edgeset::contains(members, e)) {
          ok = false;
          break;
        }
    if (!ok) continue;
    TwoFactor f;
    f.members = members;
    EvenComponents ec = even_components(g, members);
    f.all_even = ec.ok;
    return f;
  }
  return std::nullopt;
}

AlternationCheck check_alternation(const Certificate& cert,
                                   const CertificateStructure& s) {
  AlternationCheck out;
  auto check_side = [&](const SplitSuppression& sup, const EdgeSet& doubled,
                        const char* label) {
    for (const auto& [sid, path] : sup.cubic.path_map) {
      if (path.size() % 2 != 1) {
        out.reason = std::string(label) + ": path for suppressed edge " +
                     std::to_string(sid) + " has even length";
        return false;
      }
      for (size_t i = 0; i < path.size(); ++i) {
        bool in_doubled = edgeset::contains(doubled, path[i]);
        if ((i % 2 == 0) == in_doubled) {
          out.reason = std::string(label) + ": alternation violated on suppressed edge " +
                       std::to_string(sid);
          return false;
        }
      }
    }
    for (const auto& circuit : sup.circuits) {
      for (size_t i = 0; i < circuit.size(); ++i) {
        bool a = edgeset::contains(doubled, circuit[i]);
        bool b = edgeset::contains(doubled, circuit[(i + 1) % circuit.size()]);
        if (a == b) {
          out.reason = std::string(label) + ": circuit component does not alternate";
          return false;
        }
      }
    }
    return true;
  };
  if (!check_side(s.sup0, cert.e2, "e0 side")) return out;
  if (!check_side(s.sup2, cert.e0, "e2 side")) return out;
  out.ok = true;
  return out;
}

}  // namespace snarkforge
