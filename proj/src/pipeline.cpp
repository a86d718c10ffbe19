#include "snarkforge/pipeline.hpp"

#include <algorithm>
#include <set>

#include "snarkforge/parallel.hpp"

namespace snarkforge {

namespace {

BlockMode mode_for(int k, int i) {
  if (k % 2 == 0) return (i % 2 == 0) ? BlockMode::Avoid : BlockMode::Through;
  return (i == 0 || i % 2 == 1) ? BlockMode::Through : BlockMode::Avoid;
}

}  // namespace

CertificatePlan plan_block_certificates(const std::vector<PortedGraph>& ports,
                                        const std::vector<FulkersonCover>& covers) {
  if (ports.size() != covers.size())
    throw GraphError("plan requires one cover per base graph");
  int k = static_cast<int>(ports.size());
  CertificatePlan plan;
  plan.k = k;
  if (k == 1) {
    plan.bypass = true;
    return plan;
  }
  plan.blocks.resize(k);
  parallel_for(k, [&](int i) {
    const PortedGraph& pg = ports[i];
    CoverVerification cv = verify_cover(pg.graph, covers[i]);
    if (!cv.pass)
      throw GraphError("base cover " + std::to_string(i) + " invalid: " + cv.reason);
    BlockMode mode = mode_for(k, i);
    Normalization norm = normalize_certificate(
        pg.graph, covers[i], pg.xy_edge,
        mode == BlockMode::Through ? NormalizeMode::Through : NormalizeMode::Avoid,
        pg.ports);

    BlockPlan bp;
    bp.mode = mode;
    bp.triple = norm.triple;
    bp.ports = PortedGraph::create(pg.graph, norm.roles);
    bp.cert = extract_certificate(pg.graph, covers[i], norm.triple);
    bp.structure = check_certificate_structure(pg.graph, bp.cert);
    if (!bp.structure.pass)
      throw GraphError("block " + std::to_string(i) +
                       " certificate anomaly: " + bp.structure.reason);
    if (mode == BlockMode::Through) {
      int x = pg.graph.vertex_index(norm.roles.x);
      int y = pg.graph.vertex_index(norm.roles.y);
      for (EdgeId e : pg.graph.incident_edges(x))
        if (edgeset::contains(bp.cert.e0, e)) bp.e0_at_x = e;
      for (EdgeId e : pg.graph.incident_edges(y))
        if (edgeset::contains(bp.cert.e0, e)) bp.e0_at_y = e;
      if (bp.e0_at_x < 0 || bp.e0_at_y < 0)
        throw GraphError("block " + std::to_string(i) +
                         " certificate anomaly: missing e0 edge at x or y");
    }
    auto col0 = three_edge_coloring(bp.structure.sup0.cubic.suppressed);
    auto col2 = three_edge_coloring(bp.structure.sup2.cubic.suppressed);
    if (!col0 || !col2)
      throw GraphError("block " + std::to_string(i) +
                       " certificate anomaly: suppressed graph not 3-edge-colorable");
    bp.col0 = std::move(*col0);
    bp.col2 = std::move(*col2);
    plan.blocks[i] = std::move(bp);
  });
  return plan;
}

namespace {

// Which of the block's certificate sides is deleted on the given global
// side. The formulas route block 1's E^0 into the global E0 (and E^2 into
// E2); every other block routes E^2 into E0 and E^0 into E2.
bool deleted_side_is_e2(int block, int side) {
  return (block == 1) ? (side == 2) : (side == 0);
}

EdgeId composed_edge(const Multigraph& g, const std::string& u, const std::string& v) {
  auto e = g.edge_between(u, v);
  if (!e) throw GraphError("assembly mismatch: expected edge " + u + "-" + v + " missing");
  return *e;
}

// Maps the interior part of a block certificate side into the composed
// graph, checking that the edges stripped at x/y are exactly the boundary
// terms the formulas subtract.
EdgeSet mapped_interior(const FamilyDescriptor& d, int i, const BlockPlan& bp,
                        const EdgeSet& s, const EdgeSet& expected_removed) {
  const Multigraph& bg = bp.ports.graph;
  int x = bg.vertex_index(bp.ports.ports.x);
  int y = bg.vertex_index(bp.ports.ports.y);
  EdgeSet interior, removed;
  for (EdgeId e : s) {
    const Edge& ed = bg.edge(e);
    if (ed.u == x || ed.u == y || ed.v == x || ed.v == y)
      removed.push_back(e);
    else
      interior.push_back(e);
  }
  if (edgeset::normalized(removed) != edgeset::normalized(expected_removed))
    throw GraphError("assembly mismatch: unexpected boundary terms in block " +
                     std::to_string(i));
  return map_block_edges(d, i, edgeset::normalized(interior));
}

}  // namespace

Certificate assemble_certificate(const Multigraph& g, const FamilyDescriptor& d,
                                 const CertificatePlan& plan) {
  int k = d.k;
  if (k < 3) throw GraphError("assemble_certificate requires k >= 3 (k=2 uses the oracle fallback)");
  if (plan.k != k || static_cast<int>(plan.blocks.size()) != k)
    throw GraphError("plan does not match family size");

  EdgeSet ge0, ge2;
  for (int i = 0; i < k; ++i) {
    const BlockPlan& bp = plan.blocks[i];
    for (int side : {0, 2}) {
      bool is_e2 = deleted_side_is_e2(i, side);
      const EdgeSet& s = is_e2 ? bp.cert.e2 : bp.cert.e0;
      EdgeSet expected;
      if (bp.mode == BlockMode::Through)
        expected = is_e2 ? EdgeSet{bp.ports.xy_edge}
                         : edgeset::normalized({bp.e0_at_x, bp.e0_at_y});
      EdgeSet mapped = mapped_interior(d, i, bp, s, expected);
      EdgeSet& target = (side == 0) ? ge0 : ge2;
      target = edgeset::set_union(target, mapped);
    }
  }

  auto edge = [&](const std::string& u, const std::string& v) {
    return composed_edge(g, u, v);
  };
  EdgeSet gadget0, gadget2;
  if (k % 2 == 0) {
    for (int i = 2; i <= k - 1; ++i) gadget0.push_back(edge(d.a[i], d.c[i]));
    for (int j = 1; j <= (k - 4) / 2; ++j)
      gadget0.push_back(edge(d.v[2 * j - 1], d.v[2 * j]));
    gadget0.push_back(edge(d.c[0], d.v[k - 3]));
    gadget0.push_back(edge(d.c[1], d.v[0]));
    gadget0.push_back(d.blocks[1].boundary.at("y0"));
    gadget0.push_back(d.blocks[1].boundary.at("x0"));

    for (int j = 1; j <= (k - 2) / 2; ++j) {
      gadget2.push_back(d.blocks[2 * j + 1].boundary.at("y0"));
      gadget2.push_back(d.blocks[2 * j + 1].boundary.at("x0"));
    }
    for (int i = 2; i <= k - 1; ++i) gadget2.push_back(edge(d.v[i - 2], d.c[i]));
    gadget2.push_back(edge(d.a[0], d.c[0]));
    gadget2.push_back(edge(d.a[1], d.c[1]));
  } else {
    gadget0.push_back(d.blocks[1].boundary.at("y0"));
    gadget0.push_back(d.blocks[1].boundary.at("x0"));
    gadget0.push_back(edge(d.c[1], d.v[0]));
    for (int i = 2; i <= k - 1; ++i) gadget0.push_back(edge(d.a[i], d.c[i]));
    for (int j = 0; j <= (k - 5) / 2; ++j)
      gadget0.push_back(edge(d.v[2 * j + 1], d.v[2 * j + 2]));

    gadget2.push_back(edge(d.a[1], d.c[1]));
    // Odd k pairs a_{2i} with x_{2i+1}^0 and a_{2i+1} with y_{2i+1}^0; at
    // 2i+1 = k the boundary lookup wraps to block 0, whose x0/y0 ports
    // attach to a_{k-1} and a_0 by the cyclic contract.
    for (int i = 1; i <= (k - 1) / 2; ++i) {
      int block = (2 * i + 1) % k;
      gadget2.push_back(d.blocks[block].boundary.at("x0"));
      gadget2.push_back(d.blocks[block].boundary.at("y0"));
    }
    for (int i = 2; i <= k - 1; ++i) gadget2.push_back(edge(d.v[i - 2], d.c[i]));
  }

  Certificate cert;
  cert.e0 = edgeset::set_union(ge0, edgeset::normalized(gadget0));
  cert.e2 = edgeset::set_union(ge2, edgeset::normalized(gadget2));
  if (!edgeset::intersection(cert.e0, cert.e2).empty())
    throw GraphError("assembly mismatch: assembled E0 and E2 overlap");
  return cert;
}

namespace {

// A path or circuit of the block suppression scheduled for cutting at x/y.
struct CutItem {
  std::vector<EdgeId> edges;  // original G_i edge ids
};

}  // namespace

TwoFactor assemble_two_factor(const Multigraph& g, const FamilyDescriptor& d,
                              const CertificatePlan& plan,
                              const Certificate& global_cert,
                              const CertificateStructure& global_structure,
                              int side) {
  if (side != 0 && side != 2) throw GraphError("side must be 0 or 2");
  if (!global_structure.pass)
    throw GraphError("assemble_two_factor requires a passing certificate structure");
  const EdgeSet& side_set = (side == 0) ? global_cert.e0 : global_cert.e2;
  const SplitSuppression& gsup = (side == 0) ? global_structure.sup0 : global_structure.sup2;

  std::set<EdgeId> F;

  for (int i = 0; i < d.k; ++i) {
    const BlockPlan& bp = plan.blocks[i];
    const Multigraph& bg = bp.ports.graph;
    bool is_e2 = deleted_side_is_e2(i, side);
    const SplitSuppression& bsup = is_e2 ? bp.structure.sup2 : bp.structure.sup0;
    const ColoringAssignment& bcol = is_e2 ? bp.col2 : bp.col0;
    int x = bg.vertex_index(bp.ports.ports.x);
    int y = bg.vertex_index(bp.ports.ports.y);

    auto touches = [&](EdgeId e, int v) {
      const Edge& ed = bg.edge(e);
      return ed.u == v || ed.v == v;
    };
    auto touches_xy = [&](EdgeId e) { return touches(e, x) || touches(e, y); };

    // Suppressed edge whose mapped path contains the given original edge.
    auto locate_path = [&](EdgeId orig) -> std::optional<EdgeId> {
      for (const auto& [sid, path] : bsup.cubic.path_map)
        for (EdgeId e : path)
          if (e == orig) return sid;
      return std::nullopt;
    };
    auto locate_circuit = [&](EdgeId orig) -> std::optional<int> {
      for (size_t ci = 0; ci < bsup.circuits.size(); ++ci)
        for (EdgeId e : bsup.circuits[ci])
          if (e == orig) return static_cast<int>(ci);
      return std::nullopt;
    };

    EdgeSet contain, avoid_edges;
    std::map<int, CutItem> cuts;  // keyed by sid (>=0) or -(circuit index + 1)
    auto schedule_cut = [&](EdgeId orig) {
      if (auto sid = locate_path(orig)) {
        contain.push_back(*sid);
        cuts[*sid] = {bsup.cubic.path_map.at(*sid)};
      } else if (auto ci = locate_circuit(orig)) {
        cuts[-(*ci + 1)] = {bsup.circuits[*ci]};
      } else {
        throw GraphError("assembly mismatch: cut target edge not found in block " +
                         std::to_string(i));
      }
    };

    if (bp.mode == BlockMode::Avoid) {
      // Cut the four port connections at x and y (the xy edge survives
      // suppression as its own edge and stays out of the block 2-factor).
      for (EdgeId e : bg.incident_edges(x))
        if (e != bp.ports.xy_edge) schedule_cut(e);
      for (EdgeId e : bg.incident_edges(y))
        if (e != bp.ports.xy_edge) schedule_cut(e);
    } else if (is_e2) {
      // Deleted side contains xy: the block piece loses the paths through x
      // and through y.
      schedule_cut(bp.e0_at_x);
      schedule_cut(bp.e0_at_y);
    } else {
      // Whole-use side: the path through y,x must stay out of the 2-factor.
      if (auto sid = locate_path(bp.ports.xy_edge)) avoid_edges.push_back(*sid);
      // If xy sits on a circuit component it is excluded automatically.
    }

    contain = edgeset::normalized(contain);
    avoid_edges = edgeset::normalized(avoid_edges);

    if (bsup.cubic.suppressed.edge_count() > 0) {
      auto tf = coloring_to_two_factor(bsup.cubic.suppressed, bcol, contain, avoid_edges);
      if (!tf)
        throw GraphError("assembly mismatch: block " + std::to_string(i) +
                         " 2-factor constraints unsatisfiable");
      for (EdgeId sid : tf->members) {
        if (edgeset::contains(contain, sid)) continue;  // cut below
        for (EdgeId oe : bsup.cubic.path_map.at(sid)) {
          if (touches_xy(oe))
            throw GraphError("assembly mismatch: kept block path touches x or y");
          F.insert(d.blocks[i].edge_image.at(oe));
        }
      }
    }

    for (const auto& [key, item] : cuts) {
      (void)key;
      for (EdgeId oe : item.edges) {
        if (!touches_xy(oe)) {
          F.insert(d.blocks[i].edge_image.at(oe));
          continue;
        }
        const Edge& ed = bg.edge(oe);
        for (int end : {ed.u, ed.v}) {
          if (end == x || end == y) continue;
          const std::string& port_name = bg.vertex_name(end);
          std::string bkey;
          if (touches(oe, x))
            bkey = (port_name == bp.ports.ports.x0) ? "x0" : "x1";
          else
            bkey = (port_name == bp.ports.ports.y0) ? "y0" : "y1";
          F.insert(d.blocks[i].boundary.at(bkey));
        }
      }
    }
  }

  if (d.k % 2 == 1) F.insert(composed_edge(g, d.b[0], d.c[0]));

  // Forced completion: a degree-2 vertex of Γ\side with exactly one incident
  // F-edge extends through its other present edge.
  int n = g.vertex_count();
  std::vector<int> present_deg(n, 0), fdeg(n, 0);
  for (const Edge& ed : g.edges()) {
    if (edgeset::contains(side_set, ed.id)) continue;
    ++present_deg[ed.u];
    ++present_deg[ed.v];
  }
  for (EdgeId e : F) {
    if (edgeset::contains(side_set, e))
      throw GraphError("assembly mismatch: 2-factor uses a deleted edge");
    const Edge& ed = g.edge(e);
    ++fdeg[ed.u];
    ++fdeg[ed.v];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (present_deg[v] != 2 || fdeg[v] != 1) continue;
      for (EdgeId e : g.incident_edges(v)) {
        if (edgeset::contains(side_set, e) || F.count(e)) continue;
        F.insert(e);
        const Edge& ed = g.edge(e);
        ++fdeg[ed.u];
        ++fdeg[ed.v];
        changed = true;
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (present_deg[v] == 3 && fdeg[v] != 2)
      throw GraphError("assembly mismatch: suppressed vertex '" + g.vertex_name(v) +
                       "' has 2-factor degree " + std::to_string(fdeg[v]));
    if (present_deg[v] == 2 && fdeg[v] != 0 && fdeg[v] != 2)
      throw GraphError("assembly mismatch: interior vertex '" + g.vertex_name(v) +
                       "' has 2-factor degree " + std::to_string(fdeg[v]));
  }

  // Project onto the suppressed composed graph: every mapped path is wholly
  // in or wholly out.
  TwoFactor tf;
  for (const auto& [sid, path] : gsup.cubic.path_map) {
    size_t in = 0;
    for (EdgeId e : path)
      if (F.count(e)) ++in;
    if (in == path.size())
      tf.members.push_back(sid);
    else if (in != 0)
      throw GraphError("assembly mismatch: partial path in assembled 2-factor");
  }
  for (const auto& circuit : gsup.circuits)
    for (EdgeId e : circuit)
      if (F.count(e))
        throw GraphError("assembly mismatch: 2-factor touches a circuit component");
  tf.members = edgeset::normalized(tf.members);

  EvenComponents ec = even_components(gsup.cubic.suppressed, tf.members);
  tf.all_even = ec.ok;
  for (const auto& circuit : ec.circuits)
    if (circuit.size() % 2 != 0) tf.all_even = false;
  return tf;
}

PipelineResult construct_cover(const std::vector<PortedGraph>& ports,
                               const std::vector<FulkersonCover>& covers,
                               const PipelineOptions& opts) {
  if (ports.empty()) throw GraphError("construct_cover requires at least one base");
  if (ports.size() != covers.size())
    throw GraphError("construct_cover requires one cover per base");
  int k = static_cast<int>(ports.size());

  PipelineResult res;
  for (int i = 0; i < k; ++i) {
    CoverVerification cv = verify_cover(ports[i].graph, covers[i]);
    if (!cv.pass)
      throw GraphError("base cover " + std::to_string(i) + " invalid: " + cv.reason);
  }

  if (k == 1) {
    res.graph = ports[0].graph;
    res.cover = covers[0];
    res.cover_check = verify_cover(res.graph, res.cover);
    res.ok = true;
    res.stage = "bypass-k1";
    return res;
  }

  if (k == 2) {
    auto [g, d] = build_family(ports);
    res.graph = std::move(g);
    res.descriptor = std::move(d);
    res.stage = "oracle-fallback";
    CoverSearchResult search = find_fulkerson_cover(res.graph, opts.oracle_budget);
    if (search.status != CoverSearchStatus::Found) {
      res.reason = search.status == CoverSearchStatus::BudgetExceeded
                       ? "oracle budget exceeded"
                       : "oracle proved no cover exists";
      return res;
    }
    res.cover = std::move(search.cover);
    res.cover_check = verify_cover(res.graph, res.cover);
    res.ok = res.cover_check.pass;
    if (!res.ok) res.reason = res.cover_check.reason;
    return res;
  }

  res.plan = plan_block_certificates(ports, covers);
  std::vector<PortedGraph> planned;
  planned.reserve(k);
  for (const BlockPlan& bp : res.plan.blocks) planned.push_back(bp.ports);
  {
    auto [g, d] = build_family(planned);
    res.graph = std::move(g);
    res.descriptor = std::move(d);
  }
  res.certificate = assemble_certificate(res.graph, res.descriptor, res.plan);

  CertificateStructure structure = check_certificate_structure(res.graph, res.certificate);
  if (!structure.pass) {
    res.stage = "certificate-structure";
    res.reason = structure.reason;
    return res;
  }

  if (opts.constructive) {
    TwoFactor tf0 =
        assemble_two_factor(res.graph, res.descriptor, res.plan, res.certificate, structure, 0);
    TwoFactor tf2 =
        assemble_two_factor(res.graph, res.descriptor, res.plan, res.certificate, structure, 2);
    ColoringAssignment col0 = two_factor_to_coloring(structure.sup0.cubic.suppressed, tf0);
    ColoringAssignment col2 = two_factor_to_coloring(structure.sup2.cubic.suppressed, tf2);
    res.report = verify_certificate_with_colorings(res.graph, res.certificate, col0, col2);
  } else {
    res.report = verify_certificate(res.graph, res.certificate);
  }
  if (!res.report.pass) {
    res.stage = "verify-certificate";
    res.reason = res.report.reason;
    return res;
  }

  res.cover = lift_certificate(res.graph, res.report);
  res.cover_check = verify_cover(res.graph, res.cover);
  if (!res.cover_check.pass) {
    res.stage = "verify-cover";
    res.reason = res.cover_check.reason;
    return res;
  }

  std::set<std::string> on_cycle;
  for (const EdgeSet* s : {&res.certificate.e0, &res.certificate.e2})
    for (EdgeId e : *s) {
      const Edge& ed = res.graph.edge(e);
      on_cycle.insert(res.graph.vertex_name(ed.u));
      on_cycle.insert(res.graph.vertex_name(ed.v));
    }
  for (const auto& group : {res.descriptor.a, res.descriptor.b, res.descriptor.c,
                            res.descriptor.v})
    for (const std::string& name : group)
      res.landmarks_on_cycle[name] = on_cycle.count(name) != 0;

  res.ok = true;
  res.stage = "complete";
  return res;
}

}  // namespace snarkforge
