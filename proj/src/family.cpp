#include "snarkforge/family.hpp"

#include <algorithm>

namespace snarkforge {

namespace {

std::string block_prefix(int i) { return "g" + std::to_string(i) + ":"; }

// Sorted multiset of neighbor names across v's incident edges.
std::vector<std::string> neighbor_names(const Multigraph& g, int v) {
  std::vector<std::string> out;
  for (EdgeId e : g.incident_edges(v)) out.push_back(g.vertex_name(g.other_end(e, v)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PortedGraph PortedGraph::create(Multigraph g, PortRoles roles) {
  PortedGraph p;
  if (!g.is_cubic()) throw GraphError("ported graph must be cubic");
  int x = g.vertex_index(roles.x);
  int y = g.vertex_index(roles.y);
  auto xy = g.edge_between(roles.x, roles.y);
  if (!xy) throw GraphError("designated edge " + roles.x + "-" + roles.y + " not present");
  if (roles.x0 == roles.x1)
    throw GraphError("x ports must be distinct (x0 = x1 = " + roles.x0 + ")");
  if (roles.y0 == roles.y1)
    throw GraphError("y ports must be distinct (y0 = y1 = " + roles.y0 + ")");
  for (const std::string* port : {&roles.x0, &roles.x1, &roles.y0, &roles.y1})
    if (*port == roles.x || *port == roles.y)
      throw GraphError("port '" + *port + "' collides with x or y");

  auto expect_ports = [&](int v, const std::string& skip_once, const std::string& p0,
                          const std::string& p1) {
    std::vector<std::string> nb = neighbor_names(g, v);
    auto it = std::find(nb.begin(), nb.end(), skip_once);
    if (it == nb.end())
      throw GraphError("vertex '" + g.vertex_name(v) + "' not adjacent to '" + skip_once + "'");
    nb.erase(it);
    std::vector<std::string> want{p0, p1};
    std::sort(want.begin(), want.end());
    if (nb != want)
      throw GraphError("ports of '" + g.vertex_name(v) + "' must be its neighbors besides '" +
                       skip_once + "'");
  };
  expect_ports(x, roles.y, roles.x0, roles.x1);
  expect_ports(y, roles.x, roles.y0, roles.y1);

  p.graph = std::move(g);
  p.ports = std::move(roles);
  p.xy_edge = *xy;
  return p;
}

namespace {

struct BlockPieces {
  std::vector<std::string> vertices;                            // composed names
  std::vector<std::pair<std::string, std::string>> edges;      // interior edges
  std::vector<EdgeId> interior_ids;                             // matching G_i ids
  std::map<std::string, std::string> vertex_image;
};

BlockPieces block_pieces(const PortedGraph& p, int index) {
  BlockPieces out;
  const std::string prefix = block_prefix(index);
  const Multigraph& g = p.graph;
  int x = g.vertex_index(p.ports.x), y = g.vertex_index(p.ports.y);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == x || v == y) continue;
    out.vertices.push_back(prefix + g.vertex_name(v));
    out.vertex_image[g.vertex_name(v)] = prefix + g.vertex_name(v);
  }
  for (const Edge& ed : g.edges()) {
    if (ed.u == x || ed.u == y || ed.v == x || ed.v == y) continue;
    out.edges.emplace_back(prefix + g.vertex_name(ed.u), prefix + g.vertex_name(ed.v));
    out.interior_ids.push_back(ed.id);
  }
  return out;
}

std::string img(const BlockInfo& b, const std::string& name) {
  return b.vertex_image.at(name);
}

}  // namespace

std::pair<Multigraph, FamilyDescriptor> build_base(const PortedGraph& p0,
                                                   const PortedGraph& p1) {
  BlockPieces h0 = block_pieces(p0, 0);
  BlockPieces h1 = block_pieces(p1, 1);

  std::vector<std::string> vertices = h0.vertices;
  vertices.insert(vertices.end(), h1.vertices.begin(), h1.vertices.end());
  for (const char* lm : {"a0", "b0", "c0", "a1", "b1", "c1"}) vertices.push_back(lm);

  FamilyDescriptor d;
  d.k = 2;
  d.a = {"a0", "a1"};
  d.b = {"b0", "b1"};
  d.c = {"c0", "c1"};
  d.blocks.resize(2);
  d.blocks[0].source = p0;
  d.blocks[0].vertex_image = h0.vertex_image;
  d.blocks[1].source = p1;
  d.blocks[1].vertex_image = h1.vertex_image;

  std::vector<std::pair<std::string, std::string>> edges = h0.edges;
  edges.insert(edges.end(), h1.edges.begin(), h1.edges.end());
  EdgeId next = static_cast<EdgeId>(edges.size());
  for (size_t i = 0; i < h0.interior_ids.size(); ++i)
    d.blocks[0].edge_image[h0.interior_ids[i]] = static_cast<EdgeId>(i);
  for (size_t i = 0; i < h1.interior_ids.size(); ++i)
    d.blocks[1].edge_image[h1.interior_ids[i]] =
        static_cast<EdgeId>(h0.interior_ids.size() + i);

  // The 13 gadget edges of the base construction, in a fixed order.
  auto push = [&](const std::string& u, const std::string& v) {
    edges.emplace_back(u, v);
    return next++;
  };
  d.blocks[0].boundary["y0"] = push("a0", img(d.blocks[0], p0.ports.y0));
  d.blocks[1].boundary["x0"] = push("a0", img(d.blocks[1], p1.ports.x0));
  push("a0", "c0");
  push("c0", "b0");
  d.blocks[0].boundary["y1"] = push("b0", img(d.blocks[0], p0.ports.y1));
  d.blocks[1].boundary["x1"] = push("b0", img(d.blocks[1], p1.ports.x1));
  d.blocks[0].boundary["x1"] = push("b1", img(d.blocks[0], p0.ports.x1));
  d.blocks[1].boundary["y1"] = push("b1", img(d.blocks[1], p1.ports.y1));
  push("b1", "c1");
  push("c1", "a1");
  d.blocks[0].boundary["x0"] = push("a1", img(d.blocks[0], p0.ports.x0));
  d.blocks[1].boundary["y0"] = push("a1", img(d.blocks[1], p1.ports.y0));
  d.chain = {push("c0", "c1")};

  Multigraph g = Multigraph::make(vertices, edges);
  return {std::move(g), std::move(d)};
}

std::pair<Multigraph, FamilyDescriptor> extend(const Multigraph& g,
                                               const FamilyDescriptor& d,
                                               const PortedGraph& p) {
  if (d.k != static_cast<int>(d.blocks.size()) || d.k < 2)
    throw GraphError("descriptor/graph mismatch: bad block count");
  int nb = d.k;  // index of the block being added
  FamilyDescriptor nd = d;
  const std::string vname = "v" + std::to_string(nb - 2);
  const std::string an = "a" + std::to_string(nb);
  const std::string bn = "b" + std::to_string(nb);
  const std::string cn = "c" + std::to_string(nb);

  // e0 is the unique chain edge at c0.
  EdgeId e0 = d.chain.front();
  auto [g1, halves] = g.insert_vertex_on_edge(e0, vname);
  EdgeId c0_half = halves.first, other_half = halves.second;
  {
    const Edge& ed = g1.edge(c0_half);
    bool touches_c0 = g1.vertex_name(ed.u) == "c0" || g1.vertex_name(ed.v) == "c0";
    if (!touches_c0) std::swap(c0_half, other_half);
  }
  nd.chain.erase(nd.chain.begin());
  nd.chain.insert(nd.chain.begin(), {c0_half, other_half});
  nd.v.push_back(vname);

  // Detach block 0's x ports from the previous last gadget pair.
  EdgeId old_x0 = d.blocks[0].boundary.at("x0");
  EdgeId old_x1 = d.blocks[0].boundary.at("x1");
  Multigraph g2 = [&] {
    try {
      return g1.delete_edges(edgeset::normalized({old_x0, old_x1}));
    } catch (const GraphError& err) {
      throw GraphError(std::string("missing expected edge during rewiring: ") + err.what());
    }
  }();

  BlockPieces h = block_pieces(p, nb);
  BlockInfo nb_info;
  nb_info.source = p;
  nb_info.vertex_image = h.vertex_image;

  std::vector<std::string> new_vertices = h.vertices;
  new_vertices.insert(new_vertices.end(), {an, bn, cn});
  std::vector<std::pair<std::string, std::string>> new_edges = h.edges;

  const std::string prev_a = "a" + std::to_string(nb - 1);
  const std::string prev_b = "b" + std::to_string(nb - 1);
  const std::string x00_img = d.blocks[0].vertex_image.at(d.blocks[0].source.ports.x0);
  const std::string x01_img = d.blocks[0].vertex_image.at(d.blocks[0].source.ports.x1);
  size_t gadget_at = new_edges.size();
  new_edges.emplace_back(an, x00_img);
  new_edges.emplace_back(an, img(nb_info, p.ports.y0));
  new_edges.emplace_back(bn, x01_img);
  new_edges.emplace_back(bn, img(nb_info, p.ports.y1));
  new_edges.emplace_back(prev_a, img(nb_info, p.ports.x0));
  new_edges.emplace_back(prev_b, img(nb_info, p.ports.x1));
  new_edges.emplace_back(cn, an);
  new_edges.emplace_back(cn, bn);
  new_edges.emplace_back(cn, vname);

  auto [g3, new_ids] = g2.with_additions(new_vertices, new_edges);
  for (size_t i = 0; i < h.interior_ids.size(); ++i)
    nb_info.edge_image[h.interior_ids[i]] = new_ids[i];
  nd.blocks.push_back(nb_info);
  BlockInfo& added = nd.blocks.back();
  nd.blocks[0].boundary["x0"] = new_ids[gadget_at + 0];
  added.boundary["y0"] = new_ids[gadget_at + 1];
  nd.blocks[0].boundary["x1"] = new_ids[gadget_at + 2];
  added.boundary["y1"] = new_ids[gadget_at + 3];
  added.boundary["x0"] = new_ids[gadget_at + 4];
  added.boundary["x1"] = new_ids[gadget_at + 5];

  nd.a.push_back(an);
  nd.b.push_back(bn);
  nd.c.push_back(cn);
  nd.k = nb + 1;
  return {std::move(g3), std::move(nd)};
}

namespace {

void remap_descriptor(FamilyDescriptor& d, const std::map<EdgeId, EdgeId>& remap) {
  for (auto& block : d.blocks) {
    for (auto& [orig, composed] : block.edge_image) composed = remap.at(composed);
    for (auto& [key, e] : block.boundary) e = remap.at(e);
  }
  for (auto& e : d.chain) e = remap.at(e);
}

}  // namespace

std::pair<Multigraph, FamilyDescriptor> build_family(const std::vector<PortedGraph>& ports) {
  if (ports.size() < 2) throw GraphError("build_family requires k >= 2");
  auto [g, d] = build_base(ports[0], ports[1]);
  for (size_t i = 2; i < ports.size(); ++i) {
    auto [g2, d2] = extend(g, d, ports[i]);
    g = std::move(g2);
    d = std::move(d2);
  }
  auto [gc, remap] = g.compacted();
  remap_descriptor(d, remap);
  validate_family(gc, d);
  return {std::move(gc), std::move(d)};
}

EdgeSet map_block_edges(const FamilyDescriptor& d, int block, const EdgeSet& s) {
  if (block < 0 || block >= d.k) throw GraphError("block index out of range");
  const BlockInfo& b = d.blocks[block];
  const Multigraph& g = b.source.graph;
  int x = g.vertex_index(b.source.ports.x), y = g.vertex_index(b.source.ports.y);
  EdgeSet out;
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    if (ed.u == x || ed.u == y || ed.v == x || ed.v == y)
      throw GraphError("subtract boundary terms first: edge " + std::to_string(e) +
                       " touches x or y");
    out.push_back(b.edge_image.at(e));
  }
  return edgeset::normalized(out);
}

void validate_family(const Multigraph& g, const FamilyDescriptor& d) {
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw GraphError("family contract violated: " + what);
  };
  int k = d.k;
  require(k >= 2 && static_cast<int>(d.blocks.size()) == k, "block count");
  require(g.is_cubic(), "composed graph not cubic");

  auto adjacent = [&](const std::string& u, const std::string& v) {
    return g.edge_between(u, v).has_value();
  };
  for (int j = 0; j < k; ++j) {
    const BlockInfo& bj = d.blocks[j];
    const BlockInfo& bnext = d.blocks[(j + 1) % k];
    require(adjacent(d.c[j], d.a[j]), d.c[j] + " ~ " + d.a[j]);
    require(adjacent(d.c[j], d.b[j]), d.c[j] + " ~ " + d.b[j]);
    require(adjacent(d.a[j], img(bj, bj.source.ports.y0)), d.a[j] + " ~ y" + std::to_string(j) + "0");
    require(adjacent(d.a[j], img(bnext, bnext.source.ports.x0)),
            d.a[j] + " ~ x" + std::to_string((j + 1) % k) + "0");
    require(adjacent(d.b[j], img(bj, bj.source.ports.y1)), d.b[j] + " ~ y" + std::to_string(j) + "1");
    require(adjacent(d.b[j], img(bnext, bnext.source.ports.x1)),
            d.b[j] + " ~ x" + std::to_string((j + 1) % k) + "1");
  }
  require(static_cast<int>(d.v.size()) == std::max(k - 2, 0), "v landmark count");
  if (k == 2) {
    require(d.chain.size() == 1 && adjacent("c0", "c1"), "chain c0-c1");
  } else {
    require(static_cast<int>(d.chain.size()) == k - 1, "chain length");
    require(adjacent("c0", d.v[k - 3]), "c0 ~ v" + std::to_string(k - 3));
    for (int i = k - 3; i > 0; --i)
      require(adjacent(d.v[i], d.v[i - 1]), "v-chain at v" + std::to_string(i));
    require(adjacent(d.v[0], "c1"), "v0 ~ c1");
    for (int i = 2; i <= k - 1; ++i)
      require(adjacent(d.c[i], d.v[i - 2]),
              "spoke c" + std::to_string(i) + " ~ v" + std::to_string(i - 2));
  }

  // Block images: interior edges present with the mapped endpoints, and
  // boundary edges attach the right gadget vertex to the right port.
  for (int i = 0; i < k; ++i) {
    const BlockInfo& b = d.blocks[i];
    const Multigraph& src = b.source.graph;
    for (const auto& [orig, composed] : b.edge_image) {
      const Edge& se = src.edge(orig);
      const Edge& ce = g.edge(composed);
      std::vector<std::string> want{img(b, src.vertex_name(se.u)),
                                    img(b, src.vertex_name(se.v))};
      std::vector<std::string> got{g.vertex_name(ce.u), g.vertex_name(ce.v)};
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      require(want == got, "edge image mismatch in block " + std::to_string(i));
    }
    auto check_boundary = [&](const std::string& key, const std::string& gadget,
                              const std::string& port_name) {
      const Edge& ce = g.edge(b.boundary.at(key));
      std::vector<std::string> got{g.vertex_name(ce.u), g.vertex_name(ce.v)};
      std::vector<std::string> want{gadget, img(b, port_name)};
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      require(got == want, "boundary " + key + " of block " + std::to_string(i));
    };
    int prev = (i + k - 1) % k;
    check_boundary("x0", d.a[prev], b.source.ports.x0);
    check_boundary("x1", d.b[prev], b.source.ports.x1);
    check_boundary("y0", d.a[i], b.source.ports.y0);
    check_boundary("y1", d.b[i], b.source.ports.y1);
  }
}

Multigraph petersen_graph() {
  std::vector<std::string> v;
  for (int i = 0; i < 10; ++i) v.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < 5; ++i) e.emplace_back(std::to_string(i), std::to_string((i + 1) % 5));
  for (int i = 0; i < 5; ++i) e.emplace_back(std::to_string(i), std::to_string(i + 5));
  for (int i = 0; i < 5; ++i)
    e.emplace_back(std::to_string(i + 5), std::to_string(5 + (i + 2) % 5));
  return Multigraph::make(v, e);
}

Multigraph k4_graph() {
  return Multigraph::make({"0", "1", "2", "3"},
                          {{"0", "1"}, {"0", "2"}, {"0", "3"}, {"1", "2"}, {"1", "3"}, {"2", "3"}});
}

Multigraph prism_graph() {
  return Multigraph::make({"0", "1", "2", "3", "4", "5"},
                          {{"0", "1"},
                           {"1", "2"},
                           {"2", "0"},
                           {"3", "4"},
                           {"4", "5"},
                           {"5", "3"},
                           {"0", "3"},
                           {"1", "4"},
                           {"2", "5"}});
}

bool is_builtin_name(const std::string& name) {
  return name == "petersen" || name == "k4" || name == "prism";
}

PortedGraph builtin_ported(const std::string& name) {
  if (name == "petersen")
    return PortedGraph::create(petersen_graph(), {"0", "1", "4", "5", "2", "6"});
  if (name == "k4")
    return PortedGraph::create(k4_graph(), {"0", "1", "2", "3", "2", "3"});
  if (name == "prism")
    return PortedGraph::create(prism_graph(), {"0", "3", "1", "2", "4", "5"});
  throw GraphError("unknown builtin graph '" + name + "'");
}

}  // namespace snarkforge
