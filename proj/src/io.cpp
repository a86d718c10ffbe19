#include "snarkforge/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace snarkforge {

using nlohmann::json;

json graph_to_json(const Multigraph& g) {
  for (int i = 0; i < g.edge_count(); ++i)
    if (g.edges()[i].id != i)
      throw GraphError("graph has non-contiguous edge ids; compact before serializing");
  json j;
  j["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const Edge& ed : g.edges())
    edges.push_back({g.vertex_name(ed.u), g.vertex_name(ed.v)});
  j["edges"] = std::move(edges);
  return j;
}

Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw GraphError("graph document must have 'vertices' and 'edges'");
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw GraphError("each edge must be a [u, v] pair");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Multigraph::make(vertices, edges);
}

json cover_to_json(const FulkersonCover& c) {
  json j;
  j["matchings"] = json::array();
  for (const auto& m : c.matchings) j["matchings"].push_back(m);
  return j;
}

FulkersonCover cover_from_json(const Multigraph& g, const json& j) {
  if (!j.is_object() || !j.contains("matchings"))
    throw GraphError("cover document must have 'matchings'");
  FulkersonCover c;
  for (const auto& m : j.at("matchings")) {
    EdgeSet s = edgeset::normalized(m.get<EdgeSet>());
    g.validate_edge_set(s);
    c.matchings.push_back(std::move(s));
  }
  if (c.matchings.size() != 6)
    throw GraphError("cover document must list exactly 6 matchings");
  return c;
}

json certificate_to_json(const Certificate& c) {
  return json{{"e0", c.e0}, {"e2", c.e2}};
}

Certificate certificate_from_json(const Multigraph& g, const json& j) {
  if (!j.is_object() || !j.contains("e0") || !j.contains("e2"))
    throw GraphError("certificate document must have 'e0' and 'e2'");
  Certificate c;
  c.e0 = edgeset::normalized(j.at("e0").get<EdgeSet>());
  c.e2 = edgeset::normalized(j.at("e2").get<EdgeSet>());
  g.validate_edge_set(c.e0);
  g.validate_edge_set(c.e2);
  return c;
}

json coloring_to_json(const ColoringAssignment& col) {
  json colors = json::object();
  for (const auto& [e, c] : col) colors[std::to_string(e)] = c;
  return json{{"colors", colors}};
}

json certificate_report_to_json(const CertificateReport& rep) {
  json j;
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["reason"] = rep.reason;
  j["certificate"] = certificate_to_json(rep.cert);
  if (rep.pass) {
    j["cycle_circuits"] = rep.structure.cycle.size();
    j["coloring0"] = coloring_to_json(rep.coloring0);
    j["coloring2"] = coloring_to_json(rep.coloring2);
  }
  return j;
}

namespace {

PortedGraph base_from_entry(const json& entry) {
  if (entry.is_string()) return builtin_ported(entry.get<std::string>());
  if (!entry.is_object()) throw GraphError("base entry must be a name or object");
  const json& gj = entry.at("graph");
  Multigraph g;
  PortRoles defaults;
  bool have_defaults = false;
  if (gj.is_string()) {
    PortedGraph builtin = builtin_ported(gj.get<std::string>());
    g = builtin.graph;
    defaults = builtin.ports;
    have_defaults = true;
  } else {
    g = graph_from_json(gj);
  }
  if (!entry.contains("xy")) {
    if (!have_defaults) throw GraphError("base entry needs 'xy' and port labels");
    return PortedGraph::create(std::move(g), defaults);
  }
  PortRoles roles;
  roles.x = entry.at("xy").at(0).get<std::string>();
  roles.y = entry.at("xy").at(1).get<std::string>();
  roles.x0 = entry.at("x0").get<std::string>();
  roles.x1 = entry.at("x1").get<std::string>();
  roles.y0 = entry.at("y0").get<std::string>();
  roles.y1 = entry.at("y1").get<std::string>();
  return PortedGraph::create(std::move(g), roles);
}

}  // namespace

std::vector<PortedGraph> bases_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bases"))
    throw GraphError("family input must have 'bases'");
  std::vector<PortedGraph> out;
  for (const auto& entry : j.at("bases")) out.push_back(base_from_entry(entry));
  return out;
}

json bases_to_json(const std::vector<PortedGraph>& bases) {
  json arr = json::array();
  for (const auto& b : bases) {
    json entry;
    entry["graph"] = graph_to_json(b.graph);
    entry["xy"] = {b.ports.x, b.ports.y};
    entry["x0"] = b.ports.x0;
    entry["x1"] = b.ports.x1;
    entry["y0"] = b.ports.y0;
    entry["y1"] = b.ports.y1;
    arr.push_back(std::move(entry));
  }
  return json{{"bases", arr}};
}

json family_to_json(const Multigraph& g, const FamilyDescriptor& d) {
  json j;
  j["graph"] = graph_to_json(g);
  j["landmarks"] = {{"a", d.a}, {"b", d.b}, {"c", d.c}, {"v", d.v}};
  j["chain"] = d.chain;
  json blocks = json::array();
  std::vector<PortedGraph> bases;
  for (const auto& b : d.blocks) {
    json bj;
    bj["vertex_image"] = b.vertex_image;
    json ei = json::object();
    for (const auto& [orig, composed] : b.edge_image) ei[std::to_string(orig)] = composed;
    bj["edge_image"] = std::move(ei);
    bj["boundary"] = b.boundary;
    blocks.push_back(std::move(bj));
    bases.push_back(b.source);
  }
  j["blocks"] = std::move(blocks);
  j["bases"] = bases_to_json(bases).at("bases");
  return j;
}

std::pair<Multigraph, FamilyDescriptor> family_from_json(const json& j) {
  Multigraph g = graph_from_json(j.at("graph"));
  FamilyDescriptor d;
  d.a = j.at("landmarks").at("a").get<std::vector<std::string>>();
  d.b = j.at("landmarks").at("b").get<std::vector<std::string>>();
  d.c = j.at("landmarks").at("c").get<std::vector<std::string>>();
  d.v = j.at("landmarks").at("v").get<std::vector<std::string>>();
  d.chain = j.at("chain").get<std::vector<EdgeId>>();
  d.k = static_cast<int>(d.a.size());
  std::vector<PortedGraph> bases = bases_from_json(json{{"bases", j.at("bases")}});
  if (static_cast<int>(bases.size()) != d.k)
    throw GraphError("family document: bases/landmark size mismatch");
  for (int i = 0; i < d.k; ++i) {
    BlockInfo b;
    b.source = bases[i];
    const json& bj = j.at("blocks").at(i);
    b.vertex_image = bj.at("vertex_image").get<std::map<std::string, std::string>>();
    for (const auto& [key, val] : bj.at("edge_image").items())
      b.edge_image[std::stoi(key)] = val.get<EdgeId>();
    b.boundary = bj.at("boundary").get<std::map<std::string, EdgeId>>();
    d.blocks.push_back(std::move(b));
  }
  validate_family(g, d);
  return {std::move(g), std::move(d)};
}

std::string to_graph6(const Multigraph& g) {
  int n = g.vertex_count();
  if (n > 258047) throw GraphError("graph6 export supports at most 258047 vertices");
  std::set<std::pair<int, int>> seen;
  for (const Edge& ed : g.edges()) {
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert({key.first, key.second}).second)
      throw GraphError("graph6 export requires a simple graph (parallel edges present)");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::vector<int> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      bits.push_back(seen.count({i, j}) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value |= bits[k + b] << (5 - b);
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

Multigraph from_graph6_line(const std::string& raw) {
  std::string line = raw;
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line = line.substr(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw GraphError("empty graph6 line");

  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw GraphError("truncated graph6 line");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw GraphError("invalid graph6 byte");
    return c - 63;
  };
  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int a = next(), b = next(), c = next();
    n = (static_cast<long long>(a) << 12) | (b << 6) | c;
  }
  std::vector<std::string> vertices;
  for (long long i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  int have = 0, buffer = 0;
  for (long long j = 1; j < n; ++j)
    for (long long i = 0; i < j; ++i) {
      if (have == 0) {
        buffer = next();
        have = 6;
      }
      --have;
      if (buffer & (1 << have))
        edges.emplace_back(std::to_string(i), std::to_string(j));
    }
  return Multigraph::make(vertices, edges);
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& name : g.vertex_names())
    out << "  \"" << name << "\" [label=\"" << name << "\"];\n";
  for (const Edge& ed : g.edges())
    out << "  \"" << g.vertex_name(ed.u) << "\" -- \"" << g.vertex_name(ed.v)
        << "\";  // edge " << ed.id << "\n";
  out << "}\n";
  return out.str();
}

std::string digest_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write file '" + path + "'");
  out << content;
}

Multigraph load_graph_argument(const std::string& path_or_name) {
  if (is_builtin_name(path_or_name)) return builtin_ported(path_or_name).graph;
  std::string content = read_file(path_or_name);
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    json j = json::parse(content);
    if (j.contains("graph")) return graph_from_json(j.at("graph"));
    return graph_from_json(j);
  }
  std::istringstream lines(content);
  std::string line;
  while (std::getline(lines, line)) {
    std::string trimmed = line;
    const std::string header = ">>graph6<<";
    if (trimmed.rfind(header, 0) == 0) trimmed = trimmed.substr(header.size());
    if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
    return from_graph6_line(trimmed);
  }
  throw GraphError("no graph found in '" + path_or_name + "'");
}

}  // namespace snarkforge
