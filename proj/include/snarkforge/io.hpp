#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "snarkforge/family.hpp"
#include "snarkforge/fulkerson.hpp"
#include "snarkforge/multigraph.hpp"
#include "snarkforge/solvers.hpp"

namespace snarkforge {

// Graph document: {"vertices": [...], "edges": [[u,v], ...]} with edge ids
// assigned as zero-based positions in the edges array. Serialization
// requires compact ids (0..m-1 in order).
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

nlohmann::json cover_to_json(const FulkersonCover& c);
FulkersonCover cover_from_json(const Multigraph& g, const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Multigraph& g, const nlohmann::json& j);

nlohmann::json coloring_to_json(const ColoringAssignment& col);

nlohmann::json certificate_report_to_json(const CertificateReport& rep);

// Family input: {"bases": [{"graph": <doc or builtin name>, "xy": [u,v],
// "x0":..,"x1":..,"y0":..,"y1":..}, ...]}; ports may be omitted for
// builtins.
std::vector<PortedGraph> bases_from_json(const nlohmann::json& j);
nlohmann::json bases_to_json(const std::vector<PortedGraph>& bases);

nlohmann::json family_to_json(const Multigraph& g, const FamilyDescriptor& d);
// Reads back what family_to_json wrote (including embedded bases).
std::pair<Multigraph, FamilyDescriptor> family_from_json(const nlohmann::json& j);

// graph6 (simple graphs only; short and long size forms).
std::string to_graph6(const Multigraph& g);
Multigraph from_graph6_line(const std::string& line);

std::string to_dot(const Multigraph& g);

// FNV-1a 64-bit, hex-encoded; binds reports to exact input bytes.
std::string digest_hex(const std::string& bytes);

// Reads a graph from a file: builtin name, JSON document, or graph6 line
// (">>graph6<<" header tolerated).
Multigraph load_graph_argument(const std::string& path_or_name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace snarkforge
