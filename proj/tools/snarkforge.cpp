// Command-line surface: build composed families, run the cover-construction
// pipeline, verify covers/certificates, run the desk-scale solvers, export
// graphs. Exit codes: 0 success/verified, 1 verification failed, 2 invalid
// input or cap exceeded.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "snarkforge/graph_ops.hpp"
#include "snarkforge/io.hpp"
#include "snarkforge/solvers.hpp"
#include "snarkforge/pipeline.hpp"

using nlohmann::json;
using namespace snarkforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

json load_json_file(const std::string& path) { return json::parse(read_file(path)); }

std::vector<PortedGraph> load_bases_arg(const std::string& bases_file,
                                        const std::string& family_file,
                                        std::string* digest) {
  if (!bases_file.empty()) {
    std::string content = read_file(bases_file);
    *digest = digest_hex(content);
    return bases_from_json(json::parse(content));
  }
  std::string content = read_file(family_file);
  *digest = digest_hex(content);
  json j = json::parse(content);
  if (!j.contains("bases")) throw GraphError("family file does not embed its bases");
  return bases_from_json(json{{"bases", j.at("bases")}});
}

int cmd_build(const std::string& bases_file, int k, const std::string& out_file) {
  std::string digest;
  std::vector<PortedGraph> bases = load_bases_arg(bases_file, "", &digest);
  if (k != 0 && k != static_cast<int>(bases.size()))
    throw GraphError("--k is " + std::to_string(k) + " but " +
                     std::to_string(bases.size()) + " bases were given");
  auto [g, d] = build_family(bases);
  if (!out_file.empty()) {
    json j = family_to_json(g, d);
    j["inputs_digest"] = digest;
    write_file(out_file, j.dump(2) + "\n");
  }
  std::cout << "k: " << d.k << "\n"
            << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "cubic: " << yesno(g.is_cubic()) << "\n"
            << "connected: " << yesno(g.is_connected()) << "\n"
            << "bridgeless: " << yesno(g.is_bridgeless()) << "\n";
  if (!out_file.empty()) std::cout << "family written to " << out_file << "\n";
  return kExitOk;
}

int cmd_construct_cover(const std::string& bases_file, const std::string& family_file,
                        const std::string& covers_file, bool search_covers,
                        const std::string& out_file, const std::string& out_family_file,
                        const std::string& report_file, bool constructive) {
  auto t0 = std::chrono::steady_clock::now();
  std::string bases_digest;
  std::vector<PortedGraph> bases = load_bases_arg(bases_file, family_file, &bases_digest);

  std::vector<FulkersonCover> covers;
  std::string covers_digest = "searched";
  if (search_covers) {
    for (size_t i = 0; i < bases.size(); ++i) {
      CoverSearchResult r = find_fulkerson_cover(bases[i].graph);
      if (r.status == CoverSearchStatus::BudgetExceeded)
        throw GraphError("oracle budget exceeded searching base " + std::to_string(i));
      if (r.status != CoverSearchStatus::Found)
        throw GraphError("oracle proved base " + std::to_string(i) + " has no cover");
      covers.push_back(std::move(r.cover));
    }
  } else {
    if (covers_file.empty())
      throw GraphError("either --covers or --search-covers is required");
    std::string content = read_file(covers_file);
    covers_digest = digest_hex(content);
    json j = json::parse(content);
    if (!j.contains("covers")) throw GraphError("covers file must have 'covers'");
    for (size_t i = 0; i < j.at("covers").size(); ++i)
      covers.push_back(cover_from_json(bases.at(i).graph, j.at("covers").at(i)));
    if (covers.size() != bases.size())
      throw GraphError("covers file must list one cover per base");
  }

  PipelineOptions opts;
  opts.constructive = constructive;
  PipelineResult res = construct_cover(bases, covers, opts);

  std::cout << "stage: " << res.stage << "\n"
            << "ok: " << yesno(res.ok) << "\n";
  if (!res.ok) std::cout << "reason: " << res.reason << "\n";
  if (res.ok) {
    std::cout << "vertices: " << res.graph.vertex_count() << "\n"
              << "cover: verified (every edge covered exactly twice)\n";
  }

  if (res.ok && !out_file.empty())
    write_file(out_file, cover_to_json(res.cover).dump(2) + "\n");
  if (res.ok && !out_family_file.empty()) {
    nlohmann::json fam = bases.size() >= 2
                             ? family_to_json(res.graph, res.descriptor)
                             : nlohmann::json{{"graph", graph_to_json(res.graph)}};
    write_file(out_family_file, fam.dump(2) + "\n");
  }

  if (!report_file.empty()) {
    json rep;
    rep["command"] = "construct-cover";
    rep["inputs"] = {{"bases", bases_digest}, {"covers", covers_digest}};
    rep["constructive"] = constructive;
    rep["verdicts"] = {{"stage", res.stage},
                       {"ok", res.ok},
                       {"reason", res.reason},
                       {"cover", res.cover_check.pass ? "pass" : "fail"}};
    if (res.ok && res.plan.k >= 3) {
      rep["certificate_report"] = certificate_report_to_json(res.report);
      rep["landmarks_on_cycle"] = res.landmarks_on_cycle;
    }
    if (res.ok) {
      rep["cover"] = cover_to_json(res.cover);
      // The cover's edge ids are bound to the composed graph the pipeline
      // actually built (through-block ports get relabeled), so that graph
      // ships with the report.
      if (bases.size() >= 2)
        rep["family"] = family_to_json(res.graph, res.descriptor);
      else
        rep["family"] = {{"graph", graph_to_json(res.graph)}};
    }
    rep["timings_ms"] = {{"total", ms_since(t0)}};
    if (!out_file.empty()) rep["outputs"] = {{"cover", out_file}};
    write_file(report_file, rep.dump(2) + "\n");
  }
  return res.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const std::string& graph_arg, const std::string& cover_file,
               const std::string& cert_file) {
  Multigraph g = load_graph_argument(graph_arg);
  if (!cover_file.empty()) {
    FulkersonCover cover = cover_from_json(g, load_json_file(cover_file));
    CoverVerification cv = verify_cover(g, cover);
    if (cv.pass) {
      std::cout << "cover: pass (" << cv.histogram.size()
                << " edges, all covered exactly twice)\n";
      return kExitOk;
    }
    std::cout << "cover: fail\nreason: " << cv.reason << "\n";
    std::map<int, int> spread;
    for (const auto& [e, c] : cv.histogram) spread[c]++;
    std::cout << "coverage histogram:";
    for (const auto& [c, count] : spread)
      std::cout << " " << c << "x:" << count;
    std::cout << "\n";
    return kExitVerificationFailed;
  }
  if (cert_file.empty()) throw GraphError("either --cover or --certificate is required");
  Certificate cert = certificate_from_json(g, load_json_file(cert_file));
  CertificateReport rep = verify_certificate(g, cert);
  if (rep.pass) {
    std::cout << "certificate: pass (|e0| = " << cert.e0.size()
              << ", |e2| = " << cert.e2.size() << ", "
              << rep.structure.cycle.size() << " even circuits)\n";
    return kExitOk;
  }
  std::cout << "certificate: fail\nreason: " << rep.reason << "\n";
  return kExitVerificationFailed;
}

int cmd_check(const std::string& graph_arg, bool cyclic4, bool want_excessive) {
  Multigraph g = load_graph_argument(graph_arg);
  std::cout << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "cubic: " << yesno(g.is_cubic()) << "\n"
            << "connected: " << yesno(g.is_connected()) << "\n"
            << "bridgeless: " << yesno(g.is_bridgeless()) << "\n";
  if (g.is_cubic()) {
    bool colorable = three_edge_coloring(g).has_value();
    std::cout << "3-edge-colorable: " << yesno(colorable) << "\n"
              << "snark: " << yesno(g.is_bridgeless() && !colorable) << "\n";
    if (cyclic4)
      std::cout << "cyclically-4-edge-connected: "
                << yesno(cyclic_edge_connectivity_at_least(g, 4)) << "\n";
    if (want_excessive) {
      ExcessiveIndex ei = excessive_index(g, 6);
      if (ei.exceeds_limit)
        std::cout << "excessive-index: > 6\n";
      else
        std::cout << "excessive-index: " << ei.value << "\n";
    }
  }
  return kExitOk;
}

int cmd_export(const std::string& graph_arg, const std::string& format,
               const std::string& out_file) {
  Multigraph g = load_graph_argument(graph_arg);
  std::string payload;
  if (format == "dot") {
    payload = to_dot(g);
  } else if (format == "json") {
    payload = graph_to_json(g).dump(2) + "\n";
  } else if (format == "graph6") {
    payload = to_graph6(g) + "\n";
  } else {
    throw GraphError("unknown format '" + format + "'");
  }
  if (out_file.empty())
    std::cout << payload;
  else
    write_file(out_file, payload);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snarkforge: composed cubic families, Fulkerson covers, exact verification"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "build a composed family graph");
  std::string build_bases, build_out;
  int build_k = 0;
  build->add_option("--bases", build_bases, "family input JSON")->required();
  build->add_option("--k", build_k, "expected number of bases");
  build->add_option("--out", build_out, "output family JSON");

  auto* cc = app.add_subcommand("construct-cover", "run the cover-construction pipeline");
  std::string cc_bases, cc_family, cc_covers, cc_out, cc_out_family, cc_report;
  bool cc_search = false, cc_constructive = false;
  cc->add_option("--bases", cc_bases, "family input JSON");
  cc->add_option("--family", cc_family, "family JSON with embedded bases");
  cc->add_option("--covers", cc_covers, "base covers JSON");
  cc->add_flag("--search-covers", cc_search, "find base covers with the oracle");
  cc->add_option("--out", cc_out, "output cover JSON");
  cc->add_option("--out-family", cc_out_family,
                 "output the composed family the cover is bound to");
  cc->add_option("--report", cc_report, "output report JSON");
  cc->add_flag("--constructive", cc_constructive, "use the 2-factor coloring path");

  auto* verify = app.add_subcommand("verify", "verify a cover or certificate");
  std::string v_graph, v_cover, v_cert;
  verify->add_option("--graph", v_graph, "graph file or builtin name")->required();
  verify->add_option("--cover", v_cover, "cover JSON");
  verify->add_option("--certificate", v_cert, "certificate JSON");

  auto* check = app.add_subcommand("check", "report structural properties");
  std::string ch_graph;
  bool ch_cyclic4 = false, ch_excessive = false;
  check->add_option("--graph", ch_graph, "graph file or builtin name")->required();
  check->add_flag("--cyclic4", ch_cyclic4, "check cyclic 4-edge-connectivity");
  check->add_flag("--excessive-index", ch_excessive, "compute the excessive index");

  auto* exp = app.add_subcommand("export", "export a graph");
  std::string e_graph, e_format = "dot", e_out;
  exp->add_option("--graph", e_graph, "graph file or builtin name")->required();
  exp->add_option("--format", e_format, "dot|json|graph6");
  exp->add_option("--out", e_out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (build->parsed()) return cmd_build(build_bases, build_k, build_out);
    if (cc->parsed())
      return cmd_construct_cover(cc_bases, cc_family, cc_covers, cc_search, cc_out,
                                 cc_out_family, cc_report, cc_constructive);
    if (verify->parsed()) return cmd_verify(v_graph, v_cover, v_cert);
    if (check->parsed()) return cmd_check(ch_graph, ch_cyclic4, ch_excessive);
    if (exp->parsed()) return cmd_export(e_graph, e_format, e_out);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
