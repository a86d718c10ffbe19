#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snarkforge/graph_ops.hpp"
#include "snarkforge/multigraph.hpp"
#include "snarkforge/solvers.hpp"

namespace snarkforge {

// Two disjoint matchings whose union is an even cycle (possibly empty).
struct Certificate {
  EdgeSet e0, e2;
};

// Spanning 2-regular subgraph; all_even is true iff every circuit has even
// length.
struct TwoFactor {
  EdgeSet members;
  bool all_even = false;
};

struct CoverVerification {
  bool pass = false;
  std::string reason;
  std::map<EdgeId, int> histogram;
};

// Checks each of the six matchings is perfect and each edge has coverage
// exactly 2. Never throws; all failures are verdicts.
CoverVerification verify_cover(const Multigraph& g, const FulkersonCover& cover);

// e2 = edges covered exactly twice by the selected cover slots, e0 = edges
// covered zero times. The triple must be three distinct slots in 1..6 and
// the cover must verify.
Certificate extract_certificate(const Multigraph& g, const FulkersonCover& cover,
                                const std::array<int, 3>& triple);

// Everything verify_certificate checks short of 3-edge-colorability:
// disjointness, matchings, even alternating cycle, both suppressions.
struct CertificateStructure {
  bool pass = false;
  std::string reason;
  std::vector<std::vector<EdgeId>> cycle;  // circuits of e0 ∪ e2
  SplitSuppression sup0, sup2;             // suppress(G, e0), suppress(G, e2)
};

CertificateStructure check_certificate_structure(const Multigraph& g,
                                                 const Certificate& cert);

struct CertificateReport {
  bool pass = false;
  std::string reason;
  Certificate cert;
  CertificateStructure structure;
  ColoringAssignment coloring0, coloring2;  // on the two suppressed graphs
};

// Structure checks plus exhaustive 3-edge-coloring of both suppressed
// graphs. Checks run cheapest-first; the first failure is reported.
CertificateReport verify_certificate(const Multigraph& g, const Certificate& cert);

// Same report but with caller-provided colorings (validated for properness)
// instead of solver runs.
CertificateReport verify_certificate_with_colorings(const Multigraph& g,
                                                    const Certificate& cert,
                                                    const ColoringAssignment& col0,
                                                    const ColoringAssignment& col2);

// Pulls a passing certificate report back to a full cover: for each color c
// of coloring0, M_c takes the non-e2 edges of every color-c path and the e2
// edges of every other path; M_{3+c} is built from coloring2 with e0 and e2
// swapped. Internally verified; throws on violation.
FulkersonCover lift_certificate(const Multigraph& g, const CertificateReport& report);

struct PortRoles {
  std::string x, y, x0, x1, y0, y1;
};

enum class NormalizeMode { Through, Avoid };

struct Normalization {
  std::array<int, 3> triple;  // sorted cover slots, 1-based
  PortRoles roles;
};

// Exhaustive search over the 20 triples. mode=Through: extracted
// certificate has xy in e2, and roles are relabeled so x0x and y0y lie in
// e0. mode=Avoid: the certificate touches neither endpoint of xy.
Normalization normalize_certificate(const Multigraph& g, const FulkersonCover& cover,
                                    EdgeId xy, NormalizeMode mode,
                                    const PortRoles& current);

// Alternate colors 1,2 around each circuit of F; non-F edges get color 3.
ColoringAssignment two_factor_to_coloring(const Multigraph& g, const TwoFactor& f);

// Among the three unions of two color classes, the first satisfying the
// constraints; nullopt if none does.
std::optional<TwoFactor> coloring_to_two_factor(const Multigraph& g,
                                                const ColoringAssignment& col,
                                                const EdgeSet& must_contain,
                                                const EdgeSet& must_avoid);

struct AlternationCheck {
  bool ok = false;
  std::string reason;
};

// The alternation property of a valid certificate: every mapped path of the
// e0-side suppression alternates non-e2/e2 edges, ends with non-e2 edges,
// and has odd length; symmetrically for the e2 side. Circuit components
// must alternate fully.
AlternationCheck check_alternation(const Certificate& cert,
                                   const CertificateStructure& s);

}  // namespace snarkforge
