#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "snarkforge/family.hpp"
#include "snarkforge/fulkerson.hpp"

namespace snarkforge {

enum class BlockMode { Through, Avoid };

struct BlockPlan {
  BlockMode mode = BlockMode::Avoid;
  std::array<int, 3> triple{};
  PortedGraph ports;           // roles reassigned for Through blocks
  Certificate cert;            // e0 = E_i^0, e2 = E_i^2 in G_i edge ids
  EdgeId e0_at_x = -1;         // the e0 edge x0-x (Through blocks only)
  EdgeId e0_at_y = -1;         // the e0 edge y0-y (Through blocks only)
  CertificateStructure structure;
  ColoringAssignment col0, col2;  // colorings of the two suppressed graphs
};

struct CertificatePlan {
  int k = 0;
  bool bypass = false;  // k = 1: the base cover is returned as-is
  std::vector<BlockPlan> blocks;
};

// Per-parity certificate selection: k even -> even blocks Avoid, odd blocks
// Through; k odd -> block 0 and odd blocks Through, other even blocks Avoid.
CertificatePlan plan_block_certificates(const std::vector<PortedGraph>& ports,
                                        const std::vector<FulkersonCover>& covers);

// The global E0/E2 edge sets, assembled per the parity of k over a family
// built from the plan's ports. Requires k >= 3.
Certificate assemble_certificate(const Multigraph& g, const FamilyDescriptor& d,
                                 const CertificatePlan& plan);

// Constructive 2-factor of the suppressed composed graph for the given side
// (0 or 2), assembled from per-block 2-factors chosen by constraint plus the
// forced linking edges.
TwoFactor assemble_two_factor(const Multigraph& g, const FamilyDescriptor& d,
                              const CertificatePlan& plan,
                              const Certificate& global_cert,
                              const CertificateStructure& global_structure,
                              int side);

struct PipelineOptions {
  bool constructive = false;
  long long oracle_budget = kDefaultNodeBudget;
};

struct PipelineResult {
  bool ok = false;
  std::string stage;   // failing stage when !ok
  std::string reason;
  Multigraph graph;
  FamilyDescriptor descriptor;
  CertificatePlan plan;
  Certificate certificate;
  CertificateReport report;
  FulkersonCover cover;
  CoverVerification cover_check;
  std::map<std::string, bool> landmarks_on_cycle;
};

// Full pipeline: plan -> rebuild family with the plan's port roles ->
// assemble -> verify (solver or constructive colorings) -> lift -> verify
// cover. k=1 bypasses to the base cover; k=2 falls back to the oracle.
PipelineResult construct_cover(const std::vector<PortedGraph>& ports,
                               const std::vector<FulkersonCover>& covers,
                               const PipelineOptions& opts = {});

}  // namespace snarkforge
