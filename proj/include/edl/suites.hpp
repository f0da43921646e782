#pragma once

#include "edl/catalog.hpp"
#include "edl/report.hpp"
#include "edl/root_system.hpp"

namespace edl {

// Verification suites shared by the CLI and the acceptance harness.  Each
// record carries its own pinned tolerance.

// Exact counting identity |W| = |Z| r! prod(n_i) across the supported families.
std::vector<VerificationRecord> suite_relation(const RunConfig& cfg);

// Weyl orders by permutation closure against the degree tables, rank <= cap.
std::vector<VerificationRecord> suite_weyl_enumeration(const RunConfig& cfg, int max_rank = 4);

// Constant-term identities: the A-series factorial form, the binomial product
// on A2/B2/G2, and the non-reduced product form on BC1/BC2.
std::vector<VerificationRecord> suite_ct(const RunConfig& cfg);

// Split-case geometry: torus quadrature vs the closed product at s = 1/2,
// tiling, and the two-route invariant-measure identity for A1, A2, B2, G2.
std::vector<VerificationRecord> suite_split(const RunConfig& cfg);

// Restricted identities for the rank-1 rows and the rank-2 rows EIV, EIII.
std::vector<VerificationRecord> suite_restricted(const RunConfig& cfg);

// Selberg / Gaussian / circular ensemble checks.
std::vector<VerificationRecord> suite_classical(const RunConfig& cfg);

// Catalog audit as records (dimension & multiplicity checks per binding).
std::vector<VerificationRecord> suite_catalog(const RunConfig& cfg);

// Restricted identity for one catalog row at a binding.
std::vector<VerificationRecord> verify_label(const std::string& label,
                                             const ParameterBinding& binding,
                                             const RunConfig& cfg);

std::vector<VerificationRecord> suite_all(const RunConfig& cfg);

}  // namespace edl
