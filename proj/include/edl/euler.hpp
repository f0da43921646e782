#pragma once

#include "edl/catalog.hpp"
#include "edl/integrals.hpp"
#include "edl/prefactor.hpp"

#include <span>

namespace edl {

// The single Weyl tile in s-coordinates: 0 <= s_i <= pi together with the
// highest-root constraint 0 <= sum_i n_i s_i <= pi, which already implies
// every other positive-root inequality.
struct FundamentalRegion {
  int rank = 0;
  std::vector<int> highest;

  bool contains(std::span<const double> s) const;
  Prefactor exact_volume() const;  // pi^l / (l! prod n_i)
  double volume() const { return exact_volume().value(); }
};

FundamentalRegion fundamental_region(const NonReducedRootSystem& R);

// s = A y with rows of A the simple-root embeddings.  |det A| is the wedge
// |a_1 ^ ... ^ a_r| = sqrt(det Gram), exact under the square root, and equals
// V_F prod |a_i|^2 / 2.
struct ChangeOfVariables {
  std::vector<std::vector<Rat>> matrix;  // rows = simple-root embeddings
  Rat gram_det;             // det Gram(simple roots)
  Prefactor wedge;          // sqrt(gram_det)
  Rat norm_product;         // prod |a_i|^2
  Rat coroot_gram_det;      // det Gram(simple coroots)
};
ChangeOfVariables change_of_variables(const RootSystem& rs);

struct CellCount {
  Int by_weyl;     // |W| / |Z|
  Int by_highest;  // r! prod n_i
  bool pass;
};
CellCount cell_count(const RootSystem& rs);

// prod_a sin^{m_a}(n_a . s) at a point of the box, multiplicities from R.
double measure_density(const NonReducedRootSystem& R, std::span<const double> s);

// Spot check of the dominance property: uniform points of the region satisfy
// 0 <= n_a . s <= pi for every positive root.  Returns the violation count.
long region_dominance_violations(const NonReducedRootSystem& R, long points, uint64_t seed);

// integral of the measure density over the fundamental region (s-coordinates).
IntegralEstimate region_integral(const NonReducedRootSystem& R, EstimateMethod method,
                                 QuadOptions qopts = {}, McOptions mopts = {});

struct IdentityReport {
  std::string label;
  IntegralEstimate lhs;
  double rhs = 0.0;
  std::string prefactor;  // exact core of the comparison constants
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string by_product;  // e.g. the implied volume ratio
};

// Box integral of prod |sin^{m_a}| equals (cell count) x region integral.
IdentityReport tiling_check(const NonReducedRootSystem& R, double rel_tol,
                            EstimateMethod method = EstimateMethod::gauss_tensor,
                            QuadOptions qopts = {}, McOptions mopts = {});

// Split-case identity: the invariant-measure integral computed through the
// box route must match the closed gamma-product route at s = 1/2.
IdentityReport verify_dyson_identity(const RootSystem& rs, double rel_tol,
                                     QuadOptions qopts = {});

// Restricted-case identity: region integral of prod sin^{m_a} versus
// pi^l / (2^{h-k} l! prod n_i) times the closed gamma product at k = m/2.
IdentityReport verify_restricted_identity(const SymmetricSpaceEntry& entry, double rel_tol,
                                          QuadOptions qopts = {});

struct EulerRangeReport {
  std::string label;
  long x_count = 0, y_count = 0, z_count = 0;  // h-k, l, h
  std::vector<std::string> y_range;            // the defining inequalities
  std::optional<Int> gamma_order;              // 2^r for split rows
  Int cells;                                   // l! prod n_i
  std::string region_volume;                   // exact
  std::vector<std::string> periods;
  std::vector<std::string> notes;
};
EulerRangeReport euler_range_report(const SymmetricSpaceEntry& entry);

}  // namespace edl
