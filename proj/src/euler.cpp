#include "edl/euler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace edl {

namespace {

const double kPi = std::acos(-1.0);

std::vector<SinForm> measure_forms(const NonReducedRootSystem& R) {
  std::vector<SinForm> forms;
  for (const auto& [root, orbit] : positive_orbit_roots(R)) {
    double m = to_double(R.multiplicity[orbit]);
    if (m == 0.0) continue;
    forms.push_back({root->coeffs, m});
  }
  return forms;
}

}  // namespace

bool FundamentalRegion::contains(std::span<const double> s) const {
  double apex = 0.0;
  for (int i = 0; i < rank; ++i) {
    if (s[i] < 0.0 || s[i] > kPi) return false;
    apex += highest[i] * s[i];
  }
  return apex >= 0.0 && apex <= kPi;  // boundary counts as inside
}

Prefactor FundamentalRegion::exact_volume() const {
  Rat q = Rat(1) / Rat(factorial(static_cast<unsigned>(rank)));
  for (int c : highest) q /= c;
  return Prefactor{q, 1, rank};
}

FundamentalRegion fundamental_region(const NonReducedRootSystem& R) {
  FundamentalRegion fr;
  fr.rank = R.base.rank();
  fr.highest = full_highest_root(R).coeffs;
  return fr;
}

ChangeOfVariables change_of_variables(const RootSystem& rs) {
  const int r = rs.rank();
  std::vector<std::vector<Rat>> gram(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram[i][j] = rs.inner(rs.simple_roots()[i].embedding, rs.simple_roots()[j].embedding);
  ChangeOfVariables cv;
  for (const auto& a : rs.simple_roots()) cv.matrix.push_back(a.embedding);
  cv.gram_det = det(gram);
  cv.wedge = Prefactor{1, cv.gram_det, 0};
  cv.norm_product = 1;
  for (const auto& a : rs.simple_roots()) cv.norm_product *= a.norm_sq;
  cv.coroot_gram_det = coroot_gram_det(rs);
  // wedge identity: det Gram(a) = det Gram(a^vee) * prod (|a_i|^2 / 2)^2
  Rat check = cv.coroot_gram_det;
  for (const auto& a : rs.simple_roots()) check *= (a.norm_sq / 2) * (a.norm_sq / 2);
  if (check != cv.gram_det)
    throw std::logic_error("wedge identity violated; root data inconsistent");
  return cv;
}

CellCount cell_count(const RootSystem& rs) {
  CellCount cc;
  cc.by_weyl = rs.weyl_order() / rs.center_order();
  if (cc.by_weyl * rs.center_order() != rs.weyl_order())
    throw std::logic_error("center order does not divide the Weyl order");
  cc.by_highest = factorial(static_cast<unsigned>(rs.rank()));
  for (int c : rs.highest_root().coeffs) cc.by_highest *= c;
  cc.pass = cc.by_weyl == cc.by_highest;
  return cc;
}

double measure_density(const NonReducedRootSystem& R, std::span<const double> s) {
  double prod = 1.0;
  for (const auto& [root, orbit] : positive_orbit_roots(R)) {
    double m = to_double(R.multiplicity[orbit]);
    if (m == 0.0) continue;
    double arg = 0.0;
    for (int i = 0; i < R.base.rank(); ++i) arg += root->coeffs[i] * s[i];
    prod *= std::pow(std::sin(arg), m);
  }
  return prod;
}

long region_dominance_violations(const NonReducedRootSystem& R, long points, uint64_t seed) {
  const auto fr = fundamental_region(R);
  const int rank = fr.rank;
  CounterRng rng(seed, 0);
  long violations = 0;
  std::vector<double> u(rank), s(rank);
  for (long it = 0; it < points; ++it) {
    for (int i = 0; i < rank; ++i) u[i] = rng.next_u01();
    std::sort(u.begin(), u.end());
    double prev = 0.0;
    for (int i = 0; i < rank; ++i) {
      s[i] = kPi * (u[i] - prev) / fr.highest[i];
      prev = u[i];
    }
    for (const auto& [root, orbit] : positive_orbit_roots(R)) {
      double arg = 0.0;
      for (int i = 0; i < rank; ++i) arg += root->coeffs[i] * s[i];
      if (arg < -1e-12 || arg > kPi + 1e-12) { ++violations; break; }
    }
  }
  return violations;
}

IntegralEstimate region_integral(const NonReducedRootSystem& R, EstimateMethod method,
                                 QuadOptions qopts, McOptions mopts) {
  const auto fr = fundamental_region(R);
  auto forms = measure_forms(R);
  if (method == EstimateMethod::monte_carlo)
    return region_sin_mc(forms, fr.highest, fr.rank, mopts);
  if (fr.rank > 4)
    throw std::domain_error("region_integral: quadrature rank cap is 4; use sampling");
  return region_sin_integral(forms, fr.highest, fr.rank, qopts);
}

namespace {

IdentityReport make_report(std::string label, IntegralEstimate lhs, double rhs,
                           std::string prefactor, double rel_tol) {
  IdentityReport rep;
  rep.label = std::move(label);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.prefactor = std::move(prefactor);
  rep.abs_err = std::abs(lhs.value - rhs);
  rep.rel_err = rhs == 0.0 ? rep.abs_err : std::abs(lhs.value / rhs - 1.0);
  rep.tolerance = rel_tol;
  if (lhs.method == EstimateMethod::monte_carlo && lhs.std_error > 0.0) {
    // stochastic rule: 3 sigma or the relative tolerance, whichever is looser
    rep.pass = rep.abs_err <= 3.0 * lhs.std_error || rep.rel_err <= rel_tol;
  } else {
    rep.pass = rep.rel_err <= rel_tol;
  }
  return rep;
}

}  // namespace

IdentityReport tiling_check(const NonReducedRootSystem& R, double rel_tol,
                            EstimateMethod method, QuadOptions qopts, McOptions mopts) {
  const auto fr = fundamental_region(R);
  auto forms = measure_forms(R);

  IntegralEstimate box = (method == EstimateMethod::monte_carlo)
                             ? box_sin_mc(forms, fr.rank, mopts)
                             : box_sin_integral(forms, fr.rank, qopts);
  IntegralEstimate region = (method == EstimateMethod::monte_carlo)
                                ? region_sin_mc(forms, fr.highest, fr.rank, mopts)
                                : region_sin_integral(forms, fr.highest, fr.rank, qopts);

  Int cells = factorial(static_cast<unsigned>(fr.rank));
  for (int c : fr.highest) cells *= c;
  if (box.method == EstimateMethod::monte_carlo && region.std_error > 0.0) {
    // combine the two stochastic errors for the 3-sigma rule
    double cells_d = to_double(cells);
    box.std_error = std::hypot(box.std_error, cells_d * region.std_error);
  }

  auto rep = make_report("tiling " + to_string(R.base.family().family) +
                             std::to_string(R.base.rank()) + (R.has_doubles() ? "(BC)" : ""),
                         box, to_double(cells) * region.value, "cells=" + cells.str(), rel_tol);
  std::ostringstream by;
  by << "region=" << region.value;
  rep.by_product = by.str();
  return rep;
}

IdentityReport verify_dyson_identity(const RootSystem& rs, double rel_tol, QuadOptions qopts) {
  const int r = rs.rank();
  const int h = static_cast<int>(rs.positive_roots().size());
  auto cv = change_of_variables(rs);
  auto cc = cell_count(rs);
  if (!cc.pass) throw std::logic_error("cell count mismatch; root data inconsistent");

  // Route A: I = 2^r / (V_F prod|a|^2) * 1/(r! prod n) * Box, with
  // V_F prod|a|^2 = 2^r * wedge, i.e. I = Box / (wedge r! prod n).
  NonReducedRootSystem nr = reduced_with_constant(rs, 1);
  std::vector<SinForm> forms = measure_forms(nr);
  IntegralEstimate box = box_sin_integral(forms, r, qopts);

  Prefactor pre_a = cv.wedge.inverse();
  pre_a.rational /= Rat(cc.by_highest);
  double route_a = box.value * pre_a.value();

  // Route B: I = (2 pi)^r / (2^h V_F prod|a|^2 r! prod n) * J_{1/2}
  //            = pi^r / (2^h wedge r! prod n) * J_{1/2}.
  Prefactor pre_b = pre_a;
  pre_b.pi_power += r;
  pre_b.rational /= Int(1) << h;
  GammaProduct j_half = macdonald_closed(rs, 0.5);
  double route_b = j_half.value * pre_b.value();

  IntegralEstimate lhs = box;
  lhs.value = route_a;
  auto rep = make_report("dyson " + to_string(rs.family().family) + std::to_string(r), lhs,
                         route_b, "A:" + pre_a.str() + " B:" + pre_b.str(), rel_tol);
  std::ostringstream by;
  by << "Vol(G)|Gamma|/Vol(H)^2 = " << route_a << ", J_1/2 = " << j_half.value;
  rep.by_product = by.str();
  return rep;
}

IdentityReport verify_restricted_identity(const SymmetricSpaceEntry& entry, double rel_tol,
                                          QuadOptions qopts) {
  auto nr = restricted_root_system(entry);
  const int l = nr.base.rank();
  if (l > 4)
    throw std::domain_error("verify_restricted_identity: quadrature rank cap is 4");
  const long hk = entry.dim_h - entry.dim_k;

  IntegralEstimate region = region_integral(nr, EstimateMethod::gauss_tensor, qopts);

  // k = m/2 per orbit
  MultiplicityFunction k;
  for (Orbit o : {Orbit::Long, Orbit::Short, Orbit::DoubleLong, Orbit::DoubleShort})
    k[o] = nr.multiplicity[o] / 2;
  GammaProduct j = opdam_closed(nr, k);

  // region integral = pi^l / (2^(h-k) l! prod n_i) * J; the wedge and the
  // volume ratio cancel between the two sides.
  auto fr = fundamental_region(nr);
  Prefactor pre{Rat(1), 1, l};
  pre.rational /= Int(1) << hk;
  pre.rational /= factorial(static_cast<unsigned>(l));
  for (int c : fr.highest) pre.rational /= c;
  double rhs = j.value * pre.value();

  auto rep = make_report("restricted " + entry.label +
                             (entry.binding.str().empty() ? "" : " " + entry.binding.str()),
                         region, rhs, pre.str(), rel_tol);
  auto cv = change_of_variables(nr.base);
  std::ostringstream by;
  by << "Vol(G)Vol(K)/Vol(H)^2 = " << region.value / cv.wedge.value()
     << ", J_m/2 = " << j.value;
  rep.by_product = by.str();
  return rep;
}

EulerRangeReport euler_range_report(const SymmetricSpaceEntry& entry) {
  EulerRangeReport rep;
  rep.label = entry.label;
  rep.x_count = entry.dim_h - entry.dim_k;
  rep.y_count = entry.restricted_rank;
  rep.z_count = entry.dim_h;
  rep.notes = entry.notes;

  for (const auto& ps : entry.periods) {
    std::string line = ps.location;
    if (!ps.index_text.empty()) line += "[" + ps.index_text + "]";
    line += ": " + ps.formula_text;
    if (ps.formula && ps.formula->evaluable(entry.vars())) {
      std::ostringstream os;
      os << " = " << ps.formula->eval_numeric(entry.vars());
      line += os.str();
    }
    rep.periods.push_back(line);
  }

  try {
    auto nr = restricted_root_system(entry);
    auto fr = fundamental_region(nr);
    rep.cells = factorial(static_cast<unsigned>(fr.rank));
    for (int c : fr.highest) rep.cells *= c;
    rep.region_volume = fr.exact_volume().str();
    for (int i = 0; i < fr.rank; ++i)
      rep.y_range.push_back("0 <= a_" + std::to_string(i + 1) + " . y <= pi");
    std::string apex = "0 <= ";
    for (int i = 0; i < fr.rank; ++i) {
      if (i) apex += " + ";
      apex += std::to_string(fr.highest[i]) + " s_" + std::to_string(i + 1);
    }
    rep.y_range.push_back(apex + " <= pi");
    if (entry.split()) {
      rep.gamma_order = Int(1) << entry.restricted_rank;
      // consistency with the cell count through the Weyl order
      auto cc = cell_count(nr.base);
      if (cc.by_highest != rep.cells)
        throw std::logic_error("cell count mismatch in range report");
    }
  } catch (const std::exception& ex) {
    rep.notes.push_back(std::string("restricted data unavailable: ") + ex.what());
  }
  return rep;
}

}  // namespace edl
