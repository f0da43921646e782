#include "edl/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edl {

namespace {

const double kPi = std::acos(-1.0);

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace

GammaProduct selberg_closed(int n, double alpha, double beta, double gamma) {
  require(n >= 1, "selberg_closed: n >= 1");
  require(alpha > 0 && beta > 0, "selberg_closed: need Re(alpha), Re(beta) > 0");
  double bound = 1.0 / n;
  if (n > 1) bound = std::min({bound, alpha / (n - 1), beta / (n - 1)});
  require(gamma > -bound, "selberg_closed: gamma outside the convergence domain");

  std::vector<double> num, den;
  for (int j = 0; j < n; ++j) {
    num.push_back(alpha + j * gamma);
    num.push_back(beta + j * gamma);
    num.push_back(1.0 + (j + 1) * gamma);
    den.push_back(alpha + beta + (n + j - 1) * gamma);
    den.push_back(1.0 + gamma);
  }
  return gamma_product(std::move(num), std::move(den));
}

GammaProduct mehta_closed(int n, double gamma) {
  require(n >= 1, "mehta_closed: n >= 1");
  require(gamma >= 0, "mehta_closed: need Re(gamma) >= 0");
  std::vector<double> num, den;
  for (int j = 1; j <= n; ++j) {
    num.push_back(1.0 + j * gamma);
    den.push_back(1.0 + gamma);
  }
  return gamma_product(std::move(num), std::move(den));
}

namespace {

struct PairPayload {
  int n;
  double two_gamma;
};

double mehta_kernel(CounterRng& rng, const void* payload) {
  const auto& p = *static_cast<const PairPayload*>(payload);
  double t[16];
  for (int i = 0; i < p.n; ++i) t[i] = rng.next_normal();
  double prod = 1.0;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      prod *= std::pow(std::abs(t[i] - t[j]), p.two_gamma);
  return prod;
}

double circular_kernel(CounterRng& rng, const void* payload) {
  const auto& p = *static_cast<const PairPayload*>(payload);
  double th[16];
  for (int i = 0; i < p.n; ++i) th[i] = 2.0 * kPi * rng.next_u01();
  double prod = 1.0;
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      prod *= std::pow(2.0 * std::abs(std::sin((th[i] - th[j]) / 2.0)), p.two_gamma);
  return prod;
}

}  // namespace

IntegralEstimate mehta_mc(int n, double gamma, McOptions opts) {
  require(n >= 1 && n <= 16, "mehta_mc: 1 <= n <= 16");
  require(gamma >= 0, "mehta_mc: need gamma >= 0");
  require(opts.samples >= 10000, "mehta_mc: need at least 10^4 samples");
  PairPayload payload{n, 2.0 * gamma};
  return run_monte_carlo(opts, mehta_kernel, &payload, 1.0);
}

GammaProduct circular_closed(int n, double gamma) {
  require(n >= 1, "circular_closed: n >= 1");
  require(gamma >= 0, "circular_closed: need Re(gamma) >= 0");
  std::vector<double> num{1.0 + n * gamma};
  std::vector<double> den(n, 1.0 + gamma);
  return gamma_product(std::move(num), std::move(den));
}

IntegralEstimate circular_numeric(int n, double gamma, EstimateMethod method,
                                  QuadOptions qopts, McOptions mopts) {
  require(n >= 1 && n <= 16, "circular_numeric: 1 <= n <= 16");
  require(gamma >= 0, "circular_numeric: need gamma >= 0");
  if (method == EstimateMethod::monte_carlo) {
    PairPayload payload{n, 2.0 * gamma};
    return run_monte_carlo(mopts, circular_kernel, &payload, 1.0);
  }
  require(n <= 3, "circular_numeric: quadrature cap is n <= 3; use sampling");
  double wi;
  require(std::modf(gamma, &wi) == 0.0,
          "circular_numeric: quadrature needs integer gamma; use sampling");
  // plain tensor Gauss-Legendre on [0, 2 pi]^n; the integrand is a
  // trigonometric polynomial for integer gamma
  const auto& [gx, gw] = gauss_legendre(qopts.nodes * 2);
  const int nodes = qopts.nodes * 2;
  long long evals = 0;
  std::vector<double> th(n, 0.0);
  auto recurse = [&](auto&& self, int axis) -> double {
    double total = 0.0;
    for (int i = 0; i < nodes; ++i) {
      th[axis] = 2.0 * kPi * gx[i];
      double v;
      if (axis + 1 == n) {
        ++evals;
        v = 1.0;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            v *= std::pow(2.0 * std::abs(std::sin((th[a] - th[b]) / 2.0)), 2.0 * gamma);
      } else {
        v = self(self, axis + 1);
      }
      total += gw[i] * v;
    }
    return total;  // normalized: weights sum to 1 on [0,1] <-> 1/(2 pi) per axis
  };
  double value = recurse(recurse, 0);
  return {value, 0.0, evals, EstimateMethod::gauss_tensor, std::nullopt};
}

GammaProduct macdonald_closed(const RootSystem& rs, double s) {
  require(s > 0, "macdonald_closed: need Re(s) > 0");
  std::vector<double> num, den;
  for (int d : rs.degrees()) {
    num.push_back(s * d + 1.0);
    den.push_back(s + 1.0);
    den.push_back(s * d - s + 1.0);
  }
  return gamma_product(std::move(num), std::move(den));
}

GammaProduct opdam_closed(const NonReducedRootSystem& R, const MultiplicityFunction& k) {
  for (Orbit o : {Orbit::Long, Orbit::Short, Orbit::DoubleLong, Orbit::DoubleShort})
    require(k[o] >= 0, "opdam_closed: need Re(k) >= 0 on every orbit");

  auto roots = positive_orbit_roots(R);
  std::vector<Rat> rho(R.base.ambient_dim(), 0);
  for (const auto& [root, orbit] : roots)
    for (int i = 0; i < R.base.ambient_dim(); ++i)
      rho[i] += k[orbit] * root->embedding[i] / 2;

  std::vector<double> num, den;
  for (const auto& r : roots) {
    Rat pairing = 2 * dot(rho, r.root->embedding) / dot(r.root->embedding, r.root->embedding);
    Rat ka = k[r.orbit];
    Rat half_k;
    if (r.orbit == Orbit::DoubleLong) half_k = k[Orbit::Long] / 2;
    else if (r.orbit == Orbit::DoubleShort) half_k = k[Orbit::Short] / 2;
    double pr = to_double(pairing), kad = to_double(ka), hk = to_double(half_k);
    num.push_back(pr + kad + hk + 1.0);
    num.push_back(pr - kad - hk + 1.0);
    den.push_back(pr + hk + 1.0);
    den.push_back(pr - hk + 1.0);
  }
  return gamma_product(std::move(num), std::move(den));
}

std::vector<SinForm> torus_forms(const NonReducedRootSystem& R, const MultiplicityFunction& k) {
  std::vector<SinForm> forms;
  for (const auto& [root, orbit] : positive_orbit_roots(R)) {
    double w = 2.0 * to_double(k[orbit]);
    if (w == 0.0) continue;
    forms.push_back({root->coeffs, w});
  }
  return forms;
}

IntegralEstimate torus_integral(const NonReducedRootSystem& R, const MultiplicityFunction& k,
                                EstimateMethod method, QuadOptions qopts, McOptions mopts) {
  for (Orbit o : {Orbit::Long, Orbit::Short, Orbit::DoubleLong, Orbit::DoubleShort})
    require(k[o] >= 0, "torus_integral: need k >= 0");
  const int rank = R.base.rank();
  auto forms = torus_forms(R, k);

  // With z = 2 s the paired integrand becomes a box integral over [0, pi]^r:
  // (1/(2pi)^r) int prod (2 |sin(n.z/2)|)^(2k) dz = (2^(sum 2k)/pi^r) * Box.
  double log_scale = -rank * std::log(kPi);
  for (const auto& f : forms) log_scale += f.w * std::log(2.0);
  const double scale = std::exp(log_scale);

  IntegralEstimate box = (method == EstimateMethod::monte_carlo)
                             ? box_sin_mc(forms, rank, mopts)
                             : box_sin_integral(forms, rank, qopts);
  box.value *= scale;
  box.std_error *= scale;
  return box;
}

}  // namespace edl
