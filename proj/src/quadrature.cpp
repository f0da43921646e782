#include "edl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace edl {

std::string to_string(EstimateMethod m) {
  return m == EstimateMethod::gauss_tensor ? "gauss_tensor" : "monte_carlo";
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Newton iteration on P_n; nodes mapped from [-1,1] to [0,1].
  std::vector<double> x(n), w(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = (1.0 - z) / 2.0;
    x[n - 1 - i] = (1.0 + z) / 2.0;
    w[i] = w[n - 1 - i] = 1.0 / ((1.0 - z * z) * pp * pp);
  }
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace {

const double kPi = std::acos(-1.0);

double sin_power(double x, double w) {
  double s = std::abs(std::sin(x));
  if (s == 0.0) return w == 0.0 ? 1.0 : 0.0;
  if (w == 1.0) return s;
  if (w == 2.0) return s * s;
  double wi;
  if (std::modf(w, &wi) == 0.0 && w <= 16.0) {
    double r = 1.0;
    for (int i = 0; i < static_cast<int>(wi); ++i) r *= s;
    return r;
  }
  return std::pow(s, w);
}

struct PiecewiseContext {
  const std::vector<SinForm>* forms;
  int rank;
  QuadOptions opts;
  std::vector<double> point;
  long long evals = 0;
};

double eval_integrand(PiecewiseContext& ctx) {
  ++ctx.evals;
  double prod = 1.0;
  for (const auto& f : *ctx.forms) {
    double arg = 0.0;
    for (int i = 0; i < ctx.rank; ++i) arg += f.n[i] * ctx.point[i];
    prod *= sin_power(arg, f.w);
    if (prod == 0.0) return 0.0;
  }
  return prod;
}

// Zeros of sin(n . s) along axis `axis` for the forms whose support is fully
// contained in the axes seen so far; deeper-support forms contribute their
// breakpoints at deeper levels.
void axis_breakpoints(const PiecewiseContext& ctx, int axis, std::set<double>& pts) {
  for (const auto& f : *ctx.forms) {
    if (f.n[axis] == 0) continue;
    bool determined = true;
    for (int i = axis + 1; i < ctx.rank; ++i)
      if (f.n[i] != 0) { determined = false; break; }
    if (!determined) continue;
    double fixed = 0.0;
    for (int i = 0; i < axis; ++i) fixed += f.n[i] * ctx.point[i];
    // n_axis * t + fixed = m * pi
    double max_arg = fixed + f.n[axis] * kPi;
    for (int m = static_cast<int>(std::floor(fixed / kPi)); m * kPi <= max_arg + 1e-12; ++m) {
      double t = (m * kPi - fixed) / f.n[axis];
      if (t > 1e-13 && t < kPi - 1e-13) pts.insert(t);
    }
  }
}

double integrate_axis(PiecewiseContext& ctx, int axis) {
  std::set<double> pts{0.0, kPi};
  axis_breakpoints(ctx, axis, pts);
  if (axis + 1 < ctx.rank) {
    // Conservative rational grid: panel edges where the deeper breakpoint
    // pattern can change lie at p*pi/q for small q.
    for (int q = 1; q <= ctx.opts.conservative_q; ++q)
      for (int p = 1; p < q; ++p) pts.insert(kPi * p / q);
  }
  const auto& [gx, gw] = gauss_legendre(ctx.opts.nodes);
  std::vector<double> edges(pts.begin(), pts.end());
  double total = 0.0;
  for (size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e], h = edges[e + 1] - edges[e];
    if (h <= 1e-14) continue;
    double panel = 0.0;
    for (int i = 0; i < ctx.opts.nodes; ++i) {
      ctx.point[axis] = a + h * gx[i];
      double v = (axis + 1 == ctx.rank) ? eval_integrand(ctx) : integrate_axis(ctx, axis + 1);
      panel += gw[i] * v;
    }
    total += h * panel;
  }
  return total;
}

bool all_even_integer(const std::vector<SinForm>& forms) {
  for (const auto& f : forms) {
    double wi;
    if (std::modf(f.w, &wi) != 0.0) return false;
    if (static_cast<long>(f.w) % 2 != 0) return false;
  }
  return true;
}

}  // namespace

IntegralEstimate box_sin_integral(const std::vector<SinForm>& forms, int rank,
                                  QuadOptions opts) {
  for (const auto& f : forms)
    if (static_cast<int>(f.n.size()) != rank)
      throw std::invalid_argument("box_sin_integral: form rank mismatch");
  const bool smooth = all_even_integer(forms);
  if (!smooth && rank > 3)
    throw std::domain_error("box_sin_integral: rank cap is 3 for non-even exponents; use sampling");
  if (rank > 4) throw std::domain_error("box_sin_integral: rank cap is 4");

  PiecewiseContext ctx{&forms, rank, opts, std::vector<double>(rank, 0.0)};
  if (smooth) ctx.opts.conservative_q = std::min(opts.conservative_q, 4);
  double value = rank == 0 ? 1.0 : integrate_axis(ctx, 0);
  return {value, 0.0, ctx.evals, EstimateMethod::gauss_tensor, std::nullopt};
}

IntegralEstimate region_sin_integral(const std::vector<SinForm>& forms,
                                     const std::vector<int>& highest, int rank,
                                     QuadOptions opts) {
  for (const auto& f : forms)
    if (static_cast<int>(f.n.size()) != rank)
      throw std::invalid_argument("region_sin_integral: form rank mismatch");
  for (int c : highest)
    if (c < 1) throw std::invalid_argument("region_sin_integral: highest coefficients must be >= 1");

  const auto& [gx, gw] = gauss_legendre(opts.nodes);
  std::vector<double> point(rank, 0.0);
  long long evals = 0;

  // Iterated integral over {s >= 0, highest . s <= pi}: axis i runs from 0 to
  // (pi - sum_{j<i} highest_j s_j)/highest_i, so every factor stays in [0, pi].
  auto recurse = [&](auto&& self, int axis, double budget) -> double {
    const double upper = budget / highest[axis];
    if (upper <= 0.0) return 0.0;
    double total = 0.0;
    for (int i = 0; i < opts.nodes; ++i) {
      point[axis] = upper * gx[i];
      double v;
      if (axis + 1 == rank) {
        ++evals;
        v = 1.0;
        for (const auto& f : forms) {
          double arg = 0.0;
          for (int j = 0; j < rank; ++j) arg += f.n[j] * point[j];
          v *= sin_power(arg, f.w);
          if (v == 0.0) break;
        }
      } else {
        v = self(self, axis + 1, budget - highest[axis] * point[axis]);
      }
      total += gw[i] * v;
    }
    return upper * total;
  };

  double value = rank == 0 ? 1.0 : recurse(recurse, 0, kPi);
  return {value, 0.0, evals, EstimateMethod::gauss_tensor, std::nullopt};
}

}  // namespace edl
