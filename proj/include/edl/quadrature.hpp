#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edl {

enum class EstimateMethod { gauss_tensor, monte_carlo };
std::string to_string(EstimateMethod m);

struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 for deterministic quadrature
  long long samples_or_nodes = 0;
  EstimateMethod method = EstimateMethod::gauss_tensor;
  std::optional<uint64_t> seed;
};

// One factor |sin(n . s)|^w of a torus-type integrand; n has nonnegative
// integer entries, w >= 0.
struct SinForm {
  std::vector<int> n;
  double w;
};

struct QuadOptions {
  int nodes = 24;           // Gauss-Legendre nodes per panel
  int conservative_q = 12;  // extra breakpoints at p*pi/q on outer axes
};

// Gauss-Legendre nodes/weights on [0, 1] (cached).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

// integral over the box [0, pi]^rank of prod_a |sin(n_a . s)|^{w_a}.
// Panels split every axis at the integrand's interior zeros, so each panel
// is analytic; rank <= 3 for non-even exponents, rank <= 4 otherwise.
IntegralEstimate box_sin_integral(const std::vector<SinForm>& forms, int rank,
                                  QuadOptions opts = {});

// integral over the simplex region {s >= 0, sum_i highest_i s_i <= pi} of
// prod_a sin(n_a . s)^{w_a}; the integrand is smooth there.
IntegralEstimate region_sin_integral(const std::vector<SinForm>& forms,
                                     const std::vector<int>& highest, int rank,
                                     QuadOptions opts = {});

}  // namespace edl
