#include "edl/gamma.hpp"

#include <cmath>

namespace edl {

namespace {

// log |Gamma(x)| plus the sign of Gamma(x); x < 0 handled by the sign of the
// reflection interval.
void accumulate(double x, double sgn, double& log_abs, int& sign) {
  if (x <= 0.0 && x == std::floor(x)) throw GammaPoleError(x);
  log_abs += sgn * std::lgamma(x);
  if (x < 0.0) {
    // Gamma alternates sign on (-n-1, -n)
    long n = static_cast<long>(std::floor(-x));
    if ((n % 2) == 0) sign = -sign;
  }
}

}  // namespace

GammaProduct gamma_product(std::vector<double> numerator_args,
                           std::vector<double> denominator_args) {
  GammaProduct g;
  g.numerator_args = std::move(numerator_args);
  g.denominator_args = std::move(denominator_args);
  int sign = 1;
  double log_abs = 0.0;
  for (double x : g.numerator_args) accumulate(x, +1.0, log_abs, sign);
  for (double x : g.denominator_args) accumulate(x, -1.0, log_abs, sign);
  g.log_value = log_abs;
  g.value = sign * std::exp(log_abs);
  return g;
}

}  // namespace edl
