#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace edl {

struct GammaPoleError : std::domain_error {
  explicit GammaPoleError(double arg)
      : std::domain_error("gamma pole at non-positive integer argument " + std::to_string(arg)) {}
};

// Product of Gamma(x) over numerator_args divided by the product over
// denominator_args, evaluated in log space with sign tracking.
struct GammaProduct {
  double value = 1.0;
  double log_value = 0.0;  // log |value|
  std::vector<double> numerator_args;
  std::vector<double> denominator_args;
};

// Throws GammaPoleError if any argument is a non-positive integer.
GammaProduct gamma_product(std::vector<double> numerator_args,
                           std::vector<double> denominator_args);

}  // namespace edl
