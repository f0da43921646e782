#pragma once

#include "edl/numeric.hpp"

#include <cmath>
#include <string>

namespace edl {

// Exact prefactor of the form  q * sqrt(s) * pi^k  with rational q, s.
// Collapsed to floating point only at comparison time.
struct Prefactor {
  Rat rational{1};
  Rat under_sqrt{1};
  int pi_power{0};

  Prefactor& operator*=(const Prefactor& o) {
    rational *= o.rational;
    under_sqrt *= o.under_sqrt;
    pi_power += o.pi_power;
    return *this;
  }
  friend Prefactor operator*(Prefactor a, const Prefactor& b) { return a *= b; }

  Prefactor inverse() const {
    if (rational == 0 || under_sqrt == 0) throw std::domain_error("Prefactor: zero inverse");
    return Prefactor{Rat(1) / rational, Rat(1) / under_sqrt, -pi_power};
  }

  double value() const {
    return to_double(rational) * std::sqrt(to_double(under_sqrt)) *
           std::pow(std::acos(-1.0), pi_power);
  }

  std::string str() const {
    std::string s = rational.str();
    if (under_sqrt != 1) s += "*sqrt(" + under_sqrt.str() + ")";
    if (pi_power != 0) s += "*pi^" + std::to_string(pi_power);
    return s;
  }
};

inline Prefactor rational_prefactor(Rat q) { return Prefactor{std::move(q), 1, 0}; }

}  // namespace edl
