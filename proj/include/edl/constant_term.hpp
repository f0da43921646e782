#pragma once

#include "edl/laurent.hpp"
#include "edl/root_system.hpp"

#include <string>

namespace edl {

struct CTOptions {
  size_t term_budget = 10'000'000;
};

struct TermBudgetExceeded : std::runtime_error {
  size_t bound;
  explicit TermBudgetExceeded(size_t b)
      : std::runtime_error("constant_term: term budget exceeded at " + std::to_string(b)),
        bound(b) {}
};

// Exact constant term of  prod_{a in R} (1 - e^a)^{k_a}  over positive and
// negative roots, doubled roots included with their own exponent.  Exponents
// must be nonnegative integers.
Int constant_term(const NonReducedRootSystem& R, const MultiplicityFunction& k,
                  CTOptions opts = {});

inline Int constant_term(const RootSystem& rs, unsigned k, CTOptions opts = {}) {
  return constant_term(reduced_with_constant(rs, k), MultiplicityFunction::constant(k), opts);
}

// prod_i C(k d_i, k) over the invariant degrees.
Int predict_macdonald_21(const RootSystem& rs, unsigned k);

// prod_{a in R} (|<rho_k, a^vee> + k_a + k_{a/2}/2|)! / (|<rho_k, a^vee> + k_{a/2}/2|)!
// with rho_k = (1/2) sum_{a>0} k_a a, all pairings exact rationals.
Rat predict_macdonald_23(const NonReducedRootSystem& R, const MultiplicityFunction& k);

enum class CTFormula { dyson_A, macdonald_21, macdonald_23 };
std::string to_string(CTFormula f);

struct CTResult {
  Int computed;
  Int predicted;
  CTFormula formula;
  bool pass() const { return computed == predicted; }
};

CTResult check_dyson_A(int n, unsigned k, CTOptions opts = {});              // A_{n-1}, CT = (kn)!/(k!)^n
CTResult check_macdonald_21(const RootSystem& rs, unsigned k, CTOptions opts = {});
CTResult check_macdonald_23(const NonReducedRootSystem& R, const MultiplicityFunction& k,
                            CTOptions opts = {});

}  // namespace edl
