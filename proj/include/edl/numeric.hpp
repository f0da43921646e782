#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edl {

// Exact arithmetic backbone: arbitrary-precision integers for orders and
// counting identities, rationals for Euclidean root data.  Floating point
// enters only at the final square-root / transcendental step.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Int& n) { return n.convert_to<double>(); }
inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("expected integral value, got " + r.str());
  return numerator(r);
}

Int factorial(unsigned n);

// binomial(n, k) for arbitrary-precision n >= 0.
Int binomial(const Int& n, unsigned k);

// Exact dot product of rational vectors (same length).
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

// Determinant of a square rational matrix by fraction-free elimination.
Rat det(std::vector<std::vector<Rat>> m);

// Solve M x = b for square nonsingular rational M.
std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> b);

}  // namespace edl
