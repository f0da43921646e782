#pragma once

#include "edl/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace edl {

// Sparse Laurent polynomial over the root lattice: exponent vectors in the
// simple-root basis, arbitrary-precision integer coefficients.  No zero
// coefficients are stored.
class LaurentPolynomial {
 public:
  using Exponent = std::vector<int32_t>;
  using TermMap = std::map<Exponent, Int>;

  explicit LaurentPolynomial(int rank) : rank_(rank) {}

  static LaurentPolynomial one(int rank) {
    LaurentPolynomial p(rank);
    p.terms_[Exponent(rank, 0)] = 1;
    return p;
  }

  // (1 - e^alpha)^k expanded by the binomial theorem.
  static LaurentPolynomial one_minus_exp_pow(const std::vector<int>& alpha, unsigned k);

  int rank() const { return rank_; }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }
  Int constant_coeff() const { return coeff(Exponent(rank_, 0)); }

  void add_term(const Exponent& e, const Int& c);

  bool operator==(const LaurentPolynomial& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

 private:
  int rank_;
  TermMap terms_;
};

LaurentPolynomial poly_mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial poly_pow(const LaurentPolynomial& p, unsigned k);

}  // namespace edl
