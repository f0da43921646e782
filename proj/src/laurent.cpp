#include "edl/laurent.hpp"

namespace edl {

LaurentPolynomial LaurentPolynomial::one_minus_exp_pow(const std::vector<int>& alpha,
                                                       unsigned k) {
  LaurentPolynomial p(static_cast<int>(alpha.size()));
  Int c = 1;
  for (unsigned j = 0; j <= k; ++j) {
    Exponent e(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i)
      e[i] = static_cast<int32_t>(alpha[i]) * static_cast<int32_t>(j);
    p.add_term(e, (j % 2 == 0) ? c : -c);
    c = c * (k - j) / (j + 1);
  }
  return p;
}

void LaurentPolynomial::add_term(const Exponent& e, const Int& c) {
  if (static_cast<int>(e.size()) != rank_)
    throw std::invalid_argument("LaurentPolynomial: rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial poly_mul(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.rank() != q.rank()) throw std::invalid_argument("poly_mul: rank mismatch");
  LaurentPolynomial out(p.rank());
  LaurentPolynomial::Exponent e(p.rank());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (int i = 0; i < p.rank(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

LaurentPolynomial poly_pow(const LaurentPolynomial& p, unsigned k) {
  LaurentPolynomial result = LaurentPolynomial::one(p.rank());
  LaurentPolynomial base = p;
  while (k > 0) {
    if (k & 1) result = poly_mul(result, base);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base);
  }
  return result;
}

}  // namespace edl
