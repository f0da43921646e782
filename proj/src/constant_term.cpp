#include "edl/constant_term.hpp"

#include <algorithm>
#include <numeric>

namespace edl {

namespace {

struct Factor {
  std::vector<int> alpha;  // exponent direction
  unsigned k;
};

unsigned exponent_for(const MultiplicityFunction& k, Orbit o) {
  const Rat& v = k[o];
  if (!is_integer(v) || v < 0)
    throw std::invalid_argument("constant_term: exponents must be nonnegative integers");
  return static_cast<unsigned>(to_integer(v).convert_to<long>());
}

}  // namespace

Int constant_term(const NonReducedRootSystem& R, const MultiplicityFunction& k,
                  CTOptions opts) {
  const int rank = R.base.rank();

  // One factor pair (+a, -a) per positive root of the full system.  Pairs are
  // multiplied together and processed small-support first so the running
  // product stays centered on the origin.
  std::vector<Factor> pairs;
  for (const auto& [root, orbit] : positive_orbit_roots(R)) {
    unsigned kk = exponent_for(k, orbit);
    if (kk == 0) continue;
    pairs.push_back({root->coeffs, kk});
  }
  auto radius = [](const Factor& f) {
    long r = 0;
    for (int c : f.alpha) r += std::abs(c) * static_cast<long>(f.k);
    return r;
  };
  std::sort(pairs.begin(), pairs.end(), [&](const Factor& a, const Factor& b) {
    return radius(a) < radius(b);
  });

  // Suffix support boxes: after multiplying pairs [0, t), the remaining pairs
  // can shift any exponent by at most [-suffix[t], +suffix[t]] per coordinate.
  std::vector<std::vector<long>> suffix(pairs.size() + 1, std::vector<long>(rank, 0));
  for (size_t t = pairs.size(); t-- > 0;) {
    suffix[t] = suffix[t + 1];
    for (int i = 0; i < rank; ++i)
      suffix[t][i] += std::abs(pairs[t].alpha[i]) * static_cast<long>(pairs[t].k);
  }

  LaurentPolynomial acc = LaurentPolynomial::one(rank);
  for (size_t t = 0; t < pairs.size(); ++t) {
    std::vector<int> neg(pairs[t].alpha.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -pairs[t].alpha[i];
    auto factor = poly_mul(LaurentPolynomial::one_minus_exp_pow(pairs[t].alpha, pairs[t].k),
                           LaurentPolynomial::one_minus_exp_pow(neg, pairs[t].k));
    LaurentPolynomial next(rank);
    LaurentPolynomial::Exponent e(rank);
    for (const auto& [ea, ca] : acc.terms()) {
      for (const auto& [ef, cf] : factor.terms()) {
        bool reachable = true;
        for (int i = 0; i < rank; ++i) {
          e[i] = ea[i] + ef[i];
          if (std::abs(static_cast<long>(e[i])) > suffix[t + 1][i]) reachable = false;
        }
        if (!reachable) continue;  // cannot return to the origin
        next.add_term(e, ca * cf);
        if (next.term_count() > opts.term_budget) throw TermBudgetExceeded(opts.term_budget);
      }
    }
    acc = std::move(next);
  }
  return acc.constant_coeff();
}

Int predict_macdonald_21(const RootSystem& rs, unsigned k) {
  Int prod = 1;
  for (int d : rs.degrees()) prod *= binomial(Int(k) * d, k);
  return prod;
}

Rat predict_macdonald_23(const NonReducedRootSystem& R, const MultiplicityFunction& k) {
  auto roots = positive_orbit_roots(R);

  // rho_k = (1/2) sum_{a>0} k_a a in the embedding.
  std::vector<Rat> rho(R.base.ambient_dim(), 0);
  for (const auto& [root, orbit] : roots)
    for (int i = 0; i < R.base.ambient_dim(); ++i)
      rho[i] += k[orbit] * root->embedding[i] / 2;

  auto half_k_of = [&](const OrbitRoot& r) -> Rat {
    // k_{a/2} is nonzero only when a is a doubled root.
    if (r.orbit == Orbit::DoubleLong) return k[Orbit::Long] / 2;
    if (r.orbit == Orbit::DoubleShort) return k[Orbit::Short] / 2;
    return 0;
  };

  auto fact_of = [](const Rat& arg) {
    Rat a = arg < 0 ? -arg : arg;
    if (!is_integer(a))
      throw std::domain_error("predict_macdonald_23: non-integer factorial argument " + a.str());
    return factorial(to_integer(a).convert_to<unsigned>());
  };

  Rat prod = 1;
  for (const auto& r : roots) {
    Rat pairing = 2 * dot(rho, r.root->embedding) / dot(r.root->embedding, r.root->embedding);
    Rat ka = k[r.orbit];
    Rat hk = half_k_of(r);
    // contribution of +a and of -a
    prod *= Rat(fact_of(pairing + ka + hk)) / Rat(fact_of(pairing + hk));
    prod *= Rat(fact_of(-pairing + ka + hk)) / Rat(fact_of(-pairing + hk));
  }
  return prod;
}

std::string to_string(CTFormula f) {
  switch (f) {
    case CTFormula::dyson_A: return "dyson_A";
    case CTFormula::macdonald_21: return "macdonald_21";
    case CTFormula::macdonald_23: return "macdonald_23";
  }
  return "?";
}

CTResult check_dyson_A(int n, unsigned k, CTOptions opts) {
  if (n < 2) throw std::invalid_argument("check_dyson_A: need n >= 2");
  auto rs = build_root_system(Family::A, n - 1);
  Int predicted = factorial(k * n);
  Int kf = factorial(k);
  for (int i = 0; i < n; ++i) predicted /= kf;
  return {constant_term(rs, k, opts), predicted, CTFormula::dyson_A};
}

CTResult check_macdonald_21(const RootSystem& rs, unsigned k, CTOptions opts) {
  return {constant_term(rs, k, opts), predict_macdonald_21(rs, k), CTFormula::macdonald_21};
}

CTResult check_macdonald_23(const NonReducedRootSystem& R, const MultiplicityFunction& k,
                            CTOptions opts) {
  Rat p = predict_macdonald_23(R, k);
  return {constant_term(R, k, opts), to_integer(p), CTFormula::macdonald_23};
}

}  // namespace edl
