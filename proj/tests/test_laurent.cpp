#include "edl/constant_term.hpp"

#include <doctest.h>

using namespace edl;

namespace {

// Independent oracle: the full product with no pruning and no ordering
// tricks, one factor at a time.
Int brute_force_ct(const NonReducedRootSystem& R, const MultiplicityFunction& k) {
  const int rank = R.base.rank();
  LaurentPolynomial acc = LaurentPolynomial::one(rank);
  for (const auto& [root, orbit] : positive_orbit_roots(R)) {
    if (!is_integer(k[orbit])) throw std::invalid_argument("oracle: integer exponents only");
    unsigned kk = to_integer(k[orbit]).convert_to<unsigned>();
    if (kk == 0) continue;
    std::vector<int> neg(root->coeffs.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -root->coeffs[i];
    acc = poly_mul(acc, LaurentPolynomial::one_minus_exp_pow(root->coeffs, kk));
    acc = poly_mul(acc, LaurentPolynomial::one_minus_exp_pow(neg, kk));
  }
  return acc.constant_coeff();
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  // (1-x)(1-x^-1) = 2 - x - x^-1
  auto f = poly_mul(LaurentPolynomial::one_minus_exp_pow({1}, 1),
                    LaurentPolynomial::one_minus_exp_pow({-1}, 1));
  CHECK(f.term_count() == 3);
  CHECK(f.coeff({0}) == 2);
  CHECK(f.coeff({1}) == -1);
  CHECK(f.coeff({-1}) == -1);

  auto sq = poly_pow(f, 2);
  CHECK(sq.constant_coeff() == 6);

  CHECK(poly_pow(f, 0).constant_coeff() == 1);
  CHECK(poly_pow(f, 0).term_count() == 1);

  LaurentPolynomial other(2);
  CHECK_THROWS_AS(poly_mul(f, other), std::invalid_argument);
}

TEST_CASE("zero-coefficient terms are dropped") {
  LaurentPolynomial p(1);
  p.add_term({3}, 5);
  p.add_term({3}, -5);
  CHECK(p.term_count() == 0);
  p.add_term({1}, 0);
  CHECK(p.term_count() == 0);
}

TEST_CASE("constant term basics") {
  auto a1 = build_root_system(Family::A, 1);
  CHECK(constant_term(a1, 1) == 2);
  CHECK(constant_term(a1, 0) == 1);
  auto a2 = build_root_system(Family::A, 2);
  CHECK(constant_term(a2, 2) == 90);
  CHECK(constant_term(build_root_system(Family::G, 2), 0) == 1);
}

TEST_CASE("pruned product agrees with the brute-force oracle") {
  for (unsigned k = 1; k <= 3; ++k) {
    auto R = reduced_with_constant(build_root_system(Family::A, 1), k);
    CHECK(constant_term(R, R.multiplicity) == brute_force_ct(R, R.multiplicity));
  }
  for (unsigned k = 1; k <= 2; ++k) {
    for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
      auto R = reduced_with_constant(build_root_system(fam, rank), k);
      CHECK(constant_term(R, R.multiplicity) == brute_force_ct(R, R.multiplicity));
    }
  }
  MultiplicityFunction m{2, 0, 1, 0};
  auto bc1 = build_nonreduced({Family::BC, 1}, m);
  CHECK(constant_term(bc1, m) == brute_force_ct(bc1, m));
  MultiplicityFunction m2{1, 2, 0, 1};
  auto bc2 = build_nonreduced({Family::BC, 2}, m2);
  CHECK(constant_term(bc2, m2) == brute_force_ct(bc2, m2));
}

TEST_CASE("A-series factorial identity") {
  for (int n = 2; n <= 4; ++n)
    for (unsigned k = 0; k <= 3; ++k) {
      auto res = check_dyson_A(n, k);
      CHECK_MESSAGE(res.pass(), "n=", n, " k=", k, ": ", res.computed.str(), " vs ",
                    res.predicted.str());
    }
  // n=2, k=3: CT = 6!/(3!)^2 = 20
  CHECK(check_dyson_A(2, 3).computed == 20);
}

TEST_CASE("binomial product prediction") {
  auto g2 = build_root_system(Family::G, 2);
  CHECK(predict_macdonald_21(g2, 1) == 12);
  CHECK(predict_macdonald_21(g2, 0) == 1);
  CHECK(predict_macdonald_21(build_root_system(Family::A, 1), 3) == 20);
  for (unsigned k = 1; k <= 2; ++k)
    for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
      auto res = check_macdonald_21(build_root_system(fam, rank), k);
      CHECK_MESSAGE(res.pass(), to_string(fam), rank, " k=", k);
    }
}

TEST_CASE("non-reduced product prediction") {
  // reduced system with constant exponent reduces to the binomial product
  for (auto [fam, rank] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::B, 2},
                           {Family::G, 2}}) {
    auto rs = build_root_system(fam, rank);
    for (unsigned k = 0; k <= 3; ++k) {
      auto R = reduced_with_constant(rs, k);
      Rat p23 = predict_macdonald_23(R, R.multiplicity);
      CHECK(to_integer(p23) == predict_macdonald_21(rs, k));
    }
  }
  auto a1 = build_root_system(Family::A, 1);
  auto R = reduced_with_constant(a1, 2);
  CHECK(to_integer(predict_macdonald_23(R, R.multiplicity)) == 6);

  MultiplicityFunction m{1, 0, 1, 0};
  auto bc1 = build_nonreduced({Family::BC, 1}, m);
  auto res = check_macdonald_23(bc1, m);
  CHECK(res.predicted == 4);
  CHECK(res.pass());
}

TEST_CASE("mixed exponents on BC1 and BC2") {
  for (int kl = 0; kl <= 2; ++kl)
    for (int kd = 0; kd <= 2; ++kd) {
      MultiplicityFunction m;
      m.long_orbit = kl;
      m.double_long = kd;
      auto R = build_nonreduced({Family::BC, 1}, m);
      auto res = check_macdonald_23(R, m);
      CHECK_MESSAGE(res.pass(), "BC1 k=(", kl, ",", kd, "): ", res.computed.str(), " vs ",
                    res.predicted.str());
    }
  for (int kl = 0; kl <= 2; ++kl)
    for (int ks = 0; ks <= 2; ++ks)
      for (int kd = 0; kd <= 2; ++kd) {
        MultiplicityFunction m;
        m.long_orbit = kl;
        m.short_orbit = ks;
        m.double_short = kd;
        auto R = build_nonreduced({Family::BC, 2}, m);
        auto res = check_macdonald_23(R, m);
        CHECK_MESSAGE(res.pass(), "BC2 k=(", kl, ",", ks, ",", kd, ")");
      }
}

TEST_CASE("term budget") {
  auto g2 = build_root_system(Family::G, 2);
  CTOptions tiny;
  tiny.term_budget = 5;
  CHECK_THROWS_AS(constant_term(g2, 2, tiny), TermBudgetExceeded);
}
