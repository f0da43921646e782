#include "edl/integrals.hpp"

#include "edl/constant_term.hpp"

#include <doctest.h>

#include <cmath>

using namespace edl;

namespace {

const double kPi = std::acos(-1.0);

// plain 2-D Gauss-Legendre oracle over the unit square
double square_quadrature(int nodes, double (*f)(double, double)) {
  const auto& [x, w] = gauss_legendre(nodes);
  double total = 0.0;
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j) total += w[i] * w[j] * f(x[i], x[j]);
  return total;
}

}  // namespace

TEST_CASE("selberg closed form") {
  // n=1 is the beta integral
  for (double a : {0.5, 1.0, 2.0, 3.5})
    for (double b : {0.5, 1.25, 4.0}) {
      double lhs = selberg_closed(1, a, b, 0.7).value;
      double rhs = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }

  // quadrature oracles: S2(1,1,1) and S2(1,1,2)
  double s211 = square_quadrature(48, [](double t1, double t2) {
    return (t1 - t2) * (t1 - t2);
  });
  CHECK(selberg_closed(2, 1, 1, 1).value == doctest::Approx(s211).epsilon(1e-10));
  CHECK(selberg_closed(2, 1, 1, 1).value == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  double s212 = square_quadrature(48, [](double t1, double t2) {
    double d = (t1 - t2) * (t1 - t2);
    return d * d;
  });
  CHECK(selberg_closed(2, 1, 1, 2).value == doctest::Approx(s212).epsilon(1e-10));
  CHECK(selberg_closed(2, 1, 1, 2).value == doctest::Approx(1.0 / 15.0).epsilon(1e-12));

  CHECK_THROWS_AS(selberg_closed(2, -1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(selberg_closed(3, 1.0, 1.0, -2.0), std::domain_error);
}

TEST_CASE("mehta integral") {
  CHECK(mehta_closed(1, 0.7).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mehta_closed(2, 1.0).value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mehta_closed(3, 1.0).value == doctest::Approx(12.0).epsilon(1e-12));

  McOptions opts{42, 8, 400000};
  for (int n : {2, 3, 4}) {
    for (double g : {0.5, 1.0, 2.0}) {
      auto est = mehta_mc(n, g, opts);
      double closed = mehta_closed(n, g).value;
      CHECK_MESSAGE(std::abs(est.value - closed) <= 3.0 * est.std_error, "n=", n, " g=", g,
                    " value=", est.value, " closed=", closed, " se=", est.std_error);
      CHECK(est.std_error > 0.0);
      CHECK(est.method == EstimateMethod::monte_carlo);
    }
  }
  CHECK_THROWS_AS(mehta_mc(2, 1.0, McOptions{42, 8, 100}), std::domain_error);
  CHECK_THROWS_AS(mehta_mc(2, -0.5, opts), std::domain_error);
}

TEST_CASE("circular ensemble") {
  CHECK(circular_closed(2, 1.0).value == doctest::Approx(2.0).epsilon(1e-14));
  for (int n : {2, 3, 5}) CHECK(circular_closed(n, 0.0).value == doctest::Approx(1.0));
  CHECK(circular_closed(3, 2.0).value == doctest::Approx(90.0).epsilon(1e-12));
  CHECK(to_double(constant_term(build_root_system(Family::A, 2), 2)) ==
        doctest::Approx(circular_closed(3, 2.0).value).epsilon(1e-12));

  auto quad = circular_numeric(2, 1.0, EstimateMethod::gauss_tensor);
  CHECK(quad.value == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(quad.std_error == 0.0);

  McOptions opts{7, 4, 200000};
  for (int n : {2, 3, 4}) {
    for (double g : {0.5, 1.0, 2.0}) {
      auto est = circular_numeric(n, g, EstimateMethod::monte_carlo, {}, opts);
      double closed = circular_closed(n, g).value;
      CHECK_MESSAGE(std::abs(est.value - closed) <= 3.0 * est.std_error, "n=", n, " g=", g);
    }
  }
  CHECK_THROWS_AS(circular_numeric(4, 1.0, EstimateMethod::gauss_tensor), std::domain_error);
  CHECK_THROWS_AS(circular_numeric(2, 0.5, EstimateMethod::gauss_tensor), std::domain_error);
}

TEST_CASE("macdonald closed form") {
  auto a1 = build_root_system(Family::A, 1);
  CHECK(macdonald_closed(a1, 0.5).value == doctest::Approx(4.0 / kPi).epsilon(1e-14));
  // s = 1 telescopes to the product of the degrees
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 3}, {Family::G, 2},
                           {Family::F, 4}, {Family::E, 6}}) {
    auto rs = build_root_system(fam, rank);
    CHECK(macdonald_closed(rs, 1.0).value ==
          doctest::Approx(to_double(rs.weyl_order())).epsilon(1e-10));
  }
  auto a2 = build_root_system(Family::A, 2);
  CHECK(macdonald_closed(a2, 2.0).value == doctest::Approx(90.0).epsilon(1e-12));
  CHECK_THROWS_AS(macdonald_closed(a2, 0.0), std::domain_error);
}

TEST_CASE("opdam closed form") {
  // constant k on a reduced system reduces to the macdonald product
  for (auto [fam, rank] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::B, 2},
                           {Family::G, 2}}) {
    auto rs = build_root_system(fam, rank);
    for (Rat k : {Rat(1, 2), Rat(1), Rat(3, 2)}) {
      auto R = reduced_with_constant(rs, k);
      double lhs = opdam_closed(R, R.multiplicity).value;
      double rhs = macdonald_closed(rs, to_double(k)).value;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
  auto a1 = reduced_with_constant(build_root_system(Family::A, 1), Rat(1, 2));
  CHECK(opdam_closed(a1, a1.multiplicity).value == doctest::Approx(4.0 / kPi).epsilon(1e-13));

  // BC1 with m = (4,1), k = m/2: matched by the 1-D quadrature oracle below
  MultiplicityFunction k;
  k.long_orbit = 2;
  k.double_long = Rat(1, 2);
  auto bc1 = build_nonreduced({Family::BC, 1}, MultiplicityFunction{4, 0, 1, 0});
  double j = opdam_closed(bc1, k).value;
  CHECK(j == doctest::Approx(64.0 / (3.0 * kPi)).epsilon(1e-12));
  // oracle: integral of sin^4(s) sin(2s) over [0, pi/2] equals pi J / 2^6
  const auto& [gx, gw] = gauss_legendre(64);
  double quad = 0.0;
  for (int i = 0; i < 64; ++i) {
    double s = kPi / 2 * gx[i];
    quad += gw[i] * std::pow(std::sin(s), 4) * std::sin(2 * s);
  }
  quad *= kPi / 2;
  CHECK(quad == doctest::Approx(kPi * j / 64.0).epsilon(1e-12));

  MultiplicityFunction neg;
  neg.long_orbit = -1;
  CHECK_THROWS_AS(opdam_closed(a1, neg), std::domain_error);
}

TEST_CASE("gamma product internals") {
  auto g = gamma_product({5.5, 2.0}, {3.25});
  CHECK(std::exp(g.log_value) == doctest::Approx(std::abs(g.value)).epsilon(1e-12));
  CHECK(g.numerator_args.size() == 2);
  CHECK_THROWS_AS(gamma_product({0.0}, {}), GammaPoleError);
  CHECK_THROWS_AS(gamma_product({1.0}, {-3.0}), GammaPoleError);
}

TEST_CASE("torus integral against the exact constant term") {
  for (auto [fam, rank] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::B, 2},
                           {Family::G, 2}}) {
    auto rs = build_root_system(fam, rank);
    for (unsigned k : {1u, 2u}) {
      auto R = reduced_with_constant(rs, k);
      auto est = torus_integral(R, R.multiplicity, EstimateMethod::gauss_tensor);
      double exact = to_double(constant_term(rs, k));
      CHECK_MESSAGE(std::abs(est.value / exact - 1.0) < 1e-6, to_string(fam), rank, " k=", k);
    }
  }
}

TEST_CASE("torus integral against the closed product") {
  for (auto [fam, rank] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::B, 2},
                           {Family::G, 2}}) {
    auto rs = build_root_system(fam, rank);
    for (Rat s : {Rat(1, 2), Rat(1), Rat(3, 2)}) {
      auto R = reduced_with_constant(rs, s);
      auto est = torus_integral(R, R.multiplicity, EstimateMethod::gauss_tensor);
      double closed = macdonald_closed(rs, to_double(s)).value;
      CHECK_MESSAGE(std::abs(est.value / closed - 1.0) < 1e-4, to_string(fam), rank);
    }
  }
  // A1 at s = 1/2 is exactly 4/pi
  auto a1 = reduced_with_constant(build_root_system(Family::A, 1), Rat(1, 2));
  auto est = torus_integral(a1, a1.multiplicity, EstimateMethod::gauss_tensor);
  CHECK(est.value == doctest::Approx(4.0 / kPi).epsilon(1e-10));
}

TEST_CASE("monte carlo determinism per seed and shard count") {
  McOptions opts{1234, 4, 50000};
  auto a = mehta_mc(3, 1.0, opts);
  auto b = mehta_mc(3, 1.0, opts);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  opts.shards = 5;
  auto c = mehta_mc(3, 1.0, opts);
  CHECK(a.value != c.value);  // stream split is part of the contract
  CHECK(std::abs(a.value - c.value) < 0.3);
}

TEST_CASE("estimate invariants") {
  auto g2 = reduced_with_constant(build_root_system(Family::G, 2), 1);
  auto quad = torus_integral(g2, g2.multiplicity, EstimateMethod::gauss_tensor);
  CHECK(quad.std_error == 0.0);
  CHECK_FALSE(quad.seed.has_value());
  auto mc = torus_integral(g2, g2.multiplicity, EstimateMethod::monte_carlo, {},
                           McOptions{9, 2, 20000});
  CHECK(mc.std_error > 0.0);
  CHECK(mc.seed.has_value());
  CHECK(std::abs(mc.value / quad.value - 1.0) < 0.1);
}
