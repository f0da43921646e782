#include "edl/catalog.hpp"

#include <doctest.h>

using namespace edl;

TEST_CASE("expression evaluator") {
  std::map<char, Int> vars{{'n', 3}, {'p', 2}, {'q', 5}};
  CHECK(Expr::parse("n^2+2*n").eval_int(vars) == 15);
  CHECK(Expr::parse("(p+q)*(p+q-1)/2").eval_int(vars) == 21);
  CHECK(Expr::parse("2*(q-p)").eval_int(vars) == 6);
  CHECK(Expr::parse("-3+n").eval_int(vars) == 0);
  CHECK(Expr::parse("n*(n+1)/2").eval_exact(vars) == 6);
  CHECK(Expr::parse("4*pi*sqrt(n)").eval_numeric(vars) ==
        doctest::Approx(4 * 3.14159265358979 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(Expr::parse("sqrt(n)").eval_exact(vars), std::domain_error);
  CHECK_THROWS_AS(Expr::parse("n+"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("x+1"), std::invalid_argument);
  CHECK(Expr::parse("n/2").evaluable(vars));
  CHECK_FALSE(Expr::parse("i+1").evaluable(vars));

  CHECK(Condition::parse("n>=1 & n<4").eval(vars));
  CHECK_FALSE(Condition::parse("p>q").eval(vars));
  CHECK(Condition::parse("odd(p+q)").eval(vars));
  CHECK_FALSE(Condition::parse("even(p+q)").eval(vars));
  CHECK(Condition::parse("").eval(vars));
}

TEST_CASE("catalog parses with every row present") {
  const auto& rows = catalog();
  CHECK(rows.size() == 29);
  auto labels = catalog_labels();
  for (const char* expect :
       {"AI", "AII", "AIII_a", "AIII_b", "AIV", "BI_a", "BI_b", "BII", "CI", "CII_a",
        "CII_b", "DI_a", "DI_b", "DI_c", "DII", "DIII_a", "DIII_b", "EI", "EII", "EIII",
        "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"})
    CHECK(std::count(labels.begin(), labels.end(), expect) == 1);

  CHECK_THROWS_AS(parse_catalog("[X]\nfoo = 1\n"), std::invalid_argument);  // no header
  CHECK_THROWS_AS(parse_catalog("# edl-catalog v1\n[X]\nbogus_key = 1\n"),
                  std::invalid_argument);
}

TEST_CASE("lookup evaluates the row") {
  ParameterBinding b;
  b.n = 3;
  auto e = lookup("AIV", b);
  CHECK(e.dim_g == 15);
  CHECK(e.dim_h == 9);
  CHECK(e.dim_k == 4);
  CHECK(e.restricted_family == Family::A);
  CHECK(e.restricted_rank == 1);
  CHECK(e.highest_printed == std::vector<int>{2});
  CHECK(e.m_lambda == std::vector<Rat>{4});
  CHECK(e.m_2lambda == std::vector<Rat>{1});
  CHECK(e.center == "Z4");
  CHECK(e.g_family == Family::A);
  CHECK(e.g_rank == 3);

  auto fii = lookup("FII", {});
  CHECK(fii.dim_g == 52);
  CHECK(fii.dim_h == 36);
  CHECK(fii.m_lambda == std::vector<Rat>{8});
  CHECK(fii.m_2lambda == std::vector<Rat>{7});
  CHECK(fii.highest_printed == std::vector<int>{2});

  ParameterBinding b1;
  b1.n = 1;
  auto ai = lookup("AI", b1);
  bool has_so2_note = false;
  for (const auto& n : ai.notes)
    if (n.find("SO(2)") != std::string::npos && n.find("4*pi") != std::string::npos)
      has_so2_note = true;
  CHECK(has_so2_note);

  CHECK_THROWS_AS(lookup("ZZ", {}), std::invalid_argument);
  ParameterBinding bad;
  bad.p = 3;
  bad.q = 3;  // needs p < q
  CHECK_THROWS_AS(lookup("AIII_a", bad), std::invalid_argument);
  CHECK_THROWS_AS(lookup("AIV", {}), std::domain_error);  // unbound parameter
}

TEST_CASE("dimension checks") {
  ParameterBinding b;
  b.n = 3;
  auto rep = check_dimensions(lookup("AIV", b));
  CHECK(rep.pass);
  CHECK(rep.dim_split_lhs == 6);   // 15 - 9
  CHECK(rep.dim_split_rhs == 6);   // 1 + (9 - 4)
  CHECK(rep.mult_sum == 5);

  auto fii = check_dimensions(lookup("FII", {}));
  CHECK(fii.pass);
  CHECK(fii.dim_split_lhs == 16);
  CHECK(fii.mult_sum == 15);

  // split rows: dim G = 2 dim H + r with dim K = 0
  for (long n : {1, 2, 3}) {
    ParameterBinding bb;
    bb.n = n;
    auto e = lookup("AI", bb);
    CHECK(e.dim_k == 0);
    CHECK(e.dim_g == 2 * e.dim_h + e.restricted_rank);
    CHECK(check_dimensions(e).pass);
  }
}

TEST_CASE("restricted root systems from the catalog") {
  auto eiv = restricted_root_system(lookup("EIV", {}));
  CHECK(eiv.base.family().family == Family::A);
  CHECK(eiv.base.rank() == 2);
  CHECK_FALSE(eiv.has_doubles());
  CHECK(eiv.multiplicity.long_orbit == 8);

  ParameterBinding p2;
  p2.p = 2;
  auto a3b = restricted_root_system(lookup("AIII_b", p2));  // C2 canonicalizes to B2
  CHECK(a3b.base.family().family == Family::B);
  CHECK(a3b.base.rank() == 2);
  CHECK(a3b.multiplicity.long_orbit == 1);
  CHECK(a3b.multiplicity.short_orbit == 2);

  ParameterBinding n2;
  n2.n = 2;
  auto ai = restricted_root_system(lookup("AI", n2));
  CHECK(ai.base.family().family == Family::A);
  CHECK(ai.base.rank() == 2);
  CHECK(ai.multiplicity.long_orbit == 1);

  // BC1 from the B-series at rank one picks the short-orbit slot
  ParameterBinding cii;
  cii.p = 1;
  cii.q = 3;
  auto bc1 = restricted_root_system(lookup("CII_a", cii));
  CHECK(bc1.base.rank() == 1);
  CHECK(bc1.doubled.size() == 1);
  CHECK(bc1.multiplicity.long_orbit == 8);   // 4(q-p)
  CHECK(bc1.multiplicity.double_long == 3);

  auto eiii = restricted_root_system(lookup("EIII", {}));
  CHECK(eiii.base.family().family == Family::B);
  CHECK(eiii.doubled.size() == 2);
  CHECK(eiii.multiplicity.long_orbit == 6);
  CHECK(eiii.multiplicity.short_orbit == 8);
  CHECK(eiii.multiplicity.double_short == 1);
}

TEST_CASE("split rows have full rank and unit multiplicity") {
  for (const auto& row : catalog()) {
    std::vector<ParameterBinding> bindings = row.audit_bindings;
    if (bindings.empty()) bindings.push_back({});
    for (const auto& b : bindings) {
      auto e = lookup(row.label, b);
      const bool full_rank = e.restricted_rank == e.g_rank;
      CHECK_MESSAGE(e.split() == full_rank, row.label, " ", b.str());
      if (e.split()) {
        for (const auto& m : e.m_lambda) CHECK(m == 1);
        for (const auto& m : e.m_2lambda) CHECK(m == 0);
      }
    }
  }
}

TEST_CASE("catalog audit is clean and keeps the provenance notes") {
  auto audit = catalog_audit();
  CHECK(audit.size() == 63);  // 17 parametric rows x 3 bindings + 12 fixed rows
  for (const auto& rec : audit) CHECK_MESSAGE(rec.pass, rec.label, " ", rec.binding, ": ", rec.detail);

  bool cii_note = false, bii_note = false, aiii_note = false;
  for (const auto& rec : audit) {
    for (const auto& note : rec.notes) {
      if (rec.label == "CII_a" && note.find("USp(2q-2q)") != std::string::npos) cii_note = true;
      if (rec.label == "BII" && note.find("SO(2n-1)") != std::string::npos) bii_note = true;
      if (rec.label == "AIII_a" && note.find("(2,2,...,2)") != std::string::npos) aiii_note = true;
    }
  }
  CHECK(cii_note);
  CHECK(bii_note);
  CHECK(aiii_note);
}

TEST_CASE("full non-reduced highest root overrides the printed pattern") {
  // the doubled short roots double the binding constraint
  ParameterBinding b;
  b.p = 2;
  b.q = 4;
  auto nr = restricted_root_system(lookup("AIII_a", b));
  CHECK(full_highest_root(nr).coeffs == std::vector<int>{2, 2});
  auto printed = lookup("AIII_a", b).highest_printed;
  CHECK(printed == std::vector<int>{1, 2});  // kept verbatim, flagged by a note
}
