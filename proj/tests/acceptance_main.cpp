// End-to-end acceptance harness: every check below runs at its pinned
// tolerance and prints one PASS/FAIL line.  Exit code 0 iff all pass.
// Usage: edl_acceptance [path-to-edl-cli]  (the CLI path enables the
// byte-identical-output check to run against the real binary).

#include "edl/constant_term.hpp"
#include "edl/euler.hpp"
#include "edl/suites.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace edl;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail,
            double elapsed_s, double budget_s) {
  bool ok = pass && (budget_s <= 0.0 || elapsed_s <= budget_s);
  if (!ok) ++failures;
  std::printf("%s  criterion %2d  %-28s %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str(), elapsed_s,
              budget_s > 0.0 && elapsed_s > budget_s ? ", over budget" : "");
}

struct Timer {
  Clock::time_point t0 = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }
};

bool suite_ok(const std::vector<VerificationRecord>& recs, std::string& detail) {
  size_t passed = 0;
  std::string first_fail;
  for (const auto& r : recs) {
    if (r.pass) ++passed;
    else if (first_fail.empty()) first_fail = r.command + " " + r.inputs + " -> " + r.computed;
  }
  std::ostringstream os;
  os << passed << "/" << recs.size();
  if (!first_fail.empty()) os << " first failure: " << first_fail;
  detail = os.str();
  return passed == recs.size();
}

std::string run_cli(const std::string& bin, const std::string& args) {
  std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string strip_runtime(const std::string& json) {
  std::istringstream in(json);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("runtime_ms") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.seed = 42;
  cfg.shards = 8;

  {  // 1. exact counting identity |W| = |Z| r! prod(n_i), < 1 s
    Timer t;
    std::string detail;
    bool ok = suite_ok(suite_relation(cfg), detail);
    auto e7 = verify_relation(build_root_system(Family::E, 7));
    ok = ok && e7.lhs == 2903040 && e7.rhs == 2903040;
    report(1, "counting identity", ok, detail, t.seconds(), 1.0);
  }

  {  // 2. Weyl orders by permutation closure, rank <= 4 plus A5, D5, < 30 s
    Timer t;
    std::string detail;
    bool ok = suite_ok(suite_weyl_enumeration(cfg, 4), detail);
    report(2, "weyl enumeration oracle", ok, detail, t.seconds(), 30.0);
  }

  {  // 3. A-series constant term (kn)!/(k!)^n for n <= 4, k <= 3, < 60 s
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    for (int n = 2; n <= 4 && ok; ++n)
      for (unsigned k = 0; k <= 3 && ok; ++k) {
        auto res = check_dyson_A(n, k);
        if (!res.pass()) {
          ok = false;
          detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                   res.computed.str() + " != " + res.predicted.str();
        }
      }
    report(3, "A-series constant term", ok, detail, t.seconds(), 60.0);
  }

  {  // 4. binomial-product constant term on A2, B2, G2 for k <= 2, < 60 s
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2}, {Family::G, 2}})
      for (unsigned k = 0; k <= 2; ++k) {
        auto res = check_macdonald_21(build_root_system(fam, rank), k);
        if (!res.pass()) { ok = false; detail = to_string(fam) + " k=" + std::to_string(k); }
      }
    report(4, "binomial-product CT", ok, detail, t.seconds(), 60.0);
  }

  {  // 5. non-reduced product formula on BC1, BC2 with mixed k <= 2
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    for (int kl = 0; kl <= 2; ++kl)
      for (int kd = 0; kd <= 2; ++kd) {
        MultiplicityFunction m;
        m.long_orbit = kl;
        m.double_long = kd;
        auto R = build_nonreduced({Family::BC, 1}, m);
        if (!check_macdonald_23(R, m).pass()) { ok = false; detail = "BC1"; }
      }
    for (int kl = 0; kl <= 2; ++kl)
      for (int ks = 0; ks <= 2; ++ks)
        for (int kd = 0; kd <= 2; ++kd) {
          MultiplicityFunction m;
          m.long_orbit = kl;
          m.short_orbit = ks;
          m.double_short = kd;
          auto R = build_nonreduced({Family::BC, 2}, m);
          if (!check_macdonald_23(R, m).pass()) { ok = false; detail = "BC2"; }
        }
    report(5, "non-reduced CT product", ok, detail, t.seconds(), 0.0);
  }

  {  // 6. torus quadrature vs closed product at s = 1/2, < 120 s
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    for (auto [fam, rank] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::B, 2},
                             {Family::G, 2}}) {
      auto rs = build_root_system(fam, rank);
      auto R = reduced_with_constant(rs, Rat(1, 2));
      auto est = torus_integral(R, R.multiplicity, EstimateMethod::gauss_tensor);
      double closed = macdonald_closed(rs, 0.5).value;
      double tol = (fam == Family::A && rank == 1) ? 1e-8 : 1e-4;
      double rel = std::abs(est.value / closed - 1.0);
      if (rel > tol) {
        ok = false;
        detail = to_string(fam) + std::to_string(rank) + " rel=" + format_double(rel);
      }
    }
    report(6, "torus vs closed at s=1/2", ok, detail, t.seconds(), 120.0);
  }

  {  // 7. tiling: box integral = cells x region integral, 1e-4 relative
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    for (auto [fam, rank] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::B, 2},
                             {Family::G, 2}}) {
      auto rep = tiling_check(reduced_with_constant(build_root_system(fam, rank), 1), 1e-4);
      if (!rep.pass) { ok = false; detail = rep.label + " rel=" + format_double(rep.rel_err); }
    }
    report(7, "tiling identity", ok, detail, t.seconds(), 0.0);
  }

  {  // 8. split identity, both routes: A1 analytic sqrt(2), rest 1e-4
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    auto a1 = verify_dyson_identity(build_root_system(Family::A, 1), 1e-8);
    if (!a1.pass || std::abs(a1.lhs.value - std::sqrt(2.0)) > 1e-10) { ok = false; detail = "A1"; }
    for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
      auto rep = verify_dyson_identity(build_root_system(fam, rank), 1e-4);
      if (!rep.pass) { ok = false; detail = rep.label; }
    }
    report(8, "split measure identity", ok, detail, t.seconds(), 0.0);
  }

  {  // 9. restricted identity: rank-1 rows at 1e-6, EIV and EIII at 1e-4
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    auto run = [&](const char* label, std::optional<long> n, double tol) {
      ParameterBinding b;
      b.n = n;
      auto rep = verify_restricted_identity(lookup(label, b), tol);
      if (!rep.pass) {
        ok = false;
        detail = std::string(label) + (n ? " n=" + std::to_string(*n) : "") +
                 " rel=" + format_double(rep.rel_err);
      }
    };
    for (long n : {2L, 3L}) {
      run("AIV", n, 1e-6);
      run("BII", n, 1e-6);
      run("DII", n, 1e-6);
    }
    run("FII", std::nullopt, 1e-6);
    run("EIV", std::nullopt, 1e-4);
    run("EIII", std::nullopt, 1e-4);
    report(9, "restricted identity", ok, detail, t.seconds(), 0.0);
  }

  {  // 10. classical suite at 10^6 samples
    Timer t;
    bool ok = true;
    std::string detail = "ok";
    for (double a : {0.5, 1.0, 2.5})
      for (double b : {0.75, 2.0}) {
        double lhs = selberg_closed(1, a, b, 1.0).value;
        double rhs = gamma_product({a, b}, {a + b}).value;
        if (std::abs(lhs / rhs - 1.0) > 1e-12) { ok = false; detail = "selberg n=1"; }
      }
    if (std::abs(mehta_closed(2, 1.0).value - 2.0) > 1e-12) { ok = false; detail = "F2(1)"; }
    McOptions mopts{cfg.seed, cfg.shards, 1000000};
    auto f2 = mehta_mc(2, 1.0, mopts);
    if (std::abs(f2.value - 2.0) > 3.0 * f2.std_error) { ok = false; detail = "F2 mc"; }
    auto f3 = mehta_mc(3, 1.0, mopts);
    if (std::abs(f3.value - mehta_closed(3, 1.0).value) > 3.0 * f3.std_error) {
      ok = false;
      detail = "F3 mc";
    }
    auto c2 = circular_numeric(2, 1.0, EstimateMethod::gauss_tensor);
    if (std::abs(c2.value / 2.0 - 1.0) > 1e-8) { ok = false; detail = "C2 quad"; }
    Int ct = constant_term(build_root_system(Family::A, 2), 2);
    if (std::abs(circular_closed(3, 2.0).value - 90.0) > 1e-9 || ct != 90) {
      ok = false;
      detail = "C3(2) vs CT";
    }
    report(10, "classical suite", ok, detail, t.seconds(), 0.0);
  }

  {  // 11. catalog audit: every row at its bindings, provenance notes surfaced
    Timer t;
    auto audit = catalog_audit();
    bool ok = true;
    std::string detail;
    size_t passed = 0;
    bool cii_note = false;
    for (const auto& rec : audit) {
      if (rec.pass) ++passed;
      else if (detail.empty()) detail = rec.label + " " + rec.binding + ": " + rec.detail;
      if (rec.label == "CII_a")
        for (const auto& note : rec.notes)
          if (note.find("USp(2q-2q)") != std::string::npos) cii_note = true;
    }
    ok = passed == audit.size() && cii_note;
    std::ostringstream os;
    os << passed << "/" << audit.size() << " rows"
       << (cii_note ? ", source note shown" : ", source note MISSING");
    if (!detail.empty()) os << " first failure: " << detail;
    report(11, "catalog audit", ok, os.str(), t.seconds(), 0.0);
  }

  {  // 12. determinism: identical payloads apart from runtime fields
    Timer t;
    bool ok;
    std::string detail;
    if (argc > 1) {
      std::string bin = argv[1];
      std::string args = "verify classical --format json --samples 50000 --seed 4242";
      auto a = run_cli(bin, args);
      auto b = run_cli(bin, args);
      ok = !a.empty() && strip_runtime(a) == strip_runtime(b);
      detail = ok ? "CLI payloads identical" : "CLI payloads differ";
    } else {
      RunConfig c2 = cfg;
      c2.samples = 50000;
      c2.format = OutputFormat::json;
      auto a = records_to_json("verify", c2, suite_classical(c2));
      auto b = records_to_json("verify", c2, suite_classical(c2));
      ok = strip_runtime(a) == strip_runtime(b);
      detail = ok ? "in-process payloads identical" : "payloads differ";
    }
    report(12, "deterministic output", ok, detail, t.seconds(), 0.0);
  }

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
