#include "edl/suites.hpp"

#include "edl/constant_term.hpp"
#include "edl/euler.hpp"
#include "edl/integrals.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace edl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VerificationRecord timed(const RunConfig& cfg, std::string command, std::string inputs,
                         const std::function<void(VerificationRecord&)>& body) {
  VerificationRecord rec;
  rec.command = std::move(command);
  rec.inputs = std::move(inputs);
  rec.seed = cfg.seed;
  auto t0 = Clock::now();
  try {
    body(rec);
  } catch (const std::exception& ex) {
    rec.pass = false;
    rec.computed = std::string("error: ") + ex.what();
  }
  rec.runtime_ms = ms_since(t0);
  return rec;
}

void fill_exact(VerificationRecord& rec, const Int& computed, const Int& expected) {
  rec.computed = computed.str();
  rec.expected = expected.str();
  rec.pass = computed == expected;
  rec.abs_err = rec.pass ? 0.0 : std::abs(to_double(computed) - to_double(expected));
  rec.rel_err = rec.pass ? 0.0 : 1.0;
}

void fill_numeric(VerificationRecord& rec, double computed, double expected, double rel_tol,
                  double std_error = 0.0, double sigma_tol = 3.0) {
  rec.computed = format_double(computed);
  rec.expected = format_double(expected);
  rec.abs_err = std::abs(computed - expected);
  rec.rel_err = expected == 0.0 ? rec.abs_err : std::abs(computed / expected - 1.0);
  if (std_error > 0.0) {
    rec.sigma = rec.abs_err / std_error;
    rec.pass = *rec.sigma <= sigma_tol || rec.rel_err <= rel_tol;
  } else {
    rec.pass = rec.rel_err <= rel_tol;
  }
}

void fill_from_identity(VerificationRecord& rec, const IdentityReport& rep) {
  rec.computed = format_double(rep.lhs.value);
  rec.expected = format_double(rep.rhs);
  rec.abs_err = rep.abs_err;
  rec.rel_err = rep.rel_err;
  if (rep.lhs.method == EstimateMethod::monte_carlo && rep.lhs.std_error > 0.0)
    rec.sigma = rep.abs_err / rep.lhs.std_error;
  rec.pass = rep.pass;
}

const std::vector<RootFamily>& relation_sweep() {
  static const std::vector<RootFamily> systems = [] {
    std::vector<RootFamily> v;
    for (int n = 1; n <= 8; ++n) v.push_back({Family::A, n});
    for (int n = 2; n <= 8; ++n) v.push_back({Family::B, n});
    for (int n = 3; n <= 8; ++n) v.push_back({Family::C, n});
    for (int n = 4; n <= 8; ++n) v.push_back({Family::D, n});
    v.push_back({Family::E, 6});
    v.push_back({Family::E, 7});
    v.push_back({Family::E, 8});
    v.push_back({Family::F, 4});
    v.push_back({Family::G, 2});
    return v;
  }();
  return systems;
}

const std::vector<std::pair<Family, int>>& split_systems() {
  static const std::vector<std::pair<Family, int>> v = {
      {Family::A, 1}, {Family::A, 2}, {Family::B, 2}, {Family::G, 2}};
  return v;
}

}  // namespace

std::vector<VerificationRecord> suite_relation(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (const auto& f : relation_sweep()) {
    out.push_back(timed(cfg, "relation", to_string(f.family) + std::to_string(f.rank),
                        [&](VerificationRecord& rec) {
                          auto rep = verify_relation(build_root_system(f));
                          fill_exact(rec, rep.lhs, rep.rhs);
                        }));
  }
  return out;
}

std::vector<VerificationRecord> suite_weyl_enumeration(const RunConfig& cfg, int max_rank) {
  std::vector<VerificationRecord> out;
  std::vector<RootFamily> systems;
  for (const auto& f : relation_sweep())
    if (f.rank <= max_rank) systems.push_back(f);
  if (max_rank >= 4) {
    systems.push_back({Family::A, 5});
    systems.push_back({Family::D, 5});
  }
  for (const auto& f : systems) {
    out.push_back(timed(cfg, "weyl_enum", to_string(f.family) + std::to_string(f.rank),
                        [&](VerificationRecord& rec) {
                          auto rs = build_root_system(f);
                          fill_exact(rec, weyl_order_by_enumeration(rs), rs.weyl_order());
                        }));
  }
  return out;
}

std::vector<VerificationRecord> suite_ct(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (int n = 2; n <= 4; ++n) {
    for (unsigned k = 0; k <= 3; ++k) {
      std::ostringstream in;
      in << "A" << n - 1 << " k=" << k;
      out.push_back(timed(cfg, "ct.dyson_A", in.str(), [&](VerificationRecord& rec) {
        auto res = check_dyson_A(n, k);
        fill_exact(rec, res.computed, res.predicted);
      }));
    }
  }
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
    for (unsigned k = 1; k <= 2; ++k) {
      std::ostringstream in;
      in << to_string(fam) << rank << " k=" << k;
      out.push_back(timed(cfg, "ct.macdonald_21", in.str(), [&](VerificationRecord& rec) {
        auto res = check_macdonald_21(build_root_system(fam, rank), k);
        fill_exact(rec, res.computed, res.predicted);
      }));
    }
  }
  // non-reduced: BC1 and BC2 with mixed integer exponents
  for (int rank : {1, 2}) {
    for (int kl = 0; kl <= 2; ++kl) {
      for (int ks = 0; ks <= 2; ++ks) {
        for (int kd = 0; kd <= 2; ++kd) {
          if (rank == 1 && ks > 0) continue;  // BC1 has a single reduced orbit
          MultiplicityFunction m;
          m.long_orbit = kl;
          if (rank == 1) m.double_long = kd;
          else { m.short_orbit = ks; m.double_short = kd; }
          std::ostringstream in;
          in << "BC" << rank << " k=" << kl;
          if (rank == 2) in << "," << ks;
          in << ",2l:" << kd;
          out.push_back(timed(cfg, "ct.macdonald_23", in.str(), [&](VerificationRecord& rec) {
            auto R = build_nonreduced({Family::BC, rank}, m);
            auto res = check_macdonald_23(R, m);
            fill_exact(rec, res.computed, res.predicted);
          }));
        }
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> suite_split(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  QuadOptions qopts{cfg.quad_nodes, 12};
  for (auto [fam, rank] : split_systems()) {
    const std::string name = to_string(fam) + std::to_string(rank);
    const double tol = (fam == Family::A && rank == 1) ? 1e-8 : 1e-4;

    out.push_back(timed(cfg, "split.macdonald_half", name, [&](VerificationRecord& rec) {
      auto rs = build_root_system(fam, rank);
      auto est = torus_integral(reduced_with_constant(rs, Rat(1, 2)),
                                MultiplicityFunction::constant(Rat(1, 2)),
                                EstimateMethod::gauss_tensor, qopts);
      fill_numeric(rec, est.value, macdonald_closed(rs, 0.5).value, tol);
    }));

    out.push_back(timed(cfg, "split.tiling", name, [&](VerificationRecord& rec) {
      auto rs = build_root_system(fam, rank);
      auto rep = tiling_check(reduced_with_constant(rs, 1), tol,
                              EstimateMethod::gauss_tensor, qopts);
      fill_from_identity(rec, rep);
    }));

    out.push_back(timed(cfg, "split.dyson", name, [&](VerificationRecord& rec) {
      auto rep = verify_dyson_identity(build_root_system(fam, rank), tol, qopts);
      fill_from_identity(rec, rep);
    }));
  }
  return out;
}

std::vector<VerificationRecord> suite_restricted(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  QuadOptions qopts{cfg.quad_nodes, 12};
  struct Case { const char* label; ParameterBinding binding; double tol; };
  std::vector<Case> cases;
  for (long n : {2, 3}) {
    cases.push_back({"AIV", ParameterBinding{n, {}, {}}, 1e-6});
    cases.push_back({"BII", ParameterBinding{n, {}, {}}, 1e-6});
    cases.push_back({"DII", ParameterBinding{n, {}, {}}, 1e-6});
  }
  cases.push_back({"FII", {}, 1e-6});
  cases.push_back({"EIV", {}, 1e-4});
  cases.push_back({"EIII", {}, 1e-4});
  for (const auto& c : cases) {
    std::string in = c.binding.str().empty() ? std::string(c.label)
                                             : std::string(c.label) + " " + c.binding.str();
    out.push_back(timed(cfg, "restricted", in, [&](VerificationRecord& rec) {
      auto entry = lookup(c.label, c.binding);
      auto rep = verify_restricted_identity(entry, c.tol, qopts);
      fill_from_identity(rec, rep);
    }));
  }
  return out;
}

std::vector<VerificationRecord> suite_classical(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  McOptions mopts{cfg.seed, cfg.shards, cfg.samples};
  QuadOptions qopts{cfg.quad_nodes, 12};

  // Selberg at n=1 is the beta integral.
  for (double a : {0.5, 1.0, 2.5}) {
    for (double b : {0.5, 1.5, 3.0}) {
      std::ostringstream in;
      in << "n=1 a=" << a << " b=" << b;
      out.push_back(timed(cfg, "classical.selberg_beta", in.str(), [&](VerificationRecord& rec) {
        double lhs = selberg_closed(1, a, b, 1.0).value;
        double rhs = gamma_product({a, b}, {a + b}).value;
        fill_numeric(rec, lhs, rhs, 1e-12);
      }));
    }
  }
  out.push_back(timed(cfg, "classical.selberg", "n=2 a=1 b=1 g=1", [&](VerificationRecord& rec) {
    fill_numeric(rec, selberg_closed(2, 1, 1, 1).value, 1.0 / 6.0, 1e-12);
  }));
  out.push_back(timed(cfg, "classical.selberg", "n=2 a=1 b=1 g=2", [&](VerificationRecord& rec) {
    fill_numeric(rec, selberg_closed(2, 1, 1, 2).value, 1.0 / 15.0, 1e-12);
  }));

  out.push_back(timed(cfg, "classical.mehta", "n=2 g=1 closed", [&](VerificationRecord& rec) {
    fill_numeric(rec, mehta_closed(2, 1.0).value, 2.0, 1e-12);
  }));
  for (int n : {2, 3}) {
    std::ostringstream in;
    in << "n=" << n << " g=1 mc";
    out.push_back(timed(cfg, "classical.mehta", in.str(), [&](VerificationRecord& rec) {
      auto est = mehta_mc(n, 1.0, mopts);
      fill_numeric(rec, est.value, mehta_closed(n, 1.0).value, 2e-2, est.std_error,
                   cfg.sigma_tol);
    }));
  }

  out.push_back(timed(cfg, "classical.circular", "n=2 g=1 quad", [&](VerificationRecord& rec) {
    auto est = circular_numeric(2, 1.0, EstimateMethod::gauss_tensor, qopts);
    fill_numeric(rec, est.value, circular_closed(2, 1.0).value, 1e-8);
  }));
  out.push_back(timed(cfg, "classical.circular", "n=3 g=2 closed-vs-ct", [&](VerificationRecord& rec) {
    double closed = circular_closed(3, 2.0).value;
    Int ct = constant_term(build_root_system(Family::A, 2), 2);
    fill_numeric(rec, closed, to_double(ct), 1e-12);
  }));
  for (double g : {0.5, 1.0, 2.0}) {
    std::ostringstream in;
    in << "n=4 g=" << g << " mc";
    out.push_back(timed(cfg, "classical.circular", in.str(), [&](VerificationRecord& rec) {
      auto est = circular_numeric(4, g, EstimateMethod::monte_carlo, qopts, mopts);
      fill_numeric(rec, est.value, circular_closed(4, g).value, 2e-2, est.std_error,
                   cfg.sigma_tol);
    }));
  }
  return out;
}

std::vector<VerificationRecord> suite_catalog(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (const auto& rec : catalog_audit()) {
    out.push_back(timed(cfg, "catalog.audit",
                        rec.binding.empty() ? rec.label : rec.label + " " + rec.binding,
                        [&](VerificationRecord& r) {
                          r.computed = rec.pass ? "pass" : rec.detail;
                          r.expected = "pass";
                          r.pass = rec.pass;
                          if (!rec.notes.empty()) {
                            r.computed += " [";
                            for (size_t i = 0; i < rec.notes.size(); ++i)
                              r.computed += (i ? "; " : "") + rec.notes[i];
                            r.computed += "]";
                          }
                        }));
  }
  return out;
}

std::vector<VerificationRecord> verify_label(const std::string& label,
                                             const ParameterBinding& binding,
                                             const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  QuadOptions qopts{cfg.quad_nodes, 12};
  std::string in = binding.str().empty() ? label : label + " " + binding.str();
  out.push_back(timed(cfg, "restricted", in, [&](VerificationRecord& rec) {
    auto entry = lookup(label, binding);
    const double tol = entry.restricted_rank <= 1 ? 1e-6 : 1e-4;
    auto rep = verify_restricted_identity(entry, tol, qopts);
    fill_from_identity(rec, rep);
  }));
  return out;
}

std::vector<VerificationRecord> suite_all(const RunConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (auto&& suite : {suite_relation(cfg), suite_ct(cfg), suite_split(cfg),
                       suite_restricted(cfg), suite_classical(cfg), suite_catalog(cfg)})
    out.insert(out.end(), suite.begin(), suite.end());
  return out;
}

}  // namespace edl
