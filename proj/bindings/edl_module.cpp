#include "edl/constant_term.hpp"
#include "edl/euler.hpp"
#include "edl/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace edl;

namespace {

MultiplicityFunction mult_from_list(const std::vector<double>& k, int rank, bool doubled) {
  MultiplicityFunction m;
  auto rat = [](double v) {
    Rat r(static_cast<long long>(std::llround(v * 2)), 2);  // halves are exact
    if (to_double(r) != v) throw std::invalid_argument("exponents must be multiples of 1/2");
    return r;
  };
  if (!doubled) {
    if (k.size() == 1) { m.long_orbit = rat(k[0]); m.short_orbit = rat(k[0]); }
    else if (k.size() == 2) { m.long_orbit = rat(k[0]); m.short_orbit = rat(k[1]); }
    else throw std::invalid_argument("expected 1 or 2 exponents for a reduced system");
    return m;
  }
  if (rank == 1) {
    if (k.size() != 2) throw std::invalid_argument("BC1 takes [k_lambda, k_2lambda]");
    m.long_orbit = rat(k[0]);
    m.double_long = rat(k[1]);
  } else {
    if (k.size() != 3) throw std::invalid_argument("BC_n takes [k_long, k_short, k_2short]");
    m.long_orbit = rat(k[0]);
    m.short_orbit = rat(k[1]);
    m.double_short = rat(k[2]);
  }
  return m;
}

NonReducedRootSystem system_from_args(const std::string& family, int rank,
                                      const std::vector<double>& k) {
  Family fam = family_from_string(family);
  if (fam == Family::BC) return build_nonreduced({fam, rank}, mult_from_list(k, rank, true));
  auto rs = build_root_system(fam, rank);
  NonReducedRootSystem nr;
  nr.base = rs;
  nr.multiplicity = mult_from_list(k, rank, false);
  return nr;
}

py::dict estimate_dict(const IntegralEstimate& est) {
  py::dict d;
  d["value"] = est.value;
  d["std_error"] = est.std_error;
  d["samples_or_nodes"] = est.samples_or_nodes;
  d["method"] = to_string(est.method);
  if (est.seed) d["seed"] = *est.seed;
  return d;
}

py::dict record_dict(const VerificationRecord& r) {
  py::dict d;
  d["command"] = r.command;
  d["inputs"] = r.inputs;
  d["expected"] = r.expected;
  d["computed"] = r.computed;
  d["abs_err"] = r.abs_err;
  d["rel_err"] = r.rel_err;
  if (r.sigma) d["sigma"] = *r.sigma;
  d["pass"] = r.pass;
  return d;
}

py::list records_list(const std::vector<VerificationRecord>& recs) {
  py::list out;
  for (const auto& r : recs) out.append(record_dict(r));
  return out;
}

RunConfig config_from_kwargs(uint64_t seed, int shards, long long samples, int quad_nodes) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.shards = shards;
  cfg.samples = samples;
  cfg.quad_nodes = quad_nodes;
  cfg.validate();
  return cfg;
}

ParameterBinding binding_from_opt(std::optional<long> n, std::optional<long> p,
                                  std::optional<long> q) {
  ParameterBinding b;
  b.n = n;
  b.p = p;
  b.q = q;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "root systems, constant-term identities and symmetric-space volume checks";

  m.def("root_system_summary", [](const std::string& family, int rank) {
    auto rs = build_root_system(family_from_string(family), rank);
    py::dict d;
    d["family"] = to_string(rs.family().family);
    d["rank"] = rs.family().rank;
    d["positive_roots"] = rs.positive_roots().size();
    d["highest_root"] = rs.highest_root().coeffs;
    d["degrees"] = rs.degrees();
    d["weyl_order"] = rs.weyl_order().str();
    d["center_order"] = rs.center_order().str();
    auto rel = verify_relation(rs);
    d["relation_pass"] = rel.pass;
    return d;
  }, py::arg("family"), py::arg("rank"));

  m.def("weyl_order_by_enumeration", [](const std::string& family, int rank) {
    auto rs = build_root_system(family_from_string(family), rank);
    return weyl_order_by_enumeration(rs).str();
  }, py::arg("family"), py::arg("rank"));

  m.def("constant_term", [](const std::string& family, int rank, std::vector<double> k) {
    auto nr = system_from_args(family, rank, k);
    return edl::constant_term(nr, nr.multiplicity).str();
  }, py::arg("family"), py::arg("rank"), py::arg("k"),
     "exact constant term; k per orbit (integers)");

  m.def("predict_macdonald", [](const std::string& family, int rank, std::vector<double> k) {
    auto nr = system_from_args(family, rank, k);
    return predict_macdonald_23(nr, nr.multiplicity).str();
  }, py::arg("family"), py::arg("rank"), py::arg("k"));

  m.def("macdonald_closed", [](const std::string& family, int rank, double s) {
    return macdonald_closed(build_root_system(family_from_string(family), rank), s).value;
  }, py::arg("family"), py::arg("rank"), py::arg("s"));

  m.def("opdam_closed", [](const std::string& family, int rank, std::vector<double> k) {
    auto nr = system_from_args(family, rank, k);
    return opdam_closed(nr, nr.multiplicity).value;
  }, py::arg("family"), py::arg("rank"), py::arg("k"));

  m.def("torus_integral", [](const std::string& family, int rank, std::vector<double> k,
                             const std::string& method, uint64_t seed, int shards,
                             long long samples, int quad_nodes) {
    auto nr = system_from_args(family, rank, k);
    auto est = torus_integral(nr, nr.multiplicity,
                              method == "monte_carlo" ? EstimateMethod::monte_carlo
                                                      : EstimateMethod::gauss_tensor,
                              QuadOptions{quad_nodes, 12}, McOptions{seed, shards, samples});
    return estimate_dict(est);
  }, py::arg("family"), py::arg("rank"), py::arg("k"), py::arg("method") = "gauss_tensor",
     py::arg("seed") = 42, py::arg("shards") = 8, py::arg("samples") = 200000,
     py::arg("quad_nodes") = 24);

  m.def("selberg_closed", [](int n, double a, double b, double g) {
    return selberg_closed(n, a, b, g).value;
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

  m.def("mehta_closed", [](int n, double g) { return mehta_closed(n, g).value; },
        py::arg("n"), py::arg("gamma"));

  m.def("mehta_mc", [](int n, double g, uint64_t seed, int shards, long long samples) {
    return estimate_dict(mehta_mc(n, g, McOptions{seed, shards, samples}));
  }, py::arg("n"), py::arg("gamma"), py::arg("seed") = 42, py::arg("shards") = 8,
     py::arg("samples") = 100000);

  m.def("circular_closed", [](int n, double g) { return circular_closed(n, g).value; },
        py::arg("n"), py::arg("gamma"));

  m.def("catalog_labels", [] { return catalog_labels(); });

  m.def("lookup", [](const std::string& label, std::optional<long> n, std::optional<long> p,
                     std::optional<long> q) {
    auto e = lookup(label, binding_from_opt(n, p, q));
    py::dict d;
    d["label"] = e.label;
    d["binding"] = e.binding.str();
    d["compact"] = e.compact_name;
    d["noncompact"] = e.noncompact_name;
    d["dim_g"] = e.dim_g;
    d["dim_h"] = e.dim_h;
    d["dim_k"] = e.dim_k;
    d["center"] = e.center;
    d["h"] = e.h_name;
    d["k"] = e.k_name;
    d["restricted_family"] = to_string(e.restricted_family);
    d["restricted_rank"] = e.restricted_rank;
    d["highest_printed"] = e.highest_printed;
    std::vector<std::string> ml, m2;
    for (const auto& v : e.m_lambda) ml.push_back(v.str());
    for (const auto& v : e.m_2lambda) m2.push_back(v.str());
    d["m_lambda"] = ml;
    d["m_2lambda"] = m2;
    d["notes"] = e.notes;
    auto rep = check_dimensions(e);
    d["dimension_check"] = rep.pass;
    return d;
  }, py::arg("label"), py::arg("n") = std::nullopt, py::arg("p") = std::nullopt,
     py::arg("q") = std::nullopt);

  m.def("catalog_audit", [] {
    py::list out;
    for (const auto& rec : catalog_audit()) {
      py::dict d;
      d["label"] = rec.label;
      d["binding"] = rec.binding;
      d["pass"] = rec.pass;
      d["detail"] = rec.detail;
      d["notes"] = rec.notes;
      out.append(d);
    }
    return out;
  });

  m.def("verify_restricted", [](const std::string& label, std::optional<long> n,
                                std::optional<long> p, std::optional<long> q, double rel_tol) {
    auto entry = lookup(label, binding_from_opt(n, p, q));
    auto rep = verify_restricted_identity(entry, rel_tol);
    py::dict d;
    d["label"] = rep.label;
    d["lhs"] = rep.lhs.value;
    d["rhs"] = rep.rhs;
    d["rel_err"] = rep.rel_err;
    d["pass"] = rep.pass;
    d["by_product"] = rep.by_product;
    return d;
  }, py::arg("label"), py::arg("n") = std::nullopt, py::arg("p") = std::nullopt,
     py::arg("q") = std::nullopt, py::arg("rel_tol") = 1e-4);

  m.def("verify_suite", [](const std::string& name, uint64_t seed, int shards,
                           long long samples, int quad_nodes) {
    RunConfig cfg = config_from_kwargs(seed, shards, samples, quad_nodes);
    std::vector<VerificationRecord> recs;
    if (name == "split") recs = suite_split(cfg);
    else if (name == "restricted") recs = suite_restricted(cfg);
    else if (name == "classical") recs = suite_classical(cfg);
    else if (name == "catalog") recs = suite_catalog(cfg);
    else if (name == "ct") recs = suite_ct(cfg);
    else if (name == "relation") recs = suite_relation(cfg);
    else if (name == "all") recs = suite_all(cfg);
    else throw std::invalid_argument("unknown suite '" + name + "'");
    sort_records(recs);
    return records_list(recs);
  }, py::arg("name"), py::arg("seed") = 42, py::arg("shards") = 8,
     py::arg("samples") = 200000, py::arg("quad_nodes") = 24);
}
