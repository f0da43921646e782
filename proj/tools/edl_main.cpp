#include "edl/constant_term.hpp"
#include "edl/euler.hpp"
#include "edl/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

namespace {

using namespace edl;

struct GlobalFlags {
  std::optional<std::string> config_path;
  std::optional<uint64_t> seed;
  std::optional<int> shards;
  std::optional<long long> samples;
  std::optional<int> quad_nodes;
  std::optional<double> rel_tol;
  std::optional<double> sigma_tol;
  std::optional<std::string> format;
};

RunConfig resolve_config(const GlobalFlags& f) {
  RunConfig cfg = load_config(f.config_path);
  if (f.seed) cfg.seed = *f.seed;
  if (f.shards) cfg.shards = *f.shards;
  if (f.samples) cfg.samples = *f.samples;
  if (f.quad_nodes) cfg.quad_nodes = *f.quad_nodes;
  if (f.rel_tol) cfg.rel_tol = *f.rel_tol;
  if (f.sigma_tol) cfg.sigma_tol = *f.sigma_tol;
  if (f.format) cfg.format = format_from_string(*f.format);
  cfg.validate();
  return cfg;
}

int emit(const std::string& command, const RunConfig& cfg,
         std::vector<VerificationRecord> records) {
  bool ok = all_pass(records);
  std::cout << render_records(command, cfg, std::move(records));
  return ok ? 0 : 1;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_roots(const GlobalFlags& flags, const std::string& family, int rank, bool force_enum) {
  RunConfig cfg = resolve_config(flags);
  auto t0 = std::chrono::steady_clock::now();
  auto rs = build_root_system(family_from_string(family), rank);

  std::ostringstream head;
  head << to_string(rs.family().family) << rs.family().rank << ": " << rs.positive_roots().size()
       << " positive roots, highest = (";
  for (size_t i = 0; i < rs.highest_root().coeffs.size(); ++i)
    head << (i ? "," : "") << rs.highest_root().coeffs[i];
  head << "), degrees = (";
  for (size_t i = 0; i < rs.degrees().size(); ++i) head << (i ? "," : "") << rs.degrees()[i];
  auto cc = cell_count(rs);
  head << "), |W| = " << rs.weyl_order() << ", |Z| = " << rs.center_order()
       << ", cells = " << cc.by_weyl;
  if (cfg.format == OutputFormat::text) std::cerr << head.str() << "\n";

  std::vector<VerificationRecord> records;
  auto rel = verify_relation(rs);
  VerificationRecord rec;
  rec.command = "roots.relation";
  rec.inputs = to_string(rs.family().family) + std::to_string(rs.family().rank);
  rec.expected = rel.rhs.str();
  rec.computed = rel.lhs.str();
  rec.pass = rel.pass;
  rec.seed = cfg.seed;
  rec.runtime_ms = ms_since(t0);
  records.push_back(rec);

  if (rs.rank() <= 4 || force_enum) {
    VerificationRecord er;
    er.command = "roots.weyl_enum";
    er.inputs = rec.inputs;
    er.seed = cfg.seed;
    auto t1 = std::chrono::steady_clock::now();
    Int byenum = weyl_order_by_enumeration(rs);
    er.runtime_ms = ms_since(t1);
    er.expected = rs.weyl_order().str();
    er.computed = byenum.str();
    er.pass = byenum == rs.weyl_order();
    records.push_back(er);
  }
  return emit("roots", cfg, std::move(records));
}

int cmd_ct(const GlobalFlags& flags, const std::string& family, int rank,
           const std::string& kspec) {
  RunConfig cfg = resolve_config(flags);
  std::vector<long> ks;
  std::stringstream ss(kspec);
  std::string part;
  while (std::getline(ss, part, ',')) ks.push_back(std::stol(part));
  if (ks.empty()) throw std::invalid_argument("--k requires at least one value");

  std::vector<VerificationRecord> records;
  VerificationRecord rec;
  rec.seed = cfg.seed;
  auto t0 = std::chrono::steady_clock::now();
  Family fam = family_from_string(family);
  if (fam == Family::BC) {
    MultiplicityFunction m;
    m.long_orbit = ks[0];
    if (rank == 1) {
      if (ks.size() != 2) throw std::invalid_argument("BC1 takes --k k_lambda,k_2lambda");
      m.double_long = ks[1];
    } else {
      if (ks.size() != 3) throw std::invalid_argument("BC_n takes --k k_long,k_short,k_2short");
      m.short_orbit = ks[1];
      m.double_short = ks[2];
    }
    auto R = build_nonreduced({Family::BC, rank}, m);
    auto res = check_macdonald_23(R, m);
    rec.command = "ct." + to_string(res.formula);
    rec.inputs = "BC" + std::to_string(rank) + " k=" + kspec;
    rec.expected = res.predicted.str();
    rec.computed = res.computed.str();
    rec.pass = res.pass();
  } else {
    if (ks.size() != 1)
      throw std::invalid_argument("reduced systems take a single --k value");
    auto rs = build_root_system(fam, rank);
    auto res = check_macdonald_21(rs, static_cast<unsigned>(ks[0]));
    rec.command = "ct." + to_string(res.formula);
    rec.inputs = to_string(fam) + std::to_string(rank) + " k=" + kspec;
    rec.expected = res.predicted.str();
    rec.computed = res.computed.str();
    rec.pass = res.pass();
  }
  rec.runtime_ms = ms_since(t0);
  records.push_back(rec);
  return emit("ct", cfg, std::move(records));
}

int cmd_verify(const GlobalFlags& flags, const std::string& target,
               const ParameterBinding& binding) {
  RunConfig cfg = resolve_config(flags);
  std::vector<VerificationRecord> records;
  if (target == "split") records = suite_split(cfg);
  else if (target == "restricted") records = suite_restricted(cfg);
  else if (target == "classical") records = suite_classical(cfg);
  else if (target == "catalog") records = suite_catalog(cfg);
  else if (target == "ct") records = suite_ct(cfg);
  else if (target == "relation") records = suite_relation(cfg);
  else if (target == "all") records = suite_all(cfg);
  else records = verify_label(target, binding, cfg);
  return emit("verify", cfg, std::move(records));
}

int cmd_show(const GlobalFlags& flags, const std::string& label, const ParameterBinding& binding) {
  RunConfig cfg = resolve_config(flags);
  auto entry = lookup(label, binding);
  auto range = euler_range_report(entry);
  (void)cfg;

  std::ostringstream out;
  out << entry.label;
  if (!entry.binding.str().empty()) out << " [" << entry.binding.str() << "]";
  out << ": G = " << entry.compact_name << " (" << entry.noncompact_name << ")\n"
      << "  dim G = " << entry.dim_g << ", dim H = " << entry.dim_h
      << ", dim K = " << entry.dim_k << ", center = " << entry.center << "\n"
      << "  H = " << entry.h_name << ", K = " << entry.k_name << "\n"
      << "  restricted system " << to_string(entry.restricted_family) << entry.restricted_rank
      << ", printed highest = (";
  for (size_t i = 0; i < entry.highest_printed.size(); ++i)
    out << (i ? "," : "") << entry.highest_printed[i];
  out << ")\n  multiplicities m_lambda = (";
  for (size_t i = 0; i < entry.m_lambda.size(); ++i)
    out << (i ? "," : "") << entry.m_lambda[i].str();
  out << "), m_2lambda = (";
  for (size_t i = 0; i < entry.m_2lambda.size(); ++i)
    out << (i ? "," : "") << entry.m_2lambda[i].str();
  out << ")\n  ratios: |aG|/|aH| = " << entry.ratio_gh << ", |aG|/|aG/H| = " << entry.ratio_g_gh
      << ", |aH|/|aK| = " << entry.ratio_hk << "\n"
      << "  coordinate split: " << range.x_count << " x, " << range.y_count << " y, "
      << range.z_count << " z\n";
  for (const auto& r : range.y_range) out << "  range: " << r << "\n";
  out << "  cells = " << range.cells.str() << ", region volume = " << range.region_volume << "\n";
  if (range.gamma_order) out << "  |Gamma| = " << range.gamma_order->str() << "\n";
  for (const auto& p : range.periods) out << "  period " << p << "\n";
  for (const auto& n : range.notes) out << "  note: " << n << "\n";
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"root-system and symmetric-space identity verifier"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "config file (key=value lines)");
  app.add_option("--seed", flags.seed, "RNG seed (default 42)");
  app.add_option("--shards", flags.shards, "Monte Carlo shard count");
  app.add_option("--samples", flags.samples, "Monte Carlo sample count");
  app.add_option("--quad-nodes", flags.quad_nodes, "Gauss-Legendre nodes per panel");
  app.add_option("--rel-tol", flags.rel_tol, "relative tolerance for generic checks");
  app.add_option("--sigma-tol", flags.sigma_tol, "standard-error multiple for stochastic checks");
  app.add_option("--format", flags.format, "output format: text|json|csv");

  std::string family, kspec = "1", label, target;
  int rank = 1;
  bool force_enum = false;
  ParameterBinding binding;
  std::optional<long> opt_n, opt_p, opt_q;

  auto* roots = app.add_subcommand("roots", "build a root system and check the counting identity");
  roots->add_option("family", family, "A|B|C|D|E|F|G")->required();
  roots->add_option("rank", rank, "rank")->required();
  roots->add_flag("--enum", force_enum, "force the permutation-closure cross check (rank <= 6)");

  auto* ct = app.add_subcommand("ct", "constant-term identity check");
  ct->add_option("family", family, "A|B|C|D|E|F|G|BC")->required();
  ct->add_option("rank", rank, "rank")->required();
  ct->add_option("--k", kspec, "exponents: k, or k_l,k_2l / k_l,k_s,k_2s for BC");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("target", target, "catalog label, or a suite name");
  verify->add_option("--suite", suite,
                     "suite: split|restricted|classical|catalog|ct|relation|all");
  verify->add_option("--n", opt_n, "parameter n");
  verify->add_option("--p", opt_p, "parameter p");
  verify->add_option("--q", opt_q, "parameter q");

  auto* show = app.add_subcommand("show", "display a catalog row and its coordinate ranges");
  show->add_option("label", label, "catalog label, e.g. AIV or EVII")->required();
  show->add_option("--n", opt_n, "parameter n");
  show->add_option("--p", opt_p, "parameter p");
  show->add_option("--q", opt_q, "parameter q");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  binding.n = opt_n;
  binding.p = opt_p;
  binding.q = opt_q;

  try {
    if (roots->parsed()) return cmd_roots(flags, family, rank, force_enum);
    if (ct->parsed()) return cmd_ct(flags, family, rank, kspec);
    if (verify->parsed()) {
      if (!suite.empty() && !target.empty())
        throw std::invalid_argument("give either a label or --suite, not both");
      if (suite.empty() && target.empty())
        throw std::invalid_argument("verify needs a catalog label or --suite");
      return cmd_verify(flags, suite.empty() ? target : suite, binding);
    }
    if (show->parsed()) return cmd_show(flags, label, binding);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
