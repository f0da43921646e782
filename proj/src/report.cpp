#include "edl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace edl {

void sort_records(std::vector<VerificationRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) {
                     return std::tie(a.command, a.inputs) < std::tie(b.command, b.inputs);
                   });
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

nlohmann::json record_json(const VerificationRecord& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  if (r.sigma) j["sigma"] = *r.sigma; else j["sigma"] = nullptr;
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace

std::string records_to_json(const std::string& command, const RunConfig& cfg,
                            std::vector<VerificationRecord> records) {
  sort_records(records);
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = command;
  j["config"] = {{"seed", cfg.seed},          {"shards", cfg.shards},
                 {"samples", cfg.samples},    {"quad_nodes", cfg.quad_nodes},
                 {"rel_tol", cfg.rel_tol},    {"sigma_tol", cfg.sigma_tol},
                 {"format", to_string(cfg.format)}};
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) j["records"].push_back(record_json(r));
  j["all_pass"] = all_pass(records);
  return j.dump(2) + "\n";
}

std::string records_to_csv(std::vector<VerificationRecord> records) {
  sort_records(records);
  std::ostringstream os;
  os << "command,inputs,expected,computed,abs_err,rel_err,sigma,pass,seed,runtime_ms\n";
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) { if (c == '"') out += '"'; out += c; }
    return out + "\"";
  };
  for (const auto& r : records) {
    os << quote(r.command) << ',' << quote(r.inputs) << ',' << quote(r.expected) << ','
       << quote(r.computed) << ',' << format_double(r.abs_err) << ','
       << format_double(r.rel_err) << ',' << (r.sigma ? format_double(*r.sigma) : "") << ','
       << (r.pass ? "true" : "false") << ',' << r.seed << ',' << format_double(r.runtime_ms)
       << '\n';
  }
  return os.str();
}

std::string records_to_text(std::vector<VerificationRecord> records) {
  sort_records(records);
  std::ostringstream os;
  for (const auto& r : records) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.command << "  " << r.inputs
       << "  expected=" << r.expected << "  computed=" << r.computed
       << "  rel_err=" << format_double(r.rel_err);
    if (r.sigma) os << "  sigma=" << format_double(*r.sigma);
    os << "\n";
  }
  size_t passed = 0;
  for (const auto& r : records) passed += r.pass;
  os << passed << "/" << records.size() << " checks passed\n";
  return os.str();
}

std::string render_records(const std::string& command, const RunConfig& cfg,
                           std::vector<VerificationRecord> records) {
  switch (cfg.format) {
    case OutputFormat::json: return records_to_json(command, cfg, std::move(records));
    case OutputFormat::csv: return records_to_csv(std::move(records));
    case OutputFormat::text: return records_to_text(std::move(records));
  }
  return {};
}

bool all_pass(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.pass; });
}

}  // namespace edl
