#include "edl/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace edl {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

void RunConfig::validate() const {
  if (shards < 1) throw std::invalid_argument("shards must be positive");
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  if (quad_nodes < 2) throw std::invalid_argument("quad_nodes must be at least 2");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("rel_tol must be in (0,1)");
  if (sigma_tol <= 0.0) throw std::invalid_argument("sigma_tol must be positive");
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "seed") cfg.seed = std::stoull(value);
  else if (key == "shards") cfg.shards = std::stoi(value);
  else if (key == "samples") cfg.samples = std::stoll(value);
  else if (key == "quad_nodes") cfg.quad_nodes = std::stoi(value);
  else if (key == "rel_tol") cfg.rel_tol = std::stod(value);
  else if (key == "sigma_tol") cfg.sigma_tol = std::stod(value);
  else if (key == "format") cfg.format = format_from_string(value);
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

RunConfig load_config(const std::optional<std::string>& config_path) {
  RunConfig cfg;
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw std::runtime_error("cannot open config file " + *config_path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error(*config_path + ":" + std::to_string(lineno) + ": expected key=value");
      auto strip = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      apply_setting(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    }
  }
  const std::pair<const char*, const char*> env_keys[] = {
      {"EDL_SEED", "seed"},           {"EDL_SHARDS", "shards"},
      {"EDL_SAMPLES", "samples"},     {"EDL_QUAD_NODES", "quad_nodes"},
      {"EDL_REL_TOL", "rel_tol"},     {"EDL_SIGMA_TOL", "sigma_tol"},
      {"EDL_FORMAT", "format"}};
  for (auto [env, key] : env_keys)
    if (const char* v = std::getenv(env)) apply_setting(cfg, key, v);
  return cfg;
}

}  // namespace edl
