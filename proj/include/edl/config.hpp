#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace edl {

enum class OutputFormat { text, json, csv };
std::string to_string(OutputFormat f);
OutputFormat format_from_string(const std::string& s);

struct RunConfig {
  uint64_t seed = 42;
  int shards = 8;
  long long samples = 200000;
  int quad_nodes = 24;  // Gauss-Legendre nodes per panel
  double rel_tol = 1e-6;
  double sigma_tol = 3.0;
  OutputFormat format = OutputFormat::text;

  void validate() const;
};

// Defaults, overlaid by a key=value config file, overlaid by EDL_* environment
// variables.  Command-line flags are applied on top by the CLI.
RunConfig load_config(const std::optional<std::string>& config_path);

// Apply one key=value setting; throws on unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace edl
