#pragma once

#include "edl/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edl {

struct VerificationRecord {
  std::string command;
  std::string inputs;
  std::string expected;
  std::string computed;
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::optional<double> sigma;  // |error| / std_error for stochastic checks
  bool pass = false;
  uint64_t seed = 0;
  double runtime_ms = 0.0;
};

// Records are emitted sorted by (command, inputs); identical runs give
// byte-identical output apart from the runtime_ms fields.
void sort_records(std::vector<VerificationRecord>& records);
std::string records_to_json(const std::string& command, const RunConfig& cfg,
                            std::vector<VerificationRecord> records);
std::string records_to_csv(std::vector<VerificationRecord> records);
std::string records_to_text(std::vector<VerificationRecord> records);
std::string render_records(const std::string& command, const RunConfig& cfg,
                           std::vector<VerificationRecord> records);

bool all_pass(const std::vector<VerificationRecord>& records);

std::string format_double(double v);  // fixed 17-significant-digit form

}  // namespace edl
