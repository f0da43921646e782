#include "edl/config.hpp"
#include "edl/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace edl;

TEST_CASE("config precedence: defaults < file < environment") {
  const char* path = "/tmp/edl_test_config.cfg";
  {
    std::ofstream out(path);
    out << "# comment\n"
        << "seed = 7\n"
        << "samples = 12345\n"
        << "format = csv\n";
  }
  unsetenv("EDL_SEED");
  unsetenv("EDL_SAMPLES");
  unsetenv("EDL_FORMAT");
  unsetenv("EDL_SHARDS");
  unsetenv("EDL_QUAD_NODES");
  unsetenv("EDL_REL_TOL");
  unsetenv("EDL_SIGMA_TOL");

  auto cfg = load_config(std::string(path));
  CHECK(cfg.seed == 7);
  CHECK(cfg.samples == 12345);
  CHECK(cfg.format == OutputFormat::csv);
  CHECK(cfg.shards == 8);  // default untouched

  setenv("EDL_SEED", "99", 1);
  setenv("EDL_FORMAT", "json", 1);
  cfg = load_config(std::string(path));
  CHECK(cfg.seed == 99);            // env wins over file
  CHECK(cfg.samples == 12345);      // file wins over default
  CHECK(cfg.format == OutputFormat::json);
  unsetenv("EDL_SEED");
  unsetenv("EDL_FORMAT");

  CHECK_THROWS(load_config(std::string("/nonexistent/edl.cfg")));
  RunConfig c;
  CHECK_THROWS_AS(apply_setting(c, "bogus", "1"), std::invalid_argument);
  CHECK_THROWS_AS(format_from_string("yaml"), std::invalid_argument);
  c.rel_tol = 2.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("record rendering is deterministic and sorted") {
  RunConfig cfg;
  std::vector<VerificationRecord> recs(2);
  recs[0].command = "b";
  recs[0].inputs = "x";
  recs[0].expected = recs[0].computed = "1";
  recs[0].pass = true;
  recs[0].runtime_ms = 1.25;
  recs[1].command = "a";
  recs[1].inputs = "y";
  recs[1].expected = "2";
  recs[1].computed = "3";
  recs[1].pass = false;
  recs[1].sigma = 1.5;

  auto j1 = records_to_json("t", cfg, recs);
  recs[0].runtime_ms = 99.0;  // runtime is the only field allowed to differ
  auto j2 = records_to_json("t", cfg, recs);
  auto strip = [](std::string s) {
    std::string out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
      if (line.find("runtime_ms") == std::string::npos) out += line + "\n";
    return out;
  };
  CHECK(j1 != j2);
  CHECK(strip(j1) == strip(j2));
  CHECK(j1.find("\"schema\": 1") != std::string::npos);

  auto csv = records_to_csv(recs);
  CHECK(csv.rfind("command,inputs,", 0) == 0);
  CHECK(csv.find("\na,y,") != std::string::npos);

  auto text = records_to_text(recs);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);

  CHECK_FALSE(all_pass(recs));
}
