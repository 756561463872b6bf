#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cl3/cli.hpp"
#include "cl3/sweep.hpp"

using namespace cl3;

namespace {

std::string fingerprint(const SweepReport& rep) {
  std::string s;
  char buf[64];
  for (const auto& c : rep.checks) {
    std::snprintf(buf, sizeof buf, "|%d:%.17g:%zu:%zu",
                  static_cast<int>(c.status), c.max_residual, c.points,
                  c.skipped);
    s += c.name;
    s += buf;
    s += c.worst;
  }
  return s;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

// Small structural validator: balanced containers, quoted strings, and
// tokens that look like JSON scalars.  Catches emitter regressions that
// substring assertions would miss.
bool json_well_formed(const std::string& s) {
  std::vector<char> stack;
  bool in_string = false, escaped = false;
  for (char c : s) {
    if (in_string) {
      if (escaped)
        escaped = false;
      else if (c == '\\')
        escaped = true;
      else if (c == '"')
        in_string = false;
      continue;
    }
    switch (c) {
      case '"': in_string = true; break;
      case '{': stack.push_back('}'); break;
      case '[': stack.push_back(']'); break;
      case '}':
      case ']':
        if (stack.empty() || stack.back() != c) return false;
        stack.pop_back();
        break;
      default: break;
    }
  }
  return stack.empty() && !in_string;
}

}  // namespace

TEST_CASE("sweep passes on the default grid") {
  SweepConfig cfg = SweepConfig::defaults();
  cfg.trials = 400;
  const SweepReport rep = run_sweep(cfg);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.max_residual);
    CAPTURE(c.worst);
    CHECK(c.status != CheckStatus::Fail);
  }
  CHECK(rep.all_passed());
  CHECK(cfg.gammas.size() * cfg.fields.size() >= 200);
}

TEST_CASE("parallel sweep reproduces the serial reference bit for bit") {
  SweepConfig cfg = SweepConfig::defaults();
  cfg.trials = 200;
  cfg.seed = 20240817;

  cfg.parallel = false;
  const std::string serial_fp = fingerprint(run_sweep(cfg));
  cfg.parallel = true;
  const std::string parallel_fp = fingerprint(run_sweep(cfg));
  CHECK(serial_fp == parallel_fp);
}

TEST_CASE("tolerance overrides flow through") {
  SweepConfig cfg = SweepConfig::defaults();
  cfg.trials = 50;
  cfg.tolerance_overrides["geometric_product_oracle"] = 0.0;
  const SweepReport rep = run_sweep(cfg);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "geometric_product_oracle") {
      found = true;
      CHECK(c.status == CheckStatus::Fail);
    }
  CHECK(found);
  CHECK(!rep.all_passed());
}

TEST_CASE("vacuous pair points are skipped, not failed") {
  // the two-angle transform is exactly singular at gamma = 0.8
  SweepConfig cfg = SweepConfig::defaults();
  cfg.trials = 20;
  cfg.gammas = {0.8};
  const SweepReport rep = run_sweep(cfg);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    if (c.name == "biortho_pair_delta")
      CHECK(c.status == CheckStatus::Skip);
    else
      CHECK(c.status != CheckStatus::Fail);
  }
}

TEST_CASE("config validation") {
  SweepConfig cfg = SweepConfig::defaults();
  cfg.trials = 0;
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
  cfg = SweepConfig::defaults();
  cfg.gammas = {1.5};
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("cli: verify sweep") {
  std::string out;
  const int code = run_cli({"verify", "--gamma", "0", "--b1", "1", "--b2",
                            "0.5", "--trials", "100", "--seed", "7"},
                           &out);
  CHECK(code == 0);
  CHECK(out.find("\"schema\":\"pauli-biortho/1\"") != std::string::npos);
  CHECK(out.find("\"failed\":0") != std::string::npos);

  // identical invocations are byte-identical
  std::string out2;
  run_cli({"verify", "--gamma", "0", "--b1", "1", "--b2", "0.5", "--trials",
           "100", "--seed", "7"},
          &out2);
  CHECK(out == out2);

  // serial reference path produces the same bytes
  std::string out3;
  run_cli({"verify", "--gamma", "0", "--b1", "1", "--b2", "0.5", "--trials",
           "100", "--seed", "7", "--serial"},
          &out3);
  // the config block records the lane, so compare from the checks onward
  const auto tail = [](const std::string& s) {
    return s.substr(s.find("\"checks\""));
  };
  CHECK(tail(out) == tail(out3));

  // a tolerance of zero forces a check failure -> exit 1
  const int fail_code =
      run_cli({"verify", "--gamma", "0.5", "--b1", "1", "--b2", "1", "--trials",
               "50", "--tol", "eigen_residuals=0"},
              nullptr);
  CHECK(fail_code == 1);
}

TEST_CASE("cli: spectrum") {
  std::string out;
  const int code =
      run_cli({"spectrum", "--gamma", "0.6", "--b1", "1", "--b2", "1"}, &out);
  CHECK(code == 0);
  // E = [sqrt(2), -sqrt(2)]
  CHECK(out.find("\"E\":[1.4142135623730951,-1.4142135623730951]") !=
        std::string::npos);
}

TEST_CASE("cli: ks") {
  std::string out;
  const int code =
      run_cli({"ks", "--variant", "1", "--r", "1,0,0,0"}, &out);
  CHECK(code == 0);
  CHECK(out.find("\"x\":[0,0,1]") != std::string::npos);
  // the sandwich multivector behind this quadruple is the bare e3
  CHECK(out.find("\"upsilon\":[0,0,0,1,0,0,0,0]") != std::string::npos);

  std::string out2;
  const int code2 = run_cli({"ks", "--variant", "2", "--spherical",
                             "2,1.5707963267948966,1.0471975511965976",
                             "--omega1", "0.7"},
                            &out2);
  CHECK(code2 == 0);
  CHECK(out2.find("\"norm_check\":") != std::string::npos);
}

TEST_CASE("cli: evolve and ideal") {
  std::string out;
  const int code =
      run_cli({"evolve", "--gamma", "0.5", "--b1", "1", "--b2", "1", "--psi0",
               "1,0,0,0", "--t", "2", "--steps", "16"},
              &out);
  CHECK(code == 0);
  CHECK(out.find("\"series\":[") != std::string::npos);
  CHECK(out.find("\"biortho_norm_drift\":") != std::string::npos);

  std::string out2;
  const int code2 = run_cli({"ideal", "--psi", "0,1,-1,0"}, &out2);
  CHECK(code2 == 0);
  // psi = (i, -1) has coordinates (0, 0, 1, 1)
  CHECK(out2.find("\"xi\":[0,0,1,1]") != std::string::npos);

  // distinct second argument: <psi|phi> with psi = (i,-1), phi = (1,0) is -i
  std::string out3;
  const int code3 =
      run_cli({"ideal", "--psi", "0,1,-1,0", "--phi", "1,0,0,0"}, &out3);
  CHECK(code3 == 0);
  CHECK(out3.find("\"reversion_product\":[0,-1]") != std::string::npos);
}

TEST_CASE("cli: --out writes the same bytes") {
  const std::string path = "cli_out_test.json";
  std::string out;
  const int code = run_cli(
      {"ks", "--variant", "1", "--r", "1,0,0,0", "--out", path}, &out);
  CHECK(code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == out);
  std::remove(path.c_str());
}

TEST_CASE("cli: unknown tolerance override is a usage error") {
  CHECK(run_cli({"verify", "--gamma", "0", "--b1", "1", "--b2", "0.5",
                 "--trials", "10", "--tol", "no_such_check=1"},
                nullptr) == 2);
  CHECK(run_cli({"verify", "--gamma", "0", "--b1", "1", "--b2", "0.5",
                 "--trials", "10", "--tol", "malformed"},
                nullptr) == 2);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli({"bogus"}, nullptr) == 2);
  CHECK(run_cli({"spectrum", "--gamma", "0.5"}, nullptr) == 2);  // missing B
  CHECK(run_cli({"gens", "--gamma", "1.5"}, nullptr) == 2);  // out of range
  CHECK(run_cli({"gens", "--gamma", "nan"}, nullptr) == 2);
  CHECK(run_cli({"spectrum", "--gamma", "0.5", "--b1", "nan", "--b2", "0"},
                nullptr) == 2);
  CHECK(run_cli({"spectrum", "--gamma", "0.5", "--b1", "0", "--b2", "0"},
                nullptr) == 2);  // degenerate field
  CHECK(run_cli({"ks", "--variant", "3", "--r", "1,0,0,0"}, nullptr) == 2);
  CHECK(run_cli({"ks", "--variant", "1"}, nullptr) == 2);  // no input given
  CHECK(run_cli({"ks", "--variant", "1", "--spherical", "-1,0,0"}, nullptr) ==
        2);  // negative radius
  CHECK(run_cli({"evolve", "--gamma", "0.1", "--b1", "1", "--b2", "0",
                 "--psi0", "1,0", "--t", "1"},
                nullptr) == 2);
}

TEST_CASE("cli: every subcommand emits structurally valid json") {
  const std::vector<std::vector<std::string>> cases = {
      {"gens", "--gamma", "0.6"},
      {"gens", "--gamma", "0.8"},  // printed-transform flag field is null
      {"spectrum", "--gamma", "0.99", "--b1", "-1", "--b2", "2"},
      {"verify", "--gamma", "0.5", "--b1", "1", "--b2", "1", "--trials", "20"},
      {"ks", "--variant", "2", "--r", "0.3,-1,2,0.5"},
      {"evolve", "--gamma", "0.9", "--b1", "1", "--b2", "-1", "--psi0",
       "0.6,0,0.8,0", "--t", "3", "--steps", "7"},
      {"ideal", "--psi", "1,2,3,4", "--phi", "-1,0.5,0,2"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[0]);
    std::string out;
    run_cli(args, &out);
    CHECK(json_well_formed(out));
    CHECK(out.find("\"schema\":\"pauli-biortho/1\"") != std::string::npos);
  }
}

TEST_CASE("cli: gens") {
  std::string out;
  const int code = run_cli({"gens", "--gamma", "0.6"}, &out);
  CHECK(code == 0);
  CHECK(out.find("\"omega\":0.8") != std::string::npos);
  CHECK(out.find("\"clifford_check\":{\"pass\":true") != std::string::npos);
  CHECK(out.find("\"printed_transform_residual\":") != std::string::npos);
}
