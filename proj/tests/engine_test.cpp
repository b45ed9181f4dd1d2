// Drives the engine binary end to end and checks the exit-code contract.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "quotcoh/cli/report.hpp"

namespace {

struct Outcome {
  int exit;
  std::string out;
};

Outcome engine(const std::string &args) {
  const std::string cmd = std::string(QUOTCOH_ENGINE) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string job(const std::string &name) { return std::string(QUOTCOH_JOBS) + "/" + name; }

} // namespace

TEST(Engine, TableOutput) {
  const Outcome o = engine("--input " + job("nondense_t3.ini"));
  EXPECT_EQ(o.exit, 0);
  EXPECT_NE(o.out.find("betti: 1 2 1"), std::string::npos);
  EXPECT_NE(o.out.find("generators: 1 | dy, dz | dy∧dz"), std::string::npos);
}

TEST(Engine, JsonOutputAndCheck) {
  const Outcome o = engine("--input " + job("kronecker.ini") + " --format json --check");
  EXPECT_EQ(o.exit, 0);
  const auto r = quotcoh::cli::parse_json(o.out);
  EXPECT_EQ(r.betti, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r.exit, 0);
}

TEST(Engine, TruncationOverride) {
  const Outcome o = engine("--input " + job("nondense_t3.ini") + " --format json --truncation 5");
  EXPECT_EQ(quotcoh::cli::parse_json(o.out).audited_modes, 10u);
}

TEST(Engine, RefusalsExitTwo) {
  EXPECT_EQ(engine("--input " + job("sl2_not_ideal.ini")).exit, 2);
  EXPECT_EQ(engine("--input " + job("dependent_dirs.ini")).exit, 2);
}

TEST(Engine, BadConfigExitsTwo) {
  const std::string path = std::string(QUOTCOH_TMP) + "/bad_decimal.ini";
  std::ofstream(path) << "[torus]\nn = 3\nfoliation = 0.5,0,0\n";
  EXPECT_EQ(engine("--input " + path).exit, 2);
}

TEST(Engine, OutputFileAndDeterminism) {
  const std::string a = std::string(QUOTCOH_TMP) + "/run_a.json";
  const std::string b = std::string(QUOTCOH_TMP) + "/run_b.json";
  ASSERT_EQ(engine("--input " + job("nondense_t3.ini") + " --format json --output " + a).exit, 0);
  ASSERT_EQ(engine("--input " + job("nondense_t3.ini") + " --format json --output " + b).exit, 0);
  auto slurp = [](const std::string &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  EXPECT_EQ(quotcoh::cli::canonical_json(quotcoh::cli::parse_json(slurp(a))),
            quotcoh::cli::canonical_json(quotcoh::cli::parse_json(slurp(b))));
}

TEST(Engine, WitnessJob) {
  const Outcome o = engine("--input " + job("witness.ini") + " --format csv");
  EXPECT_EQ(o.exit, 0);
  EXPECT_NE(o.out.find("lift_obstruction,\"\",true"), std::string::npos) << o.out;
}

TEST(Engine, MissingInputIsAUsageError) { EXPECT_NE(engine("--input /nonexistent/job.ini").exit, 0); }
