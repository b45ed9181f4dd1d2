#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quotcoh/cli/config.hpp"
#include "quotcoh/cli/report.hpp"
#include "quotcoh/cli/run.hpp"

using namespace quotcoh::cli;

int main(int argc, char **argv) {
  CLI::App app{"Exact cohomology of quotients by Lie group actions"};
  std::string input;
  std::string output;
  std::string format;
  int truncation = -1;
  bool check = false;
  app.add_option("--input", input, "job configuration file")->required()->check(CLI::ExistingFile);
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_option("--format", format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--truncation", truncation, "audit sweep bound |m|_inf <= N (torus jobs)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--check", check, "cross-check against the Chevalley-Eilenberg route; exit 3 on mismatch");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(input);
  std::stringstream buffer;
  buffer << in.rdbuf();

  JobConfig job;
  try {
    job = parse_config(buffer.str());
  } catch (const ConfigError &e) {
    std::cerr << input << ": " << e.what() << "\n";
    return exit_code::refused;
  }
  if (!format.empty())
    job.output.format = parse_format(format);
  if (!output.empty())
    job.output.path = output;
  if (truncation >= 0 && job.torus)
    job.torus->truncation = truncation;

  const RunResult result = run(job, RunOptions{check});
  if (!result.diagnostic.empty())
    std::cerr << result.diagnostic << "\n";

  const std::string text = render(result.report, job.output.format);
  if (job.output.path) {
    std::ofstream out(*job.output.path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *job.output.path << "\n";
      return exit_code::internal;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}
