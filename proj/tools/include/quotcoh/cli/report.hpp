#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "quotcoh/cli/config.hpp"

namespace quotcoh::cli {

struct Certificate {
  std::string kind;
  std::string subject;
  bool passed = false;
  std::vector<std::size_t> ranks;
  std::vector<double> values;
  std::string detail;

  friend bool operator==(const Certificate &, const Certificate &) = default;
};

struct Report {
  std::string mode;
  std::vector<std::size_t> betti;
  std::vector<std::size_t> ranks;
  /// Per degree, one human-readable linear combination per representative.
  std::vector<std::vector<std::string>> generators;
  std::vector<Certificate> certificates;
  std::size_t audited_modes = 0;
  int exit = 0;
  std::vector<std::string> notes;
  /// Wall time; left out of the canonical form.
  double timing_ms = 0;

  friend bool operator==(const Report &, const Report &) = default;
};

void to_json(nlohmann::ordered_json &j, const Certificate &c);
void from_json(const nlohmann::ordered_json &j, Certificate &c);
void to_json(nlohmann::ordered_json &j, const Report &r);
void from_json(const nlohmann::ordered_json &j, Report &r);

std::string serialize_json(const Report &r);
Report parse_json(const std::string &text);
/// JSON without the timing field; byte-identical for identical jobs.
std::string canonical_json(const Report &r);

std::string render_table(const Report &r);
std::string render_csv(const Report &r);
std::string render(const Report &r, OutputFormat format);

} // namespace quotcoh::cli
