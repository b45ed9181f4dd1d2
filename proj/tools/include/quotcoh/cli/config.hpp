#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quotcoh/rational.hpp"

namespace quotcoh::cli {

class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string &kind, std::size_t line, std::string key, const std::string &reason);

  std::size_t line() const noexcept { return line_; }
  const std::string &key() const noexcept { return key_; }

private:
  std::size_t line_;
  std::string key_;
};

/// Malformed text: unknown section, missing '=', key outside a section.
class ParseError : public ConfigError {
public:
  ParseError(std::size_t line, std::string key, const std::string &reason)
      : ConfigError("ParseError", line, std::move(key), reason) {}
};

/// Well-formed text describing an invalid job.
class ValidationError : public ConfigError {
public:
  ValidationError(std::size_t line, std::string key, const std::string &reason)
      : ConfigError("ValidationError", line, std::move(key), reason) {}
};

enum class JobMode { lie, torus, witness };

std::string to_string(JobMode mode);

struct Bracket {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

struct LieSection {
  std::size_t dim = 0;
  std::vector<Bracket> brackets;
  std::vector<std::vector<Rational>> ideal;
};

struct TorusSection {
  std::size_t n = 0;
  std::vector<std::vector<ExtScalar>> foliation_dirs;
  std::set<std::size_t> invariance_coords;
  int truncation = 3;
};

struct WitnessSection {
  int k_min = 2;
  int k_max = 6;
  int max_derivative_order = 4;
  std::size_t samples = 10001;
};

enum class OutputFormat { table, json, csv };

OutputFormat parse_format(std::string_view text);

struct OutputSection {
  OutputFormat format = OutputFormat::table;
  std::optional<std::string> path;
};

struct JobConfig {
  JobMode mode = JobMode::lie;
  std::optional<LieSection> lie;
  std::optional<TorusSection> torus;
  std::optional<WitnessSection> witness;
  OutputSection output;
};

/// Sectioned key-value text:
///
///   [lie]      dim = 3 / bracket = i j k p/q (repeated) / ideal = v0,v1,... (repeated)
///   [torus]    n = 3 / foliation = 1,0,0 (repeated) / invariance = 1 / truncation = 3
///   [witness]  k_min / k_max / max_derivative_order / samples
///   [output]   format = table|json|csv / path = ...
///
/// '#' and ';' start comment lines. Exactly one of lie, torus, witness must
/// be present. Exact fields reject decimal literals.
JobConfig parse_config(std::string_view text);

} // namespace quotcoh::cli
