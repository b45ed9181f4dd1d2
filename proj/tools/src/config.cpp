#include "quotcoh/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace quotcoh::cli {

ConfigError::ConfigError(const std::string &kind, std::size_t line, std::string key, const std::string &reason)
    : std::runtime_error(kind + " at line " + std::to_string(line) + (key.empty() ? "" : ", key '" + key + "'") +
                         ": " + reason),
      line_(line), key_(std::move(key)) {}

std::string to_string(JobMode mode) {
  switch (mode) {
  case JobMode::lie:
    return "lie";
  case JobMode::torus:
    return "torus";
  case JobMode::witness:
    return "witness";
  }
  return "unknown";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "table")
    return OutputFormat::table;
  if (text == "json")
    return OutputFormat::json;
  if (text == "csv")
    return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "' (table|json|csv)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Entry {
  std::size_t line;
  std::string key;
  std::string value;
};

bool looks_decimal(std::string_view s) {
  return s.find('.') != std::string_view::npos || s.find_first_of("eE") != std::string_view::npos;
}

std::size_t parse_count(const Entry &e, std::string_view text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError(e.line, e.key, "expected a non-negative integer, got '" + std::string(text) + "'");
  return v;
}

Rational parse_exact(const Entry &e, std::string_view text) {
  if (looks_decimal(text))
    throw ValidationError(e.line, e.key, "decimal literal '" + std::string(text) + "' rejected in an exact field");
  try {
    return Rational::parse(text);
  } catch (const std::exception &ex) {
    throw ValidationError(e.line, e.key, ex.what());
  }
}

ExtScalar parse_ext(const Entry &e, std::string_view text) {
  if (looks_decimal(text))
    throw ValidationError(e.line, e.key, "decimal literal '" + std::string(text) + "' rejected in an exact field");
  try {
    return ExtScalar::parse(text);
  } catch (const std::exception &ex) {
    throw ValidationError(e.line, e.key, ex.what());
  }
}

// Witness fields accept decimals as long as they denote integers.
long parse_numeric_integer(const Entry &e) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(e.value, &used);
  } catch (const std::exception &) {
    throw ValidationError(e.line, e.key, "expected a number, got '" + e.value + "'");
  }
  if (used != e.value.size() || v != static_cast<double>(static_cast<long>(v)))
    throw ValidationError(e.line, e.key, "expected an integral value, got '" + e.value + "'");
  return static_cast<long>(v);
}

using Section = std::vector<Entry>;

void reject_unknown(const Section &s, std::initializer_list<std::string_view> allowed) {
  for (const auto &e : s)
    if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end())
      throw ParseError(e.line, e.key, "unknown key");
}

const Entry *single(const Section &s, std::string_view key) {
  const Entry *found = nullptr;
  for (const auto &e : s)
    if (e.key == key) {
      if (found)
        throw ValidationError(e.line, e.key, "key given more than once");
      found = &e;
    }
  return found;
}

LieSection build_lie(const Section &s, std::size_t header_line) {
  reject_unknown(s, {"dim", "bracket", "ideal"});
  LieSection out;
  const Entry *dim = single(s, "dim");
  if (!dim)
    throw ValidationError(header_line, "dim", "missing");
  out.dim = parse_count(*dim, dim->value);

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> seen;
  for (const auto &e : s) {
    if (e.key == "bracket") {
      auto t = tokens(e.value);
      if (t.size() != 4)
        throw ValidationError(e.line, e.key, "expected 'i j k p/q'");
      Bracket b{parse_count(e, t[0]), parse_count(e, t[1]), parse_count(e, t[2]), parse_exact(e, t[3])};
      if (b.i >= out.dim || b.j >= out.dim || b.k >= out.dim)
        throw ValidationError(e.line, e.key, "bracket index >= dim");
      if (b.i == b.j && !b.value.is_zero())
        throw ValidationError(e.line, e.key, "antisymmetry forces c_ii^k = 0");
      // Normalize to i < j so both orientations of the same constant are compared.
      auto key = b.i < b.j ? std::tuple{b.i, b.j, b.k} : std::tuple{b.j, b.i, b.k};
      Rational oriented = b.i < b.j ? b.value : -b.value;
      auto [it, inserted] = seen.emplace(key, oriented);
      if (!inserted && !(it->second == oriented))
        throw ValidationError(e.line, e.key, "conflicts with an earlier bracket entry");
      out.brackets.push_back(b);
    } else if (e.key == "ideal") {
      std::vector<Rational> v;
      for (auto part : split(e.value, ','))
        v.push_back(parse_exact(e, part));
      if (v.size() != out.dim)
        throw ValidationError(e.line, e.key, "ideal vector length differs from dim");
      out.ideal.push_back(std::move(v));
    }
  }
  return out;
}

TorusSection build_torus(const Section &s, std::size_t header_line) {
  reject_unknown(s, {"n", "foliation", "invariance", "truncation"});
  TorusSection out;
  const Entry *n = single(s, "n");
  if (!n)
    throw ValidationError(header_line, "n", "missing");
  out.n = parse_count(*n, n->value);
  if (const Entry *t = single(s, "truncation"))
    out.truncation = static_cast<int>(parse_count(*t, t->value));
  if (const Entry *inv = single(s, "invariance")) {
    if (!inv->value.empty())
      for (auto part : split(inv->value, ',')) {
        std::size_t j = parse_count(*inv, part);
        if (j >= out.n)
          throw ValidationError(inv->line, inv->key, "invariance coordinate >= n");
        out.invariance_coords.insert(j);
      }
  }
  for (const auto &e : s) {
    if (e.key != "foliation")
      continue;
    std::vector<ExtScalar> v;
    for (auto part : split(e.value, ','))
      v.push_back(parse_ext(e, part));
    if (v.size() != out.n)
      throw ValidationError(e.line, e.key, "foliation vector length differs from n");
    out.foliation_dirs.push_back(std::move(v));
  }
  return out;
}

WitnessSection build_witness(const Section &s, std::size_t header_line) {
  reject_unknown(s, {"k_min", "k_max", "max_derivative_order", "samples"});
  WitnessSection out;
  if (const Entry *e = single(s, "k_min"))
    out.k_min = static_cast<int>(parse_numeric_integer(*e));
  if (const Entry *e = single(s, "k_max"))
    out.k_max = static_cast<int>(parse_numeric_integer(*e));
  if (const Entry *e = single(s, "max_derivative_order"))
    out.max_derivative_order = static_cast<int>(parse_numeric_integer(*e));
  if (const Entry *e = single(s, "samples")) {
    long v = parse_numeric_integer(*e);
    if (v < 1)
      throw ValidationError(e->line, e->key, "need at least one sample");
    out.samples = static_cast<std::size_t>(v);
  }
  if (out.k_min < 1)
    throw ValidationError(header_line, "k_min", "k must be >= 1");
  if (out.k_max < out.k_min)
    throw ValidationError(header_line, "k_max", "k_max < k_min");
  if (out.max_derivative_order < 0)
    throw ValidationError(header_line, "max_derivative_order", "must be >= 0");
  return out;
}

OutputSection build_output(const Section &s) {
  reject_unknown(s, {"format", "path"});
  OutputSection out;
  if (const Entry *e = single(s, "format")) {
    try {
      out.format = parse_format(e->value);
    } catch (const std::exception &ex) {
      throw ValidationError(e->line, e->key, ex.what());
    }
  }
  if (const Entry *e = single(s, "path"))
    out.path = e->value;
  return out;
}

} // namespace

JobConfig parse_config(std::string_view text) {
  std::map<std::string, Section> sections;
  std::map<std::string, std::size_t> header_lines;
  std::string current;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';')
      continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(line_no, "", "unterminated section header");
      std::string name(trim(line.substr(1, line.size() - 2)));
      if (name != "lie" && name != "torus" && name != "witness" && name != "output")
        throw ParseError(line_no, name, "unknown section");
      if (header_lines.count(name))
        throw ParseError(line_no, name, "section repeated");
      header_lines[name] = line_no;
      sections[name];
      current = name;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line_no, std::string(line), "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    if (key.empty())
      throw ParseError(line_no, "", "empty key");
    if (current.empty())
      throw ParseError(line_no, key, "key outside of any section");
    sections[current].push_back({line_no, key, std::string(trim(line.substr(eq + 1)))});
  }

  JobConfig job;
  int populated = 0;
  if (sections.count("lie")) {
    job.lie = build_lie(sections["lie"], header_lines["lie"]);
    job.mode = JobMode::lie;
    ++populated;
  }
  if (sections.count("torus")) {
    job.torus = build_torus(sections["torus"], header_lines["torus"]);
    job.mode = JobMode::torus;
    ++populated;
  }
  if (sections.count("witness")) {
    job.witness = build_witness(sections["witness"], header_lines["witness"]);
    job.mode = JobMode::witness;
    ++populated;
  }
  if (populated != 1)
    throw ValidationError(0, "", "exactly one of [lie], [torus], [witness] must be present");
  if (sections.count("output"))
    job.output = build_output(sections["output"]);
  return job;
}

} // namespace quotcoh::cli
