#include "quotcoh/cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace quotcoh::cli {

using ordered_json = nlohmann::ordered_json;

void to_json(ordered_json &j, const Certificate &c) {
  j = ordered_json{{"kind", c.kind}, {"subject", c.subject}, {"passed", c.passed}};
  if (!c.ranks.empty())
    j["ranks"] = c.ranks;
  if (!c.values.empty())
    j["values"] = c.values;
  if (!c.detail.empty())
    j["detail"] = c.detail;
}

void from_json(const ordered_json &j, Certificate &c) {
  c = Certificate{};
  j.at("kind").get_to(c.kind);
  j.at("subject").get_to(c.subject);
  j.at("passed").get_to(c.passed);
  if (j.contains("ranks"))
    j.at("ranks").get_to(c.ranks);
  if (j.contains("values"))
    j.at("values").get_to(c.values);
  if (j.contains("detail"))
    j.at("detail").get_to(c.detail);
}

namespace {

ordered_json canonical(const Report &r) {
  ordered_json j;
  j["mode"] = r.mode;
  j["betti"] = r.betti;
  j["ranks"] = r.ranks;
  j["generators"] = r.generators;
  j["certificates"] = r.certificates;
  j["audited_modes"] = r.audited_modes;
  j["exit"] = r.exit;
  j["notes"] = r.notes;
  return j;
}

} // namespace

void to_json(ordered_json &j, const Report &r) {
  j = canonical(r);
  j["timing_ms"] = r.timing_ms;
}

void from_json(const ordered_json &j, Report &r) {
  r = Report{};
  j.at("mode").get_to(r.mode);
  j.at("betti").get_to(r.betti);
  j.at("ranks").get_to(r.ranks);
  j.at("generators").get_to(r.generators);
  j.at("certificates").get_to(r.certificates);
  j.at("audited_modes").get_to(r.audited_modes);
  j.at("exit").get_to(r.exit);
  if (j.contains("notes"))
    j.at("notes").get_to(r.notes);
  if (j.contains("timing_ms"))
    j.at("timing_ms").get_to(r.timing_ms);
}

std::string serialize_json(const Report &r) { return ordered_json(r).dump(2) + "\n"; }

Report parse_json(const std::string &text) { return ordered_json::parse(text).get<Report>(); }

std::string canonical_json(const Report &r) { return canonical(r).dump(2) + "\n"; }

namespace {

template <class T> std::string join(const std::vector<T> &v, const std::string &sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0)
      os << sep;
    os << v[i];
  }
  return os.str();
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

} // namespace

std::string render_table(const Report &r) {
  std::ostringstream os;
  os << "mode: " << r.mode << "\n";
  if (!r.betti.empty()) {
    os << "betti: " << join(r.betti, " ") << "\n";
    std::vector<std::string> per_degree;
    for (const auto &g : r.generators)
      per_degree.push_back(g.empty() ? "-" : join(g, ", "));
    os << "generators: " << join(per_degree, " | ") << "\n";
    os << "\n" << std::left << std::setw(8) << "degree" << std::setw(8) << "rank" << std::setw(8) << "betti"
       << "representatives\n";
    for (std::size_t k = 0; k < r.betti.size(); ++k) {
      const std::string rank = k < r.ranks.size() ? std::to_string(r.ranks[k]) : "-";
      os << std::setw(8) << k << std::setw(8) << rank << std::setw(8) << r.betti[k]
         << (k < r.generators.size() ? join(r.generators[k], ", ") : "") << "\n";
    }
  }
  if (r.mode == "torus")
    os << "audited_modes: " << r.audited_modes << "\n";
  if (!r.certificates.empty()) {
    os << "\ncertificates:\n";
    for (const auto &c : r.certificates) {
      os << "  " << (c.passed ? "[ok]   " : "[FAIL] ") << c.kind;
      if (!c.subject.empty())
        os << " " << c.subject;
      if (!c.ranks.empty())
        os << " ranks=" << join(c.ranks, ",");
      if (!c.values.empty()) {
        std::vector<std::string> vs;
        for (double v : c.values)
          vs.push_back(format_double(v));
        os << " values=" << join(vs, ",");
      }
      if (!c.detail.empty())
        os << " (" << c.detail << ")";
      os << "\n";
    }
  }
  for (const auto &n : r.notes)
    os << "note: " << n << "\n";
  os << "exit: " << r.exit << "\n";
  return os.str();
}

std::string render_csv(const Report &r) {
  std::ostringstream os;
  auto quote = [](const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"')
        out += '"';
      out += c;
    }
    return out + "\"";
  };
  if (!r.betti.empty()) {
    os << "degree,rank,betti,generators\n";
    for (std::size_t k = 0; k < r.betti.size(); ++k) {
      os << k << "," << (k < r.ranks.size() ? std::to_string(r.ranks[k]) : "") << "," << r.betti[k] << ","
         << quote(k < r.generators.size() ? join(r.generators[k], "; ") : "") << "\n";
    }
  }
  if (!r.certificates.empty()) {
    if (!r.betti.empty())
      os << "\n";
    os << "kind,subject,passed,ranks,values,detail\n";
    for (const auto &c : r.certificates) {
      std::vector<std::string> vs;
      for (double v : c.values)
        vs.push_back(format_double(v));
      os << c.kind << "," << quote(c.subject) << "," << (c.passed ? "true" : "false") << ","
         << quote(join(c.ranks, " ")) << "," << quote(join(vs, " ")) << "," << quote(c.detail) << "\n";
    }
  }
  return os.str();
}

std::string render(const Report &r, OutputFormat format) {
  switch (format) {
  case OutputFormat::json:
    return serialize_json(r);
  case OutputFormat::csv:
    return render_csv(r);
  case OutputFormat::table:
    break;
  }
  return render_table(r);
}

} // namespace quotcoh::cli
