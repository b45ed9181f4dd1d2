#include "quotcoh/rational.hpp"

#include <cctype>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>

namespace quotcoh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational::Rational(long n, long d) {
  if (d == 0)
    throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(const mpz_class &n, const mpz_class &d) {
  if (d == 0)
    throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(const mpq_class &q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not an exact fraction: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative)
    n = -n;
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1)
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o) {
  value_ += o.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &o) {
  value_ -= o.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &o) {
  value_ *= o.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

ExtScalar ExtScalar::parse(std::string_view text) {
  static const std::regex grammar(R"(^(-?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)\*alpha)?$)");
  std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, grammar))
    throw std::invalid_argument("not an exact p+q*alpha entry: '" + s + "'");
  ExtScalar out{Rational::parse(match[1].str())};
  if (match[2].matched) {
    out.irr = Rational::parse(match[3].str());
    if (match[2].str() == "-")
      out.irr = -out.irr;
  }
  return out;
}

std::string ExtScalar::to_string() const {
  if (irr.is_zero())
    return rat.to_string();
  std::string out = rat.to_string();
  if (irr.sign() < 0)
    out += "-" + (-irr).to_string();
  else
    out += "+" + irr.to_string();
  return out + "*alpha";
}

bool ext_is_zero(const ExtScalar &s) { return s.rat.is_zero() && s.irr.is_zero(); }

std::ostream &operator<<(std::ostream &os, const ExtScalar &s) { return os << s.to_string(); }

} // namespace quotcoh
