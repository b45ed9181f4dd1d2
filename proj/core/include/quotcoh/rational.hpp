#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quotcoh {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long n) : value_(n) {} // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const mpz_class &n, const mpz_class &d);
  explicit Rational(const mpq_class &q);

  /// Parses "p" or "p/q" with optional leading '-'. Decimal literals and a
  /// zero denominator are rejected with std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class &raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// p + q*alpha, with alpha a designated irrational treated symbolically.
/// Only the operations the pipelines need are provided: addition,
/// rational scaling, evaluation at a rational point and the zero test.
struct ExtScalar {
  Rational rat;
  Rational irr;

  ExtScalar() = default;
  ExtScalar(Rational p) : rat(std::move(p)) {} // NOLINT(google-explicit-constructor)
  ExtScalar(long p) : rat(p) {} // NOLINT(google-explicit-constructor)
  ExtScalar(Rational p, Rational q) : rat(std::move(p)), irr(std::move(q)) {}

  /// Parses entries matching -?\d+(/\d+)?([+-]\d+(/\d+)?\*alpha)?
  static ExtScalar parse(std::string_view text);

  bool is_rational() const { return irr.is_zero(); }
  Rational evaluate_at(const Rational &alpha) const { return rat + irr * alpha; }
  std::string to_string() const;

  ExtScalar operator-() const { return {-rat, -irr}; }
  ExtScalar &operator+=(const ExtScalar &o) {
    rat += o.rat;
    irr += o.irr;
    return *this;
  }
  ExtScalar &operator-=(const ExtScalar &o) {
    rat -= o.rat;
    irr -= o.irr;
    return *this;
  }
  ExtScalar &operator*=(const Rational &s) {
    rat *= s;
    irr *= s;
    return *this;
  }
  friend ExtScalar operator+(ExtScalar a, const ExtScalar &b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar &b) { return a -= b; }
  friend ExtScalar operator*(const Rational &s, ExtScalar a) { return a *= s; }
  friend ExtScalar operator*(ExtScalar a, const Rational &s) { return a *= s; }
  friend bool operator==(const ExtScalar &, const ExtScalar &) = default;
};

/// Since alpha is irrational, p + q*alpha vanishes iff p = q = 0.
bool ext_is_zero(const ExtScalar &s);

std::ostream &operator<<(std::ostream &os, const ExtScalar &s);

} // namespace quotcoh
