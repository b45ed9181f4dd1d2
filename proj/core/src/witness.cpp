#include "quotcoh/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quotcoh/errors.hpp"
#include "quotcoh/exterior.hpp"

namespace quotcoh::witness {

namespace {

using Poly = std::vector<Rational>;

Poly add(const Poly &a, const Poly &b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] += b[i];
  while (!out.empty() && out.back().is_zero())
    out.pop_back();
  return out;
}

Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

Poly scale(Poly a, const Rational &s) {
  for (auto &c : a)
    c *= s;
  return a;
}

Poly differentiate(const Poly &a) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i)
    out.push_back(a[i] * Rational(static_cast<long>(i)));
  return out;
}

double horner(const std::vector<double> &c, double x) {
  double acc = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    acc = acc * x + c[i];
  return acc;
}

} // namespace

BumpProfile::BumpProfile(int max_order) {
  if (max_order < 0)
    throw std::invalid_argument("BumpProfile: negative derivative order");
  const Poly u{0, 1, -1};     // x - x^2
  const Poly du{1, -2};       // 1 - 2x
  numerators_.push_back({1});
  for (int m = 0; m < max_order; ++m) {
    const Poly &p = numerators_.back();
    Poly inner = add(mul(differentiate(p), u), scale(mul(p, du), Rational(-2L * m)));
    numerators_.push_back(add(mul(u, inner), mul(p, du)));
  }
  for (const auto &p : numerators_) {
    std::vector<double> d;
    for (const auto &c : p)
      d.push_back(c.to_double());
    numerators_d_.push_back(std::move(d));
  }
}

double BumpProfile::derivative(int order, double x) const {
  if (order < 0 || order > max_order())
    throw std::out_of_range("BumpProfile: derivative order not prepared");
  if (!(x > 0.0 && x < 1.0))
    return 0.0;
  const double u = x * (1.0 - x);
  // P/u^{2m} * exp(-1/u), folded into one exponential near the endpoints.
  const double log_part = -1.0 / u - 2.0 * order * std::log(u);
  return horner(numerators_d_[order], x) * std::exp(log_part);
}

std::pair<double, double> BumpFamily::interval(int k) {
  const double lo = std::ldexp(1.0, -k);
  return {lo, lo + std::ldexp(1.0, -2 * k)};
}

double BumpFamily::f(int k, int order, double t) const {
  const auto [lo, hi] = interval(k);
  if (!(t > lo && t < hi))
    return 0.0;
  const double x = std::ldexp(t - lo, 2 * k);
  return std::ldexp(std::exp(-static_cast<double>(k) * k) * phi.derivative(order, x), 2 * k * order);
}

std::vector<double> BumpFamily::profile_grid() const {
  std::vector<double> out(samples_per_interval);
  const double denom = static_cast<double>(samples_per_interval + 1);
  for (std::size_t i = 0; i < samples_per_interval; ++i)
    out[i] = static_cast<double>(i + 1) / denom;
  return out;
}

std::vector<double> BumpFamily::interval_grid(int k) const {
  std::vector<double> out = profile_grid();
  const double lo = interval(k).first;
  for (auto &x : out)
    x = lo + std::ldexp(x, -2 * k);
  return out;
}

BumpFamily build_bumps(std::vector<int> k_range, int max_derivative_order, std::size_t samples) {
  if (max_derivative_order < 0)
    throw std::invalid_argument("build_bumps: derivative order must be >= 0");
  if (samples == 0)
    throw std::invalid_argument("build_bumps: need at least one sample per interval");
  for (int k : k_range)
    if (k < 1)
      throw std::invalid_argument("build_bumps: k must be >= 1");
  std::sort(k_range.begin(), k_range.end());
  k_range.erase(std::unique(k_range.begin(), k_range.end()), k_range.end());
  return BumpFamily{BumpProfile(max_derivative_order), std::move(k_range), samples, max_derivative_order};
}

BumpFamily build_bumps(int k_min, int k_max, int max_derivative_order, std::size_t samples) {
  if (k_max < k_min)
    throw std::invalid_argument("build_bumps: empty k range");
  std::vector<int> ks;
  for (int k = k_min; k <= k_max; ++k)
    ks.push_back(k);
  return build_bumps(std::move(ks), max_derivative_order, samples);
}

bool intervals_disjoint(const BumpFamily &family) {
  const auto &ks = family.k_range;
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    // k_range is sorted, so ks[i+1] is the interval closer to 0.
    if (!(BumpFamily::interval(ks[i + 1]).second < BumpFamily::interval(ks[i]).first))
      return false;
  }
  return true;
}

WitnessReport verify_bounds(const BumpFamily &family) {
  WitnessReport report;
  const auto grid = family.profile_grid();
  for (int m = 0; m <= family.max_derivative_order; ++m) {
    double sup = 0;
    for (double x : grid)
      sup = std::max(sup, std::fabs(family.phi.derivative(m, x)));
    report.profile_sup.push_back(sup);
  }

  for (int m = 0; m <= family.max_derivative_order; ++m) {
    const double c_m = report.profile_sup[m];
    for (int k : family.k_range) {
      BoundRow row{k, m};
      const double decay = std::exp(-static_cast<double>(k) * k);
      row.bound = std::ldexp(c_m * decay, 2 * k * m);
      row.bound_scaled = std::ldexp(c_m * decay, k + 2 * k * m);
      double worst_t = 0;
      for (double t : family.interval_grid(k)) {
        const double v = std::fabs(family.f(k, m, t));
        if (v > row.measured) {
          row.measured = v;
          worst_t = t;
        }
      }
      row.measured_scaled = std::ldexp(row.measured, k);
      if (row.measured > row.bound * (1 + kRelativeSlack) ||
          row.measured_scaled > row.bound_scaled * (1 + kRelativeSlack))
        throw BoundViolated(k, m, worst_t,
                            "sup |f_" + std::to_string(k) + "^(" + std::to_string(m) + ")| exceeds its bound");
      report.rows.push_back(row);
    }
  }

  const std::size_t ks = family.k_range.size();
  for (int m = 0; m <= family.max_derivative_order; ++m) {
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < ks; ++i) {
      const BoundRow &a = report.rows[m * ks + i];
      const BoundRow &b = report.rows[m * ks + i + 1];
      if (!(b.measured < a.measured && b.measured_scaled < a.measured_scaled))
        decreasing = false;
    }
    report.monotone_decrease.push_back(decreasing);
  }

  report.intervals_disjoint = intervals_disjoint(family);
  for (int k : family.k_range)
    report.forced_levels.push_back(forced_level(family, k));
  report.lift_obstruction = family.k_range.size() >= 2 && lift_obstruction(family);
  return report;
}

double alpha(const BumpFamily &family, double t) {
  for (int k : family.k_range) {
    const auto [lo, hi] = BumpFamily::interval(k);
    if (t > lo && t < hi)
      return family.f(k, 0, t);
  }
  return 0.0;
}

double beta(const BumpFamily &family, double t) {
  for (int k : family.k_range) {
    const auto [lo, hi] = BumpFamily::interval(k);
    if (t > lo && t < hi)
      return std::ldexp(family.f(k, 0, t), k);
  }
  return 0.0;
}

int forced_level(const BumpFamily &family, int k) {
  int level = -1;
  bool seen = false;
  for (double t : family.interval_grid(k)) {
    const double a = alpha(family, t);
    if (!(a > 0))
      continue;
    const double ratio = beta(family, t) / a;
    int exponent = 0;
    const double mantissa = std::frexp(ratio, &exponent);
    if (mantissa != 0.5)
      return -1;
    const int n = exponent - 1;
    if (seen && n != level)
      return -1;
    level = n;
    seen = true;
  }
  return level;
}

bool lift_obstruction(const BumpFamily &family) {
  if (family.k_range.size() < 2)
    throw std::invalid_argument("lift_obstruction: need at least two intervals");
  if (!intervals_disjoint(family))
    return false;
  std::vector<int> levels;
  for (int k : family.k_range) {
    const int level = forced_level(family, k);
    if (level != k)
      return false;
    levels.push_back(level);
  }
  // Any neighbourhood (0, eps) meeting two of the intervals sees two levels.
  return std::adjacent_find(levels.begin(), levels.end(), std::not_equal_to<>()) != levels.end();
}

DegreeOneCertificate degree_one_obstruction() {
  DegreeOneCertificate cert;
  // Omega^1 of a point: the exterior algebra on a 0-dimensional cotangent space.
  cert.quotient_degree1_dim = exterior::binomial(0, 1);
  // Point foliation (no directions to annihilate), translation-invariant
  // constant coefficients: Lambda^1 of R^1, spanned by dx.
  const auto invariant = exterior::enumerate_basis(1, 1);
  cert.invariant_basic_degree1_dim = invariant.size();
  for (const auto &m : invariant)
    cert.witnesses.push_back("d" + exterior::monomial_name(m, {"x"}));
  cert.pullback_not_surjective = cert.invariant_basic_degree1_dim > cert.quotient_degree1_dim;
  return cert;
}

} // namespace quotcoh::witness
