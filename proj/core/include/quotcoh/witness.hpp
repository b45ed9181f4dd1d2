#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quotcoh/rational.hpp"

// Analytic witnesses for the two quotient maps that fail to be subductions.
// This is the only part of the library that uses binary floating point.
namespace quotcoh::witness {

/// phi(x) = exp(-1/(x(1-x))) on (0,1), 0 elsewhere. Derivatives use the
/// exact recursion phi^(m) = P_m(x) / (x(1-x))^{2m} * phi(x) with
///   P_{m+1} = u (P_m' u - 2m P_m u') + P_m u',   u = x(1-x), P_0 = 1.
class BumpProfile {
public:
  explicit BumpProfile(int max_order);

  int max_order() const noexcept { return static_cast<int>(numerators_.size()) - 1; }
  /// Coefficients of P_m in increasing degree.
  const std::vector<Rational> &numerator(int order) const { return numerators_.at(order); }

  double value(double x) const { return derivative(0, x); }
  double derivative(int order, double x) const;

private:
  std::vector<std::vector<Rational>> numerators_;
  std::vector<std::vector<double>> numerators_d_;
};

/// f_k(t) = exp(-k^2) phi(2^{2k}(t - 2^{-k})), supported in
/// I_k = (2^{-k}, 2^{-k} + 2^{-2k}).
struct BumpFamily {
  BumpProfile phi;
  std::vector<int> k_range;
  std::size_t samples_per_interval;
  int max_derivative_order;

  static std::pair<double, double> interval(int k);
  /// m-th derivative of f_k at t; zero outside I_k.
  double f(int k, int order, double t) const;
  /// Uniform grid of samples_per_interval interior points of (0,1):
  /// x_i = (i+1) / (samples + 1).
  std::vector<double> profile_grid() const;
  /// The profile grid mapped into I_k.
  std::vector<double> interval_grid(int k) const;
};

/// Throws std::invalid_argument if some k < 1, max order < 0 or samples = 0.
BumpFamily build_bumps(std::vector<int> k_range, int max_derivative_order, std::size_t samples);
BumpFamily build_bumps(int k_min, int k_max, int max_derivative_order, std::size_t samples);

inline constexpr double kRelativeSlack = 1e-9;

struct BoundRow {
  int k = 0;
  int order = 0;
  double measured = 0;        ///< sup |f_k^(m)| on the grid of I_k
  double bound = 0;           ///< C_m e^{-k^2} 2^{2km}
  double measured_scaled = 0; ///< sup |(2^k f_k)^(m)|
  double bound_scaled = 0;    ///< C_m e^{-k^2} 2^{k+2km}
};

struct WitnessReport {
  /// C_m = sup |phi^(m)| on the profile grid.
  std::vector<double> profile_sup;
  std::vector<BoundRow> rows;
  /// Per order m: sups strictly decrease in k across k_range (f_k and 2^k f_k).
  std::vector<bool> monotone_decrease;
  bool intervals_disjoint = false;
  std::vector<int> forced_levels;
  bool lift_obstruction = false;
};

/// Measures every (k, m) on the t-grid of I_k and compares against the bound
/// with relative slack kRelativeSlack. Throws BoundViolated on failure.
WitnessReport verify_bounds(const BumpFamily &family);

/// sup I_{k+1} < inf I_k for consecutive k in the range.
bool intervals_disjoint(const BumpFamily &family);

/// alpha(t) = f_k(t), beta(t) = 2^k f_k(t) on I_k, both 0 off the union.
double alpha(const BumpFamily &family, double t);
double beta(const BumpFamily &family, double t);

/// The exponent n with beta = 2^n alpha at sample points of I_k where
/// alpha > 0; -1 if the ratio is not a constant power of two on I_k.
int forced_level(const BumpFamily &family, int k);

/// True iff the forced levels equal k on each I_k and are not constant on
/// the intervals accumulating at 0, so no locally constant level can exist
/// near 0. Requires at least two values in k_range.
bool lift_obstruction(const BumpFamily &family);

struct DegreeOneCertificate {
  std::size_t quotient_degree1_dim = 0;
  std::size_t invariant_basic_degree1_dim = 0;
  std::vector<std::string> witnesses;
  bool pullback_not_surjective = false;
};

/// R acted on by the discrete reals by translation: the quotient is a point,
/// while the constant-coefficient invariant basic complex of the point
/// foliation on R has dx in degree 1.
DegreeOneCertificate degree_one_obstruction();

} // namespace quotcoh::witness
