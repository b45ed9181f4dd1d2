#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quotcoh/complex.hpp"
#include "quotcoh/errors.hpp"
#include "quotcoh/exterior.hpp"
#include "quotcoh/lie.hpp"
#include "quotcoh/matrix.hpp"

namespace quotcoh {

/// Linear foliation of T^n together with the coordinates in which a dense
/// subgroup of S^1 acts by translation. Foliation directions may carry one
/// symbolic irrational alpha.
struct TorusSpec {
  std::size_t n = 0;
  std::vector<std::vector<ExtScalar>> foliation_dirs;
  std::set<std::size_t> invariance_coords;
  int truncation = 3;
};

/// Fourier mode m in Z^n, indexing the character exp(2 pi i m.theta).
struct Mode {
  std::vector<std::int64_t> m;

  bool is_zero() const;
  std::string to_string() const;
  friend auto operator<=>(const Mode &, const Mode &) = default;
};

/// Coordinate frame for the annihilator of the foliation: the standard
/// coordinates complementary to the pivot columns of the echelonized
/// direction matrix (over Q(alpha)). A covector killing every direction is
/// determined by its components on these coordinates.
struct TransverseFrame {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> coords;
};

/// Throws InvalidSpec for dependent or mis-sized directions and out-of-range
/// invariance coordinates.
TransverseFrame transverse_frame(const TorusSpec &spec);

/// m.v = 0 (exactly, in Q + Q alpha) for every direction v, and m_j = 0 on
/// every invariance coordinate.
bool survives(const Mode &mode, const TorusSpec &spec);

/// Per-mode complex of basic forms: the exterior algebra on the transverse
/// covectors with differential mu ^ -, mu = sum_j m_j dtheta_j written in the
/// transverse frame. The 2 pi i factor is normalized to 1.
struct ModeComplex {
  Mode mode;
  std::vector<std::size_t> transverse_coords;
  std::vector<Rational> mu;
  CochainComplex complex;
};

/// Throws ModeKilled unless survives(mode, spec).
ModeComplex build_mode_complex(const Mode &mode, const TorusSpec &spec);

struct KoszulCertificate {
  Mode mode;
  bool acyclic = false;
  std::vector<std::size_t> ranks;
  std::optional<std::size_t> failing_degree;
};

/// Requires a nonzero mode (std::invalid_argument otherwise).
KoszulCertificate koszul_certificate(const ModeComplex &mc);

struct TorusBettiReport {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> transverse_coords;
  /// Per degree, the mode-0 monomials in original coordinate indices.
  std::vector<std::vector<exterior::MultiIndex>> mode_zero_generators;
  std::vector<KoszulCertificate> acyclicity_certificates;
  std::size_t audited_modes = 0;
};

/// Betti numbers from the mode-0 complex; every surviving mode with
/// 0 < |m|_inf <= truncation is audited, in lexicographic order.
TorusBettiReport torus_betti(const TorusSpec &spec);

/// Span of the directions specialized at a rational alpha where they stay
/// independent. For rational directions this is their span.
Subspace rational_skeleton(const TorusSpec &spec);

struct CrossCheck {
  bool agree = false;
  std::vector<std::size_t> torus_betti;
  std::vector<std::size_t> ce_betti;
  CochainComplex ce;

  explicit operator bool() const noexcept { return agree; }
};

/// Compares torus_betti with CE Betti numbers of the abelian quotient
/// R^n / rational_skeleton(spec).
CrossCheck cross_check_ce(const TorusSpec &spec);

/// x, y, z for n <= 3, otherwise t0 .. t{n-1}.
std::vector<std::string> coordinate_names(std::size_t n);

} // namespace quotcoh
