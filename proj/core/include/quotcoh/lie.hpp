#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "quotcoh/complex.hpp"
#include "quotcoh/matrix.hpp"

namespace quotcoh {

/// Finite-dimensional Lie algebra over Q given by structure constants,
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Antisymmetry is enforced on write.
class LieAlgebra {
public:
  explicit LieAlgebra(std::size_t dim = 0);

  std::size_t dim() const noexcept { return dim_; }
  const Rational &structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets c(i, j, k) = value and c(j, i, k) = -value. Throws
  /// std::invalid_argument for i == j with a nonzero value or indices out of range.
  void set_structure(std::size_t i, std::size_t j, std::size_t k, const Rational &value);

  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector &x, const Vector &y) const;

  friend bool operator==(const LieAlgebra &, const LieAlgebra &) = default;

private:
  std::size_t dim_;
  std::vector<Rational> c_;
};

LieAlgebra abelian(std::size_t dim);
/// [e0, e1] = e2.
LieAlgebra heisenberg();
/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();

struct JacobiResult {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> violation;

  explicit operator bool() const noexcept { return holds; }
};

/// Checks [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all
/// i < j < k; reports the first violating triple in lexicographic order.
JacobiResult jacobi_check(const LieAlgebra &g);

/// Linear subspace of Q^n stored in reduced row echelon form, which is
/// unique for a given span.
class Subspace {
public:
  Subspace(std::size_t ambient_dim, const std::vector<Vector> &spanning);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return echelon_.rank(); }
  const std::vector<std::size_t> &pivots() const noexcept { return echelon_.pivots; }
  std::vector<Vector> basis() const;
  const Echelon &echelon() const noexcept { return echelon_; }

  bool contains(const Vector &v) const;

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.ambient_ == b.ambient_ && a.echelon_.reduced == b.echelon_.reduced;
  }

private:
  std::size_t ambient_;
  Echelon echelon_;
};

bool ideal_check(const LieAlgebra &g, const Subspace &h);

struct QuotientAlgebra {
  LieAlgebra parent;
  Subspace ideal;
  /// Standard coordinates of the parent spanning the chosen complement.
  std::vector<std::size_t> complement;
  /// Induced structure constants in the complement basis.
  LieAlgebra algebra;
};

/// Complement: the non-pivot coordinates of the ideal's echelon form. The
/// bracket of two complement vectors is projected along the ideal.
/// Throws NotAnIdeal.
QuotientAlgebra quotient(const LieAlgebra &g, const Subspace &h);

/// Chevalley-Eilenberg complex with trivial coefficients in the
/// lexicographic monomial bases,
///   (d a)(Y_0..Y_k) = sum_{i<j} (-1)^{i+j} a([Y_i,Y_j], Y_0..^i..^j..Y_k).
CochainComplex ce_complex(const LieAlgebra &g);
inline CochainComplex ce_complex(const QuotientAlgebra &q) { return ce_complex(q.algebra); }

/// Transports structure constants along a permutation of the basis:
/// new e_a = old e_{perm[a]}.
LieAlgebra permute_basis(const LieAlgebra &g, const std::vector<std::size_t> &perm);

} // namespace quotcoh
