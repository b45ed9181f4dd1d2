#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quotcoh/matrix.hpp"

namespace quotcoh {

/// Finite cochain complex C^0 -> C^1 -> ... -> C^top. d[k] maps degree k to
/// degree k + 1, so it is dims[k+1] x dims[k].
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
};

/// Throws std::invalid_argument when the matrix shapes do not chain.
void check_shapes(const CochainComplex &c);

/// First degree k with d[k+1] * d[k] != 0, if any.
std::optional<std::size_t> first_nonzero_square(const CochainComplex &c);

inline bool squares_to_zero(const CochainComplex &c) { return !first_nonzero_square(c).has_value(); }

struct BettiReport {
  std::vector<std::size_t> betti;
  /// ranks[k] = rank d[k]
  std::vector<std::size_t> ranks;
  /// Per degree, exactly betti[k] cocycles whose classes form a basis of H^k.
  std::vector<std::vector<Vector>> generators;
};

/// b_k = dim C^k - rank d_k - rank d_{k-1}. Generators are taken from the
/// nullspace basis of d_k in order, keeping each vector that is independent of
/// the image of d_{k-1} and the vectors kept before it.
BettiReport betti(const CochainComplex &c);

/// Ranks and Betti numbers only; generators is left empty.
BettiReport betti_numbers(const CochainComplex &c);

/// S_{k+1} (-d_k) == d_k S_k with S_k = (-1)^k id, for every k, checked as a
/// matrix identity: the degree sign twist turns -d into a cochain map to d.
bool phi_sign_check(const CochainComplex &c);

} // namespace quotcoh
