#pragma once

// Independent reference computations used only by the tests. None of these
// go through the Bareiss elimination or the exterior sign helpers they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "quotcoh/lie.hpp"
#include "quotcoh/matrix.hpp"

namespace oracle {

using quotcoh::LieAlgebra;
using quotcoh::Matrix;
using quotcoh::Rational;
using quotcoh::Vector;

/// Textbook Gauss-Jordan over Q with rational division, pivoting on the
/// last nonzero row of each column.
inline std::size_t naive_rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = a.rows();
    for (std::size_t i = a.rows(); i-- > r;)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p == a.rows())
      continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      std::swap(a(p, j), a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero())
        continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Leibniz expansion.
inline Rational determinant(const std::vector<std::vector<Rational>> &m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k)
      continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i))
        s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest s <= 4 with a nonzero s x s minor. Only meaningful when the true
/// rank is at most 4.
inline std::size_t minor_rank(const Matrix &a) {
  std::size_t best = 0;
  const std::size_t limit = std::min<std::size_t>({a.rows(), a.cols(), 4});
  for (std::size_t s = 1; s <= limit; ++s) {
    bool found = false;
    for (const auto &rows : subsets(a.rows(), s)) {
      for (const auto &cols : subsets(a.cols(), s)) {
        std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j)
            m[i][j] = a(rows[i], cols[j]);
        if (!determinant(m).is_zero()) {
          found = true;
          break;
        }
      }
      if (found)
        break;
    }
    if (!found)
      break;
    best = s;
  }
  return best;
}

/// e^I(v_1, ..., v_k) = det[v_r(I_s)].
inline Rational evaluate_covector(const std::vector<std::size_t> &I, const std::vector<Vector> &args) {
  const std::size_t k = I.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      m[r][s] = args[r][I[s]];
  return k == 0 ? Rational(1) : determinant(m);
}

/// CE differential d_k evaluated straight from the defining formula on basis
/// vectors, with bases enumerated by bitmask and sorted lexicographically.
inline Matrix brute_ce_matrix(const LieAlgebra &g, std::size_t k) {
  const std::size_t n = g.dim();
  const auto sources = subsets(n, k);
  const auto targets = subsets(n, k + 1);
  Matrix d(targets.size(), sources.size());
  auto unit = [n](std::size_t i) {
    Vector e(n);
    e[i] = 1;
    return e;
  };
  for (std::size_t row = 0; row < targets.size(); ++row) {
    std::vector<Vector> Y;
    for (auto j : targets[row])
      Y.push_back(unit(j));
    for (std::size_t col = 0; col < sources.size(); ++col) {
      Rational total = 0;
      for (std::size_t a = 0; a <= k; ++a)
        for (std::size_t b = a + 1; b <= k; ++b) {
          std::vector<Vector> args{g.bracket(Y[a], Y[b])};
          for (std::size_t c = 0; c <= k; ++c)
            if (c != a && c != b)
              args.push_back(Y[c]);
          Rational v = evaluate_covector(sources[col], args);
          total += (a + b) % 2 == 0 ? v : -v;
        }
      d(row, col) = total;
    }
  }
  return d;
}

/// Betti numbers of the CE complex using brute_ce_matrix and naive_rank.
inline std::vector<std::size_t> brute_ce_betti(const LieAlgebra &g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < n; ++k)
    ranks.push_back(naive_rank(brute_ce_matrix(g, k)));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t dim = subsets(n, k).size();
    std::size_t out_rank = k < n ? ranks[k] : 0;
    std::size_t in_rank = k > 0 ? ranks[k - 1] : 0;
    out.push_back(dim - out_rank - in_rank);
  }
  return out;
}

inline Matrix random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols, int spread = 3,
                            double zero_bias = 0.3) {
  std::uniform_int_distribution<int> num(-spread, spread);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution zero(zero_bias);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = zero(rng) ? Rational(0) : Rational(num(rng), den(rng));
  return m;
}

/// Random rank-deficient matrix: product of two thin random factors.
inline Matrix random_low_rank(std::mt19937 &rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  using quotcoh::operator*;
  return random_matrix(rng, rows, inner, 3, 0.1) * random_matrix(rng, inner, cols, 3, 0.1);
}

} // namespace oracle
