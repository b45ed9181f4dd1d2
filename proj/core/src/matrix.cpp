#include "quotcoh/matrix.hpp"

#include <algorithm>
#include <utility>

namespace quotcoh {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Each row scaled by the lcm of its denominators; row spaces are unchanged.
IntMatrix clear_denominators(const Matrix &m) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const auto &x : m.row(i))
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class &q = m(i, j).raw();
      out[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

// Fraction-free forward elimination. Every division by the previous pivot is
// exact (Sylvester's identity), so entries stay integral minors of the input.
std::vector<std::size_t> bareiss_forward(IntMatrix &a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      std::swap(a[p], a[r]);
    const mpz_class &pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = pivot * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Echelon row_echelon(const Matrix &m) {
  IntMatrix a = clear_denominators(m);
  std::vector<std::size_t> pivots = bareiss_forward(a, m.cols());
  const std::size_t r = pivots.size();

  Matrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class &lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j)
      reduced(i, j) = Rational(a[i][j], lead);
  }
  // Back substitution to clear entries above each pivot.
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t above = 0; above < i; ++above) {
      Rational factor = reduced(above, pc);
      if (factor.is_zero())
        continue;
      for (std::size_t j = pc; j < m.cols(); ++j)
        reduced(above, j) -= factor * reduced(i, j);
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix &m) {
  IntMatrix a = clear_denominators(m);
  return bareiss_forward(a, m.cols()).size();
}

std::vector<Vector> nullspace_basis(const Matrix &m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix transpose(const Matrix &m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      t(j, i) = m(i, j);
  return t;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational &x = a(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator*(const Rational &s, const Matrix &m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) *= s;
  return out;
}

Vector operator*(const Matrix &m, const Vector &v) {
  if (m.cols() != v.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero())
        out[i] += m(i, j) * v[j];
  return out;
}

bool is_zero(const Matrix &m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto &x : m.row(i))
      if (!x.is_zero())
        return false;
  return true;
}

Vector reduce(const Echelon &e, Vector v) {
  if (v.size() != e.reduced.cols())
    throw std::invalid_argument("reduce: dimension mismatch");
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    Rational factor = v[e.pivots[i]];
    if (factor.is_zero())
      continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] -= factor * e.reduced(i, j);
  }
  return v;
}

Matrix specialize(const ExtMatrix &m, const Rational &alpha) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).evaluate_at(alpha);
  return out;
}

namespace {

bool has_irrational_part(const ExtMatrix &m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto &x : m.row(i))
      if (!x.is_rational())
        return true;
  return false;
}

std::pair<std::size_t, Rational> best_specialization(const ExtMatrix &m) {
  const std::size_t bound = std::min(m.rows(), m.cols());
  std::size_t best = 0;
  Rational at = 0;
  const std::size_t points = has_irrational_part(m) ? bound + 1 : 1;
  for (std::size_t t = 0; t < points; ++t) {
    Rational alpha(static_cast<long>(t));
    std::size_t r = rank(specialize(m, alpha));
    if (r > best) {
      best = r;
      at = alpha;
    }
    if (best == bound)
      break;
  }
  return {best, at};
}

} // namespace

std::size_t generic_rank(const ExtMatrix &m) { return best_specialization(m).first; }

Rational generic_specialization_point(const ExtMatrix &m) { return best_specialization(m).second; }

std::vector<std::size_t> generic_pivot_columns(const ExtMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t current = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    ExtMatrix leading(m.rows(), c + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j <= c; ++j)
        leading(i, j) = m(i, j);
    std::size_t r = generic_rank(leading);
    if (r > current) {
      pivots.push_back(c);
      current = r;
    }
  }
  return pivots;
}

} // namespace quotcoh
