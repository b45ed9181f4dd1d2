#include "quotcoh/lie.hpp"

#include <stdexcept>
#include <string>

#include "quotcoh/errors.hpp"
#include "quotcoh/exterior.hpp"

namespace quotcoh {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

void LieAlgebra::set_structure(std::size_t i, std::size_t j, std::size_t k, const Rational &value) {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw std::invalid_argument("structure constant index out of range");
  if (i == j) {
    if (!value.is_zero())
      throw std::invalid_argument("antisymmetry forces c(i,i,k) = 0");
    return;
  }
  c_[(i * dim_ + j) * dim_ + k] = value;
  c_[(j * dim_ + i) * dim_ + k] = -value;
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    out[k] = structure(i, j, k);
  return out;
}

Vector LieAlgebra::bracket(const Vector &x, const Vector &y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero())
        continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!structure(i, j, k).is_zero())
          out[k] += w * structure(i, j, k);
    }
  }
  return out;
}

LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra heisenberg() {
  LieAlgebra g(3);
  g.set_structure(0, 1, 2, 1);
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g(3);
  g.set_structure(0, 1, 1, 2);
  g.set_structure(0, 2, 2, -2);
  g.set_structure(1, 2, 0, 1);
  return g;
}

JacobiResult jacobi_check(const LieAlgebra &g) {
  const std::size_t n = g.dim();
  auto unit = [n](std::size_t i) {
    Vector e(n);
    e[i] = 1;
    return e;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = g.bracket(g.bracket(i, j), unit(k));
        const Vector t = g.bracket(g.bracket(j, k), unit(i));
        const Vector u = g.bracket(g.bracket(k, i), unit(j));
        for (std::size_t l = 0; l < n; ++l) {
          if (!(s[l] + t[l] + u[l]).is_zero())
            return {false, std::array<std::size_t, 3>{i, j, k}};
        }
      }
  return {};
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector> &spanning)
    : ambient_(ambient_dim), echelon_(row_echelon(Matrix::from_rows(spanning, ambient_dim))) {}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < echelon_.reduced.rows(); ++i)
    out.push_back(echelon_.reduced.row_vector(i));
  return out;
}

bool Subspace::contains(const Vector &v) const {
  for (const auto &x : reduce(echelon_, v))
    if (!x.is_zero())
      return false;
  return true;
}

bool ideal_check(const LieAlgebra &g, const Subspace &h) {
  if (h.ambient_dim() != g.dim())
    throw std::invalid_argument("ideal_check: ambient dimension mismatch");
  const auto basis = h.basis();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vector e(g.dim());
    e[i] = 1;
    for (const auto &v : basis)
      if (!h.contains(g.bracket(e, v)))
        return false;
  }
  return true;
}

QuotientAlgebra quotient(const LieAlgebra &g, const Subspace &h) {
  if (!ideal_check(g, h))
    throw NotAnIdeal("the subspace is not closed under brackets with the algebra");

  std::vector<bool> pivot(g.dim(), false);
  for (auto p : h.pivots())
    pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!pivot[i])
      complement.push_back(i);

  LieAlgebra induced(complement.size());
  for (std::size_t a = 0; a < complement.size(); ++a)
    for (std::size_t b = a + 1; b < complement.size(); ++b) {
      // Reducing against the echelon rows clears the pivot coordinates, leaving
      // the complement coordinates of the class of [x, y].
      const Vector projected = reduce(h.echelon(), g.bracket(complement[a], complement[b]));
      for (std::size_t c = 0; c < complement.size(); ++c)
        induced.set_structure(a, b, c, projected[complement[c]]);
    }
  return {g, h, std::move(complement), std::move(induced)};
}

CochainComplex ce_complex(const LieAlgebra &g) {
  using namespace exterior;
  const std::size_t n = g.dim();
  CochainComplex out;
  for (std::size_t k = 0; k <= n; ++k)
    out.dims.push_back(binomial(n, k));

  for (std::size_t k = 0; k < n; ++k) {
    Matrix d(out.dims[k + 1], out.dims[k]);
    if (k > 0) {
      const auto targets = enumerate_basis(n, k + 1);
      for (std::size_t row = 0; row < targets.size(); ++row) {
        const MultiIndex &J = targets[row];
        for (std::size_t a = 0; a < J.degree(); ++a)
          for (std::size_t b = a + 1; b < J.degree(); ++b) {
            // (-1)^{a+b} is minus the sign of moving Y_a, Y_b to the front.
            const auto rest = remove_pair(J, J[a], J[b]);
            for (std::size_t l = 0; l < n; ++l) {
              const Rational &c = g.structure(J[a], J[b], l);
              if (c.is_zero())
                continue;
              const auto source = wedge_insert(l, rest->index);
              if (!source)
                continue;
              const int sign = -rest->sign * source->sign;
              d(row, rank_of(source->index, n)) += sign > 0 ? c : -c;
            }
          }
      }
    }
    out.d.push_back(std::move(d));
  }
  return out;
}

LieAlgebra permute_basis(const LieAlgebra &g, const std::vector<std::size_t> &perm) {
  const std::size_t n = g.dim();
  if (perm.size() != n)
    throw std::invalid_argument("permute_basis: permutation length mismatch");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (perm[a] >= n || inverse[perm[a]] != n)
      throw std::invalid_argument("permute_basis: not a permutation");
    inverse[perm[a]] = a;
  }
  LieAlgebra out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        out.set_structure(a, b, c, g.structure(perm[a], perm[b], perm[c]));
  return out;
}

} // namespace quotcoh
