#include "quotcoh/complex.hpp"

#include <stdexcept>
#include <string>

namespace quotcoh {

void check_shapes(const CochainComplex &c) {
  if (c.dims.empty()) {
    if (!c.d.empty())
      throw std::invalid_argument("cochain complex: differentials without degrees");
    return;
  }
  if (c.d.size() != c.dims.size() - 1)
    throw std::invalid_argument("cochain complex: expected one differential per degree below the top");
  for (std::size_t k = 0; k < c.d.size(); ++k)
    if (c.d[k].rows() != c.dims[k + 1] || c.d[k].cols() != c.dims[k])
      throw std::invalid_argument("cochain complex: d_" + std::to_string(k) + " has the wrong shape");
}

std::optional<std::size_t> first_nonzero_square(const CochainComplex &c) {
  check_shapes(c);
  for (std::size_t k = 0; k + 1 < c.d.size(); ++k)
    if (!is_zero(c.d[k + 1] * c.d[k]))
      return k;
  return std::nullopt;
}

BettiReport betti_numbers(const CochainComplex &c) {
  check_shapes(c);
  BettiReport out;
  for (const auto &m : c.d)
    out.ranks.push_back(rank(m));
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const std::size_t outgoing = k < c.d.size() ? out.ranks[k] : 0;
    const std::size_t incoming = k > 0 ? out.ranks[k - 1] : 0;
    out.betti.push_back(c.dims[k] - outgoing - incoming);
  }
  return out;
}

BettiReport betti(const CochainComplex &c) {
  check_shapes(c);
  BettiReport out;
  const std::size_t degrees = c.dims.size();
  out.ranks.reserve(c.d.size());
  for (const auto &m : c.d)
    out.ranks.push_back(rank(m));

  out.betti.resize(degrees);
  out.generators.resize(degrees);
  for (std::size_t k = 0; k < degrees; ++k) {
    const std::size_t outgoing = k < c.d.size() ? out.ranks[k] : 0;
    const std::size_t incoming = k > 0 ? out.ranks[k - 1] : 0;
    out.betti[k] = c.dims[k] - outgoing - incoming;

    std::vector<Vector> cocycles;
    if (k < c.d.size()) {
      cocycles = nullspace_basis(c.d[k]);
    } else {
      for (std::size_t i = 0; i < c.dims[k]; ++i) {
        Vector e(c.dims[k]);
        e[i] = 1;
        cocycles.push_back(std::move(e));
      }
    }

    // Span of the coboundaries, grown by each kept representative.
    std::vector<Vector> span;
    if (k > 0) {
      const Matrix image = transpose(c.d[k - 1]);
      for (std::size_t i = 0; i < image.rows(); ++i)
        span.push_back(image.row_vector(i));
    }
    auto as_matrix = [&](const std::vector<Vector> &rows) {
      return Matrix::from_rows(rows, c.dims[k]);
    };
    std::size_t current = span.empty() ? 0 : rank(as_matrix(span));
    for (auto &z : cocycles) {
      if (out.generators[k].size() == out.betti[k])
        break;
      span.push_back(z);
      std::size_t grown = rank(as_matrix(span));
      if (grown > current) {
        current = grown;
        out.generators[k].push_back(z);
      } else {
        span.pop_back();
      }
    }
  }
  return out;
}

bool phi_sign_check(const CochainComplex &c) {
  check_shapes(c);
  auto twist = [](std::size_t k, std::size_t n) {
    Rational s = k % 2 == 0 ? 1 : -1;
    return s * Matrix::identity(n);
  };
  for (std::size_t k = 0; k < c.d.size(); ++k) {
    const Matrix lhs = twist(k + 1, c.dims[k + 1]) * (Rational(-1) * c.d[k]);
    const Matrix rhs = c.d[k] * twist(k, c.dims[k]);
    if (!(lhs == rhs))
      return false;
  }
  return true;
}

} // namespace quotcoh
