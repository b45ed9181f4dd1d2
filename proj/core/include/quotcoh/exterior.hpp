#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

// Basis combinatorics of the exterior algebra of an n-dimensional space.
// A basis monomial e_{i1} ^ ... ^ e_{ik} with i1 < ... < ik is positively
// oriented; every sign below is a transposition count against that order.
namespace quotcoh::exterior {

class MultiIndex {
public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<std::size_t> indices);
  /// Throws std::invalid_argument unless strictly increasing.
  explicit MultiIndex(std::vector<std::size_t> indices);

  const std::vector<std::size_t> &indices() const noexcept { return indices_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  bool contains(std::size_t i) const;
  std::size_t operator[](std::size_t pos) const { return indices_[pos]; }

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
  friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;

private:
  std::vector<std::size_t> indices_;
};

struct Signed {
  int sign;
  MultiIndex index;

  friend bool operator==(const Signed &, const Signed &) = default;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// e_i ^ e_m. Empty when i is already in m.
std::optional<Signed> wedge_insert(std::size_t i, const MultiIndex &m);

/// Removes i and j after moving them to the front of m, i first. Empty
/// unless both occur in m.
std::optional<Signed> remove_pair(const MultiIndex &m, std::size_t i, std::size_t j);

/// All degree-k multi-indices over [0, n) in lexicographic order; empty for k > n.
std::vector<MultiIndex> enumerate_basis(std::size_t n, std::size_t k);

/// Position of m in enumerate_basis(n, m.degree()).
std::size_t rank_of(const MultiIndex &m, std::size_t n);
MultiIndex unrank(std::size_t r, std::size_t k, std::size_t n);

/// "1" for the empty monomial, otherwise names joined by the wedge sign,
/// e.g. "dy∧dz".
std::string monomial_name(const MultiIndex &m, const std::vector<std::string> &names);

} // namespace quotcoh::exterior
