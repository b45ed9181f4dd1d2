#include "quotcoh/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace quotcoh::exterior {

MultiIndex::MultiIndex(std::initializer_list<std::size_t> indices)
    : MultiIndex(std::vector<std::size_t>(indices)) {}

MultiIndex::MultiIndex(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t p = 1; p < indices_.size(); ++p)
    if (indices_[p - 1] >= indices_[p])
      throw std::invalid_argument("MultiIndex: indices must be strictly increasing");
}

bool MultiIndex::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i)
    out = out * (n - k + i) / i;
  return out;
}

std::optional<Signed> wedge_insert(std::size_t i, const MultiIndex &m) {
  if (m.contains(i))
    return std::nullopt;
  std::vector<std::size_t> out = m.indices();
  auto pos = std::lower_bound(out.begin(), out.end(), i);
  const auto below = static_cast<std::size_t>(pos - out.begin());
  out.insert(pos, i);
  return Signed{below % 2 == 0 ? 1 : -1, MultiIndex(std::move(out))};
}

std::optional<Signed> remove_pair(const MultiIndex &m, std::size_t i, std::size_t j) {
  if (i == j || !m.contains(i) || !m.contains(j))
    return std::nullopt;
  const auto &idx = m.indices();
  auto position = [&](std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), v) - idx.begin());
  };
  const std::size_t pi = position(i);
  std::size_t pj = position(j);
  // Moving i to the front shifts everything before it by one.
  if (pj < pi)
    ++pj;
  const std::size_t transpositions = pi + (pj - 1);

  std::vector<std::size_t> rest;
  rest.reserve(idx.size() - 2);
  for (auto v : idx)
    if (v != i && v != j)
      rest.push_back(v);
  return Signed{transpositions % 2 == 0 ? 1 : -1, MultiIndex(std::move(rest))};
}

std::vector<MultiIndex> enumerate_basis(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (k > n)
    return out;
  out.reserve(binomial(n, k));
  std::vector<std::size_t> cur(k);
  for (std::size_t p = 0; p < k; ++p)
    cur[p] = p;
  while (true) {
    out.emplace_back(cur);
    // Advance the rightmost position that still has room.
    std::size_t p = k;
    while (p > 0 && cur[p - 1] == n - k + (p - 1))
      --p;
    if (p == 0)
      break;
    ++cur[p - 1];
    for (std::size_t q = p; q < k; ++q)
      cur[q] = cur[q - 1] + 1;
  }
  return out;
}

std::size_t rank_of(const MultiIndex &m, std::size_t n) {
  const std::size_t k = m.degree();
  std::size_t r = 0;
  std::size_t next = 0;
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t v = next; v < m[p]; ++v)
      r += binomial(n - 1 - v, k - 1 - p);
    next = m[p] + 1;
  }
  return r;
}

MultiIndex unrank(std::size_t r, std::size_t k, std::size_t n) {
  if (r >= binomial(n, k))
    throw std::out_of_range("unrank: rank out of range");
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t v = 0;
  for (std::size_t p = 0; p < k; ++p) {
    while (true) {
      std::size_t block = binomial(n - 1 - v, k - 1 - p);
      if (r < block)
        break;
      r -= block;
      ++v;
    }
    out.push_back(v);
    ++v;
  }
  return MultiIndex(std::move(out));
}

std::string monomial_name(const MultiIndex &m, const std::vector<std::string> &names) {
  if (m.degree() == 0)
    return "1";
  std::string out;
  for (std::size_t p = 0; p < m.degree(); ++p) {
    if (p > 0)
      out += "∧";
    out += names.at(m[p]);
  }
  return out;
}

} // namespace quotcoh::exterior
