#include <gtest/gtest.h>

#include "quotcoh/exterior.hpp"

using namespace quotcoh::exterior;

TEST(WedgeInsert, Examples) {
  EXPECT_EQ(wedge_insert(0, {1, 2}), (Signed{1, {0, 1, 2}}));
  EXPECT_EQ(wedge_insert(2, {0, 1}), (Signed{1, {0, 1, 2}}));
  EXPECT_EQ(wedge_insert(1, {0, 2}), (Signed{-1, {0, 1, 2}}));
  EXPECT_FALSE(wedge_insert(1, {1, 3}).has_value());
}

TEST(WedgeInsert, DoubleWedgeVanishesAndInsertionsAnticommute) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto &m : enumerate_basis(n, k))
        for (std::size_t i = 0; i < n; ++i) {
          auto once = wedge_insert(i, m);
          if (once)
            EXPECT_FALSE(wedge_insert(i, once->index).has_value());
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
              continue;
            auto a = wedge_insert(i, m);
            auto b = wedge_insert(j, m);
            if (!a || !b)
              continue;
            auto ij = wedge_insert(i, b->index); // e_i ^ e_j ^ m
            auto ji = wedge_insert(j, a->index); // e_j ^ e_i ^ m
            ASSERT_TRUE(ij && ji);
            EXPECT_EQ(ij->index, ji->index);
            EXPECT_EQ(ij->sign * b->sign, -(ji->sign * a->sign));
          }
        }
}

TEST(RemovePair, Examples) {
  EXPECT_EQ(remove_pair({0, 1, 2}, 0, 1), (Signed{1, {2}}));
  EXPECT_EQ(remove_pair({0, 1, 2}, 0, 2), (Signed{-1, {1}}));
  EXPECT_FALSE(remove_pair({0, 2}, 0, 1).has_value());
  EXPECT_EQ(remove_pair({0, 1}, 1, 0), (Signed{-1, {}}));
}

TEST(RemovePair, InvertsDoubleInsertion) {
  // e_i ^ e_j ^ rest == sign * e_m  <=>  remove_pair(m, i, j) == (sign, rest)
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 0; k + 2 <= n; ++k)
      for (const auto &rest : enumerate_basis(n, k))
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j || rest.contains(i) || rest.contains(j))
              continue;
            auto inner = wedge_insert(j, rest);
            auto outer = wedge_insert(i, inner->index);
            auto removed = remove_pair(outer->index, i, j);
            ASSERT_TRUE(removed);
            EXPECT_EQ(removed->index, rest);
            EXPECT_EQ(removed->sign, inner->sign * outer->sign);
          }
}

TEST(EnumerateBasis, Examples) {
  EXPECT_EQ(enumerate_basis(3, 2), (std::vector<MultiIndex>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(enumerate_basis(3, 0), (std::vector<MultiIndex>{{}}));
  EXPECT_EQ(enumerate_basis(4, 4), (std::vector<MultiIndex>{{0, 1, 2, 3}}));
  EXPECT_TRUE(enumerate_basis(2, 3).empty());
}

TEST(EnumerateBasis, SizeOrderAndRanking) {
  for (std::size_t n = 0; n <= 10; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto basis = enumerate_basis(n, k);
      ASSERT_EQ(basis.size(), binomial(n, k));
      for (std::size_t r = 0; r < basis.size(); ++r) {
        if (r > 0)
          ASSERT_LT(basis[r - 1], basis[r]);
        ASSERT_EQ(rank_of(basis[r], n), r);
        ASSERT_EQ(unrank(r, k, n), basis[r]);
      }
    }
}

TEST(MultiIndex, RejectsUnsortedInput) {
  EXPECT_THROW(MultiIndex({2, 1}), std::invalid_argument);
  EXPECT_THROW(MultiIndex({1, 1}), std::invalid_argument);
  EXPECT_THROW(unrank(3, 2, 3), std::out_of_range);
}

TEST(MonomialName, Formatting) {
  const std::vector<std::string> names{"dx", "dy", "dz"};
  EXPECT_EQ(monomial_name({}, names), "1");
  EXPECT_EQ(monomial_name({1, 2}, names), "dy∧dz");
}
