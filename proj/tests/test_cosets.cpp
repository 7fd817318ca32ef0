#include <gtest/gtest.h>

#include <set>

#include "lrcone/cosets.hpp"
#include "support.hpp"

using namespace lrcone;

namespace {

std::vector<std::vector<int>> all_subsets(int r) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Bruhat order as the transitive closure of w -> w t with l(w t) > l(w).
std::vector<std::vector<bool>> bruhat_by_reflections(const RootSystem& rs) {
  int n = static_cast<int>(rs.weyl_order());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) le[v][v] = true;
  // Ids are sorted by length, so processing v upwards sees all smaller elements first.
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
      int u = rs.mul(v, rs.reflection(k));
      if (rs.length(u) < rs.length(v))
        for (int x = 0; x < n; ++x)
          if (le[x][u]) le[x][v] = true;
    }
  return le;
}

TEST(Cosets, Examples) {
  RootSystem a1(CartanType::parse("A1"));
  Parabolic b1(a1, {});
  EXPECT_EQ(min_reps(b1), (std::vector<int>{0, 1}));

  RootSystem a2(CartanType::parse("A2"));
  EXPECT_EQ(Parabolic(a2, {0}).num_cosets(), 3);
  EXPECT_EQ(Parabolic(a2, {}).num_cosets(), 6);

  Parabolic p(a2, {0});
  int s2 = a2.id_of_word({1});
  EXPECT_EQ(longest_in_coset(p, s2), a2.id_of_word({1, 0}));
}

TEST(Cosets, BorelLongestIsMinimal) {
  RootSystem a2(CartanType::parse("A2"));
  Parabolic b(a2, {});
  for (int c = 0; c < b.num_cosets(); ++c) EXPECT_EQ(b.longest_rep(c), b.min_rep(c));
  for (const auto& levi : all_subsets(2)) {
    Parabolic p(a2, levi);
    EXPECT_EQ(p.longest_rep(p.identity_coset()), p.w0P());
  }
}

TEST(Cosets, BruhatExamples) {
  RootSystem a2(CartanType::parse("A2"));
  int s1 = a2.id_of_word({0}), s2 = a2.id_of_word({1}), s1s2 = a2.id_of_word({0, 1});
  EXPECT_TRUE(bruhat_leq(a2, s1, s1s2));
  EXPECT_FALSE(bruhat_leq(a2, s2, s1));
  for (int v = 0; v < static_cast<int>(a2.weyl_order()); ++v) {
    EXPECT_TRUE(bruhat_leq(a2, a2.identity(), v));
    EXPECT_TRUE(bruhat_leq(a2, v, v));
  }
}

class CosetsByType : public ::testing::TestWithParam<std::string> {};

TEST_P(CosetsByType, Factorization) {
  RootSystem rs(CartanType::parse(GetParam()));
  for (const auto& levi : all_subsets(rs.rank())) {
    Parabolic p(rs, levi);
    EXPECT_EQ(p.num_cosets() * p.subgroup().size(), rs.weyl_order());
    std::set<std::pair<int, int>> seen;
    for (int w = 0; w < static_cast<int>(rs.weyl_order()); ++w) {
      int c = p.coset_of(w);
      int wmin = p.min_rep(c);
      int u = rs.mul(rs.inverse(wmin), w);
      EXPECT_TRUE(std::count(p.subgroup().begin(), p.subgroup().end(), u));
      EXPECT_EQ(rs.length(wmin) + rs.length(u), rs.length(w));
      EXPECT_TRUE(seen.insert({c, u}).second);
    }
    std::set<int> longest;
    for (int c = 0; c < p.num_cosets(); ++c) {
      EXPECT_TRUE(longest.insert(p.longest_rep(c)).second);
      EXPECT_EQ(rs.length(p.longest_rep(c)) - rs.length(p.min_rep(c)), rs.length(p.w0P()));
      EXPECT_EQ(p.dual_coset(p.dual_coset(c)), c);
      EXPECT_EQ(p.coset_length(c) + p.coset_length(p.dual_coset(c)), p.dimension());
      if (c > 0) EXPECT_LE(p.coset_length(c - 1), p.coset_length(c));
    }
  }
}

TEST_P(CosetsByType, BruhatMatchesReflectionClosure) {
  RootSystem rs(CartanType::parse(GetParam()));
  auto brute = bruhat_by_reflections(rs);
  BruhatOrder order(rs);
  int n = static_cast<int>(rs.weyl_order());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      EXPECT_EQ(bruhat_leq(rs, u, v), static_cast<bool>(brute[u][v]));
      EXPECT_EQ(order.leq(u, v), static_cast<bool>(brute[u][v]));
    }
}

TEST_P(CosetsByType, BruhatIsGradedPartialOrder) {
  RootSystem rs(CartanType::parse(GetParam()));
  BruhatOrder order(rs);
  int n = static_cast<int>(rs.weyl_order());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u != v && order.leq(u, v)) {
        EXPECT_FALSE(order.leq(v, u));
        EXPECT_LT(rs.length(u), rs.length(v));
      }
      if (!order.leq(u, v)) continue;
      for (int x = 0; x < n; ++x)
        if (order.leq(v, x)) EXPECT_TRUE(order.leq(u, x));
    }
}

INSTANTIATE_TEST_SUITE_P(RankAtMostThree, CosetsByType,
                         ::testing::Values("A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3"));

}  // namespace
