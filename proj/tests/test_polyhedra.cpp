#include <gtest/gtest.h>

#include <set>

#include "lrcone/polyhedra.hpp"
#include "support.hpp"

using namespace lrcone;
using namespace lrcone::poly;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Q(x));
  return v;
}

ZVec zv(const IVec& v) { return to_zvec(v); }

Q eval(const QVec& a, const IVec& x) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Q(static_cast<long>(x[i]));
  return s;
}

TEST(Polyhedra, LinearProgramStatuses) {
  LinearProgram lp;
  lp.nvars = 2;
  lp.ge_rows = {qv({-1, 0}), qv({0, -1}), qv({1, 0}), qv({0, 1})};
  lp.ge_rhs = {Q(-3), Q(-2), Q(0), Q(0)};
  lp.objective = qv({1, 1});
  auto r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Q(5));

  lp.eq_rows = {qv({1, -1})};
  lp.eq_rhs = {Q(0)};
  r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Q(4));

  lp.ge_rows.push_back(qv({1, 1}));
  lp.ge_rhs.push_back(Q(10));
  EXPECT_EQ(solve(lp).status, LpStatus::Infeasible);

  LinearProgram open;
  open.nvars = 1;
  open.ge_rows = {qv({1})};
  open.ge_rhs = {Q(-1)};
  open.objective = qv({1});
  EXPECT_EQ(solve(open).status, LpStatus::Unbounded);
  open.objective = qv({-1});
  auto low = solve(open);
  ASSERT_EQ(low.status, LpStatus::Optimal);
  EXPECT_EQ(low.value, Q(1));
}

TEST(Polyhedra, FractionalOptimum) {
  LinearProgram lp;
  lp.nvars = 2;
  lp.ge_rows = {qv({-2, -1}), qv({-1, -3})};
  lp.ge_rhs = {Q(-4), Q(-6)};
  lp.objective = qv({1, 1});
  lp.nonnegative = true;
  auto r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Q(14, 5));
}

TEST(Polyhedra, OrthantRaysAndFaces) {
  std::vector<ZVec> rows = {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})};
  auto rays = extreme_rays(rows, 3);
  EXPECT_EQ(std::set<ZVec>(rays.begin(), rays.end()), std::set<ZVec>(rows.begin(), rows.end()));
  std::vector<QVec> q;
  for (const auto& r : rows) q.push_back(to_qvec(r));
  EXPECT_EQ(faces_of_codim(q, 3, 1).size(), 3u);
  EXPECT_EQ(faces_of_codim(q, 3, 2).size(), 3u);
  EXPECT_EQ(faces_of_codim(q, 3, 3).size(), 1u);
}

TEST(Polyhedra, TriangleCone) {
  // c_i <= c_j + c_k together with c >= 0.
  std::vector<ZVec> rows = {zv({1, 0, 0}),  zv({0, 1, 0}),  zv({0, 0, 1}),
                            zv({-1, 1, 1}), zv({1, -1, 1}), zv({1, 1, -1})};
  auto rays = extreme_rays(rows, 3);
  std::set<ZVec> expected = {zv({1, 1, 0}), zv({1, 0, 1}), zv({0, 1, 1})};
  EXPECT_EQ(std::set<ZVec>(rays.begin(), rays.end()), expected);
  auto facets = hull_facets(rays, 3);
  std::set<ZVec> expected_facets = {zv({-1, 1, 1}), zv({1, -1, 1}), zv({1, 1, -1})};
  EXPECT_EQ(std::set<ZVec>(facets.begin(), facets.end()), expected_facets);

  std::vector<QVec> q;
  for (const auto& r : rows) q.push_back(to_qvec(r));
  for (int k = 0; k < 6; ++k) {
    Certificate c = irredundancy_certificate(q, k, 3);
    EXPECT_EQ(c.irredundant, k >= 3) << k;
    if (!c.irredundant) continue;
    EXPECT_EQ(eval(q[k], c.witness), 0);
    EXPECT_LT(eval(q[k], c.violator), 0);
    for (int j = 0; j < 6; ++j) {
      if (j == k) continue;
      EXPECT_GT(eval(q[j], c.witness), 0);
      EXPECT_GE(eval(q[j], c.violator), 0);
    }
  }

  FaceInfo f = face_of(q, {qv({-1, 1, 1})}, 3);
  EXPECT_EQ(f.dimension, 2);
  EXPECT_EQ(f.tight, (std::vector<int>{3}));
}

TEST(Polyhedra, RandomConesRoundTrip) {
  lrtest::Gen gen(21);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(gen.integer(2, 4));
    std::vector<ZVec> gens;
    // Generators in the open positive orthant keep the cone pointed.
    for (int k = 0; k < n + 4; ++k) gens.push_back(zv(gen.vec(n, 1, 6)));
    for (int i = 0; i < n; ++i) {
      IVec e(n, 1);
      e[i] = 7;
      gens.push_back(zv(e));
    }
    auto facets = hull_facets(gens, n);
    for (const auto& f : facets)
      for (const auto& g : gens) {
        Z s = 0;
        for (int i = 0; i < n; ++i) s += f[i] * g[i];
        EXPECT_GE(s, 0);
      }
    auto rays = extreme_rays(facets, n);
    std::set<ZVec> generators;
    for (auto g : gens) generators.insert(primitive(g));
    for (const auto& r : rays) EXPECT_TRUE(generators.count(r));
    auto back = hull_facets(rays, n);
    EXPECT_EQ(std::set<ZVec>(back.begin(), back.end()), std::set<ZVec>(facets.begin(), facets.end()));
    std::vector<QVec> q;
    for (const auto& f : facets) q.push_back(to_qvec(f));
    for (int k = 0; k < static_cast<int>(q.size()); ++k) EXPECT_TRUE(irredundancy_certificate(q, k, n).irredundant);
    EXPECT_EQ(faces_of_codim(q, n, 1).size(), facets.size());
    EXPECT_EQ(faces_of_codim(q, n, n - 1).size(), rays.size());
  }
}

TEST(Polyhedra, RankDeficientRowsRejected) {
  EXPECT_THROW(extreme_rays({zv({1, 0, 0}), zv({0, 1, 0})}, 3), ConsistencyError);
}

}  // namespace
