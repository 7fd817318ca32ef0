#include "lrcone/torusgit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lrcone/polyhedra.hpp"

namespace lrcone {

namespace {

Q inner(const QMat& g, const QVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (g[i][j] != 0) s += a[i] * g[i][j] * b[j];
  return s;
}

QVec qsub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int i = start; i <= n - (k - pos); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

int affine_dimension(const std::vector<QVec>& pts) {
  QMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(qsub(pts[i], pts[0]));
  return diffs.empty() ? 0 : rank(diffs);
}

std::vector<QVec> points(const WeightedSupport& x) {
  std::vector<QVec> out;
  for (const Weight& w : x.support()) out.push_back(to_q(w.coords));
  return out;
}

// Projection of 0 onto the affine span of affinely independent points, as
// barycentric coordinates (weights of points 1..d; point 0 gets the rest) and the point itself.
std::pair<QVec, QVec> affine_projection(const QMat& g, const std::vector<QVec>& chosen) {
  int d = static_cast<int>(chosen.size()) - 1;
  QVec t(d);
  if (d > 0) {
    QMat lhs(d, QVec(d));
    QVec rhs(d);
    for (int a = 0; a < d; ++a) {
      QVec ea = qsub(chosen[a + 1], chosen[0]);
      for (int b = 0; b < d; ++b) lhs[a][b] = inner(g, qsub(chosen[b + 1], chosen[0]), ea);
      rhs[a] = -inner(g, chosen[0], ea);
    }
    t = mat_vec(inverse(lhs), rhs);
  }
  QVec p = chosen[0];
  for (int a = 0; a < d; ++a)
    for (size_t j = 0; j < p.size(); ++j) p[j] += t[a] * (chosen[a + 1][j] - chosen[0][j]);
  return {t, p};
}

// Nearest point of the hull to 0, by projection onto affine spans of
// affinely independent subsets and the obtuse-angle optimality test.
QVec nearest_point(const WeightedSupport& x) {
  const QMat& g = x.rs().weight_form();
  std::vector<QVec> pts = points(x);
  int m = static_cast<int>(pts.size());
  int r = x.rs().rank();
  std::optional<QVec> best;
  for (int k = 1; k <= std::min(m, r + 1) && !best; ++k) {
    for_each_subset(m, k, [&](const std::vector<int>& sub) {
      if (best) return;
      std::vector<QVec> chosen;
      for (int i : sub) chosen.push_back(pts[i]);
      if (affine_dimension(chosen) != k - 1) return;
      auto [t, p] = affine_projection(g, chosen);
      Q first = 1;
      for (const Q& v : t) first -= v;
      if (first < 0) return;
      for (const Q& v : t)
        if (v < 0) return;
      for (const QVec& c : pts)
        if (inner(g, p, qsub(c, p)) < 0) return;
      best = p;
    });
  }
  if (!best) throw ConsistencyError("no nearest point of the weight polytope was found");
  return *best;
}

struct Facet {
  IVec normal;  // outward: <normal, chi> <= offset on the support
  Int offset;
};

std::vector<Facet> hull_facets(const WeightedSupport& x) {
  std::vector<QVec> pts = points(x);
  int m = static_cast<int>(pts.size());
  int r = x.rs().rank();
  std::set<IVec> seen;
  std::vector<Facet> out;
  if (affine_dimension(pts) < r) return out;
  for_each_subset(m, r, [&](const std::vector<int>& sub) {
    IMat diffs;
    for (size_t a = 1; a < sub.size(); ++a) diffs.push_back(lrcone::sub(x.support()[sub[a]].coords, x.support()[sub[0]].coords));
    if (!diffs.empty() && rank(diffs) != r - 1) return;
    IMat ker = integer_kernel(diffs, r);
    if (ker.size() != 1) return;
    IVec a = primitive(ker[0]);
    Int b = dot(a, x.support()[sub[0]].coords);
    bool above = false, below = false;
    for (const Weight& w : x.support()) {
      Int v = dot(a, w.coords);
      if (v > b) above = true;
      if (v < b) below = true;
    }
    if (above && below) return;
    if (above) {
      a = neg(a);
      b = -b;
    }
    if (seen.insert(a).second) out.push_back({a, b});
  });
  return out;
}

}  // namespace

WeightedSupport::WeightedSupport(const RootSystem& rs, std::vector<Weight> support) : rs_(&rs) {
  if (support.empty()) throw InputError("support must be nonempty");
  for (const Weight& w : support)
    if (w.coords.size() != static_cast<size_t>(rs.rank())) throw InputError("support weight has the wrong rank");
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  support_ = std::move(support);
}

WeightedSupport WeightedSupport::dilated(Int n) const {
  std::vector<Weight> out;
  for (const Weight& w : support_) out.push_back(n * w);
  return WeightedSupport(*rs_, out);
}

WeightedSupport WeightedSupport::transformed(int w) const {
  std::vector<Weight> out;
  for (const Weight& chi : support_) out.push_back(rs_->act(w, chi));
  return WeightedSupport(*rs_, out);
}

Int mu(const WeightedSupport& x, const Coweight& lambda) {
  Int best = x.rs().pair(lambda, x.support()[0]);
  for (const Weight& chi : x.support()) best = std::max(best, x.rs().pair(lambda, chi));
  return -best;
}

NumericalCriterion numerical_criterion(const WeightedSupport& x) {
  const RootSystem& rs = x.rs();
  NumericalCriterion out;
  QVec p = nearest_point(x);
  Q norm2 = inner(rs.weight_form(), p, p);
  if (norm2 > 0) {
    out.semistable = false;
    out.signed_square = norm2;
    out.nearest = p;
    return out;
  }
  out.semistable = true;
  out.signed_square = 0;
  std::vector<Facet> facets = hull_facets(x);
  bool first = true;
  Q best;
  for (const Facet& f : facets) {
    Q d2 = Q(static_cast<long>(f.offset)) * Q(static_cast<long>(f.offset)) /
           inner(rs.invariant_form(), to_q(f.normal), to_q(f.normal));
    if (first || d2 < best) best = d2;
    first = false;
  }
  if (!first) out.signed_square = -best;
  return out;
}

bool contains_origin(const WeightedSupport& x) {
  int m = static_cast<int>(x.support().size());
  int r = x.rs().rank();
  poly::LinearProgram lp;
  lp.nvars = m;
  for (int i = 0; i < m; ++i) {
    QVec row(m, Q(0));
    row[i] = 1;
    lp.ge_rows.push_back(row);
    lp.ge_rhs.push_back(Q(0));
  }
  for (int j = 0; j < r; ++j) {
    QVec row(m);
    for (int i = 0; i < m; ++i) row[i] = Q(static_cast<long>(x.support()[i].coords[j]));
    lp.eq_rows.push_back(row);
    lp.eq_rhs.push_back(Q(0));
  }
  lp.eq_rows.push_back(QVec(m, Q(1)));
  lp.eq_rhs.push_back(Q(1));
  lp.objective.assign(m, Q(0));
  return poly::solve(lp).status == poly::LpStatus::Optimal;
}

std::optional<Coweight> destabilizing_direction(const WeightedSupport& x) {
  int r = x.rs().rank();
  poly::LinearProgram lp;
  lp.nvars = r;
  for (const Weight& chi : x.support()) {
    QVec row(r);
    for (int j = 0; j < r; ++j) row[j] = -Q(static_cast<long>(chi.coords[j]));
    lp.ge_rows.push_back(row);
    lp.ge_rhs.push_back(Q(1));
  }
  lp.objective.assign(r, Q(0));
  poly::LpResult res = poly::solve(lp);
  if (res.status != poly::LpStatus::Optimal) return std::nullopt;
  return Coweight{primitive(res.x)};
}

Q normalized_mu_signed_square(const WeightedSupport& x, const Coweight& lambda) {
  Q m = Q(static_cast<long>(mu(x, lambda)));
  QVec l = to_q(lambda.coords);
  return m * abs(m) / inner(x.rs().invariant_form(), l, l);
}

std::vector<Coweight> candidate_directions(const WeightedSupport& x) {
  int r = x.rs().rank();
  std::vector<Weight> pts = x.support();
  pts.push_back(Weight{IVec(r, 0)});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::set<Coweight> out;
  auto add_both = [&](const IVec& v) {
    IVec p = primitive(v);
    out.insert(Coweight{p});
    out.insert(Coweight{neg(p)});
  };
  for_each_subset(static_cast<int>(pts.size()), std::min<int>(r, static_cast<int>(pts.size())),
                  [&](const std::vector<int>& sub) {
                    IMat diffs;
                    for (size_t a = 1; a < sub.size(); ++a) diffs.push_back(lrcone::sub(pts[sub[a]].coords, pts[sub[0]].coords));
                    IMat ker = integer_kernel(diffs, r);
                    if (ker.size() == 1) add_both(ker[0]);
                  });
  IMat diffs;
  for (size_t a = 1; a < x.support().size(); ++a)
    diffs.push_back(lrcone::sub(x.support()[a].coords, x.support()[0].coords));
  for (const IVec& v : integer_kernel(diffs, r)) add_both(v);
  // Metric normals of the affine spans of support subsets, which cover the
  // faces of a polytope that is not full-dimensional.
  const QMat& g = x.rs().weight_form();
  std::vector<QVec> supp = points(x);
  int m = static_cast<int>(supp.size());
  for (int k = 1; k <= std::min(m, r); ++k)
    for_each_subset(m, k, [&](const std::vector<int>& sub) {
      std::vector<QVec> chosen;
      for (int i : sub) chosen.push_back(supp[i]);
      if (affine_dimension(chosen) != k - 1) return;
      QVec p = affine_projection(g, chosen).second;
      QVec dir = mat_vec(g, p);
      if (std::all_of(dir.begin(), dir.end(), [](const Q& v) { return v == 0; })) return;
      add_both(primitive(dir));
    });
  return {out.begin(), out.end()};
}

std::vector<Coweight> adapted_ops(const WeightedSupport& x) {
  const RootSystem& rs = x.rs();
  NumericalCriterion nc = numerical_criterion(x);
  if (!nc.semistable) {
    QVec dir = mat_vec(rs.weight_form(), nc.nearest);
    for (Q& v : dir) v = -v;
    Coweight lambda{primitive(dir)};
    if (normalized_mu_signed_square(x, lambda) != nc.signed_square)
      throw ConsistencyError("adapted direction does not attain the numerical criterion");
    return {lambda};
  }
  std::set<Coweight> cands;
  for (const Facet& f : hull_facets(x)) cands.insert(Coweight{f.normal});
  for (const Coweight& c : candidate_directions(x)) cands.insert(c);
  std::vector<Coweight> out;
  for (const Coweight& c : cands)
    if (normalized_mu_signed_square(x, c) == nc.signed_square) out.push_back(c);
  return out;
}

std::vector<Weight> polytope_vertices(const WeightedSupport& x) {
  const auto& s = x.support();
  int m = static_cast<int>(s.size());
  int r = x.rs().rank();
  std::vector<Weight> out;
  for (int k = 0; k < m; ++k) {
    poly::LinearProgram lp;
    lp.nvars = m - 1;
    for (int i = 0; i < m - 1; ++i) {
      QVec row(m - 1, Q(0));
      row[i] = 1;
      lp.ge_rows.push_back(row);
      lp.ge_rhs.push_back(Q(0));
    }
    for (int j = 0; j < r; ++j) {
      QVec row;
      for (int i = 0; i < m; ++i)
        if (i != k) row.push_back(Q(static_cast<long>(s[i].coords[j])));
      lp.eq_rows.push_back(row);
      lp.eq_rhs.push_back(Q(static_cast<long>(s[k].coords[j])));
    }
    lp.eq_rows.push_back(QVec(m - 1, Q(1)));
    lp.eq_rhs.push_back(Q(1));
    lp.objective.assign(m - 1, Q(0));
    if (m == 1 || poly::solve(lp).status != poly::LpStatus::Optimal) out.push_back(s[k]);
  }
  return out;
}

std::vector<int> face_viewed_from_zero(const WeightedSupport& x) {
  const QMat& g = x.rs().weight_form();
  QVec p = nearest_point(x);
  Q pp = inner(g, p, p);
  if (pp == 0) throw InputError("0 lies in the weight polytope");
  std::vector<Weight> verts = polytope_vertices(x);
  std::set<Weight> vset(verts.begin(), verts.end());
  std::vector<int> out;
  for (size_t i = 0; i < x.support().size(); ++i) {
    const Weight& chi = x.support()[i];
    if (vset.count(chi) && inner(g, p, to_q(chi.coords)) == pp) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace lrcone
