#include "lrcone/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace lrcone::poly {

namespace {

struct Tableau {
  std::vector<QVec> rows;  // last entry is the right-hand side
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int r, int col) {
    Q p = rows[r][col];
    for (Q& v : rows[r]) v /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      Q f = rows[i][col];
      for (int j = 0; j <= ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  // Maximizes c over the current basis; false when unbounded.
  bool maximize(const QVec& c) {
    for (;;) {
      int enter = -1;
      std::vector<bool> in_basis(ncols, false);
      for (int b : basis) in_basis[b] = true;
      for (int j = 0; j < ncols && enter < 0; ++j) {
        if (in_basis[j]) continue;
        Q d = c[j];
        for (size_t i = 0; i < rows.size(); ++i)
          if (rows[i][j] != 0) d -= c[basis[i]] * rows[i][j];
        if (d > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Q best;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Q ratio = rows[i][ncols] / rows[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Q value(const QVec& c) const {
    Q v = 0;
    for (size_t i = 0; i < rows.size(); ++i) v += c[basis[i]] * rows[i][ncols];
    return v;
  }
};

int popcount(const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

Z zdot(const ZVec& a, const ZVec& b) {
  Z s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// True when every coordinate is bounded below by one of the rows, so the
// variables may be taken nonnegative.
bool has_unit_rows(const std::vector<QVec>& rows, int n) {
  std::vector<bool> seen(n, false);
  for (const QVec& r : rows) {
    int hit = -1;
    bool unit = true;
    for (int j = 0; j < n && unit; ++j) {
      if (r[j] == 0) continue;
      if (r[j] > 0 && hit < 0) hit = j;
      else unit = false;
    }
    if (unit && hit >= 0) seen[hit] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

QVec to_qvec(const ZVec& v) {
  QVec out;
  for (const Z& z : v) out.push_back(Q(z));
  return out;
}

ZVec to_zvec(const IVec& v) {
  ZVec out;
  for (Int x : v) out.push_back(Z(static_cast<long>(x)));
  return out;
}

LpResult solve(const LinearProgram& lp) {
  int n = lp.nvars;
  int g = static_cast<int>(lp.ge_rows.size());
  int e = static_cast<int>(lp.eq_rows.size());
  int m = g + e;
  int split = lp.nonnegative ? n : 2 * n;
  int base = split + g;
  // Rows a.x >= b with b <= 0 start with their slack in the basis; the
  // others need an artificial column.
  std::vector<int> art_row;
  for (int k = 0; k < m; ++k)
    if (k >= g || lp.ge_rhs[k] > 0) art_row.push_back(k);
  Tableau t;
  t.ncols = base + static_cast<int>(art_row.size());
  int next_art = base;
  for (int k = 0; k < m; ++k) {
    const QVec& a = k < g ? lp.ge_rows[k] : lp.eq_rows[k - g];
    Q b = k < g ? lp.ge_rhs[k] : lp.eq_rhs[k - g];
    if (static_cast<int>(a.size()) != n) throw InputError("LP row has the wrong length");
    QVec row(t.ncols + 1, Q(0));
    for (int j = 0; j < n; ++j) {
      row[j] = a[j];
      if (!lp.nonnegative) row[n + j] = -a[j];
    }
    if (k < g) row[split + k] = -1;
    row[t.ncols] = b;
    bool needs_art = k >= g || b > 0;
    if (b < 0 || (k < g && !needs_art))
      for (Q& v : row) v = -v;
    if (needs_art) {
      row[next_art] = 1;
      t.basis.push_back(next_art++);
    } else {
      t.basis.push_back(split + k);
    }
    t.rows.push_back(row);
  }
  LpResult res;
  if (!art_row.empty()) {
    QVec c1(t.ncols, Q(0));
    for (int j = base; j < t.ncols; ++j) c1[j] = -1;
    t.maximize(c1);
    if (t.value(c1) < 0) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    for (size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < base) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < base && col < 0; ++j)
        if (t.rows[i][j] != 0) col = j;
      if (col >= 0) {
        t.pivot(static_cast<int>(i), col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<long>(i));
        t.basis.erase(t.basis.begin() + static_cast<long>(i));
      }
    }
    for (QVec& row : t.rows) {
      Q rhs = row[t.ncols];
      row.resize(base + 1);
      row[base] = rhs;
    }
    t.ncols = base;
  }
  QVec c(base, Q(0));
  for (int j = 0; j < n; ++j) {
    c[j] = lp.objective.empty() ? Q(0) : lp.objective[j];
    if (!lp.nonnegative) c[n + j] = -c[j];
  }
  if (!t.maximize(c)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  QVec y(base, Q(0));
  for (size_t i = 0; i < t.rows.size(); ++i) y[t.basis[i]] = t.rows[i][base];
  res.status = LpStatus::Optimal;
  res.x.assign(n, Q(0));
  for (int j = 0; j < n; ++j) res.x[j] = lp.nonnegative ? y[j] : y[j] - y[n + j];
  res.value = t.value(c);
  return res;
}

std::vector<ZVec> extreme_rays(const std::vector<ZVec>& rows, int n) {
  int m = static_cast<int>(rows.size());
  size_t words = (static_cast<size_t>(m) + 63) / 64;
  std::vector<int> chosen;
  QMat basis_rows;
  for (int k = 0; k < m && static_cast<int>(chosen.size()) < n; ++k) {
    QMat trial = basis_rows;
    trial.push_back(to_qvec(rows[k]));
    if (rank(trial) > static_cast<int>(basis_rows.size())) {
      basis_rows = trial;
      chosen.push_back(k);
    }
  }
  if (static_cast<int>(chosen.size()) < n) throw ConsistencyError("cone is not pointed");

  struct Ray {
    ZVec v;
    std::vector<std::uint64_t> zeros;
  };
  std::vector<Ray> rays;
  QMat inv = inverse(basis_rows);
  for (int j = 0; j < n; ++j) {
    QVec col(n);
    for (int i = 0; i < n; ++i) col[i] = inv[i][j];
    IVec p = primitive(col);
    Ray r{to_zvec(p), std::vector<std::uint64_t>(words, 0)};
    for (int i = 0; i < n; ++i)
      if (i != j) r.zeros[chosen[i] / 64] |= std::uint64_t{1} << (chosen[i] % 64);
    rays.push_back(std::move(r));
  }
  std::vector<bool> done(m, false);
  for (int k : chosen) done[k] = true;
  for (int k = 0; k < m; ++k) {
    if (done[k]) continue;
    done[k] = true;
    std::vector<Z> val(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) val[r] = zdot(rows[k], rays[r].v);
    std::vector<Ray> next;
    std::vector<size_t> pos, negs;
    for (size_t r = 0; r < rays.size(); ++r) {
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) negs.push_back(r);
      if (val[r] >= 0) {
        Ray copy = rays[r];
        if (val[r] == 0) copy.zeros[k / 64] |= std::uint64_t{1} << (k % 64);
        next.push_back(std::move(copy));
      }
    }
    for (size_t p : pos)
      for (size_t q : negs) {
        std::vector<std::uint64_t> common(words);
        for (size_t w = 0; w < words; ++w) common[w] = rays[p].zeros[w] & rays[q].zeros[w];
        if (popcount(common) < n - 2) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && subset_of(common, rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        ZVec v(n);
        for (int i = 0; i < n; ++i) v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
        common[k / 64] |= std::uint64_t{1} << (k % 64);
        next.push_back({primitive(v), common});
      }
    rays = std::move(next);
  }
  std::vector<ZVec> out;
  for (auto& r : rays) out.push_back(r.v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ZVec> hull_facets(const std::vector<ZVec>& gens, int n) { return extreme_rays(gens, n); }

FaceInfo face_of(const std::vector<QVec>& ineqs, const std::vector<QVec>& equalities, int n) {
  int m = static_cast<int>(ineqs.size());
  std::vector<bool> slack(m, false), forced(m, false);
  FaceInfo info;
  info.interior.assign(n, Q(0));
  bool nonneg = has_unit_rows(ineqs, n);
  for (int k = 0; k < m; ++k) {
    if (slack[k]) continue;
    LinearProgram lp;
    lp.nonnegative = nonneg;
    lp.nvars = n;
    lp.ge_rows = ineqs;
    lp.ge_rhs.assign(m, Q(0));
    QVec cap = ineqs[k];
    for (Q& v : cap) v = -v;
    lp.ge_rows.push_back(cap);
    lp.ge_rhs.push_back(Q(-1));
    lp.eq_rows = equalities;
    lp.eq_rhs.assign(equalities.size(), Q(0));
    lp.objective = ineqs[k];
    LpResult res = solve(lp);
    if (res.status != LpStatus::Optimal) throw ConsistencyError("face LP did not reach an optimum");
    if (res.value > 0) {
      for (int j = 0; j < n; ++j) info.interior[j] += res.x[j];
      for (int j = 0; j < m; ++j)
        if (dot(ineqs[j], res.x) > 0) slack[j] = true;
    } else {
      forced[k] = true;
    }
  }
  QMat span = equalities;
  for (int k = 0; k < m; ++k)
    if (forced[k]) {
      info.tight.push_back(k);
      span.push_back(ineqs[k]);
    }
  info.dimension = n - (span.empty() ? 0 : rank(span));
  return info;
}

Certificate irredundancy_certificate(const std::vector<QVec>& ineqs, int k, int n) {
  int m = static_cast<int>(ineqs.size());
  LinearProgram lp;
  // with every coordinate bounded below by a row other than k, x >= 0 holds
  // on the feasible set, and t >= 0 loses nothing since t = 0 is feasible
  std::vector<QVec> others;
  for (int j = 0; j < m; ++j)
    if (j != k) others.push_back(ineqs[j]);
  lp.nonnegative = has_unit_rows(others, n);
  lp.nvars = n + 1;
  for (int j = 0; j < m; ++j) {
    if (j == k) continue;
    QVec row = ineqs[j];
    row.push_back(Q(-1));
    lp.ge_rows.push_back(row);
    lp.ge_rhs.push_back(Q(0));
  }
  QVec cap(n + 1, Q(0));
  cap[n] = -1;
  lp.ge_rows.push_back(cap);
  lp.ge_rhs.push_back(Q(-1));
  QVec eq = ineqs[k];
  eq.push_back(Q(0));
  lp.eq_rows.push_back(eq);
  lp.eq_rhs.push_back(Q(0));
  lp.objective.assign(n + 1, Q(0));
  lp.objective[n] = 1;
  LpResult res = solve(lp);
  Certificate cert;
  if (res.status != LpStatus::Optimal || res.value <= 0) return cert;
  QVec x(res.x.begin(), res.x.begin() + n);
  const QVec& d = ineqs[k];
  Q step = 1;
  bool have = false;
  for (int j = 0; j < m; ++j) {
    if (j == k) continue;
    Q rate = dot(ineqs[j], d);
    if (rate <= 0) continue;
    Q limit = dot(ineqs[j], x) / rate;
    if (!have || limit < step) step = limit;
    have = true;
  }
  step /= 2;
  QVec v(n);
  for (int j = 0; j < n; ++j) v[j] = x[j] - step * d[j];
  cert.irredundant = true;
  cert.witness = primitive(x);
  cert.violator = primitive(v);
  return cert;
}

std::vector<FaceInfo> faces_of_codim(const std::vector<QVec>& ineqs, int n, int codim) {
  FaceInfo whole = face_of(ineqs, {}, n);
  if (whole.dimension != n) throw ConsistencyError("cone is not full-dimensional");
  std::vector<FaceInfo> level{whole};
  for (int c = 1; c <= codim; ++c) {
    std::vector<FaceInfo> next;
    std::set<std::vector<int>> tried, found;
    for (const FaceInfo& f : level) {
      std::set<int> in_face(f.tight.begin(), f.tight.end());
      for (int k = 0; k < static_cast<int>(ineqs.size()); ++k) {
        if (in_face.count(k)) continue;
        std::vector<int> cut = f.tight;
        cut.push_back(k);
        std::sort(cut.begin(), cut.end());
        if (!tried.insert(cut).second) continue;
        std::vector<QVec> eqs;
        for (int j : cut) eqs.push_back(ineqs[j]);
        FaceInfo g = face_of(ineqs, eqs, n);
        if (g.dimension != n - c || !found.insert(g.tight).second) continue;
        next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const FaceInfo& a, const FaceInfo& b) { return a.tight < b.tight; });
  return level;
}

}  // namespace lrcone::poly
