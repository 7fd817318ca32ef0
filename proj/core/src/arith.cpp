#include "lrcone/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace lrcone {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int vec_gcd(const IVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

IVec primitive(const IVec& v) {
  Int g = vec_gcd(v);
  if (g <= 1) return v;
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

ZVec primitive(const ZVec& v) {
  Z g = 0;
  for (const Z& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g <= 1) return v;
  ZVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IVec primitive(const QVec& v) {
  Z l = 1;
  for (const Q& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVec z(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Q s = v[i] * l;
    z[i] = s.get_num();
  }
  z = primitive(z);
  IVec out(v.size());
  for (size_t i = 0; i < z.size(); ++i) {
    if (!z[i].fits_slong_p()) throw ConsistencyError("primitive: entry overflows int64");
    out[i] = z[i].get_si();
  }
  return out;
}

Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Q dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec to_q(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

QMat to_q(const IMat& m) {
  QMat out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_q(row));
  return out;
}

IVec to_int(const QVec& v) {
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1 || !v[i].get_num().fits_slong_p())
      throw ConsistencyError("to_int: non-integral entry " + v[i].get_str());
    out[i] = v[i].get_num().get_si();
  }
  return out;
}

IVec add(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IVec scale(Int c, const IVec& a) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

IVec neg(const IVec& a) { return scale(-1, a); }

bool is_zero(const IVec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

QVec mat_vec(const QMat& m, const QVec& v) {
  QVec out(m.size(), Q(0));
  for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

IVec mat_vec(const IMat& m, const IVec& v) {
  IVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat out(n, QVec(m, Q(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < m; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

QMat transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat out(m[0].size(), QVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

IMat transpose(const IMat& m) {
  if (m.empty()) return {};
  IMat out(m[0].size(), IVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

QMat identity_q(int n) {
  QMat out(n, QVec(n, Q(0)));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Q inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

int rank(const IMat& m) { return rank(to_q(m)); }

QMat inverse(const QMat& m) {
  int n = static_cast<int>(m.size());
  QMat aug(n, QVec(2 * n, Q(0)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw InputError("inverse: matrix not square");
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1))
    throw ConsistencyError("inverse: singular matrix");
  QMat out(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

QMat kernel(const QMat& m, int cols) {
  QMat a = m;
  std::vector<int> piv = a.empty() ? std::vector<int>{} : rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  QMat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Q(0));
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(v);
  }
  return basis;
}

IMat integer_kernel(const IMat& m, int cols) {
  IMat out;
  for (const auto& v : kernel(to_q(m), cols)) out.push_back(primitive(v));
  return out;
}

std::string to_string(const IVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Q& q) { return q.get_str(); }

}  // namespace lrcone
