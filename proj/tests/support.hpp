#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lrcone/rootsys.hpp"

// Test-side generators and brute-force oracles. Nothing here calls into the
// library beyond reading the Cartan matrix, so the oracles stay independent.
namespace lrtest {

using lrcone::Int;
using lrcone::IVec;
using lrcone::IMat;

// Deterministic generator with the handful of draws the property tests need.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  Int integer(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(eng_); }
  bool coin() { return integer(0, 1) == 1; }
  IVec vec(int n, Int lo, Int hi) {
    IVec v(n);
    for (auto& x : v) x = integer(lo, hi);
    return v;
  }
  lrcone::Weight dominant(int rank, Int hi) { return {vec(rank, 0, hi)}; }
  std::vector<lrcone::Weight> support(int rank, int size, Int lo, Int hi) {
    std::vector<lrcone::Weight> s;
    for (int i = 0; i < size; ++i) s.push_back({vec(rank, lo, hi)});
    return s;
  }
  template <class T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), eng_); }

 private:
  std::mt19937_64 eng_;
};

// Every integer vector in [0, hi]^n, in odometer order.
inline std::vector<IVec> grid(int n, Int hi) {
  std::vector<IVec> out;
  IVec c(n, 0);
  while (true) {
    out.push_back(c);
    int k = 0;
    while (k < n && ++c[k] > hi) c[k++] = 0;
    if (k == n) break;
  }
  return out;
}

// s_i on omega-coordinates, straight from the Cartan matrix.
inline IVec reflect(const IMat& cartan, int i, const IVec& nu) {
  IVec out = nu;
  for (size_t j = 0; j < nu.size(); ++j) out[j] -= nu[i] * cartan[j][i];
  return out;
}

// Orbit of a vector under the group generated by the simple reflections.
inline std::set<IVec> orbit(const IMat& cartan, const IVec& start) {
  std::set<IVec> seen{start};
  std::vector<IVec> todo{start};
  while (!todo.empty()) {
    IVec v = todo.back();
    todo.pop_back();
    for (size_t i = 0; i < cartan.size(); ++i) {
      IVec u = reflect(cartan, static_cast<int>(i), v);
      if (seen.insert(u).second) todo.push_back(u);
    }
  }
  return seen;
}

// |W| as the orbit size of rho (regular, so the action is free).
inline size_t brute_weyl_order(const IMat& cartan) { return orbit(cartan, IVec(cartan.size(), 1)).size(); }

// All roots as the union of the orbits of the simple roots.
inline std::set<IVec> brute_roots(const IMat& cartan) {
  std::set<IVec> roots;
  for (size_t j = 0; j < cartan.size(); ++j) {
    IVec alpha(cartan.size());
    for (size_t i = 0; i < cartan.size(); ++i) alpha[i] = cartan[i][j];
    auto o = orbit(cartan, alpha);
    roots.insert(o.begin(), o.end());
  }
  return roots;
}

// Clebsch-Gordan: dim (V_a (x) V_b (x) V_c)^SL2.
inline Int clebsch_gordan(Int a, Int b, Int c) {
  bool triangle = a <= b + c && b <= a + c && c <= a + b;
  return triangle && (a + b + c) % 2 == 0 ? 1 : 0;
}

using Poly = std::map<std::vector<int>, Int>;

inline void ssyt_fill(const std::vector<int>& shape, int k, std::vector<std::vector<int>>& t, int row, int col,
                      Poly& out) {
  if (row == static_cast<int>(shape.size())) {
    std::vector<int> e(k, 0);
    for (const auto& r : t)
      for (int x : r) e[x - 1]++;
    out[e] += 1;
    return;
  }
  if (col == shape[row]) {
    ssyt_fill(shape, k, t, row + 1, 0, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[row][col - 1]);
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (int x = lo; x <= k; ++x) {
    t[row][col] = x;
    ssyt_fill(shape, k, t, row, col + 1, out);
  }
}

// Schur polynomial s_shape(x_1..x_k) as a sum over semistandard tableaux.
inline Poly schur(std::vector<int> shape, int k) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  Poly out;
  if (static_cast<int>(shape.size()) > k) return out;
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(len, 0);
  ssyt_fill(shape, k, t, 0, 0, out);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Schur expansion of s_a s_b in k variables by peeling off leading monomials.
inline std::map<std::vector<int>, Int> schur_product(const std::vector<int>& a, const std::vector<int>& b, int k) {
  Poly f = multiply(schur(a, k), schur(b, k));
  std::map<std::vector<int>, Int> out;
  while (true) {
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
    if (f.empty()) break;
    auto lead = std::prev(f.end());
    std::vector<int> nu = lead->first;
    Int c = lead->second;
    out[nu] = c;
    for (const auto& [e, v] : schur(nu, k)) f[e] -= c * v;
  }
  return out;
}

// One-line notation of the permutation s_{a_1} ... s_{a_l} of {1..n}.
inline std::vector<int> one_line(const std::vector<int>& word, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (int a : word) std::swap(w[a], w[a + 1]);
  return w;
}

// Partition in the k x (n-k) box indexing the codimension class of the
// Schubert variety of Gr(k, n) whose minimal representative has this word.
inline std::vector<int> grassmannian_partition(const std::vector<int>& word, int k, int n) {
  auto w = one_line(word, n);
  std::vector<int> dim_part(k), codim(k);
  for (int i = 0; i < k; ++i) dim_part[i] = w[k - 1 - i] - (k - i);
  for (int i = 0; i < k; ++i) codim[i] = (n - k) - dim_part[k - 1 - i];
  return codim;
}

}  // namespace lrtest
