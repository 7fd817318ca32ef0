#include "lrcone/cosets.hpp"

#include <algorithm>

namespace lrcone {

namespace {

std::vector<bool> lower_interval(const RootSystem& rs, int v) {
  std::vector<bool> in(rs.weyl_order(), false);
  std::vector<int> members{rs.identity()};
  in[rs.identity()] = true;
  for (int a : rs.element(v).reduced_word) {
    size_t n = members.size();
    for (size_t k = 0; k < n; ++k) {
      int x = rs.rmul_simple(members[k], a);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  return in;
}

}  // namespace

Parabolic::Parabolic(const RootSystem& rs, std::vector<int> levi) : rs_(&rs), levi_(std::move(levi)) {
  std::sort(levi_.begin(), levi_.end());
  levi_.erase(std::unique(levi_.begin(), levi_.end()), levi_.end());
  in_levi_.assign(rs.rank(), false);
  for (int i : levi_) {
    if (i < 0 || i >= rs.rank()) throw InputError("Levi index out of range");
    in_levi_[i] = true;
  }
  size_t n = rs.weyl_order();
  coset_of_.assign(n, -1);
  for (size_t w = 0; w < n; ++w) {
    bool minimal = true;
    for (int i : levi_)
      if (rs.length(rs.rmul_simple(static_cast<int>(w), i)) < rs.length(static_cast<int>(w))) {
        minimal = false;
        break;
      }
    if (minimal) {
      coset_of_[w] = static_cast<int>(mins_.size());
      mins_.push_back(static_cast<int>(w));
    }
  }
  for (size_t w = 0; w < n; ++w) {
    if (coset_of_[w] >= 0) continue;
    int x = static_cast<int>(w);
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i : levi_) {
        int y = rs.rmul_simple(x, i);
        if (rs.length(y) < rs.length(x)) {
          x = y;
          moved = true;
        }
      }
    }
    coset_of_[w] = coset_of_[x];
  }
  for (size_t w = 0; w < n; ++w)
    if (coset_of_[w] == 0) subgroup_.push_back(static_cast<int>(w));
  w0P_ = subgroup_.back();
  for (int u : subgroup_)
    if (rs.length(u) > rs.length(w0P_)) w0P_ = u;
  if (mins_.size() * subgroup_.size() != n) throw ConsistencyError("coset sizes do not multiply to |W|");
  for (int m : mins_) {
    int l = rs.mul(m, w0P_);
    if (rs.length(l) != rs.length(m) + rs.length(w0P_))
      throw ConsistencyError("longest coset representative fails length additivity");
    longest_.push_back(l);
  }
  for (int m : mins_) dual_.push_back(coset_of_[rs.mul(rs.longest(), m)]);
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const IVec& c = rs.positive_root_coords()[k];
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] != 0 && !in_levi_[i]) inside = false;
    if (inside) levi_roots_.push_back(k);
  }
  dim_ = rs.num_positive_roots() - static_cast<int>(levi_roots_.size());
}

Parabolic Parabolic::of_coweight(const RootSystem& rs, const Coweight& lambda) {
  if (!rs.is_dominant(lambda)) throw InputError("P(lambda) requires dominant lambda");
  std::vector<int> levi;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.pair(lambda, rs.simple_root(i)) == 0) levi.push_back(i);
  return Parabolic(rs, levi);
}

Parabolic Parabolic::complement_of(const RootSystem& rs, const std::vector<int>& I) {
  std::vector<int> levi;
  for (int i = 0; i < rs.rank(); ++i)
    if (std::find(I.begin(), I.end(), i) == I.end()) levi.push_back(i);
  return Parabolic(rs, levi);
}

std::vector<int> Parabolic::complement() const {
  std::vector<int> out;
  for (int i = 0; i < rs_->rank(); ++i)
    if (!in_levi_[i]) out.push_back(i);
  return out;
}

Weight Parabolic::two_rho_levi() const {
  IVec s(rs_->rank(), 0);
  for (int k : levi_roots_) s = add(s, rs_->positive_roots()[k].coords);
  return Weight{s};
}

std::vector<int> min_reps(const Parabolic& p) {
  std::vector<int> out;
  for (int c = 0; c < p.num_cosets(); ++c) out.push_back(p.min_rep(c));
  return out;
}

int longest_in_coset(const Parabolic& p, int w) { return p.longest_rep(p.coset_of(w)); }

bool bruhat_leq(const RootSystem& rs, int u, int v) {
  if (rs.length(u) > rs.length(v)) return false;
  return lower_interval(rs, v)[u];
}

BruhatOrder::BruhatOrder(const RootSystem& rs) {
  below_.reserve(rs.weyl_order());
  for (size_t v = 0; v < rs.weyl_order(); ++v) below_.push_back(lower_interval(rs, static_cast<int>(v)));
}

}  // namespace lrcone
