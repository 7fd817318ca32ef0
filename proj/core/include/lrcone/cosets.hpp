#pragma once

#include <vector>

#include "lrcone/rootsys.hpp"

namespace lrcone {

// Standard parabolic subgroup P, described by the simple roots inside its
// Levi factor. Holds precomputed coset tables for W/W_P; the RootSystem must
// outlive it.
class Parabolic {
 public:
  Parabolic(const RootSystem& rs, std::vector<int> levi);
  // P(lambda) for dominant lambda: Levi = {i : <lambda, alpha_i> = 0}.
  static Parabolic of_coweight(const RootSystem& rs, const Coweight& lambda);
  // The parabolic whose Levi is the complement of I.
  static Parabolic complement_of(const RootSystem& rs, const std::vector<int>& I);

  const RootSystem& rs() const { return *rs_; }
  const std::vector<int>& levi() const { return levi_; }
  bool in_levi(int i) const { return in_levi_[i]; }
  // Simple roots outside the Levi.
  std::vector<int> complement() const;

  int num_cosets() const { return static_cast<int>(mins_.size()); }
  // Minimal representative of coset c (Weyl id). Cosets are ordered by the
  // Weyl id of their minimal representative, hence by length.
  int min_rep(int c) const { return mins_[c]; }
  int longest_rep(int c) const { return longest_[c]; }
  int coset_length(int c) const { return rs_->length(mins_[c]); }
  int coset_of(int w) const { return coset_of_[w]; }
  // Coset of w0 * w_min(c): the Poincare-dual index.
  int dual_coset(int c) const { return dual_[c]; }
  int identity_coset() const { return 0; }
  int top_coset() const { return dual_[0]; }

  int w0P() const { return w0P_; }
  const std::vector<int>& subgroup() const { return subgroup_; }
  // Number of positive roots outside the Levi, i.e. dim G/P.
  int dimension() const { return dim_; }
  // Roots of the Levi (positive ones), as indices into rs.positive_roots().
  const std::vector<int>& levi_positive_roots() const { return levi_roots_; }
  // rho of the Levi: half the sum of its positive roots, doubled to stay integral.
  Weight two_rho_levi() const;

  bool operator==(const Parabolic& o) const { return rs_ == o.rs_ && levi_ == o.levi_; }

 private:
  const RootSystem* rs_;
  std::vector<int> levi_;
  std::vector<bool> in_levi_;
  std::vector<int> mins_, longest_, coset_of_, dual_, subgroup_, levi_roots_;
  int w0P_ = 0;
  int dim_ = 0;
};

// Minimal length representatives, one per coset, in coset order.
std::vector<int> min_reps(const Parabolic& p);
// w_min * w_{0,P} for the coset containing w.
int longest_in_coset(const Parabolic& p, int w);

// Subword criterion against the fixed least reduced word of v.
bool bruhat_leq(const RootSystem& rs, int u, int v);

// All lower Bruhat intervals of W, computed once.
class BruhatOrder {
 public:
  explicit BruhatOrder(const RootSystem& rs);
  bool leq(int u, int v) const { return below_[v][u]; }

 private:
  std::vector<std::vector<bool>> below_;
};

}  // namespace lrcone
