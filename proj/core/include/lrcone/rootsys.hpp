#pragma once

#include <map>
#include <string>
#include <vector>

#include "lrcone/arith.hpp"

namespace lrcone {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct Factor {
  Series series;
  int rank;
  bool operator==(const Factor&) const = default;
};

// Product of simple factors. Total rank is capped at 4 unless the caller
// explicitly lifts the guard.
class CartanType {
 public:
  static constexpr int kMaxRank = 4;

  CartanType() = default;
  explicit CartanType(std::vector<Factor> factors, bool allow_large_rank = false);

  // Grammar: factor ('x' factor)*, factor = letter rank, e.g. "A2", "B3", "A1xA1".
  static CartanType parse(const std::string& text, bool allow_large_rank = false);

  const std::vector<Factor>& factors() const { return factors_; }
  int rank() const;
  std::string name() const;
  bool operator==(const CartanType& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Factor> factors_;
};

// Character of T in the fundamental-weight basis.
struct Weight {
  IVec coords;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};

// One-parameter subgroup of T in the simple-coroot basis.
struct Coweight {
  IVec coords;
  bool operator==(const Coweight&) const = default;
  auto operator<=>(const Coweight&) const = default;
};

inline Weight operator+(const Weight& a, const Weight& b) { return {add(a.coords, b.coords)}; }
inline Weight operator-(const Weight& a, const Weight& b) { return {sub(a.coords, b.coords)}; }
inline Weight operator-(const Weight& a) { return {neg(a.coords)}; }
inline Weight operator*(Int c, const Weight& a) { return {scale(c, a.coords)}; }
inline Coweight operator+(const Coweight& a, const Coweight& b) { return {add(a.coords, b.coords)}; }
inline Coweight operator-(const Coweight& a, const Coweight& b) { return {sub(a.coords, b.coords)}; }
inline Coweight operator-(const Coweight& a) { return {neg(a.coords)}; }
inline Coweight operator*(Int c, const Coweight& a) { return {scale(c, a.coords)}; }

struct WeylElement {
  std::vector<int> reduced_word;  // 0-based simple indices, lexicographically least
  Weight canonical_key;           // w(rho)
  int length() const { return static_cast<int>(reduced_word.size()); }
  bool operator==(const WeylElement& o) const { return canonical_key == o.canonical_key; }
};

// Root datum and fully enumerated Weyl group of a CartanType. Immutable after
// construction. Weyl elements are addressed by dense ids ordered by
// (length, lexicographically least reduced word); id 0 is the identity.
class RootSystem {
 public:
  static constexpr size_t kMaxWeylOrder = 1152;

  explicit RootSystem(const CartanType& type);
  static RootSystem build(const CartanType& type) { return RootSystem(type); }

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  // cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const IMat& cartan() const { return cartan_; }
  const IVec& symmetrizers() const { return d_; }

  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  // Coroot of positive_roots()[k].
  const std::vector<Coweight>& positive_coroots() const { return pos_coroots_; }
  // positive_roots()[k] in simple-root coordinates.
  const std::vector<IVec>& positive_root_coords() const { return pos_root_coords_; }
  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
  // Index of a positive root, or -1.
  int positive_root_index(const Weight& beta) const;

  Weight simple_root(int i) const;
  Coweight simple_coroot(int i) const;
  Weight fundamental_weight(int i) const;
  // omega_i^vee in simple-coroot coordinates (rational in general).
  QVec fundamental_coweight(int i) const;
  // Primitive positive multiple of omega_i^vee in the coroot lattice.
  Coweight fundamental_coweight_primitive(int i) const;
  Weight rho() const { return rho_; }

  // Symmetric positive definite W-invariant form on Coweight coordinates.
  const QMat& invariant_form() const { return coweight_form_; }
  // The dual form on Weight coordinates (inverse matrix).
  const QMat& weight_form() const { return weight_form_; }
  Q weight_inner(const QVec& a, const QVec& b) const;
  Q coweight_inner(const QVec& a, const QVec& b) const;

  Int pair(const Coweight& lambda, const Weight& nu) const;
  Weight reflect(int i, const Weight& nu) const;
  Coweight reflect_co(int i, const Coweight& lambda) const;
  QVec to_root_coords(const Weight& nu) const;
  bool is_dominant(const Weight& nu) const;
  bool is_dominant(const Coweight& lambda) const;

  // Weyl group.
  size_t weyl_order() const { return elems_.size(); }
  const std::vector<WeylElement>& all_elements() const { return elems_; }
  const WeylElement& element(int id) const { return elems_[id]; }
  int length(int id) const { return elems_[id].length(); }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int id_of(const WeylElement& w) const;
  int id_of_key(const Weight& key) const;
  // Product of the simple reflections in order; the word need not be reduced.
  int id_of_word(const std::vector<int>& word) const;
  int rmul_simple(int id, int i) const { return rmul_[id][i]; }
  int lmul_simple(int i, int id) const { return lmul_[id][i]; }
  int mul(int a, int b) const;
  int inverse(int id) const { return inv_[id]; }
  // Reflection s_beta for the k-th positive root.
  int reflection(int k) const { return refl_[k]; }

  Weight act(int id, const Weight& nu) const;
  Coweight act_co(int id, const Coweight& lambda) const;
  Weight act(const WeylElement& w, const Weight& nu) const;
  Coweight act_co(const WeylElement& w, const Coweight& lambda) const;
  const IMat& weight_matrix(int id) const { return wmat_[id]; }

  // Dominant conjugate of nu together with an element w with w*nu dominant.
  std::pair<Weight, int> to_dominant(const Weight& nu) const;
  std::pair<Coweight, int> to_dominant(const Coweight& lambda) const;
  // -w0(nu).
  Weight dual(const Weight& nu) const;

  // Classical order formula for the type, used to guard enumeration.
  static size_t predicted_weyl_order(const CartanType& type);

 private:
  CartanType type_;
  int rank_ = 0;
  IMat cartan_;
  IVec d_;
  Weight rho_;
  std::vector<Weight> pos_roots_;
  std::vector<Coweight> pos_coroots_;
  std::vector<IVec> pos_root_coords_;
  std::map<IVec, int> pos_root_index_;
  QMat cartan_inv_;
  QMat coweight_form_;
  QMat weight_form_;

  std::vector<WeylElement> elems_;
  std::map<IVec, int> key_index_;
  std::vector<IMat> wmat_;
  std::vector<std::vector<int>> rmul_, lmul_;
  std::vector<int> inv_;
  std::vector<int> refl_;
  int longest_ = 0;
};

std::string word_to_string(const std::vector<int>& word);

}  // namespace lrcone
