#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lrcone/cosets.hpp"

namespace lrcone {

// Polynomial with integer coefficients in rank() variables x_i, where x_i
// stands for the simple root alpha_i.
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Z& c);
  // Linear form sum_i coeffs[i] x_i.
  static Polynomial linear(const IVec& coeffs);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Z>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial; throws if not homogeneous.
  int degree() const;
  bool is_homogeneous() const;
  Z evaluate(const IVec& point) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  void add_term(const Monomial& m, const Z& c);
  int nvars_ = 0;
  std::map<Monomial, Z> terms_;
};

// Equivariant restriction xi_w|_v of the Schubert class of codimension l(w),
// by the subword formula over the least reduced word of v. Zero unless w <= v.
Polynomial restriction(const RootSystem& rs, int w, int v);

// All restrictions of G/B evaluated at a fixed integral point with positive
// coordinates and reduced modulo a 61-bit prime. The diagonal entries are
// products of positive root values, hence invertible mod p, so the triangular
// expansion has a unique solution mod p; degree-zero coefficients are small
// nonnegative integers and are read off exactly.
class LocalizationTable {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  LocalizationTable(const RootSystem& rs, const IVec& point);
  // Default evaluation point: a fixed seeded choice of positive integers.
  explicit LocalizationTable(const RootSystem& rs);

  std::uint64_t value(int w, int v) const { return table_[static_cast<size_t>(w) * n_ + v]; }
  const IVec& point() const { return point_; }

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b);
  static std::uint64_t addmod(std::uint64_t a, std::uint64_t b);
  static std::uint64_t submod(std::uint64_t a, std::uint64_t b);
  static std::uint64_t invmod(std::uint64_t a);
  static std::uint64_t reduce(Int a);

 private:
  size_t n_;
  IVec point_;
  std::vector<std::uint64_t> table_;
};

// Sparse integer combination of the Schubert basis of H*(G/P), indexed by
// coset. Basis class c is [Lambda_c], the closure of B w_min(c) P/P, of
// dimension l(w_min(c)); coset 0 (the identity) is the point class.
struct SchubertClass {
  std::map<int, Int> coeffs;
  bool operator==(const SchubertClass&) const = default;
};

class FlagSpace {
 public:
  explicit FlagSpace(const Parabolic& p);
  FlagSpace(const Parabolic& p, std::shared_ptr<const LocalizationTable> table);

  const Parabolic& parabolic() const { return p_; }
  const RootSystem& rs() const { return p_.rs(); }
  int dimension() const { return p_.dimension(); }
  int num_cosets() const { return p_.num_cosets(); }
  // Complex codimension of Lambda_c.
  int codegree(int c) const { return dimension() - p_.coset_length(c); }

  SchubertClass basis(int c) const;
  SchubertClass point_class() const { return basis(p_.identity_coset()); }
  SchubertClass fundamental_class() const { return basis(p_.top_coset()); }

  // Expansion of [Lambda_u] . [Lambda_v]; uses the full table when built.
  SchubertClass basis_product(int u, int v) const;
  SchubertClass cup(const SchubertClass& a, const SchubertClass& b) const;
  Int structure_constant(int u, int v, int w) const;
  // Coefficient of the point class in the product of the listed basis classes.
  Int point_product(const std::vector<int>& cosets) const;
  // Same, always by direct elimination (never through the table).
  Int point_product_direct(const std::vector<int>& cosets) const;

  // Full multiplication table (all pairs u <= v with compatible degree).
  void build_table();
  bool has_table() const { return table_built_; }
  // Nonzero triples (u, v, w, c) with u <= v.
  std::vector<std::array<Int, 4>> table_triples() const;
  void load_table_triples(const std::vector<std::array<Int, 4>>& triples);
  // Loads the table from cache_dir when a valid file exists, else builds and
  // writes it. Returns true on a cache hit.
  bool load_or_build_table(const std::filesystem::path& cache_dir);

 private:
  // sigma-index of the class Lambda_c (the dual coset).
  int sigma(int c) const { return p_.dual_coset(c); }
  // Elimination over the sigma basis, keeping coefficients at length == degree.
  std::map<int, Int> eliminate(const std::vector<std::uint64_t>& f, int degree) const;

  Parabolic p_;
  std::shared_ptr<const LocalizationTable> loc_;
  std::vector<std::uint64_t> diag_inv_;
  bool table_built_ = false;
  std::map<std::pair<int, int>, SchubertClass> table_;
};

// Divisor multiplication on G/B: [Lambda_u] times the degree-2 class
// attached to s_i, expanded by the classical coroot-pairing rule.
SchubertClass chevalley(const FlagSpace& gb, int u, int i);
// Coset of the degree-2 class attached to s_i on G/B (w0 s_i).
int divisor_coset(const FlagSpace& gb, int i);

}  // namespace lrcone
