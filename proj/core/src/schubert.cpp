#include "lrcone/schubert.hpp"

#include <random>

#include "lrcone/cache.hpp"

namespace lrcone {

// ---- Polynomial ----

Polynomial Polynomial::constant(int nvars, const Z& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::linear(const IVec& coeffs) {
  int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Monomial m(n, 0);
    m[i] = 1;
    p.add_term(m, Z(static_cast<long>(coeffs[i])));
  }
  return p;
}

void Polynomial::add_term(const Monomial& m, const Z& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (int x : m) e += x;
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw ConsistencyError("degree of a non-homogeneous polynomial");
  int e = 0;
  for (int x : terms_.begin()->first) e += x;
  return e;
}

Z Polynomial::evaluate(const IVec& point) const {
  Z total = 0;
  for (const auto& [m, c] : terms_) {
    Z t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= static_cast<long>(point[i]);
    total += t;
  }
  return total;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  if (r.nvars_ == 0) r.nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(std::max(nvars_, o.nvars_));
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(r.nvars_, 0);
      for (int i = 0; i < r.nvars_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

Polynomial restriction(const RootSystem& rs, int w, int v) {
  int r = rs.rank();
  std::map<int, Polynomial> cur;
  cur.emplace(rs.identity(), Polynomial::constant(r, 1));
  int prefix = rs.identity();
  for (int a : rs.element(v).reduced_word) {
    Weight beta = rs.act(prefix, rs.simple_root(a));
    int k = rs.positive_root_index(beta);
    if (k < 0) throw ConsistencyError("subword root is not positive");
    Polynomial b = Polynomial::linear(rs.positive_root_coords()[k]);
    std::map<int, Polynomial> next = cur;
    for (const auto& [x, poly] : cur) {
      int y = rs.rmul_simple(x, a);
      if (rs.length(y) > rs.length(x)) {
        auto it = next.find(y);
        Polynomial term = poly * b;
        if (it == next.end())
          next.emplace(y, term);
        else
          it->second = it->second + term;
      }
    }
    cur = std::move(next);
    prefix = rs.rmul_simple(prefix, a);
  }
  auto it = cur.find(w);
  return it == cur.end() ? Polynomial(r) : it->second;
}

// ---- LocalizationTable ----

std::uint64_t LocalizationTable::mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t LocalizationTable::addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t LocalizationTable::submod(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kPrime - b;
}

std::uint64_t LocalizationTable::invmod(std::uint64_t a) {
  if (a == 0) throw ConsistencyError("inverse of zero modulo p");
  std::uint64_t result = 1, base = a, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mulmod(result, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t LocalizationTable::reduce(Int a) {
  Int m = a % static_cast<Int>(kPrime);
  if (m < 0) m += static_cast<Int>(kPrime);
  return static_cast<std::uint64_t>(m);
}

namespace {

IVec default_point(int rank) {
  std::mt19937_64 gen(0x5eed5c4b);
  std::uniform_int_distribution<Int> dist(1, 1 << 20);
  IVec p(rank);
  for (auto& x : p) x = dist(gen);
  return p;
}

}  // namespace

LocalizationTable::LocalizationTable(const RootSystem& rs) : LocalizationTable(rs, default_point(rs.rank())) {}

LocalizationTable::LocalizationTable(const RootSystem& rs, const IVec& point)
    : n_(rs.weyl_order()), point_(point), table_(n_ * n_, 0) {
  for (Int x : point)
    if (x <= 0) throw InputError("evaluation point must have positive coordinates");
  std::vector<std::uint64_t> root_value(rs.num_positive_roots());
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    root_value[k] = reduce(dot(rs.positive_root_coords()[k], point_));
  auto at = [&](size_t w, size_t v) -> std::uint64_t& { return table_[w * n_ + v]; };
  at(0, 0) = 1;
  for (size_t v = 1; v < n_; ++v) {
    const auto& word = rs.element(static_cast<int>(v)).reduced_word;
    int a = word.back();
    int vp = rs.rmul_simple(static_cast<int>(v), a);
    int k = rs.positive_root_index(rs.act(vp, rs.simple_root(a)));
    if (k < 0) throw ConsistencyError("subword root is not positive");
    std::uint64_t b = root_value[k];
    for (size_t w = 0; w < n_; ++w) {
      std::uint64_t val = at(w, vp);
      int ws = rs.rmul_simple(static_cast<int>(w), a);
      if (rs.length(ws) < rs.length(static_cast<int>(w))) val = addmod(val, mulmod(b, at(ws, vp)));
      at(w, v) = val;
    }
  }
}

// ---- FlagSpace ----

FlagSpace::FlagSpace(const Parabolic& p) : FlagSpace(p, std::make_shared<LocalizationTable>(p.rs())) {}

FlagSpace::FlagSpace(const Parabolic& p, std::shared_ptr<const LocalizationTable> table)
    : p_(p), loc_(std::move(table)) {
  int m = p_.num_cosets();
  diag_inv_.resize(m);
  for (int k = 0; k < m; ++k) {
    int x = p_.min_rep(k);
    diag_inv_[k] = LocalizationTable::invmod(loc_->value(x, x));
  }
}

SchubertClass FlagSpace::basis(int c) const {
  SchubertClass s;
  s.coeffs[c] = 1;
  return s;
}

std::map<int, Int> FlagSpace::eliminate(const std::vector<std::uint64_t>& f, int degree) const {
  using LT = LocalizationTable;
  int m = p_.num_cosets();
  std::vector<std::uint64_t> c(m, 0);
  std::vector<int> nonzero;
  std::map<int, Int> out;
  for (int k = 0; k < m; ++k) {
    int len = p_.coset_length(k);
    if (len > degree) break;
    int y = p_.min_rep(k);
    std::uint64_t val = f[k];
    for (int j : nonzero) val = LT::submod(val, LT::mulmod(c[j], loc_->value(p_.min_rep(j), y)));
    c[k] = LT::mulmod(val, diag_inv_[k]);
    if (c[k] != 0) nonzero.push_back(k);
    if (len == degree && c[k] != 0) {
      std::uint64_t v = c[k];
      // structure constants are nonnegative and far below 2^40
      if (v > (std::uint64_t{1} << 40))
        throw ConsistencyError("Schubert structure constant negative or out of range");
      out[k] = static_cast<Int>(v);
    }
  }
  return out;
}

SchubertClass FlagSpace::basis_product(int u, int v) const {
  if (table_built_) {
    auto it = table_.find(u <= v ? std::make_pair(u, v) : std::make_pair(v, u));
    return it == table_.end() ? SchubertClass{} : it->second;
  }
  int degree = codegree(u) + codegree(v);
  SchubertClass out;
  if (degree > dimension()) return out;
  int m = p_.num_cosets();
  int xu = p_.min_rep(sigma(u)), xv = p_.min_rep(sigma(v));
  std::vector<std::uint64_t> f(m);
  for (int k = 0; k < m; ++k) {
    int y = p_.min_rep(k);
    f[k] = LocalizationTable::mulmod(loc_->value(xu, y), loc_->value(xv, y));
  }
  for (const auto& [k, c] : eliminate(f, degree)) out.coeffs[p_.dual_coset(k)] = c;
  return out;
}

SchubertClass FlagSpace::cup(const SchubertClass& a, const SchubertClass& b) const {
  SchubertClass out;
  for (const auto& [u, cu] : a.coeffs)
    for (const auto& [v, cv] : b.coeffs) {
      if (cu == 0 || cv == 0) continue;
      for (const auto& [w, c] : basis_product(u, v).coeffs) out.coeffs[w] += cu * cv * c;
    }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) it = it->second == 0 ? out.coeffs.erase(it) : ++it;
  return out;
}

Int FlagSpace::structure_constant(int u, int v, int w) const {
  auto prod = basis_product(u, v);
  auto it = prod.coeffs.find(w);
  return it == prod.coeffs.end() ? 0 : it->second;
}

Int FlagSpace::point_product_direct(const std::vector<int>& cosets) const {
  int degree = 0;
  for (int c : cosets) degree += codegree(c);
  if (degree != dimension()) return 0;
  int m = p_.num_cosets();
  std::vector<std::uint64_t> f(m, 1);
  for (int c : cosets) {
    int x = p_.min_rep(sigma(c));
    for (int k = 0; k < m; ++k) f[k] = LocalizationTable::mulmod(f[k], loc_->value(x, p_.min_rep(k)));
  }
  auto coeffs = eliminate(f, degree);
  auto it = coeffs.find(p_.top_coset());
  return it == coeffs.end() ? 0 : it->second;
}

Int FlagSpace::point_product(const std::vector<int>& cosets) const {
  if (table_built_ && cosets.size() == 3) {
    int degree = codegree(cosets[0]) + codegree(cosets[1]) + codegree(cosets[2]);
    if (degree != dimension()) return 0;
    return structure_constant(cosets[0], cosets[1], p_.dual_coset(cosets[2]));
  }
  return point_product_direct(cosets);
}

void FlagSpace::build_table() {
  if (table_built_) return;
  std::map<std::pair<int, int>, SchubertClass> t;
  int m = p_.num_cosets();
  for (int u = 0; u < m; ++u)
    for (int v = u; v < m; ++v) {
      if (codegree(u) + codegree(v) > dimension()) continue;
      SchubertClass prod = basis_product(u, v);
      if (!prod.coeffs.empty()) t.emplace(std::make_pair(u, v), std::move(prod));
    }
  table_ = std::move(t);
  table_built_ = true;
}

std::vector<std::array<Int, 4>> FlagSpace::table_triples() const {
  std::vector<std::array<Int, 4>> out;
  for (const auto& [uv, cls] : table_)
    for (const auto& [w, c] : cls.coeffs) out.push_back({uv.first, uv.second, w, c});
  return out;
}

void FlagSpace::load_table_triples(const std::vector<std::array<Int, 4>>& triples) {
  std::map<std::pair<int, int>, SchubertClass> t;
  int m = p_.num_cosets();
  for (const auto& r : triples) {
    if (r[0] < 0 || r[1] < r[0] || r[1] >= m || r[2] < 0 || r[2] >= m || r[3] <= 0)
      throw ConsistencyError("malformed Schubert table triple");
    int u = static_cast<int>(r[0]), v = static_cast<int>(r[1]), w = static_cast<int>(r[2]);
    if (p_.coset_length(u) + p_.coset_length(v) - dimension() != p_.coset_length(w))
      throw ConsistencyError("Schubert table triple has the wrong degree");
    t[{u, v}].coeffs[w] = r[3];
  }
  // Poincare duality must hold exactly.
  for (int u = 0; u < m; ++u)
    for (int v = u; v < m; ++v) {
      if (p_.coset_length(u) + p_.coset_length(v) != dimension()) continue;
      auto it = t.find({u, v});
      Int pt = it == t.end() || !it->second.coeffs.count(0) ? 0 : it->second.coeffs.at(0);
      if (pt != (v == p_.dual_coset(u) ? 1 : 0)) throw ConsistencyError("Schubert table violates duality");
    }
  table_ = std::move(t);
  table_built_ = true;
}

bool FlagSpace::load_or_build_table(const std::filesystem::path& cache_dir) {
  std::string type = rs().type().name();
  auto path = cache::schubert_table_path(cache_dir, type, p_.levi());
  std::vector<std::vector<int>> words;
  for (int c = 0; c < num_cosets(); ++c) words.push_back(rs().element(p_.min_rep(c)).reduced_word);
  if (auto file = cache::read_schubert_table(path)) {
    if (file->cartan_type == type && file->levi == p_.levi() && file->cosets == words) {
      try {
        load_table_triples(file->triples);
        return true;
      } catch (const ConsistencyError&) {
        table_built_ = false;
        table_.clear();
      }
    }
  }
  build_table();
  cache::SchubertTableFile out{type, p_.levi(), words, table_triples()};
  try {
    cache::write_schubert_table(path, out);
  } catch (const std::exception&) {
    // an unwritable cache only costs recomputation
  }
  return false;
}

SchubertClass chevalley(const FlagSpace& gb, int u, int i) {
  const auto& p = gb.parabolic();
  if (!p.levi().empty()) throw InputError("chevalley formula is implemented on G/B only");
  const auto& rs = gb.rs();
  int w = p.min_rep(u);
  SchubertClass out;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    int y = rs.mul(w, rs.reflection(k));
    if (rs.length(y) != rs.length(w) - 1) continue;
    Int c = rs.positive_coroots()[k].coords[i];
    if (c != 0) out.coeffs[p.coset_of(y)] += c;
  }
  return out;
}

int divisor_coset(const FlagSpace& gb, int i) {
  const auto& rs = gb.rs();
  return gb.parabolic().coset_of(rs.mul(rs.longest(), rs.id_of_word({i})));
}

}  // namespace lrcone
