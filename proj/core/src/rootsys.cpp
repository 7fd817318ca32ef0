#include "lrcone/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace lrcone {

namespace {

void validate_factor(const Factor& f) {
  bool ok = false;
  switch (f.series) {
    case Series::A: ok = f.rank >= 1; break;
    case Series::B: ok = f.rank >= 2; break;
    case Series::C: ok = f.rank >= 2; break;
    case Series::D: ok = f.rank >= 4; break;
    case Series::G: ok = f.rank == 2; break;
  }
  if (!ok)
    throw InputError(std::string("unsupported factor ") + static_cast<char>(f.series) +
                     std::to_string(f.rank));
}

IMat factor_cartan(const Factor& f) {
  int n = f.rank;
  IMat c(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (f.series) {
    case Series::A:
    case Series::B:
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      if (f.series == Series::B) c[n - 1][n - 2] = -2;
      if (f.series == Series::C) c[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      c[n - 1][n - 3] = c[n - 3][n - 1] = -1;
      break;
    case Series::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

size_t factorial(int n) {
  size_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<size_t>(i);
  return r;
}

// Minimal positive integers d with d_i C_ij = d_j C_ji.
IVec compute_symmetrizers(const IMat& c) {
  int n = static_cast<int>(c.size());
  std::vector<Q> d(n, Q(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<int> queue{start};
    std::vector<int> comp{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || c[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * Q(static_cast<long>(c[i][j])) / Q(static_cast<long>(c[j][i]));
        queue.push_back(j);
        comp.push_back(j);
      }
    }
    QVec part;
    for (int i : comp) part.push_back(d[i]);
    IVec prim = primitive(part);
    for (size_t k = 0; k < comp.size(); ++k) d[comp[k]] = static_cast<long>(prim[k]);
  }
  IVec out(n);
  for (int i = 0; i < n; ++i) out[i] = d[i].get_num().get_si();
  return out;
}

IMat identity_i(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat mat_mul_i(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat out(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < m; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

}  // namespace

CartanType::CartanType(std::vector<Factor> factors, bool allow_large_rank)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("empty Cartan type");
  for (const auto& f : factors_) validate_factor(f);
  if (!allow_large_rank && rank() > kMaxRank)
    throw InputError("total rank " + std::to_string(rank()) + " exceeds " +
                     std::to_string(kMaxRank) + " (pass --allow-large-rank to override)");
}

CartanType CartanType::parse(const std::string& text, bool allow_large_rank) {
  std::vector<Factor> factors;
  size_t pos = 0;
  if (text.empty()) throw InputError("empty Cartan type string");
  while (pos <= text.size()) {
    size_t next = text.find('x', pos);
    std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2) throw InputError("malformed Cartan type '" + text + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    if (std::string("ABCDG").find(letter) == std::string::npos)
      throw InputError("unknown series in '" + text + "'");
    for (size_t i = 1; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw InputError("malformed rank in '" + text + "'");
    if (part.size() > 3) throw InputError("rank too large in '" + text + "'");
    factors.push_back({static_cast<Series>(letter), std::stoi(part.substr(1))});
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return CartanType(std::move(factors), allow_large_rank);
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string CartanType::name() const {
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += static_cast<char>(factors_[i].series);
    s += std::to_string(factors_[i].rank);
  }
  return s;
}

size_t RootSystem::predicted_weyl_order(const CartanType& type) {
  size_t order = 1;
  for (const auto& f : type.factors()) {
    switch (f.series) {
      case Series::A: order *= factorial(f.rank + 1); break;
      case Series::B:
      case Series::C: order *= (size_t{1} << f.rank) * factorial(f.rank); break;
      case Series::D: order *= (size_t{1} << (f.rank - 1)) * factorial(f.rank); break;
      case Series::G: order *= 12; break;
    }
  }
  return order;
}

RootSystem::RootSystem(const CartanType& type) : type_(type) {
  if (predicted_weyl_order(type) > kMaxWeylOrder)
    throw InputError("Weyl group of " + type.name() + " exceeds the enumeration bound " +
                     std::to_string(kMaxWeylOrder));
  rank_ = type.rank();
  cartan_.assign(rank_, IVec(rank_, 0));
  int off = 0;
  for (const auto& f : type.factors()) {
    IMat c = factor_cartan(f);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) cartan_[off + i][off + j] = c[i][j];
    off += f.rank;
  }
  d_ = compute_symmetrizers(cartan_);
  cartan_inv_ = lrcone::inverse(to_q(cartan_));
  rho_ = Weight{IVec(rank_, 1)};

  // coweight form (alpha_i^vee, alpha_j^vee) = C_ij / (2 d_j)
  coweight_form_.assign(rank_, QVec(rank_, Q(0)));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      coweight_form_[i][j] = Q(static_cast<long>(cartan_[i][j])) / Q(2 * static_cast<long>(d_[j]));
  weight_form_ = lrcone::inverse(coweight_form_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (coweight_form_[i][j] != coweight_form_[j][i])
        throw ConsistencyError("invariant form is not symmetric");

  // simple reflection matrices on weights (S) and coweights (R)
  std::vector<IMat> S(rank_), R(rank_);
  for (int i = 0; i < rank_; ++i) {
    S[i] = identity_i(rank_);
    R[i] = identity_i(rank_);
    for (int k = 0; k < rank_; ++k) {
      S[i][k][i] -= cartan_[k][i];
      R[i][i][k] -= cartan_[k][i];
    }
  }
  for (int i = 0; i < rank_; ++i) {
    QMat r = to_q(R[i]);
    QMat inv = mat_mul(mat_mul(transpose(r), coweight_form_), r);
    if (inv != coweight_form_) throw ConsistencyError("invariant form fails reflection check");
  }

  // Weyl group by breadth-first search over right multiplication.
  elems_.push_back({{}, rho_});
  wmat_.push_back(identity_i(rank_));
  key_index_[rho_.coords] = 0;
  size_t level_begin = 0;
  while (level_begin < elems_.size()) {
    size_t level_end = elems_.size();
    for (size_t id = level_begin; id < level_end; ++id) {
      for (int i = 0; i < rank_; ++i) {
        IMat m = mat_mul_i(wmat_[id], S[i]);
        IVec key = mat_vec(m, rho_.coords);
        if (key_index_.count(key)) continue;
        std::vector<int> word = elems_[id].reduced_word;
        word.push_back(i);
        key_index_[key] = static_cast<int>(elems_.size());
        elems_.push_back({word, Weight{key}});
        wmat_.push_back(m);
      }
    }
    level_begin = level_end;
    if (elems_.size() > kMaxWeylOrder) throw ConsistencyError("Weyl group enumeration overflow");
  }
  if (elems_.size() != predicted_weyl_order(type))
    throw ConsistencyError("Weyl group order disagrees with the classical formula");

  size_t n = elems_.size();
  rmul_.assign(n, std::vector<int>(rank_));
  lmul_.assign(n, std::vector<int>(rank_));
  for (size_t id = 0; id < n; ++id)
    for (int i = 0; i < rank_; ++i) {
      IVec alpha(rank_);
      for (int k = 0; k < rank_; ++k) alpha[k] = cartan_[k][i];
      rmul_[id][i] = id_of_key(Weight{sub(elems_[id].canonical_key.coords, mat_vec(wmat_[id], alpha))});
      lmul_[id][i] = id_of_key(Weight{mat_vec(S[i], elems_[id].canonical_key.coords)});
    }
  inv_.resize(n);
  for (size_t id = 0; id < n; ++id) {
    std::vector<int> w = elems_[id].reduced_word;
    std::reverse(w.begin(), w.end());
    inv_[id] = id_of_word(w);
  }
  longest_ = static_cast<int>(n) - 1;

  // roots as orbits of (simple root, simple coroot) pairs
  std::set<std::pair<IVec, IVec>> seen;
  std::deque<std::pair<IVec, IVec>> queue;
  for (int i = 0; i < rank_; ++i) {
    auto p = std::make_pair(simple_root(i).coords, simple_coroot(i).coords);
    seen.insert(p);
    queue.push_back(p);
  }
  while (!queue.empty()) {
    auto [root, coroot] = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      auto p = std::make_pair(reflect(i, Weight{root}).coords, reflect_co(i, Coweight{coroot}).coords);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  struct Entry {
    IVec coords;
    IVec root;
    IVec coroot;
  };
  std::vector<Entry> pos;
  for (const auto& [root, coroot] : seen) {
    IVec rc = to_int(to_root_coords(Weight{root}));
    bool positive = std::all_of(rc.begin(), rc.end(), [](Int x) { return x >= 0; });
    if (positive) pos.push_back({rc, root, coroot});
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    Int ha = std::accumulate(a.coords.begin(), a.coords.end(), Int{0});
    Int hb = std::accumulate(b.coords.begin(), b.coords.end(), Int{0});
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
  for (const auto& e : pos) {
    pos_root_index_[e.root] = static_cast<int>(pos_roots_.size());
    pos_roots_.push_back(Weight{e.root});
    pos_coroots_.push_back(Coweight{e.coroot});
    pos_root_coords_.push_back(e.coords);
  }
  if (2 * pos_roots_.size() != seen.size()) throw ConsistencyError("root system is not symmetric");

  for (size_t k = 0; k < pos_roots_.size(); ++k) {
    Int c = pair(pos_coroots_[k], rho_);
    refl_.push_back(id_of_key(Weight{sub(rho_.coords, scale(c, pos_roots_[k].coords))}));
  }

  IVec two_rho(rank_, 0);
  for (const auto& b : pos_roots_) two_rho = add(two_rho, b.coords);
  if (two_rho != scale(2, rho_.coords)) throw ConsistencyError("half-sum identity fails");
}

int RootSystem::positive_root_index(const Weight& beta) const {
  auto it = pos_root_index_.find(beta.coords);
  return it == pos_root_index_.end() ? -1 : it->second;
}

Weight RootSystem::simple_root(int i) const {
  IVec a(rank_);
  for (int k = 0; k < rank_; ++k) a[k] = cartan_[k][i];
  return Weight{a};
}

Coweight RootSystem::simple_coroot(int i) const {
  IVec a(rank_, 0);
  a[i] = 1;
  return Coweight{a};
}

Weight RootSystem::fundamental_weight(int i) const {
  IVec a(rank_, 0);
  a[i] = 1;
  return Weight{a};
}

QVec RootSystem::fundamental_coweight(int i) const {
  QVec v(rank_);
  for (int k = 0; k < rank_; ++k) v[k] = cartan_inv_[i][k];
  return v;
}

Coweight RootSystem::fundamental_coweight_primitive(int i) const {
  return Coweight{primitive(fundamental_coweight(i))};
}

Q RootSystem::weight_inner(const QVec& a, const QVec& b) const {
  return dot(a, mat_vec(weight_form_, b));
}

Q RootSystem::coweight_inner(const QVec& a, const QVec& b) const {
  return dot(a, mat_vec(coweight_form_, b));
}

Int RootSystem::pair(const Coweight& lambda, const Weight& nu) const {
  if (lambda.coords.size() != nu.coords.size() || static_cast<int>(nu.coords.size()) != rank_)
    throw InputError("pair: dimension mismatch");
  return dot(lambda.coords, nu.coords);
}

Weight RootSystem::reflect(int i, const Weight& nu) const {
  Weight out = nu;
  Int c = nu.coords[i];
  for (int k = 0; k < rank_; ++k) out.coords[k] -= c * cartan_[k][i];
  return out;
}

Coweight RootSystem::reflect_co(int i, const Coweight& lambda) const {
  Coweight out = lambda;
  Int c = 0;
  for (int j = 0; j < rank_; ++j) c += lambda.coords[j] * cartan_[j][i];
  out.coords[i] -= c;
  return out;
}

QVec RootSystem::to_root_coords(const Weight& nu) const {
  return mat_vec(cartan_inv_, to_q(nu.coords));
}

bool RootSystem::is_dominant(const Weight& nu) const {
  return std::all_of(nu.coords.begin(), nu.coords.end(), [](Int x) { return x >= 0; });
}

bool RootSystem::is_dominant(const Coweight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (pair(lambda, simple_root(i)) < 0) return false;
  return true;
}

int RootSystem::id_of(const WeylElement& w) const { return id_of_key(w.canonical_key); }

int RootSystem::id_of_key(const Weight& key) const {
  auto it = key_index_.find(key.coords);
  if (it == key_index_.end()) throw ConsistencyError("unknown Weyl element key " + to_string(key.coords));
  return it->second;
}

int RootSystem::id_of_word(const std::vector<int>& word) const {
  int id = 0;
  for (int i : word) {
    if (i < 0 || i >= rank_) throw InputError("simple index out of range in word");
    id = rmul_[id][i];
  }
  return id;
}

int RootSystem::mul(int a, int b) const {
  int id = a;
  for (int i : elems_[b].reduced_word) id = rmul_[id][i];
  return id;
}

Weight RootSystem::act(int id, const Weight& nu) const { return Weight{mat_vec(wmat_[id], nu.coords)}; }

Coweight RootSystem::act_co(int id, const Coweight& lambda) const {
  Coweight out = lambda;
  const auto& word = elems_[id].reduced_word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect_co(*it, out);
  return out;
}

Weight RootSystem::act(const WeylElement& w, const Weight& nu) const {
  Weight out = nu;
  for (auto it = w.reduced_word.rbegin(); it != w.reduced_word.rend(); ++it) out = reflect(*it, out);
  return out;
}

Coweight RootSystem::act_co(const WeylElement& w, const Coweight& lambda) const {
  Coweight out = lambda;
  for (auto it = w.reduced_word.rbegin(); it != w.reduced_word.rend(); ++it) out = reflect_co(*it, out);
  return out;
}

std::pair<Weight, int> RootSystem::to_dominant(const Weight& nu) const {
  Weight cur = nu;
  int w = 0;
  for (;;) {
    int i = 0;
    while (i < rank_ && cur.coords[i] >= 0) ++i;
    if (i == rank_) return {cur, w};
    cur = reflect(i, cur);
    w = lmul_simple(i, w);
  }
}

std::pair<Coweight, int> RootSystem::to_dominant(const Coweight& lambda) const {
  Coweight cur = lambda;
  int w = 0;
  for (;;) {
    int i = 0;
    while (i < rank_ && pair(cur, simple_root(i)) >= 0) ++i;
    if (i == rank_) return {cur, w};
    cur = reflect_co(i, cur);
    w = lmul_simple(i, w);
  }
}

Weight RootSystem::dual(const Weight& nu) const { return -act(longest_, nu); }

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

}  // namespace lrcone
