#include "lrcone/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace lrcone {

namespace {

// Reflects x into the dominant chamber in place. Returns the parity of the
// number of reflections used, or 0 when x lands on a wall.
int dominate_strict(const IMat& cartan, IVec& x) {
  int n = static_cast<int>(x.size());
  int sign = 1;
  for (;;) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (x[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    Int xi = x[i];
    for (int k = 0; k < n; ++k) x[k] -= xi * cartan[k][i];
    sign = -sign;
  }
  for (Int v : x)
    if (v == 0) return 0;
  return sign;
}

IVec dominate(const IMat& cartan, IVec x) {
  int n = static_cast<int>(x.size());
  for (;;) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (x[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) return x;
    Int xi = x[i];
    for (int k = 0; k < n; ++k) x[k] -= xi * cartan[k][i];
  }
}

void require_dominant(const RootSystem& rs, const Weight& nu) {
  if (nu.coords.size() != static_cast<size_t>(rs.rank())) throw InputError("weight has the wrong rank");
  if (!rs.is_dominant(nu)) throw InputError("weight " + to_string(nu.coords) + " is not dominant");
}

}  // namespace

Int CharacterTable::dimension() const {
  Int d = 0;
  for (const auto& [w, m] : multiplicities) d += m;
  return d;
}

Int weyl_dimension(const RootSystem& rs, const Weight& nu) {
  Q prod = 1;
  Weight shifted = nu + rs.rho();
  for (const Coweight& c : rs.positive_coroots())
    prod *= Q(static_cast<long>(rs.pair(c, shifted))) / Q(static_cast<long>(rs.pair(c, rs.rho())));
  if (prod.get_den() != 1 || !prod.get_num().fits_slong_p()) throw ConsistencyError("Weyl dimension is not integral");
  return prod.get_num().get_si();
}

CharacterTable weight_multiplicities(const RootSystem& rs, const Weight& nu) {
  require_dominant(rs, nu);
  int r = rs.rank();
  const IMat& cartan = rs.cartan();

  Z lcm = 1;
  for (const auto& row : rs.weight_form())
    for (const Q& v : row) lcm = lcm * v.get_den() / gcd(lcm, v.get_den());
  IMat form(r, IVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) form[i][j] = Q(rs.weight_form()[i][j] * lcm).get_num().get_si();
  auto ip = [&](const IVec& a, const IVec& b) {
    Int s = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s += a[i] * form[i][j] * b[j];
    return s;
  };

  QVec root_coords = rs.to_root_coords(nu);
  IVec bound(r);
  for (int j = 0; j < r; ++j) {
    Z f = root_coords[j].get_num() / root_coords[j].get_den();
    bound[j] = f.get_si();
  }
  std::vector<std::pair<Int, IVec>> dominant;
  IVec k(r, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == r) {
      IVec mu = nu.coords;
      Int height = 0;
      for (int a = 0; a < r; ++a) {
        height += k[a];
        for (int b = 0; b < r; ++b) mu[b] -= k[a] * cartan[b][a];
      }
      for (Int v : mu)
        if (v < 0) return;
      dominant.push_back({height, mu});
      return;
    }
    for (Int v = 0; v <= bound[j]; ++v) {
      k[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(dominant.begin(), dominant.end());

  std::map<IVec, Int> dom_mult;
  IVec shifted_top = add(nu.coords, rs.rho().coords);
  Int top = ip(shifted_top, shifted_top);
  for (const auto& [height, mu] : dominant) {
    if (height == 0) {
      dom_mult[mu] = 1;
      continue;
    }
    Int num = 0;
    for (const Weight& beta : rs.positive_roots()) {
      IVec x = mu;
      for (;;) {
        x = add(x, beta.coords);
        auto it = dom_mult.find(dominate(cartan, x));
        if (it == dom_mult.end()) break;
        num += it->second * ip(x, beta.coords);
      }
    }
    num *= 2;
    IVec shifted = add(mu, rs.rho().coords);
    Int den = top - ip(shifted, shifted);
    if (den <= 0 || num % den != 0) throw ConsistencyError("Freudenthal recursion produced a non-integer");
    dom_mult[mu] = num / den;
  }

  CharacterTable table;
  table.highest_weight = nu;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    std::set<IVec> orbit{mu};
    std::deque<IVec> queue{mu};
    while (!queue.empty()) {
      IVec x = queue.front();
      queue.pop_front();
      for (int i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        IVec y = x;
        for (int a = 0; a < r; ++a) y[a] -= x[i] * cartan[a][i];
        if (orbit.insert(y).second) queue.push_back(y);
      }
    }
    for (const IVec& x : orbit) table.multiplicities[Weight{x}] = m;
  }
  if (table.dimension() != weyl_dimension(rs, nu))
    throw ConsistencyError("character table disagrees with the Weyl dimension formula");
  return table;
}

std::shared_ptr<const CharacterTable> RepOracle::characters(const Weight& nu) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(nu);
    if (it != cache_.end()) return it->second;
  }
  auto table = std::make_shared<const CharacterTable>(weight_multiplicities(*rs_, nu));
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(nu, table).first->second;
}

Int RepOracle::tensor_multiplicity(const Weight& a, const Weight& b, const Weight& target) const {
  require_dominant(*rs_, a);
  require_dominant(*rs_, b);
  require_dominant(*rs_, target);
  bool a_small = weyl_dimension(*rs_, a) <= weyl_dimension(*rs_, b);
  const Weight& small = a_small ? a : b;
  const Weight& big = a_small ? b : a;
  IVec goal = add(target.coords, rs_->rho().coords);
  IVec base = add(big.coords, rs_->rho().coords);
  Int total = 0;
  for (const auto& [mu, m] : characters(small)->multiplicities) {
    IVec x = add(base, mu.coords);
    int sign = dominate_strict(rs_->cartan(), x);
    if (sign != 0 && x == goal) total += sign * m;
  }
  if (total < 0) throw ConsistencyError("negative tensor multiplicity");
  return total;
}

std::map<Weight, Int> RepOracle::tensor_decompose(const Weight& a, const Weight& b) const {
  require_dominant(*rs_, a);
  require_dominant(*rs_, b);
  bool a_small = weyl_dimension(*rs_, a) <= weyl_dimension(*rs_, b);
  const Weight& small = a_small ? a : b;
  const Weight& big = a_small ? b : a;
  IVec base = add(big.coords, rs_->rho().coords);
  std::map<Weight, Int> acc;
  for (const auto& [mu, m] : characters(small)->multiplicities) {
    IVec x = add(base, mu.coords);
    int sign = dominate_strict(rs_->cartan(), x);
    if (sign != 0) acc[Weight{sub(x, rs_->rho().coords)}] += sign * m;
  }
  std::map<Weight, Int> out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw ConsistencyError("negative tensor multiplicity");
    if (m > 0) out[w] = m;
  }
  return out;
}

bool in_root_lattice(const RootSystem& rs, const Weight& nu) {
  for (const Q& c : rs.to_root_coords(nu))
    if (c.get_den() != 1) return false;
  return true;
}

Int RepOracle::invariant_dim(const std::vector<Weight>& weights) const {
  for (const Weight& w : weights) require_dominant(*rs_, w);
  if (weights.empty()) return 1;
  Weight sum{IVec(rs_->rank(), 0)};
  for (const Weight& w : weights) sum = sum + w;
  if (!in_root_lattice(*rs_, sum)) return 0;
  if (weights.size() == 1) return is_zero(weights[0].coords) ? 1 : 0;
  std::vector<Weight> ws = weights;
  std::stable_sort(ws.begin(), ws.end(), [&](const Weight& x, const Weight& y) {
    return weyl_dimension(*rs_, x) < weyl_dimension(*rs_, y);
  });
  if (ws.size() == 2) return ws[0] == rs_->dual(ws[1]) ? 1 : 0;
  Weight last = rs_->dual(ws.back());
  std::map<Weight, Int> partial{{ws[0], 1}};
  for (size_t i = 1; i + 2 < ws.size(); ++i) {
    std::map<Weight, Int> next;
    for (const auto& [kappa, m] : partial)
      for (const auto& [k2, m2] : tensor_decompose(kappa, ws[i])) next[k2] += m * m2;
    partial = std::move(next);
  }
  const Weight& penultimate = ws[ws.size() - 2];
  Int total = 0;
  for (const auto& [kappa, m] : partial) total += m * tensor_multiplicity(kappa, penultimate, last);
  return total;
}

bool RepOracle::cone_member(const std::vector<Weight>& weights, int n_max) const {
  for (const Weight& w : weights) require_dominant(*rs_, w);
  bool all_zero = true;
  for (const Weight& w : weights) all_zero = all_zero && is_zero(w.coords);
  if (all_zero) return true;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Weight> scaled;
    for (const Weight& w : weights) scaled.push_back(static_cast<Int>(n) * w);
    if (invariant_dim(scaled) > 0) return true;
  }
  return false;
}

std::map<Weight, Int> tensor_decompose(const RootSystem& rs, const Weight& a, const Weight& b) {
  return RepOracle(rs).tensor_decompose(a, b);
}

Int invariant_dim(const RootSystem& rs, const std::vector<Weight>& weights) {
  return RepOracle(rs).invariant_dim(weights);
}

bool cone_member_oracle(const RootSystem& rs, const std::vector<Weight>& weights, int n_max) {
  return RepOracle(rs).cone_member(weights, n_max);
}

namespace {

Partition trim(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

Int lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
  Partition lambda = trim(lambda_in), mu = trim(mu_in), nu = trim(nu_in);
  auto size = [](const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); };
  if (size(nu) != size(lambda) + size(mu)) return 0;
  if (lambda.size() > nu.size()) return 0;
  lambda.resize(nu.size(), 0);
  for (size_t i = 0; i < nu.size(); ++i)
    if (lambda[i] > nu[i]) return 0;
  if (mu.empty()) return 1;

  std::vector<std::pair<int, int>> cells;  // reading order: rows top-down, right to left
  for (size_t i = 0; i < nu.size(); ++i)
    for (int j = nu[i] - 1; j >= lambda[i]; --j) cells.push_back({static_cast<int>(i), j});
  std::vector<std::vector<int>> tab(nu.size());
  for (size_t i = 0; i < nu.size(); ++i) tab[i].assign(nu[i], 0);
  int labels = static_cast<int>(mu.size());
  std::vector<int> count(labels + 1, 0);

  std::function<Int(size_t)> rec = [&](size_t pos) -> Int {
    if (pos == cells.size()) return 1;
    auto [i, j] = cells[pos];
    int hi = labels;
    if (j + 1 < nu[i]) hi = std::min(hi, tab[i][j + 1]);
    int lo = 1;
    if (i > 0 && j >= lambda[i - 1] && j < nu[i - 1]) lo = tab[i - 1][j] + 1;
    Int total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      tab[i][j] = v;
      total += rec(pos + 1);
      tab[i][j] = 0;
      --count[v];
    }
    return total;
  };
  return rec(0);
}

}  // namespace lrcone
