#include "lrcone/bkprod.hpp"

#include <set>

namespace lrcone {

Weight gamma(const Parabolic& p, int c) {
  const RootSystem& rs = p.rs();
  Weight r = rs.rho();
  return -(r + rs.act(p.longest_rep(c), r));
}

Weight gamma_from_roots(const Parabolic& p, int c) {
  const RootSystem& rs = p.rs();
  int wt = p.longest_rep(c);
  std::set<Weight> covered;
  for (const Weight& b : rs.positive_roots()) {
    covered.insert(b);
    covered.insert(rs.act(wt, b));
  }
  for (int k : p.levi_positive_roots()) {
    const Weight& b = rs.positive_roots()[k];
    covered.insert(rs.act(wt, b));
    covered.insert(rs.act(wt, -b));
  }
  Weight sum{IVec(rs.rank(), 0)};
  for (const Weight& b : rs.positive_roots())
    for (const Weight& root : {b, -b})
      if (!covered.count(root)) sum = sum + root;
  return sum;
}

Weight theta(const Parabolic& p, int c) {
  const RootSystem& rs = p.rs();
  return rs.act(rs.inverse(p.longest_rep(c)), gamma(p, c));
}

std::vector<Coweight> levi_center_basis(const Parabolic& p) {
  const RootSystem& rs = p.rs();
  IMat m;
  for (int j : p.levi()) {
    IVec row(rs.rank());
    for (int k = 0; k < rs.rank(); ++k) row[k] = rs.cartan()[k][j];
    m.push_back(row);
  }
  std::vector<Coweight> out;
  for (const IVec& v : integer_kernel(m, rs.rank())) out.push_back({v});
  return out;
}

std::vector<Int> theta_defect(const Parabolic& p, const std::vector<int>& ws) {
  const RootSystem& rs = p.rs();
  Weight sum = -theta(p, p.identity_coset());
  for (int c : ws) sum = sum + theta(p, c);
  std::vector<Int> out;
  for (const Coweight& b : levi_center_basis(p)) out.push_back(rs.pair(b, sum));
  return out;
}

bool levi_movable(const FlagSpace& space, const std::vector<int>& ws) {
  if (ws.size() < 3) throw InputError("Levi-movability needs at least three slots");
  if (space.point_product(ws) != 1) return false;
  for (Int v : theta_defect(space.parabolic(), ws))
    if (v != 0) return false;
  return true;
}

bool rho_form_condition(const Parabolic& p, const Coweight& lambda, int w, const std::vector<int>& ws_hat) {
  const RootSystem& rs = p.rs();
  Weight r = rs.rho();
  Int s = static_cast<Int>(ws_hat.size());
  Int lhs = rs.pair(rs.act_co(p.min_rep(w), lambda), r);
  for (int c : ws_hat) lhs += rs.pair(rs.act_co(p.min_rep(c), lambda), r);
  // 2 rho^lambda is integral; the pairing with lambda is exact.
  Int rhs = rs.pair(lambda, r) + s * (rs.pair(lambda, p.two_rho_levi()) - rs.pair(lambda, r));
  return lhs == rhs;
}

bool gamma_form_condition(const Parabolic& p, const Coweight& lambda, const std::vector<int>& ws) {
  const RootSystem& rs = p.rs();
  Int total = -rs.pair(lambda, gamma(p, p.identity_coset()));
  for (int c : ws) total += rs.pair(rs.act_co(p.min_rep(c), lambda), gamma(p, c));
  return total == 0;
}

}  // namespace lrcone
