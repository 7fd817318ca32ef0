#include "lrcone/opsenum.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lrcone {

std::vector<WeightMultiplicity> quotient_weights(const RootSystem& rs, int s) {
  if (s < 2) throw InputError("need at least two factors");
  std::vector<WeightMultiplicity> out;
  for (const Weight& b : rs.positive_roots()) {
    out.push_back({b, s - 1});
    out.push_back({-b, s - 1});
  }
  return out;
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int i = start; i <= n - (k - pos); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::vector<Weight> kernel_roots(const RootSystem& rs, const Coweight& lambda) {
  std::vector<Weight> out;
  for (const Weight& b : rs.positive_roots())
    if (rs.pair(lambda, b) == 0) {
      out.push_back(b);
      out.push_back(-b);
    }
  return out;
}

int simple_support(const RootSystem& rs, const Coweight& lambda) {
  int found = -1;
  for (int j = 0; j < rs.rank(); ++j)
    if (rs.pair(lambda, rs.simple_root(j)) != 0) {
      if (found >= 0) return -1;
      found = j;
    }
  return found;
}

}  // namespace

std::vector<Coweight> facet_ops_by_scan(const RootSystem& rs) {
  int r = rs.rank();
  int np = rs.num_positive_roots();
  std::set<Coweight> found;
  for_each_subset(np, r - 1, [&](const std::vector<int>& sub) {
    IMat m;
    for (int k : sub) m.push_back(rs.positive_roots()[k].coords);
    if (rank(m) != r - 1) return;
    IMat ker = integer_kernel(m, r);
    if (ker.size() != 1) throw ConsistencyError("hyperplane normal is not unique");
    Coweight n{primitive(ker[0])};
    for (const Coweight& c : {n, -n}) found.insert(rs.to_dominant(c).first);
  });
  std::vector<Coweight> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    return simple_support(rs, a) < simple_support(rs, b);
  });
  return out;
}

std::vector<AdmissibleOps> facet_ops(const RootSystem& rs) {
  std::vector<Coweight> scan = facet_ops_by_scan(rs);
  std::vector<AdmissibleOps> out;
  for (int i = 0; i < rs.rank(); ++i) {
    Coweight lambda = rs.fundamental_coweight_primitive(i);
    std::vector<Weight> ker = kernel_roots(rs, lambda);
    IMat m;
    for (const Weight& b : ker) m.push_back(b.coords);
    out.push_back({lambda, i, ker, m.empty() ? 0 : rank(m)});
  }
  bool same = scan.size() == out.size();
  for (size_t k = 0; same && k < scan.size(); ++k) same = scan[k] == out[k].lambda;
  if (!same) throw ConsistencyError("hyperplane scan disagrees with the fundamental coweights");
  for (const auto& op : out)
    if (op.hyperplane_rank != rs.rank() - 1) throw ConsistencyError("kernel roots do not span a hyperplane");
  return out;
}

std::vector<std::vector<int>> admissible_tori(const RootSystem& rs, int d) {
  if (d < 0 || d > rs.rank()) throw InputError("torus dimension out of range");
  std::vector<std::vector<int>> out;
  for_each_subset(rs.rank(), d, [&](const std::vector<int>& sub) { out.push_back(sub); });
  return out;
}

}  // namespace lrcone
