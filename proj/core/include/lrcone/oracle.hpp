#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "lrcone/rootsys.hpp"

namespace lrcone {

struct CharacterTable {
  Weight highest_weight;
  std::map<Weight, Int> multiplicities;  // every weight of V, not only dominant ones
  Int dimension() const;
};

// Product formula prod_{beta > 0} <beta^vee, nu + rho> / <beta^vee, rho>.
Int weyl_dimension(const RootSystem& rs, const Weight& nu);

// Representation-theoretic oracle with memoized character tables. Tables are
// built by the Freudenthal recursion over dominant weights and checked
// against the Weyl dimension formula.
class RepOracle {
 public:
  explicit RepOracle(const RootSystem& rs) : rs_(&rs) {}

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const CharacterTable> characters(const Weight& nu) const;

  // Multiplicity of V_target in V_a (x) V_b, summing over the weights of the
  // smaller factor only (Klimyk).
  Int tensor_multiplicity(const Weight& a, const Weight& b, const Weight& target) const;
  std::map<Weight, Int> tensor_decompose(const Weight& a, const Weight& b) const;
  // Dimension of the invariants in V_{nu_1} (x) ... (x) V_{nu_k}.
  Int invariant_dim(const std::vector<Weight>& weights) const;
  // Some n in 1..n_max with invariant_dim(n * weights) > 0. A semi-decision:
  // false means none was found up to n_max.
  bool cone_member(const std::vector<Weight>& weights, int n_max) const;

 private:
  const RootSystem* rs_;
  mutable std::mutex mutex_;
  mutable std::map<Weight, std::shared_ptr<const CharacterTable>> cache_;
};

CharacterTable weight_multiplicities(const RootSystem& rs, const Weight& nu);
std::map<Weight, Int> tensor_decompose(const RootSystem& rs, const Weight& a, const Weight& b);
Int invariant_dim(const RootSystem& rs, const std::vector<Weight>& weights);
bool cone_member_oracle(const RootSystem& rs, const std::vector<Weight>& weights, int n_max = 4);

// Whether the sum of the weights lies in the root lattice (necessary for invariants).
bool in_root_lattice(const RootSystem& rs, const Weight& nu);

using Partition = std::vector<int>;

// Littlewood-Richardson coefficient c^nu_{lambda mu}: the number of
// semistandard skew tableaux of shape nu/lambda and content mu whose reverse
// reading word is a lattice word.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace lrcone
