#pragma once

#include <vector>

#include "lrcone/rootsys.hpp"

namespace lrcone {

struct WeightMultiplicity {
  Weight weight;
  int multiplicity;
};

// Weights of T on g^s / g (diagonal g): every root with multiplicity s - 1.
std::vector<WeightMultiplicity> quotient_weights(const RootSystem& rs, int s);

struct AdmissibleOps {
  Coweight lambda;                 // dominant, primitive in the coroot lattice
  int simple_index;                // the simple root not killed by lambda
  std::vector<Weight> kernel_roots;  // roots chi with <lambda, chi> = 0
  int hyperplane_rank;
};

// Primitive dominant lambda whose kernel roots span a hyperplane. Computed by
// scanning (rank - 1)-subsets of positive roots and cross-checked against the
// primitive fundamental coweights; disagreement throws ConsistencyError.
std::vector<AdmissibleOps> facet_ops(const RootSystem& rs);

// The generic hyperplane scan on its own, sorted by simple index.
std::vector<Coweight> facet_ops_by_scan(const RootSystem& rs);

// Subsets I of simple roots with |I| = d, in lexicographic order. The torus
// T_I is the connected center of the Levi with simple roots outside I.
std::vector<std::vector<int>> admissible_tori(const RootSystem& rs, int d);

}  // namespace lrcone
