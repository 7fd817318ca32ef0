#pragma once

#include <optional>
#include <vector>

#include "lrcone/rootsys.hpp"

namespace lrcone {

// T-support of a point of P(V): the characters with nonzero coordinate.
// Lengths come from the invariant form of the root system.
class WeightedSupport {
 public:
  WeightedSupport(const RootSystem& rs, std::vector<Weight> support);

  const RootSystem& rs() const { return *rs_; }
  const std::vector<Weight>& support() const { return support_; }
  WeightedSupport dilated(Int n) const;
  WeightedSupport transformed(int w) const;

 private:
  const RootSystem* rs_;
  std::vector<Weight> support_;
};

// mu(x, lambda) = -max over the support of <lambda, chi>.
Int mu(const WeightedSupport& x, const Coweight& lambda);

// M(x) encoded exactly by its signed square M |M|: positive when 0 lies
// outside the weight polytope (distance to it), otherwise minus the squared
// distance from 0 to the boundary.
struct NumericalCriterion {
  Q signed_square;
  bool semistable = false;
  QVec nearest;  // projection of 0 onto the polytope when unstable
};

NumericalCriterion numerical_criterion(const WeightedSupport& x);

// Whether 0 is a convex combination of the support (exact LP).
bool contains_origin(const WeightedSupport& x);

// Some lambda with mu(x, lambda) > 0 found by LP, if one exists.
std::optional<Coweight> destabilizing_direction(const WeightedSupport& x);

// Normalized value mu(x, lambda) / |lambda| encoded as a signed square.
Q normalized_mu_signed_square(const WeightedSupport& x, const Coweight& lambda);

// Primitive lambdas attaining sup mu(x, lambda) / |lambda| among the candidate
// directions (projection direction, facet normals, normals to the affine span).
// For unstable x the list has exactly one element.
std::vector<Coweight> adapted_ops(const WeightedSupport& x);

// Candidate directions, both signs: normals of hyperplanes through subsets of
// the support and 0, and metric normals of affine spans of support subsets.
std::vector<Coweight> candidate_directions(const WeightedSupport& x);

// Extreme points of the convex hull of the support.
std::vector<Weight> polytope_vertices(const WeightedSupport& x);

// Indices (into the support) of vertices on the face of the polytope seen from
// 0: those chi with (p, chi) = (p, p), p the nearest point. Throws InputError
// when 0 lies in the polytope.
std::vector<int> face_viewed_from_zero(const WeightedSupport& x);

}  // namespace lrcone
