#pragma once

#include <vector>

#include "lrcone/arith.hpp"

namespace lrcone::poly {

// maximize objective . x subject to ge_rows[k] . x >= ge_rhs[k] and
// eq_rows[k] . x == eq_rhs[k]; x is free unless nonnegative is set. Exact
// two-phase simplex with Bland's rule.
struct LinearProgram {
  int nvars = 0;
  bool nonnegative = false;
  std::vector<QVec> ge_rows;
  QVec ge_rhs;
  std::vector<QVec> eq_rows;
  QVec eq_rhs;
  QVec objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVec x;
  Q value;
};

LpResult solve(const LinearProgram& lp);

// Extreme rays (primitive integer) of the pointed cone {x : a . x >= 0 for a in rows}.
// Throws ConsistencyError if the rows do not have rank n.
std::vector<ZVec> extreme_rays(const std::vector<ZVec>& rows, int n);

// Primitive inward facet normals of the cone generated by gens, which must
// span the whole space.
std::vector<ZVec> hull_facets(const std::vector<ZVec>& gens, int n);

// Face of the cone {x : ineqs[k] . x >= 0} cut out by equalities.
struct FaceInfo {
  std::vector<int> tight;  // inequalities vanishing on the whole face
  QVec interior;           // a point of the relative interior
  int dimension = 0;
};

FaceInfo face_of(const std::vector<QVec>& ineqs, const std::vector<QVec>& equalities, int n);

// Tight witness and violator for dropping inequality k: the witness makes k an
// equality and every other inequality strict; the violator breaks only k.
struct Certificate {
  bool irredundant = false;
  IVec witness;
  IVec violator;
};

Certificate irredundancy_certificate(const std::vector<QVec>& ineqs, int k, int n);

// All faces of {x : ineqs . x >= 0} of the given codimension, each identified
// by its tight set; the cone must be full-dimensional.
std::vector<FaceInfo> faces_of_codim(const std::vector<QVec>& ineqs, int n, int codim);

QVec to_qvec(const ZVec& v);
ZVec to_zvec(const IVec& v);

}  // namespace lrcone::poly
