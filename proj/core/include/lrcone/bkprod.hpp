#pragma once

#include <vector>

#include "lrcone/schubert.hpp"

namespace lrcone {

// -(rho + w~ rho), w~ the longest element of coset c.
Weight gamma(const Parabolic& p, int c);
// Sum of the T-weights of g / (b + w~ p): the roots outside R+ and outside
// w~(R+ u R_L). Independent of the closed formula above.
Weight gamma_from_roots(const Parabolic& p, int c);
// w~^{-1} gamma(c).
Weight theta(const Parabolic& p, int c);

// Integer basis of the cocharacters of the connected center of the Levi:
// coweights killing every Levi simple root.
std::vector<Coweight> levi_center_basis(const Parabolic& p);

// Sum_i theta(ws[i]) - theta(e), paired against each center basis vector.
std::vector<Int> theta_defect(const Parabolic& p, const std::vector<int>& ws);

// Point-class coefficient 1 and vanishing theta defect on the center of the
// Levi. The FlagSpace fixes the parabolic (Levi = complement of I).
bool levi_movable(const FlagSpace& space, const std::vector<int>& ws);

// rho-form of the character condition for lambda dominant, w in slot one and
// the s remaining slots in ws_hat, all cosets of P(lambda):
// <w lambda, rho> + sum <w^_i lambda, rho> = <lambda, rho> + s <lambda, 2 rho^lambda - rho>.
bool rho_form_condition(const Parabolic& p, const Coweight& lambda, int w, const std::vector<int>& ws_hat);
// Same condition in the gamma form:
// sum_i <w_i lambda, gamma(w_i)> - <lambda, gamma(e)> = 0 over all s+1 slots.
bool gamma_form_condition(const Parabolic& p, const Coweight& lambda, const std::vector<int>& ws);

}  // namespace lrcone
