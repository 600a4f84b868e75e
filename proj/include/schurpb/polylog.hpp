#pragma once

// The Schur type polylogarithm
//
//   Li_k^lambda(z) = sum over SSYT (m_ij) of prod_{corners c} z_c^{m_c}
//                    / prod_{(i,j)} m_ij^{k_ij}
//
// as an exact truncated series and as a numeric function on the open unit
// polydisc, plus the classical multiple polylogarithm.

#include <span>
#include <string>
#include <vector>

#include "schurpb/series.hpp"
#include "schurpb/shapes.hpp"
#include "schurpb/value.hpp"

namespace schurpb {

// One variable per corner, named after the corner, e.g. "z(2,1)".
std::vector<std::string> corner_variables(const Partition& shape);

// Exact truncation: corner entries <= orders[c]. Weights may be any integer.
MultiSeries schur_polylog_series(const Partition& shape, const WeightTableau& k,
                                 std::span<const int> orders);

// Real point with |z_c| < 1, weights >= 1. The tail beyond corner entry M is
// bounded by the smaller of sum_{m>M} m^{|lambda|} rho^m (rho = max |z_c|)
// and, for admissible k, the tail of the zeta sum scaled by |z_c|^{M+1}.
ValueWithBound schur_polylog_eval(const Partition& shape, const WeightTableau& k,
                                  std::span<const double> point, double tol);

// Li_{k_1..k_r}(z) = sum_{0<m_1<...<m_r} z^{m_r} / prod m_i^{k_i}
// for |z| < 1, or z = 1 with k_r >= 2.
ValueWithBound multiple_polylog_eval(std::span<const int> index, double z,
                                     double tol);

// Li_k(1 - e^z) for z >= 0 via Li_1(1-e^z) = -z and
// Li_k(1-e^z) = int_0^z Li_{k-1}(1-e^u) e^u/(e^u-1) du.
ValueWithBound polylog_at_one_minus_exp(int k, double z, double tol);

void check_numeric_weights(const Partition& shape, const WeightTableau& k);

}  // namespace schurpb
