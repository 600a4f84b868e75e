#pragma once

// Euler-Zagier nested sums evaluated by prefix recursion plus tail brackets.

#include <span>

#include "schurpb/value.hpp"

namespace schurpb::detail {

// zeta(t) (strict) or zeta-star(t) (weak). Requires t_i >= 1 and t_r > 1.
// Splitting at the last index <= N,
//   zeta(t) = sum_j P_j(N) * zeta_N(t_{j+1}, ..., t_r),
// where P_j are the truncated prefix sums and zeta_N counts indices > N; the
// latter is replaced by the midpoint of its bracket. N doubles until the
// accumulated half-widths fall below tol.
ValueWithBound nested_zeta(std::span<const double> t, bool star, double tol);

}  // namespace schurpb::detail
