#pragma once

// Integral-comparison brackets for the tails of nested sums.

#include <span>
#include <vector>

#include "schur_dp.hpp"

namespace schurpb::detail {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  double half_width() const { return 0.5 * (hi - lo); }
};

// sum_{N < m_1 < ... < m_q} prod_p m_p^{-t_p}. Comparing each innermost sum
// with an integral gives
//   (N+q)^{q-W}/D <= tail <= N^{q-W}/D,
// W the total weight and D = prod_p (W_p - (q-p+1)) with W_p the suffix
// weight from p on. Needs every factor of D positive, which holds for
// t_p >= 1 and t_q > 1; otherwise hi is +inf.
Bracket strict_tail(std::span<const double> t, double n);

// Same for the weak sum N < m_1 <= ... <= m_q, expanded over the contiguous
// merges of t into strict sums.
Bracket star_tail(std::span<const double> t, double n);

// Brackets for the sum over fillings of lambda/mu with entries > N, one per
// lattice state mu, via the level maps of the skew diagram.
class SkewTails {
 public:
  SkewTails(const StripLattice& lattice, std::span<const double> exponents);

  Bracket bracket(int state, double n) const;
  int corners_in_skew(int state) const {
    return corner_count_[static_cast<std::size_t>(state)];
  }
  // Every collapsed index of every skew converges.
  bool convergent() const { return convergent_; }

 private:
  std::vector<std::vector<std::vector<double>>> collapsed_;
  std::vector<int> corner_count_;
  bool convergent_ = true;
};

// sum_{m > M} m^n rho^m for 0 <= rho < 1 (+inf if the sum is not small
// enough to matter, i.e. never underestimates).
double geometric_tail(int n, double rho, long m);

}  // namespace schurpb::detail
