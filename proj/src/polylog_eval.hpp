#pragma once

// Reusable numeric Schur polylog evaluator: the strip lattice and skew tail
// data are built once per (shape, k) and shared by every point.

#include <memory>
#include <span>
#include <vector>

#include "schurpb/shapes.hpp"
#include "schurpb/value.hpp"
#include "schur_dp.hpp"
#include "tail_bounds.hpp"

namespace schurpb::detail {

class PolylogEvaluator {
 public:
  PolylogEvaluator(const Partition& shape, const WeightTableau& k);

  // Caller guarantees |z_c| < 1 and tol > 0.
  ValueWithBound eval(std::span<const double> point, double tol) const;

 private:
  Partition shape_;
  std::vector<double> kexp_;
  std::vector<int> corner_of_;
  std::vector<int> corner_cells_;
  std::size_t corner_count_ = 0;
  StripLattice lattice_;
  std::unique_ptr<SkewTails> tails_;
  // Per state: the corner ids of lambda/mu when it holds corners only
  // (those tails factor into single-cell sums), else empty.
  std::vector<std::vector<int>> corner_only_;
};

}  // namespace schurpb::detail
