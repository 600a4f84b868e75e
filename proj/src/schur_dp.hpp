#pragma once

// Value-by-value dynamic programme for weighted sums over semistandard
// tableaux. An SSYT with entries <= M is a chain of partitions
// 0 = mu_0 <= mu_1 <= ... <= mu_M = lambda whose successive differences are
// horizontal strips (the cells holding entry v). Writing S_v(mu) for the
// weighted count of fillings of mu with entries <= v,
//
//   S_v(mu) = sum_{nu: mu/nu horizontal strip} S_{v-1}(nu) prod_{c in mu/nu} w_c(v).

#include <functional>
#include <span>
#include <vector>

#include "schurpb/shapes.hpp"

namespace schurpb::detail {

struct StripMove {
  int from = 0;              // state index of nu
  std::vector<int> cells;    // row-major indices (into lambda) of mu/nu
};

struct StripLattice {
  Partition shape;
  std::vector<std::vector<int>> states;       // row lengths, padded to l(lambda)
  std::vector<std::vector<StripMove>> moves;  // nonempty strips into each state
  std::vector<int> by_size_desc;              // update order
  int empty = 0;
  int full = 0;

  int weight(int state) const;
  // Cells of lambda / states[state], as row-major indices into lambda.
  std::vector<int> skew_cells(int state) const;
};

StripLattice build_strip_lattice(const Partition& shape);

// Fills weights[c] = w_c(v) for every cell c of lambda (row-major).
using CellWeights = std::function<void(long v, std::span<double> weights)>;

class SchurSumDP {
 public:
  SchurSumDP(const StripLattice& lattice, CellWeights weights, bool track_abs);

  void advance_to(long m);
  long level() const { return level_; }

  double value(int state) const { return sum_[state] + comp_[state]; }
  double full_value() const { return value(lattice_->full); }
  // Same DP with |w| (only when track_abs); bounds rounding and signed tails.
  double abs_value(int state) const;

 private:
  const StripLattice* lattice_;
  CellWeights weights_;
  bool track_abs_;
  long level_ = 0;
  std::vector<double> sum_, comp_, abs_;
  std::vector<double> w_;
};

// Per-value weight v^{-s} with an exact-ish integer fast path.
double inverse_power(long v, double s);

}  // namespace schurpb::detail
