#include "schur_dp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace schurpb::detail {

int StripLattice::weight(int state) const {
  const auto& rows = states[static_cast<std::size_t>(state)];
  return std::accumulate(rows.begin(), rows.end(), 0);
}

std::vector<int> StripLattice::skew_cells(int state) const {
  const auto& mu = states[static_cast<std::size_t>(state)];
  std::vector<int> out;
  int idx = 0;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.row_length(i); ++j, ++idx)
      if (j > mu[static_cast<std::size_t>(i - 1)]) out.push_back(idx);
  return out;
}

StripLattice build_strip_lattice(const Partition& shape) {
  StripLattice lat;
  lat.shape = shape;
  const int len = shape.length();
  // All partitions contained in the shape, padded with zeros.
  std::vector<int> cur(static_cast<std::size_t>(len), 0);
  std::function<void(int)> rec = [&](int row) {
    if (row == len) {
      lat.states.push_back(cur);
      return;
    }
    const int cap = row == 0 ? shape.row_length(1)
                             : std::min(shape.row_length(row + 1),
                                        cur[static_cast<std::size_t>(row - 1)]);
    for (int v = 0; v <= cap; ++v) {
      cur[static_cast<std::size_t>(row)] = v;
      rec(row + 1);
    }
    cur[static_cast<std::size_t>(row)] = 0;
  };
  rec(0);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < lat.states.size(); ++i)
    index[lat.states[i]] = static_cast<int>(i);
  lat.empty = index.at(std::vector<int>(static_cast<std::size_t>(len), 0));
  lat.full = index.at(shape.parts());

  std::vector<int> row_start(static_cast<std::size_t>(len), 0);
  for (int i = 1; i < len; ++i)
    row_start[static_cast<std::size_t>(i)] =
        row_start[static_cast<std::size_t>(i - 1)] + shape.row_length(i);

  lat.moves.resize(lat.states.size());
  for (std::size_t s = 0; s < lat.states.size(); ++s) {
    const auto& mu = lat.states[s];
    // nu interlaces mu: mu_{i+1} <= nu_i <= mu_i.
    std::vector<int> nu(static_cast<std::size_t>(len), 0);
    std::function<void(int)> pick = [&](int row) {
      if (row == len) {
        if (nu == mu) return;
        StripMove mv;
        mv.from = index.at(nu);
        for (int i = 0; i < len; ++i)
          for (int j = nu[static_cast<std::size_t>(i)]; j < mu[static_cast<std::size_t>(i)]; ++j)
            mv.cells.push_back(row_start[static_cast<std::size_t>(i)] + j);
        lat.moves[s].push_back(std::move(mv));
        return;
      }
      const int lo = row + 1 < len ? mu[static_cast<std::size_t>(row + 1)] : 0;
      for (int v = lo; v <= mu[static_cast<std::size_t>(row)]; ++v) {
        nu[static_cast<std::size_t>(row)] = v;
        pick(row + 1);
      }
    };
    pick(0);
  }
  lat.by_size_desc.resize(lat.states.size());
  std::iota(lat.by_size_desc.begin(), lat.by_size_desc.end(), 0);
  std::stable_sort(lat.by_size_desc.begin(), lat.by_size_desc.end(),
                   [&](int a, int b) { return lat.weight(a) > lat.weight(b); });
  return lat;
}

SchurSumDP::SchurSumDP(const StripLattice& lattice, CellWeights weights,
                       bool track_abs)
    : lattice_(&lattice), weights_(std::move(weights)), track_abs_(track_abs) {
  const std::size_t n = lattice.states.size();
  sum_.assign(n, 0.0);
  comp_.assign(n, 0.0);
  if (track_abs_) abs_.assign(n, 0.0);
  sum_[static_cast<std::size_t>(lattice.empty)] = 1.0;
  if (track_abs_) abs_[static_cast<std::size_t>(lattice.empty)] = 1.0;
  w_.assign(static_cast<std::size_t>(lattice.shape.weight()), 0.0);
}

double SchurSumDP::abs_value(int state) const {
  return track_abs_ ? abs_[static_cast<std::size_t>(state)]
                    : std::abs(value(state));
}

void SchurSumDP::advance_to(long m) {
  const auto& lat = *lattice_;
  for (long v = level_ + 1; v <= m; ++v) {
    weights_(v, w_);
    for (int s : lat.by_size_desc) {
      const auto us = static_cast<std::size_t>(s);
      double sum = sum_[us], comp = comp_[us];
      double abs_acc = track_abs_ ? abs_[us] : 0.0;
      for (const StripMove& mv : lat.moves[us]) {
        double prod = 1.0;
        for (int c : mv.cells) prod *= w_[static_cast<std::size_t>(c)];
        const auto uf = static_cast<std::size_t>(mv.from);
        const double x = (sum_[uf] + comp_[uf]) * prod;
        // Neumaier compensated accumulation.
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
        if (track_abs_) abs_acc += abs_[uf] * std::abs(prod);
      }
      sum_[us] = sum;
      comp_[us] = comp;
      if (track_abs_) abs_[us] = abs_acc;
    }
  }
  level_ = std::max(level_, m);
}

double inverse_power(long v, double s) {
  const double x = static_cast<double>(v);
  if (s == 1.0) return 1.0 / x;
  if (s == 2.0) return 1.0 / (x * x);
  if (s == 3.0) return 1.0 / (x * x * x);
  if (s == 0.0) return 1.0;
  return std::pow(x, -s);
}

}  // namespace schurpb::detail
