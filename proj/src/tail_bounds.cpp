#include "tail_bounds.hpp"

#include <cmath>
#include <limits>

namespace schurpb::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Bracket strict_tail(std::span<const double> t, double n) {
  const std::size_t q = t.size();
  if (q == 0) return {1.0, 1.0};
  double suffix = 0.0, denom = 1.0;
  for (std::size_t p = q; p-- > 0;) {
    suffix += t[p];
    const double f = suffix - static_cast<double>(q - p);
    if (!(f > 0.0) || t[p] < 1.0) return {0.0, kInf};
    denom *= f;
  }
  const double e = static_cast<double>(q) - suffix;  // q - W < 0
  const double hi = std::exp(e * std::log(n)) / denom;
  const double lo = std::exp(e * std::log(n + static_cast<double>(q))) / denom;
  return {lo, hi};
}

Bracket star_tail(std::span<const double> t, double n) {
  const std::size_t q = t.size();
  if (q == 0) return {1.0, 1.0};
  Bracket total;
  // Each of the q-1 gaps is either '<' or '='; '=' merges neighbours.
  const std::size_t masks = std::size_t{1} << (q - 1);
  std::vector<double> merged;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    merged.assign(1, t[0]);
    for (std::size_t p = 1; p < q; ++p) {
      if (mask & (std::size_t{1} << (p - 1)))
        merged.back() += t[p];
      else
        merged.push_back(t[p]);
    }
    const Bracket b = strict_tail(merged, n);
    total.lo += b.lo;
    total.hi += b.hi;
  }
  return total;
}

SkewTails::SkewTails(const StripLattice& lattice,
                     std::span<const double> exponents) {
  const auto cells = lattice.shape.cells();
  const auto corner_cells = corners(lattice.shape);
  collapsed_.resize(lattice.states.size());
  corner_count_.assign(lattice.states.size(), 0);
  for (std::size_t s = 0; s < lattice.states.size(); ++s) {
    const auto skew = lattice.skew_cells(static_cast<int>(s));
    std::vector<Cell> skew_pos;
    for (int idx : skew) {
      const Cell c = cells[static_cast<std::size_t>(idx)];
      skew_pos.push_back(c);
      for (const Cell& k : corner_cells)
        if (k == c) ++corner_count_[s];
    }
    for (const auto& levels : level_assignments(skew_pos)) {
      int depth = 0;
      for (int l : levels) depth = std::max(depth, l);
      std::vector<double> t(static_cast<std::size_t>(depth), 0.0);
      for (std::size_t i = 0; i < skew.size(); ++i)
        t[static_cast<std::size_t>(levels[i] - 1)] +=
            exponents[static_cast<std::size_t>(skew[i])];
      if (std::isinf(strict_tail(t, 1.0).hi)) convergent_ = false;
      collapsed_[s].push_back(std::move(t));
    }
  }
}

Bracket SkewTails::bracket(int state, double n) const {
  Bracket total;
  for (const auto& t : collapsed_[static_cast<std::size_t>(state)]) {
    const Bracket b = strict_tail(t, n);
    total.lo += b.lo;
    total.hi += b.hi;
  }
  return total;
}

double geometric_tail(int n, double rho, long m) {
  if (rho <= 0.0) return 0.0;
  if (rho >= 1.0) return kInf;
  const double lr = std::log(rho);
  // Terms m^n rho^m decrease once m > n / (-ln rho).
  const double turn = static_cast<double>(n) / -lr;
  double total = 0.0;
  long k = m + 1;
  // Sum explicitly up to the turning point (bounded work), then close with a
  // geometric majorant.
  const long explicit_limit = static_cast<long>(std::min(turn + 1.0, 1e7));
  for (; k <= explicit_limit; ++k)
    total += std::exp(static_cast<double>(n) * std::log(static_cast<double>(k)) +
                      static_cast<double>(k) * lr);
  if (static_cast<double>(k) <= turn) return kInf;
  const double term = std::exp(static_cast<double>(n) * std::log(static_cast<double>(k)) +
                               static_cast<double>(k) * lr);
  const double ratio =
      std::exp(static_cast<double>(n) * std::log1p(1.0 / static_cast<double>(k)) + lr);
  if (ratio >= 1.0) return kInf;
  return total + term / (1.0 - ratio);
}

}  // namespace schurpb::detail
