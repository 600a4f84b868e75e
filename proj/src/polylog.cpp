#include "schurpb/polylog.hpp"

#include <boost/math/special_functions/expint.hpp>

#include <cmath>
#include <limits>
#include <map>

#include "nested_sums.hpp"
#include "polylog_eval.hpp"
#include "quadrature.hpp"
#include "schur_dp.hpp"
#include "tail_bounds.hpp"

namespace schurpb {

std::vector<std::string> corner_variables(const Partition& shape) {
  std::vector<std::string> out;
  for (const Cell& c : corners(shape)) out.push_back("z" + to_string(c));
  return out;
}

MultiSeries schur_polylog_series(const Partition& shape, const WeightTableau& k,
                                 std::span<const int> orders) {
  if (k.shape() != shape)
    throw InputError("weight tableau shape " + k.shape().to_string() +
                     " does not match " + shape.to_string());
  const auto cn = corners(shape);
  if (orders.size() != cn.size())
    throw InputError("expected " + std::to_string(cn.size()) + " orders, got " +
                     std::to_string(orders.size()));
  MultiSeries out(corner_variables(shape), std::vector<int>(orders.begin(), orders.end()));
  std::vector<int> corner_index;
  for (const Cell& c : cn) corner_index.push_back(shape.cell_index(c));

  std::map<std::pair<int, int>, BigInt> powers;
  auto power = [&](int m, int e) -> const BigInt& {
    auto [it, fresh] = powers.try_emplace({m, e});
    if (fresh) it->second = pow_int(m, static_cast<unsigned long>(e));
    return it->second;
  };
  std::vector<int> exps(cn.size());
  for_each_ssyt(shape, orders, [&](std::span<const int> entry) {
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < entry.size(); ++i) {
      const int e = k[i];
      if (e > 0)
        den *= power(entry[i], e);
      else if (e < 0)
        num *= power(entry[i], -e);
    }
    for (std::size_t c = 0; c < cn.size(); ++c)
      exps[c] = entry[static_cast<std::size_t>(corner_index[c])];
    out.coeff(exps) += make_rational(num, den);
  });
  return out;
}

void check_numeric_weights(const Partition& shape, const WeightTableau& k) {
  if (k.shape() != shape)
    throw InputError("weight tableau shape " + k.shape().to_string() +
                     " does not match " + shape.to_string());
  const auto cells = shape.cells();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] < 1)
      throw DomainError("weight at cell " + to_string(cells[i]) +
                        " must be >= 1 for numeric evaluation");
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxCutoff = 1L << 24;

// Single box, 0 < z < 1: the summand u^{-k} z^u decreases, so the tail
// beyond M lies between the integrals from M+1 and from M, each equal to
// a^{1-k} E_k(a beta) with beta = -ln z.
ValueWithBound single_box_eval(int k, double z, double tol) {
  const double beta = -std::log(z);
  auto tail_integral = [&](double a) {
    return std::pow(a, 1.0 - k) * boost::math::expint(static_cast<unsigned>(k), a * beta);
  };
  double sum = 0.0, comp = 0.0, zm = 1.0;
  long m = 0, target = 16;
  ValueWithBound out;
  while (true) {
    for (++m; m <= target; ++m) {
      zm *= z;
      const double x = zm * detail::inverse_power(m, k);
      const double t = sum + x;
      comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    m = target;
    const double hi = tail_integral(static_cast<double>(m));
    const double lo = tail_integral(static_cast<double>(m + 1));
    out.value = sum + comp + 0.5 * (hi + lo);
    out.bound = 0.5 * (hi - lo) + 4.0 * kEps * out.value;
    if (out.bound <= tol || m >= kMaxCutoff) break;
    target *= 2;
  }
  return out;
}

// sum_{u > M} z^u u^{-k} for 0 <= z < 1, bracketed by the integrals of the
// decreasing summand from M+1 and from M.
detail::Bracket single_cell_tail(int k, double z, long m) {
  if (z <= 0.0) return {0.0, 0.0};
  const double beta = -std::log(z);
  auto integral = [&](double a) {
    return std::pow(a, 1.0 - k) * boost::math::expint(static_cast<unsigned>(k), a * beta);
  };
  const double hi = integral(static_cast<double>(m));
  const double lo = integral(static_cast<double>(m + 1));
  return {lo, std::max(lo, hi)};
}

}  // namespace

namespace detail {

PolylogEvaluator::PolylogEvaluator(const Partition& shape, const WeightTableau& k)
    : shape_(shape),
      kexp_(k.values().begin(), k.values().end()),
      lattice_(build_strip_lattice(shape)) {
  const auto cn = corners(shape);
  corner_count_ = cn.size();
  corner_of_.assign(static_cast<std::size_t>(shape.weight()), -1);
  for (std::size_t c = 0; c < cn.size(); ++c) {
    corner_cells_.push_back(shape.cell_index(cn[c]));
    corner_of_[static_cast<std::size_t>(corner_cells_.back())] = static_cast<int>(c);
  }
  tails_ = std::make_unique<SkewTails>(lattice_, kexp_);
  corner_only_.resize(lattice_.states.size());
  for (std::size_t st = 0; st < lattice_.states.size(); ++st) {
    std::vector<int> ids;
    for (int cell : lattice_.skew_cells(static_cast<int>(st))) {
      const int c = corner_of_[static_cast<std::size_t>(cell)];
      if (c < 0) {
        ids.clear();
        break;
      }
      ids.push_back(c);
    }
    corner_only_[st] = std::move(ids);
  }
}

ValueWithBound PolylogEvaluator::eval(std::span<const double> point, double tol) const {
  double rho = 0.0;
  bool nonnegative = true;
  for (double z : point) {
    rho = std::max(rho, std::abs(z));
    nonnegative = nonnegative && z >= 0.0;
  }
  if (rho == 0.0) return {0.0, 0.0, Method::TruncatedSum};
  if (shape_.weight() == 1 && point[0] > 0.0)
    return single_box_eval(static_cast<int>(kexp_[0]), point[0], tol);

  std::vector<double> zpow(corner_count_, 1.0);
  SchurSumDP dp(
      lattice_,
      [&](long v, std::span<double> w) {
        for (std::size_t c = 0; c < corner_count_; ++c) zpow[c] *= point[c];
        for (std::size_t i = 0; i < w.size(); ++i) {
          w[i] = inverse_power(v, kexp_[i]);
          if (corner_of_[i] >= 0) w[i] *= zpow[static_cast<std::size_t>(corner_of_[i])];
        }
      },
      !nonnegative);

  ValueWithBound out;
  long m = 16;
  const bool structured = nonnegative && tails_->convergent();
  std::vector<Bracket> single(corner_count_);
  while (true) {
    dp.advance_to(m);
    const double rounding = 8.0 * (shape_.weight() + 4) * kEps * dp.abs_value(lattice_.full);
    if (structured) {
      // Corner-only skews factor into single-cell tails, bracketed exactly;
      // the rest gets the zeta tail scaled by prod x_c^{M+1}.
      for (std::size_t c = 0; c < corner_count_; ++c)
        single[c] = single_cell_tail(
            static_cast<int>(kexp_[static_cast<std::size_t>(corner_cells_[c])]), point[c], m);
      double value = dp.full_value(), half = 0.0;
      for (std::size_t st = 0; st < lattice_.states.size(); ++st) {
        const int si = static_cast<int>(st);
        if (si == lattice_.full) continue;
        const double weight = dp.value(si);
        if (weight == 0.0) continue;
        double lo, hi;
        if (!corner_only_[st].empty()) {
          lo = hi = 1.0;
          for (int c : corner_only_[st]) {
            lo *= single[static_cast<std::size_t>(c)].lo;
            hi *= single[static_cast<std::size_t>(c)].hi;
          }
        } else {
          lo = 0.0;
          hi = tails_->bracket(si, static_cast<double>(m)).hi;
          for (int cell : lattice_.skew_cells(si)) {
            const int c = corner_of_[static_cast<std::size_t>(cell)];
            if (c >= 0) hi *= std::pow(point[static_cast<std::size_t>(c)], static_cast<double>(m + 1));
          }
        }
        value += weight * 0.5 * (lo + hi);
        half += weight * 0.5 * (hi - lo);
      }
      out.value = value;
      out.bound = half + rounding;
    } else {
      double ub = geometric_tail(shape_.weight(), rho, m);
      if (tails_->convergent()) {
        // Entries beyond M at a corner carry at least |z_c|^{M+1}; the rest of
        // the weight is bounded by the zeta tail of the skew diagram.
        double zeta_ub = 0.0;
        for (std::size_t st = 0; st < lattice_.states.size(); ++st) {
          const int si = static_cast<int>(st);
          if (si == lattice_.full) continue;
          const double scale =
              std::pow(rho, static_cast<double>(m + 1) * tails_->corners_in_skew(si));
          if (scale == 0.0) continue;
          zeta_ub += dp.abs_value(si) * scale * tails_->bracket(si, static_cast<double>(m)).hi;
        }
        ub = std::min(ub, zeta_ub);
      }
      out.value = dp.full_value();
      out.bound = ub + rounding;
    }
    if (out.bound <= tol || m >= kMaxCutoff) break;
    m *= 2;
  }
  out.method = Method::TruncatedSum;
  return out;
}

}  // namespace detail

ValueWithBound schur_polylog_eval(const Partition& shape, const WeightTableau& k,
                                  std::span<const double> point, double tol) {
  check_numeric_weights(shape, k);
  const auto cn = corners(shape);
  if (point.size() != cn.size())
    throw InputError("expected " + std::to_string(cn.size()) + " point coordinates");
  for (double z : point)
    if (!(std::abs(z) < 1.0))
      throw DomainError("polylog point must lie in the open unit polydisc");
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  return detail::PolylogEvaluator(shape, k).eval(point, tol);
}

ValueWithBound multiple_polylog_eval(std::span<const int> index, double z,
                                     double tol) {
  if (index.empty()) throw InputError("multiple polylog needs a nonempty index");
  for (int k : index)
    if (k < 1) throw DomainError("multiple polylog indices must be >= 1");
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (z == 1.0) {
    if (index.back() < 2)
      throw DomainError("multiple polylog diverges at z = 1 when the last index is 1");
    std::vector<double> t(index.begin(), index.end());
    return detail::nested_zeta(t, false, tol);
  }
  if (!(std::abs(z) < 1.0))
    throw DomainError("multiple polylog needs |z| < 1 or z = 1");
  const std::size_t r = index.size();
  // prefix[j] = sum_{m_1<...<m_j<=m} prod m_i^{-k_i}; the last level carries z^m.
  std::vector<double> prefix(r, 0.0);
  prefix[0] = 1.0;
  double sum = 0.0, comp = 0.0, abs_sum = 0.0, zm = 1.0;
  long m = 0, target = 16;
  ValueWithBound out;
  out.method = Method::TruncatedSum;
  while (true) {
    for (++m; m <= target; ++m) {
      zm *= z;
      const double x = prefix[r - 1] * detail::inverse_power(m, index[r - 1]) * zm;
      const double t = sum + x;
      comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
      abs_sum += std::abs(x);
      for (std::size_t j = r - 1; j >= 1; --j)
        prefix[j] += prefix[j - 1] * detail::inverse_power(m, index[j - 1]);
    }
    m = target;
    // prefix_{r-1}(m-1) <= H_m^{r-1} <= m^{r-1}; weights <= 1.
    const double tail = detail::geometric_tail(static_cast<int>(r) - 1, std::abs(z), m);
    out.value = sum + comp;
    out.bound = tail + 8.0 * (r + 4) * kEps * abs_sum;
    if (out.bound <= tol || m >= kMaxCutoff) break;
    target *= 2;
  }
  return out;
}

namespace {

// F_k at the grid nodes and at the right end of [0, z].
double one_minus_exp_on_grid(int k, const detail::PanelGrid& grid) {
  std::vector<double> f(grid.size()), g(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) f[i] = -grid.nodes()[i];
  double end = -grid.panels().back().b;
  for (int j = 2; j <= k; ++j) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      g[i] = f[i] / -std::expm1(-grid.nodes()[i]);
    end = grid.integrate(g);
    f = grid.cumulative_from_left(g, 0.0);
  }
  return end;
}

}  // namespace

ValueWithBound polylog_at_one_minus_exp(int k, double z, double tol) {
  if (k < 1) throw DomainError("polylog_at_one_minus_exp needs k >= 1");
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("polylog_at_one_minus_exp needs z >= 0");
  if (z == 0.0) return {0.0, 0.0, Method::Quadrature};
  if (k == 1) return {-z, 0.0, Method::Quadrature};
  // Li_k(1 - e^u) is analytic in a strip of half-width pi about the real
  // axis, so unit panels converge geometrically.
  auto panels = detail::uniform_panels(0.0, z, 1.0);
  double coarse = one_minus_exp_on_grid(k, detail::PanelGrid(panels));
  ValueWithBound out{coarse, 0.0, Method::Quadrature};
  for (int level = 0; level < 8; ++level) {
    panels = detail::halve(panels);
    const double fine = one_minus_exp_on_grid(k, detail::PanelGrid(panels));
    out.value = fine;
    out.bound = std::abs(fine - coarse) + 16.0 * kEps * std::abs(fine) * k;
    if (out.bound <= tol) break;
    coarse = fine;
  }
  return out;
}

}  // namespace schurpb
