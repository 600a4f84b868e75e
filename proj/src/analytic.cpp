#include "schurpb/analytic.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "schurpb/polylog.hpp"
#include "nested_sums.hpp"
#include "polylog_eval.hpp"
#include "quadrature.hpp"
#include "schur_dp.hpp"
#include "tail_bounds.hpp"

namespace schurpb {

std::string to_string(Method m) {
  switch (m) {
    case Method::TruncatedSum: return "truncated-sum";
    case Method::Quadrature: return "quadrature";
    case Method::DerivedSeries: return "derived-series";
    case Method::TableLookup: return "table-lookup";
  }
  return "unknown";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxCutoff = 1L << 22;

void check_tol(double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
}

void check_mzv_index(std::span<const double> s) {
  if (s.empty()) throw InputError("zeta index must be nonempty");
  for (double x : s)
    if (!std::isfinite(x) || x < 1.0)
      throw DomainError("zeta index entries must be >= 1");
  if (!(s.back() > 1.0)) throw DomainError("last zeta index entry must be > 1");
}

}  // namespace

ValueWithBound mzv_eval(std::span<const double> s, double tol) {
  check_mzv_index(s);
  check_tol(tol);
  return detail::nested_zeta(s, false, tol);
}

ValueWithBound mzv_star_eval(std::span<const double> s, double tol) {
  check_mzv_index(s);
  check_tol(tol);
  return detail::nested_zeta(s, true, tol);
}

bool is_admissible(const Partition& shape, std::span<const double> s) {
  if (s.size() != static_cast<std::size_t>(shape.weight())) return false;
  std::vector<bool> corner(s.size(), false);
  for (const Cell& c : corners(shape)) corner[static_cast<std::size_t>(shape.cell_index(c))] = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i]) || s[i] < 1.0) return false;
    if (corner[i] && !(s[i] > 1.0)) return false;
  }
  return true;
}

ValueWithBound schur_zeta_eval(const Tableau<double>& s, double tol) {
  check_tol(tol);
  const Partition& shape = s.shape();
  if (!is_admissible(shape, s.values()))
    throw DomainError("Schur zeta of " + shape.to_string() +
                      " needs entries >= 1 and corner entries > 1");
  const detail::StripLattice lattice = detail::build_strip_lattice(shape);
  const std::vector<double> exps(s.values().begin(), s.values().end());
  const detail::SkewTails tails(lattice, exps);
  detail::SchurSumDP dp(
      lattice,
      [&](long v, std::span<double> w) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = detail::inverse_power(v, exps[i]);
      },
      false);
  // Split every tableau at the entries <= M: the cells holding them form a
  // state mu, the rest is a filling of lambda/mu with entries > M.
  ValueWithBound out;
  long m = 64;
  while (true) {
    dp.advance_to(m);
    double value = dp.full_value(), half = 0.0;
    for (std::size_t st = 0; st < lattice.states.size(); ++st) {
      const int si = static_cast<int>(st);
      if (si == lattice.full) continue;
      const detail::Bracket b = tails.bracket(si, static_cast<double>(m));
      value += dp.value(si) * b.mid();
      half += dp.value(si) * b.half_width();
    }
    out.value = value;
    out.bound = half + 8.0 * (shape.weight() + 4) * kEps * std::abs(value);
    if (out.bound <= tol || m >= kMaxCutoff) break;
    m *= 2;
  }
  out.method = Method::TruncatedSum;
  return out;
}

std::vector<DecompositionTerm> schur_zeta_decomposition(const Tableau<double>& s,
                                                        bool star, double tol) {
  check_tol(tol);
  if (!is_admissible(s.shape(), s.values()))
    throw DomainError("Schur zeta of " + s.shape().to_string() +
                      " needs entries >= 1 and corner entries > 1");
  const auto comps = star ? decompose_to_mzv_star(s) : decompose_to_mzv(s);
  std::vector<DecompositionTerm> out;
  for (const auto& c : comps) {
    DecompositionTerm t;
    t.index = c.parts;
    t.sign = c.sign;
    t.value = star ? mzv_star_eval(t.index, tol) : mzv_eval(t.index, tol);
    out.push_back(std::move(t));
  }
  return out;
}

ValueWithBound schur_zeta_via_decomposition(const Tableau<double>& s, bool star,
                                            double tol) {
  const auto terms = schur_zeta_decomposition(s, star, tol);
  double value = 0.0, comp = 0.0, bound = 0.0, mag = 0.0;
  for (const auto& t : terms) {
    const double x = t.sign * t.value.value;
    const double sum = value + x;
    comp += std::abs(value) >= std::abs(x) ? (value - sum) + x : (x - sum) + value;
    value = sum;
    bound += t.value.bound;
    mag += std::abs(x);
  }
  return {value + comp, bound + 4.0 * terms.size() * kEps * mag, Method::DerivedSeries};
}

// --- integral representations --------------------------------------------

namespace {

double gamma_q(double a, double x) { return boost::math::gamma_q(a, x); }

// Li_w(x) for small x >= 0 directly from the series.
double strict_polylog_small(std::span<const int> w, double x) {
  // Li_w(x) <= x^r / r!; ask for far more than double precision relative to that.
  const double r = static_cast<double>(w.size());
  return multiple_polylog_eval(w, x, 1e-13 * std::pow(x, r) / std::tgamma(r + 1.0)).value;
}

// Li-star_w(x): sum over the contiguous merges of w.
double star_polylog_small(std::span<const int> w, double x) {
  const std::size_t r = w.size();
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
    std::vector<int> merged{w[0]};
    for (std::size_t i = 1; i < r; ++i) {
      if (mask & (1u << (i - 1)))
        merged.back() += w[i];
      else
        merged.push_back(w[i]);
    }
    total += strict_polylog_small(merged, x);
  }
  return total;
}

// Li_w(e^{-u}) (or Li-star) at the grid nodes, built from Li_() = 1 by
//   d/du F_{(..,k)} = -F_{(..,k-1)}                     (k > 1)
//   d/du F_{(p,1)}  = -F_p / (e^u - 1)  (strict)
//                   = -F*_p / (1 - e^{-u}) (star, p nonempty)
// integrating from the right end T where the series is evaluated directly.
std::vector<double> polylog_exp_on_grid(std::span<const int> w, bool star,
                                        const detail::PanelGrid& grid) {
  const double T = grid.panels().back().b;
  const auto& u = grid.nodes();
  std::vector<double> f(grid.size(), 1.0), g(grid.size());
  std::vector<int> index;
  for (std::size_t i = 0; i < w.size(); ++i) {
    index.push_back(0);
    for (int e = 1; e <= w[i]; ++e) {
      index.back() = e;
      // Negated: cumulative_from_right subtracts the integral to the right.
      for (std::size_t n = 0; n < u.size(); ++n) {
        if (e > 1)
          g[n] = -f[n];
        else if (star && i > 0)
          g[n] = f[n] / std::expm1(-u[n]);
        else
          g[n] = -f[n] / std::expm1(u[n]);
      }
      const double end = star ? star_polylog_small(index, std::exp(-T))
                              : strict_polylog_small(index, std::exp(-T));
      f = grid.cumulative_from_right(g, end);
    }
  }
  return f;
}

double binom_d(int n, int r) {
  double out = 1.0;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Bound on (1/Gamma(s)) int_0^delta of the integrand.
double mzv_integral_head(double s, int j, bool star, double delta) {
  const double L = std::log(2.0 / delta);
  auto piece = [&](int b) {
    return std::pow(2.0, s - 1.0) * gamma_q(b + 1, (s - 1.0) * L) /
           std::pow(s - 1.0, b + 1) / std::tgamma(s);
  };
  if (!star) return piece(j);
  double total = 0.0;
  for (int b = 1; b <= j; ++b) total += binom_d(j - 1, b - 1) * piece(b);
  return 2.0 * total;
}

double mzv_integral_tail(double s, int j, bool star, double T) {
  const double q = 1.0 - std::exp(-T);
  if (!star)
    return gamma_q(s, (j + 1) * T) / std::pow(j + 1.0, s) / std::pow(q, j + 1) /
           std::tgamma(j + 1.0);
  double total = 0.0;
  for (int b = 1; b <= j; ++b)
    total += binom_d(j - 1, b - 1) * gamma_q(s, b * T) / std::pow(b, s) /
             std::pow(q, b + 1) / std::tgamma(b + 1.0);
  return total;
}

ValueWithBound mzv_integral(std::span<const int> k, bool star, const QuadratureSpec& q) {
  if (k.empty()) throw InputError("zeta index must be nonempty");
  for (int x : k)
    if (x < 1) throw DomainError("zeta index entries must be >= 1");
  if (k.back() < 2) throw DomainError("last zeta index entry must be >= 2");
  if (star && k.size() < 2) throw DomainError("the star integral form needs depth >= 2");
  check_tol(q.abs_tol);
  const double s = k.back();
  const std::span<const int> w = k.first(k.size() - 1);
  const int j = static_cast<int>(w.size());
  const double target = q.abs_tol;

  double delta = 0.5;
  while (mzv_integral_head(s, j, star, delta) > target / 8 && delta > 1e-300) delta *= 0.5;
  double T = q.cutoff > 0 ? q.cutoff : 8.0;
  if (q.cutoff <= 0)
    while (mzv_integral_tail(s, j, star, T) > target / 8 && T < 800) T += 4.0;
  const double outside = mzv_integral_head(s, j, star, delta) + mzv_integral_tail(s, j, star, T);

  const double inv_gamma = 1.0 / std::tgamma(s);
  auto integrate = [&](const std::vector<detail::Panel>& panels) {
    const detail::PanelGrid grid(panels);
    const std::vector<double> f = polylog_exp_on_grid(w, star, grid);
    std::vector<double> h(grid.size());
    for (std::size_t n = 0; n < h.size(); ++n) {
      const double t = grid.nodes()[n];
      const double den = star ? -std::expm1(-t) : std::expm1(t);
      h[n] = std::pow(t, s - 1.0) * f[n] / den * inv_gamma;
    }
    return grid.integrate(h);
  };

  std::vector<detail::Panel> panels = detail::graded_panels(delta, T);
  double coarse = integrate(panels);
  ValueWithBound out{coarse, 0.0, Method::Quadrature};
  for (int depth = 0; depth < std::max(1, q.max_depth); ++depth) {
    panels = detail::halve(panels);
    const double fine = integrate(panels);
    out.value = fine;
    out.bound = std::abs(fine - coarse) + outside + 64.0 * kEps * std::abs(fine);
    if (out.bound <= std::max(target, q.rel_tol * std::abs(fine))) break;
    coarse = fine;
  }
  return out;
}

}  // namespace

ValueWithBound mzv_integral_eval(std::span<const int> k, const QuadratureSpec& q) {
  return mzv_integral(k, false, q);
}

ValueWithBound mzv_star_integral_eval(std::span<const int> k, const QuadratureSpec& q) {
  return mzv_integral(k, true, q);
}

// --- xi ---------------------------------------------------------------------

namespace {

// Node data of one integration axis. Weights already carry the Jacobian,
// z^{s-1} / (Gamma(s) (e^z - 1)); x = 1 - e^{-z}.
struct Axis {
  std::vector<double> z, x, wk, wg;
};

// Smallest p <= 4 making p*s a positive integer: z = u^p then turns
// z^{s-1} dz into p u^{ps-1} du, which is smooth.
int smoothing_power(double s) {
  for (int p = 1; p <= 4; ++p) {
    const double ps = p * s;
    if (std::abs(ps - std::round(ps)) < 1e-12 && std::round(ps) >= 1.0) return p;
  }
  return 0;
}

Axis build_axis(double s, int p, double delta, double Z, int halvings) {
  std::vector<detail::Panel> panels;
  if (p > 0) {
    std::vector<detail::Panel> zp{{0.0, 1.0}};
    for (const auto& pn : detail::graded_panels(1.0, Z)) zp.push_back(pn);
    for (const auto& pn : zp)
      panels.push_back({std::pow(pn.a, 1.0 / p), std::pow(pn.b, 1.0 / p)});
  } else {
    panels = detail::graded_panels(delta, Z);
  }
  for (int h = 0; h < halvings; ++h) panels = detail::halve(panels);
  const auto& rule = detail::gauss_kronrod21();
  const double inv_gamma = 1.0 / std::tgamma(s);
  Axis ax;
  for (const auto& pn : panels) {
    const double c = 0.5 * (pn.a + pn.b), h = 0.5 * (pn.b - pn.a);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double u = c + h * rule.x[i];
      double z, factor;
      if (p > 0) {
        z = std::pow(u, p);
        factor = p * std::pow(u, p * s - 1.0);
      } else {
        z = u;
        factor = std::pow(z, s - 1.0);
      }
      factor *= inv_gamma / std::expm1(z);
      ax.z.push_back(z);
      ax.x.push_back(-std::expm1(-z));
      ax.wk.push_back(h * rule.kronrod_weights[i] * factor);
      ax.wg.push_back(h * rule.gauss_weights[i] * factor);
    }
  }
  return ax;
}

}  // namespace

ValueWithBound xi_eval(const Partition& shape, const WeightTableau& k,
                       std::span<const double> s, const QuadratureSpec& q) {
  check_numeric_weights(shape, k);
  check_tol(q.abs_tol);
  const auto cn = corners(shape);
  if (cn.size() > 2)
    throw DomainError("xi quadrature supports at most two corners, " + shape.to_string() +
                      " has " + std::to_string(cn.size()));
  if (s.size() != cn.size())
    throw InputError("expected " + std::to_string(cn.size()) + " values of s");
  for (double x : s)
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("xi needs s > 0 at every corner");

  const std::vector<double> kd(k.values().begin(), k.values().end());
  const bool admissible = is_admissible(shape, kd);
  const bool single_box = shape.weight() == 1;
  if (!admissible && !single_box)
    throw DomainError("xi quadrature needs admissible k (corner weights >= 2) for " +
                      shape.to_string());

  // Integrand envelope: Li_k(x) <= zeta_lambda(k) prod x_c for admissible k,
  // and Li_k(x) <= Li_1(x) = z for the single box.
  double zeta_hi = 0.0;
  if (admissible) {
    const auto zv = schur_zeta_eval(Tableau<double>(shape, kd), 1e-10);
    zeta_hi = zv.value + zv.bound;
  }
  auto far_bound = [&](double Z) {
    if (admissible) {
      double log_inside = 0.0;
      for (double si : s) log_inside += std::log1p(-gamma_q(si, Z));
      return zeta_hi * -std::expm1(log_inside);
    }
    return s[0] * gamma_q(s[0] + 1.0, Z) / -std::expm1(-Z);
  };
  auto near_bound = [&](std::size_t i, double delta) {
    if (admissible) return zeta_hi * boost::math::gamma_p(s[i], delta);
    return std::pow(delta, s[i]) / std::tgamma(s[i] + 1.0);
  };

  const double target = q.abs_tol;
  double Z = q.cutoff > 0 ? q.cutoff : 8.0;
  if (q.cutoff <= 0)
    while (far_bound(Z) > target / 8 && Z < 800) Z += 4.0;
  double outside = far_bound(Z);
  std::vector<int> power(s.size());
  std::vector<double> delta(s.size(), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    power[i] = smoothing_power(s[i]);
    if (power[i] == 0) {
      double d = 0.5;
      while (near_bound(i, d) > target / (8 * s.size()) && d > 1e-300) d *= 0.5;
      delta[i] = d;
      outside += near_bound(i, d);
    }
  }

  const detail::PolylogEvaluator li(shape, k);
  const double li_budget = target / 4;
  ValueWithBound out;
  out.method = Method::Quadrature;
  for (int halvings = 0;; ++halvings) {
    std::vector<Axis> axes;
    for (std::size_t i = 0; i < s.size(); ++i)
      axes.push_back(build_axis(s[i], power[i], delta[i], Z, halvings));
    const std::size_t n0 = axes[0].z.size();
    const std::size_t n1 = axes.size() > 1 ? axes[1].z.size() : 1;
    const double nodes = static_cast<double>(n0 * n1);

    double kron = 0.0, kc = 0.0, gauss = 0.0, li_err = 0.0, mag = 0.0;
    std::vector<double> point(s.size());
    for (std::size_t a = 0; a < n0; ++a) {
      for (std::size_t b = 0; b < n1; ++b) {
        double wk = axes[0].wk[a], wg = axes[0].wg[a];
        point[0] = axes[0].x[a];
        if (axes.size() > 1) {
          wk *= axes[1].wk[b];
          wg *= axes[1].wg[b];
          point[1] = axes[1].x[b];
        }
        double env = admissible ? zeta_hi : axes[0].z[a];
        for (double xc : point) env *= admissible ? xc : 1.0;
        // Equal share of the budget per node, no finer than rounding allows.
        const double node_tol =
            std::max(li_budget / (nodes * std::abs(wk)), 4.0 * kEps * env);
        const ValueWithBound v = li.eval(point, std::min(node_tol, env));
        const double term = wk * v.value;
        const double t = kron + term;
        kc += std::abs(kron) >= std::abs(term) ? (kron - t) + term : (term - t) + kron;
        kron = t;
        gauss += wg * v.value;
        li_err += std::abs(wk) * v.bound;
        mag += std::abs(term);
      }
    }
    kron += kc;
    const double quad_err = std::abs(kron - gauss);
    out.value = kron;
    out.bound = quad_err + li_err + outside + 16.0 * kEps * mag;
    if (quad_err <= target / 2 || halvings >= q.max_depth) break;
  }
  return out;
}

// --- xi oracle ----------------------------------------------------------------

namespace {

// g_s(1), g_s(2), ... in order. Integer s uses g_1(m) = 1/m and
// g_s(m) = (1/m) sum_{i<=m} g_{s-1}(i); otherwise
// g_s(m) = (1/Gamma(s)) int_0^1 (-ln u)^{s-1} (1-u)^{m-1} du by tanh-sinh.
// Quadrature values are shared between sequences with the same s.
class GSequence {
 public:
  explicit GSequence(double s) : s_(s) {
    if (std::abs(s - std::round(s)) < 1e-14 && s >= 1.0) {
      integer_order_ = static_cast<int>(std::round(s));
      running_.assign(static_cast<std::size_t>(integer_order_), 0.0);
    }
  }

  double next() {
    ++m_;
    const double m = static_cast<double>(m_);
    if (integer_order_ > 0) {
      double g = 1.0 / m;
      for (int j = 1; j < integer_order_; ++j) {
        running_[static_cast<std::size_t>(j - 1)] += g;
        g = running_[static_cast<std::size_t>(j - 1)] / m;
      }
      return g;
    }
    return fractional(s_, m_);
  }

 private:
  static double fractional(double s, long m) {
    static std::mutex mutex;
    static std::map<double, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    std::vector<double>& values = cache[s];
    if (values.size() < static_cast<std::size_t>(m)) {
      boost::math::quadrature::tanh_sinh<double> ts;
      const double inv_gamma = 1.0 / std::tgamma(s);
      for (long i = static_cast<long>(values.size()) + 1; i <= m; ++i) {
        const double e = static_cast<double>(i - 1);
        auto f = [&](double u) {
          if (u <= 0.0 || u >= 1.0) return 0.0;
          return std::pow(-std::log(u), s - 1.0) * std::exp(e * std::log1p(-u));
        };
        values.push_back(ts.integrate(f, 0.0, 1.0, 1e-13) * inv_gamma);
      }
    }
    return values[static_cast<std::size_t>(m - 1)];
  }

  double s_;
  int integer_order_ = 0;
  long m_ = 0;
  std::vector<double> running_;
};

}  // namespace

ValueWithBound xi_series_oracle(const Partition& shape, const WeightTableau& k,
                                std::span<const double> s, double tol) {
  check_numeric_weights(shape, k);
  check_tol(tol);
  const auto cn = corners(shape);
  if (s.size() != cn.size())
    throw InputError("expected " + std::to_string(cn.size()) + " values of s");
  for (double x : s)
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("xi needs s > 0 at every corner");
  const std::vector<double> kd(k.values().begin(), k.values().end());

  if (!is_admissible(shape, kd)) {
    // Single box, k = 1: Li_1(1-e^{-z}) = z, so xi = s zeta(s+1).
    if (shape.weight() == 1 && k[0] == 1 && s[0] > 0.0) {
      const std::vector<double> t{s[0] + 1.0};
      ValueWithBound z = detail::nested_zeta(t, false, tol / (2.0 * s[0]));
      return {s[0] * z.value, s[0] * z.bound + 2.0 * kEps * s[0] * z.value,
              Method::DerivedSeries};
    }
    throw DomainError("xi series oracle needs admissible k for " + shape.to_string());
  }

  const detail::StripLattice lattice = detail::build_strip_lattice(shape);
  const detail::SkewTails tails(lattice, kd);
  std::vector<int> corner_of(kd.size(), -1);
  for (std::size_t c = 0; c < cn.size(); ++c)
    corner_of[static_cast<std::size_t>(shape.cell_index(cn[c]))] = static_cast<int>(c);
  std::vector<GSequence> gs;
  for (double x : s) gs.emplace_back(x);
  std::vector<double> gv(cn.size());
  detail::SchurSumDP dp(
      lattice,
      [&](long v, std::span<double> w) {
        for (std::size_t c = 0; c < gs.size(); ++c) gv[c] = gs[c].next();
        for (std::size_t i = 0; i < w.size(); ++i) {
          w[i] = detail::inverse_power(v, kd[i]);
          if (corner_of[i] >= 0) w[i] *= gv[static_cast<std::size_t>(corner_of[i])];
        }
      },
      false);

  // Beyond M every corner factor g_s(m) <= g_s(M+1) (g decreases in m), the
  // rest is a zeta tail.
  ValueWithBound out;
  out.method = Method::TruncatedSum;
  long m = 64;
  while (true) {
    dp.advance_to(m);
    double gmax = 0.0;
    for (const GSequence& g : gs) {
      GSequence peek = g;
      gmax = std::max(gmax, peek.next() * (1.0 + 1e-12));
    }
    double tail = 0.0;
    for (std::size_t st = 0; st < lattice.states.size(); ++st) {
      const int si = static_cast<int>(st);
      if (si == lattice.full) continue;
      tail += dp.value(si) * std::pow(gmax, tails.corners_in_skew(si)) *
              tails.bracket(si, static_cast<double>(m)).hi;
    }
    const double partial = dp.full_value();
    out.value = partial + 0.5 * tail;
    out.bound = 0.5 * tail + 8.0 * (shape.weight() + 4) * kEps * out.value;
    if (out.bound <= tol || m >= kMaxCutoff) break;
    m *= 2;
  }
  return out;
}

BigRational xi_special_value(const Partition& shape, const WeightTableau& k,
                             std::span<const int> m) {
  for (int x : m)
    if (x < 1) throw DomainError("xi special values need m_c >= 1");
  const BernoulliTable c = bernoulli_table(shape, k, m, Kind::C);
  int total = 0;
  for (int x : m) total += x;
  BigRational v = c.at(m);
  if (total % 2 != 0) v = -v;
  return v;
}

// --- eta ----------------------------------------------------------------------

namespace {

// |Li_k(1-e^t)| <= B_k(t) with B_1 = t and B_k = int_0^t B_{k-1}(u)(1+1/u) du.
// Coefficients of t^1 .. t^k.
std::vector<double> eta_envelope(int k) {
  std::vector<double> b{0.0, 1.0};
  for (int level = 2; level <= k; ++level) {
    std::vector<double> nb(b.size() + 1, 0.0);
    for (std::size_t j = 1; j < b.size(); ++j) {
      nb[j + 1] += b[j] / static_cast<double>(j + 1);
      nb[j] += b[j] / static_cast<double>(j);
    }
    b = std::move(nb);
  }
  return b;
}

}  // namespace

ValueWithBound eta_classical_eval(int k, double s, const QuadratureSpec& q) {
  if (k < 1) throw DomainError("eta needs k >= 1");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("eta integral needs s > 0");
  check_tol(q.abs_tol);
  const double target = q.abs_tol;
  const std::vector<double> env = eta_envelope(k);
  const double inv_gamma = 1.0 / std::tgamma(s);

  auto head = [&](double delta) {
    double total = 0.0;
    for (std::size_t j = 1; j < env.size(); ++j)
      total += env[j] * std::pow(delta, s + j - 1.0) / (s + j - 1.0);
    return total * inv_gamma;
  };
  auto tail = [&](double T) {
    double total = 0.0;
    for (std::size_t j = 1; j < env.size(); ++j)
      total += env[j] * boost::math::tgamma(s + j, T);
    return total * inv_gamma / -std::expm1(-T);
  };
  double delta = 0.5;
  while (head(delta) > target / 8 && delta > 1e-300) delta *= 0.5;
  double T = q.cutoff > 0 ? q.cutoff : 8.0;
  if (q.cutoff <= 0)
    while (tail(T) > target / 8 && T < 800) T += 4.0;
  const double outside = head(delta) + tail(T);

  auto integrate = [&](const std::vector<detail::Panel>& graded) {
    // The extra panel [0, delta] only feeds the recursion for F_k.
    std::vector<detail::Panel> panels{{0.0, graded.front().a}};
    panels.insert(panels.end(), graded.begin(), graded.end());
    const detail::PanelGrid grid(panels);
    const auto& t = grid.nodes();
    std::vector<double> f(grid.size()), g(grid.size());
    for (std::size_t n = 0; n < f.size(); ++n) f[n] = -t[n];
    for (int level = 2; level <= k; ++level) {
      for (std::size_t n = 0; n < f.size(); ++n) g[n] = f[n] / -std::expm1(-t[n]);
      f = grid.cumulative_from_left(g, 0.0);
    }
    const std::size_t skip = grid.size() / panels.size();
    std::vector<double> h(grid.size(), 0.0);
    for (std::size_t n = skip; n < h.size(); ++n)
      h[n] = std::pow(t[n], s - 1.0) * f[n] / -std::expm1(t[n]) * inv_gamma;
    return grid.integrate(h);
  };

  std::vector<detail::Panel> panels = detail::graded_panels(delta, T);
  double coarse = integrate(panels);
  ValueWithBound out{coarse, 0.0, Method::Quadrature};
  for (int depth = 0; depth < std::max(1, q.max_depth); ++depth) {
    panels = detail::halve(panels);
    const double fine = integrate(panels);
    out.value = fine;
    out.bound = std::abs(fine - coarse) + outside + 64.0 * kEps * std::abs(fine);
    if (out.bound <= std::max(target, q.rel_tol * std::abs(fine))) break;
    coarse = fine;
  }
  return out;
}

BigRational eta_special_value(const Partition& shape, const WeightTableau& k,
                              std::span<const int> m) {
  require_hook(shape);
  if (m.size() != 2) throw InputError("eta special values of a hook take two indices");
  for (int x : m)
    if (x < 0) throw DomainError("eta special values need m_i >= 0");
  return bernoulli_table(shape, k, m, Kind::B).at(m);
}

}  // namespace schurpb
