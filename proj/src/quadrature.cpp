#include "quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schurpb::detail {

namespace {

template <class Abscissa, class Weights>
Rule symmetric_rule(const Abscissa& xs, const Weights& ws) {
  // Boost stores the non-negative half; mirror it.
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts.emplace_back(static_cast<double>(xs[i]), static_cast<double>(ws[i]));
    if (xs[i] != 0) pts.emplace_back(-static_cast<double>(xs[i]), static_cast<double>(ws[i]));
  }
  std::sort(pts.begin(), pts.end());
  Rule r;
  for (auto [x, w] : pts) {
    r.x.push_back(x);
    r.w.push_back(w);
  }
  return r;
}

double legendre(int l, double x) {
  if (l == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int k = 1; k < l; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace

const Rule& gauss_legendre20() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, 20>;
    return symmetric_rule(G::abscissa(), G::weights());
  }();
  return rule;
}

const KronrodRule& gauss_kronrod21() {
  static const KronrodRule rule = [] {
    using K = boost::math::quadrature::gauss_kronrod<double, 21>;
    using G = boost::math::quadrature::gauss<double, 10>;
    const Rule k = symmetric_rule(K::abscissa(), K::weights());
    const Rule g = symmetric_rule(G::abscissa(), G::weights());
    KronrodRule out;
    out.x = k.x;
    out.kronrod_weights = k.w;
    out.gauss_weights.assign(k.x.size(), 0.0);
    for (std::size_t j = 0; j < g.x.size(); ++j) {
      auto it = std::min_element(k.x.begin(), k.x.end(), [&](double a, double b) {
        return std::abs(a - g.x[j]) < std::abs(b - g.x[j]);
      });
      if (std::abs(*it - g.x[j]) > 1e-14)
        throw std::logic_error("Kronrod nodes do not embed the Gauss nodes");
      out.gauss_weights[static_cast<std::size_t>(it - k.x.begin())] = g.w[j];
    }
    return out;
  }();
  return rule;
}

std::vector<Panel> graded_panels(double delta, double upper) {
  std::vector<Panel> out;
  double lo = 1.0;
  while (lo > delta) lo *= 0.5;
  for (double a = lo; a < 1.0; a *= 2.0) out.push_back({a, 2.0 * a});
  for (double a = 1.0; a < 8.0 && a < upper; a *= 2.0) out.push_back({a, 2.0 * a});
  for (double a = 8.0; a < upper; a += 4.0) out.push_back({a, a + 4.0});
  return out;
}

std::vector<Panel> uniform_panels(double a, double b, double width) {
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  std::vector<Panel> out;
  for (int i = 0; i < n; ++i)
    out.push_back({a + (b - a) * i / n, i + 1 == n ? b : a + (b - a) * (i + 1) / n});
  return out;
}

std::vector<Panel> halve(std::span<const Panel> panels) {
  std::vector<Panel> out;
  for (const Panel& p : panels) {
    const double m = 0.5 * (p.a + p.b);
    out.push_back({p.a, m});
    out.push_back({m, p.b});
  }
  return out;
}

PanelGrid::PanelGrid(std::vector<Panel> panels) : panels_(std::move(panels)) {
  const Rule& r = gauss_legendre20();
  const std::size_t n = r.x.size();
  for (const Panel& p : panels_) {
    const double h = 0.5 * (p.b - p.a), c = 0.5 * (p.a + p.b);
    for (std::size_t i = 0; i < n; ++i) {
      nodes_.push_back(c + h * r.x[i]);
      weights_.push_back(h * r.w[i]);
    }
  }
  // g ~ sum_l c_l P_l with c_l = (2l+1)/2 sum_j w_j g_j P_l(x_j), and
  // int_{-1}^{x} P_l = (P_{l+1}(x) - P_{l-1}(x)) / (2l+1), or x+1 for l = 0.
  partial_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = r.x[i];
    for (std::size_t l = 0; l < n; ++l) {
      const int li = static_cast<int>(l);
      const double anti = l == 0 ? xi + 1.0
                                 : (legendre(li + 1, xi) - legendre(li - 1, xi)) /
                                       (2.0 * li + 1.0);
      for (std::size_t j = 0; j < n; ++j)
        partial_[i * n + j] += 0.5 * (2.0 * li + 1.0) * r.w[j] *
                               legendre(li, r.x[j]) * anti;
    }
  }
}

double PanelGrid::integrate(std::span<const double> g) const {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = weights_[i] * g[i];
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

std::vector<double> PanelGrid::cumulative_from_left(std::span<const double> g,
                                                    double start) const {
  const std::size_t n = gauss_legendre20().x.size();
  std::vector<double> out(g.size());
  double base = start;
  for (std::size_t p = 0; p < panels_.size(); ++p) {
    const double h = 0.5 * (panels_[p].b - panels_[p].a);
    const double* gp = g.data() + p * n;
    double panel_total = 0.0;
    for (std::size_t j = 0; j < n; ++j) panel_total += weights_[p * n + j] * gp[j];
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += partial_[i * n + j] * gp[j];
      out[p * n + i] = base + h * acc;
    }
    base += panel_total;
  }
  return out;
}

std::vector<double> PanelGrid::cumulative_from_right(std::span<const double> g,
                                                     double end) const {
  const std::size_t n = gauss_legendre20().x.size();
  std::vector<double> out(g.size());
  double base = end;
  for (std::size_t p = panels_.size(); p-- > 0;) {
    const double h = 0.5 * (panels_[p].b - panels_[p].a);
    const double* gp = g.data() + p * n;
    double panel_total = 0.0;
    for (std::size_t j = 0; j < n; ++j) panel_total += weights_[p * n + j] * gp[j];
    // F(node) = F(b) - (total - partial)
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += partial_[i * n + j] * gp[j];
      out[p * n + i] = base - (panel_total - h * acc);
    }
    base -= panel_total;
  }
  return out;
}

}  // namespace schurpb::detail
