#pragma once

// Fixed-node composite quadrature on explicit panel lists. Everything here is
// deterministic: the same panels give bit-identical sums.

#include <functional>
#include <span>
#include <vector>

namespace schurpb::detail {

struct Panel {
  double a = 0.0;
  double b = 0.0;
};

struct Rule {
  std::vector<double> x;  // nodes on [-1, 1], ascending
  std::vector<double> w;
};

const Rule& gauss_legendre20();
// 21-point Kronrod rule; gauss_weights is nonzero exactly on the embedded
// 10-point Gauss nodes.
struct KronrodRule {
  std::vector<double> x;
  std::vector<double> kronrod_weights;
  std::vector<double> gauss_weights;
};
const KronrodRule& gauss_kronrod21();

// Dyadic panels [2^-j, 2^-j+1] from `delta` (rounded down to a power of two)
// up to 1, doubling panels up to 8, then width-4 panels up to `upper`
// (rounded up to a multiple of 4).
std::vector<Panel> graded_panels(double delta, double upper);
// Panels of width at most `width` covering [a, b].
std::vector<Panel> uniform_panels(double a, double b, double width);
std::vector<Panel> halve(std::span<const Panel> panels);

// Composite Gauss-Legendre grid with cumulative integration: node values of
// an integrand g give node values of its antiderivative.
class PanelGrid {
 public:
  explicit PanelGrid(std::vector<Panel> panels);

  const std::vector<Panel>& panels() const { return panels_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }

  double integrate(std::span<const double> g) const;

  // F(node) = start + integral from panels.front().a to node of g.
  std::vector<double> cumulative_from_left(std::span<const double> g,
                                           double start) const;
  // F(node) = end - integral from node to panels.back().b of g.
  std::vector<double> cumulative_from_right(std::span<const double> g,
                                            double end) const;
  // Value of the antiderivative at panels.back().b (from the left) for the
  // same data, i.e. start + total integral.
  double total(std::span<const double> g) const { return integrate(g); }

 private:
  // partial integral from the panel's left end to node i, per unit half-width
  std::vector<double> partial_;  // n x n, row i
  std::vector<Panel> panels_;
  std::vector<double> nodes_, weights_;
};

}  // namespace schurpb::detail
