#pragma once

// Numeric Schur multiple zeta values, their integral representations, the
// xi and eta functions, and their special values at negative integers.

#include <span>
#include <vector>

#include "schurpb/bernoulli.hpp"
#include "schurpb/shapes.hpp"
#include "schurpb/value.hpp"

namespace schurpb {

struct QuadratureSpec {
  double abs_tol = 1e-7;
  double rel_tol = 0.0;   // target is max(abs_tol, rel_tol * |value|)
  int max_depth = 8;      // panel halvings before giving up on the target
  double cutoff = 0.0;    // upper integration limit; 0 picks one from the tail bound
};

// zeta(s_1, ..., s_r) = sum_{0<m_1<...<m_r} prod m_i^{-s_i}; s_i >= 1, s_r > 1.
ValueWithBound mzv_eval(std::span<const double> s, double tol = 1e-12);
// Weak inequalities m_1 <= ... <= m_r; same domain.
ValueWithBound mzv_star_eval(std::span<const double> s, double tol = 1e-12);

// Real s with s_ij >= 1 everywhere and s_c > 1 on corners.
bool is_admissible(const Partition& shape, std::span<const double> s);
ValueWithBound schur_zeta_eval(const Tableau<double>& s, double tol = 1e-12);

// Schur zeta as a signed sum over level-map collapses into zeta or zeta-star
// values, each term evaluated to `tol`.
struct DecompositionTerm {
  std::vector<double> index;
  int sign = 1;
  ValueWithBound value;
};
std::vector<DecompositionTerm> schur_zeta_decomposition(const Tableau<double>& s,
                                                        bool star, double tol);
ValueWithBound schur_zeta_via_decomposition(const Tableau<double>& s, bool star,
                                            double tol = 1e-10);

// zeta(k_1..k_r) = (1/Gamma(k_r)) int_0^inf t^{k_r-1} Li_{k_1..k_{r-1}}(e^{-t}) / (e^t-1) dt
// and the star analogue with Li-star and 1/(1-e^{-t}); integer indices,
// k_r >= 2. The star form needs depth >= 2.
ValueWithBound mzv_integral_eval(std::span<const int> k, const QuadratureSpec& q = {});
ValueWithBound mzv_star_integral_eval(std::span<const int> k, const QuadratureSpec& q = {});

// xi(k; s) = prod 1/Gamma(s_c) int_{R_+^c} prod z_c^{s_c-1}/(e^{z_c}-1)
//            Li_k(1-e^{-z}) dz
// for shapes with at most two corners and s_c > 0. Needs admissible k, except
// for the single box where any k >= 1 is allowed.
ValueWithBound xi_eval(const Partition& shape, const WeightTableau& k,
                       std::span<const double> s, const QuadratureSpec& q = {});

// Independent route: xi(k; s) = sum over SSYT of prod_{non-corner} m^{-k}
// prod_{corners} g_{s_c}(m_c) m_c^{-k_c}, where
//   g_s(m) = (1/Gamma(s)) int_0^inf t^{s-1} e^{-t} (1-e^{-t})^{m-1} dt.
ValueWithBound xi_series_oracle(const Partition& shape, const WeightTableau& k,
                                std::span<const double> s, double tol = 1e-9);

// xi(k; -m) = (-1)^{|m|} C_m, m_c >= 1.
BigRational xi_special_value(const Partition& shape, const WeightTableau& k,
                             std::span<const int> m);

// eta(k; s) = (1/Gamma(s)) int_0^inf t^{s-1} Li_k(1-e^t)/(1-e^t) dt for
// s > 0 and k >= 1.
ValueWithBound eta_classical_eval(int k, double s, const QuadratureSpec& q = {});

// eta(k; -m_1, -m_2) = B_{m_1, m_2} for hooks, m_i >= 0.
BigRational eta_special_value(const Partition& shape, const WeightTableau& k,
                              std::span<const int> m);

}  // namespace schurpb
