#pragma once

// Brute-force oracles: enumerate fillings directly instead of going through
// the strip DP and the series module.

#include <algorithm>
#include <vector>

#include "schurpb/polylog.hpp"
#include "schurpb/shapes.hpp"
#include "support.hpp"

namespace testing_support {

// Polylog coefficients from every filling with entries <= the largest corner order.
inline schurpb::MultiSeries brute_series(const schurpb::Partition& shape, const schurpb::WeightTableau& k,
                                         const std::vector<int>& orders) {
  using namespace schurpb;
  MultiSeries out(corner_variables(shape), orders);
  const auto cs = corners(shape);
  const int top = std::max(1, *std::max_element(orders.begin(), orders.end()));
  std::vector<int> v(static_cast<std::size_t>(shape.weight()), 1);
  while (true) {
    const Tableau<int> t(shape, v);
    bool ok = is_semistandard(t);
    std::vector<int> e;
    for (std::size_t c = 0; ok && c < cs.size(); ++c) {
      e.push_back(t.at(cs[c]));
      ok = e.back() <= orders[c];
    }
    if (ok) {
      BigRational term = 1;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const BigInt p = pow_int(v[i], static_cast<unsigned long>(std::abs(k[i])));
        term *= k[i] >= 0 ? make_rational(BigInt(1), p) : BigRational(p);
      }
      out.coeff(e) += term;
    }
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] == top) v[--i] = 1;
    if (i == 0) return out;
    ++v[i - 1];
  }
}

// n! [z^n] (1 - e^{-z})^j e^{-shift z} = sum_i C(j, i) (-1)^i (-(i + shift))^n.
inline BigInt one_minus_exp_power(int j, int n, int shift) {
  BigInt acc = 0;
  for (int i = 0; i <= j; ++i) {
    BigInt p = 1;
    for (int r = 0; r < n; ++r) p *= -(i + shift);
    acc += (i % 2 ? -1 : 1) * choose(j, i) * p;
  }
  return acc;
}

// Poly-Bernoulli entry m: substitute 1 - e^{-z} into the brute-force
// coefficients and divide by 1 - e^{-z} (kind B) or e^z - 1 (kind C):
//   (1-e^{-z})^e / (1-e^{-z}) = (1-e^{-z})^{e-1},
//   (1-e^{-z})^e / (e^z-1)    = (1-e^{-z})^{e-1} e^{-z}.
inline BigRational brute_bernoulli(const schurpb::MultiSeries& li, const std::vector<int>& m, bool kind_c) {
  BigRational acc = 0;
  for (std::size_t off = 0; off < li.size(); ++off) {
    if (li.at(off) == 0) continue;
    const auto e = li.exponents(off);
    BigRational term = li.at(off);
    for (std::size_t c = 0; c < e.size() && term != 0; ++c) {
      if (e[c] == 0 || e[c] - 1 > m[c]) {
        term = 0;
        break;
      }
      term *= BigRational(one_minus_exp_power(e[c] - 1, m[c], kind_c ? 1 : 0));
    }
    acc += term;
  }
  return acc;
}

}  // namespace testing_support
