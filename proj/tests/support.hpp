#pragma once

// Test-side oracles and generators. Nothing here calls into the library's
// series or Bernoulli code, so comparisons against it are independent.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "schurpb/numeric.hpp"

namespace testing_support {

// SplitMix64: tiny, fixed-seed, identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi]; the modulo bias is irrelevant for test sampling.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

using schurpb::BigInt;
using schurpb::BigRational;

inline BigInt fact(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt choose(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// 1 / (sum a_n t^n) up to t^order, a_0 = 1.
inline std::vector<BigRational> invert_unit(const std::vector<BigRational>& a, int order) {
  std::vector<BigRational> b(static_cast<std::size_t>(order + 1));
  b[0] = 1;
  for (int n = 1; n <= order; ++n) {
    BigRational acc = 0;
    for (int j = 1; j <= n; ++j) acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)];
    b[static_cast<std::size_t>(n)] = -acc;
  }
  return b;
}

// n! [t^n] of t/(e^t - 1) (sign = +1) or t/(1 - e^{-t}) (sign = -1).
inline std::vector<BigRational> bernoulli_by_inversion(int order, int sign) {
  // (e^t - 1)/t = sum t^n/(n+1)!, (1 - e^{-t})/t = sum (-t)^n/(n+1)!
  std::vector<BigRational> a;
  for (int n = 0; n <= order; ++n) {
    BigRational c(BigInt(1), fact(n + 1));
    c.canonicalize();
    if (sign < 0 && n % 2 == 1) c = -c;
    a.push_back(c);
  }
  std::vector<BigRational> b = invert_unit(a, order);
  for (int n = 0; n <= order; ++n) b[static_cast<std::size_t>(n)] *= BigRational(fact(n));
  return b;
}

// Li_2(1 - e^t) = -pi^2/6 - t log(1 - e^{-t}) + Li_2(e^{-t}) - t^2/2. The
// Li_2 series is cut at 400 terms, fine for t >= 0.1.
inline double li2_one_minus_exp(double t) {
  const double x = std::exp(-t);
  double li2 = 0.0, p = 1.0;
  for (int n = 1; n < 400; ++n) {
    p *= x;
    const double term = p / (static_cast<double>(n) * n);
    li2 += term;
    if (term < 1e-18 * li2) break;
  }
  return -std::numbers::pi * std::numbers::pi / 6 - t * std::log1p(-x) + li2 - t * t / 2;
}

}  // namespace testing_support
