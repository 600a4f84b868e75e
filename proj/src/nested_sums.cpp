#include "nested_sums.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "schur_dp.hpp"
#include "tail_bounds.hpp"

namespace schurpb::detail {

namespace {

struct Compensated {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

constexpr long kMaxTerms = 1L << 24;

}  // namespace

ValueWithBound nested_zeta(std::span<const double> t, bool star, double tol) {
  const std::size_t r = t.size();
  std::vector<Compensated> prefix(r + 1);
  prefix[0].sum = 1.0;
  std::vector<double> w(r);
  long n = 0;
  long target = 256;
  ValueWithBound out;
  out.method = Method::TruncatedSum;
  while (true) {
    for (long m = n + 1; m <= target; ++m) {
      for (std::size_t j = 0; j < r; ++j) w[j] = inverse_power(m, t[j]);
      if (star) {
        // P*_j(m) = P*_j(m-1) + P*_{j-1}(m) m^{-t_j}
        for (std::size_t j = 1; j <= r; ++j) prefix[j].add(prefix[j - 1].value() * w[j - 1]);
      } else {
        // P_j(m) = P_j(m-1) + P_{j-1}(m-1) m^{-t_j}
        for (std::size_t j = r; j >= 1; --j) prefix[j].add(prefix[j - 1].value() * w[j - 1]);
      }
    }
    n = target;
    double value = prefix[r].value(), half = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      const std::span<const double> suffix = t.subspan(j);
      const Bracket b = star ? star_tail(suffix, static_cast<double>(n))
                             : strict_tail(suffix, static_cast<double>(n));
      value += prefix[j].value() * b.mid();
      half += prefix[j].value() * b.half_width();
    }
    const double rounding =
        8.0 * static_cast<double>(r + 4) * std::numeric_limits<double>::epsilon() *
        std::abs(value);
    out.value = value;
    out.bound = half + rounding;
    if (out.bound <= tol || n >= kMaxTerms) break;
    target = 2 * n;
  }
  return out;
}

}  // namespace schurpb::detail
