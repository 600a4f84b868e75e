#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "schurpb/analytic.hpp"
#include "schurpb/polylog.hpp"
#include "brute.hpp"
#include "support.hpp"

using namespace schurpb;
using testing_support::SplitMix64;

namespace {

double eval_series(const MultiSeries& s, std::span<const double> point) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto e = s.exponents(i);
    double term = to_double(s.at(i));
    for (std::size_t c = 0; c < e.size(); ++c) term *= std::pow(point[c], e[c]);
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("series of the single box and a column") {
  const Partition one({1});
  const auto li2 = schur_polylog_series(one, WeightTableau(one, {2}), std::vector<int>{3});
  CHECK(li2.coeff({0}) == 0);
  CHECK(li2.coeff({1}) == 1);
  CHECK(li2.coeff({2}) == make_rational(1, 4));
  CHECK(li2.coeff({3}) == make_rational(1, 9));

  const Partition col({1, 1});
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const auto s = schur_polylog_series(col, WeightTableau(col, {a, b}), std::vector<int>{2});
      CHECK(s.coeff({1}) == 0);
      CHECK(s.coeff({2}) == make_rational(BigInt(1), pow_int(2, static_cast<unsigned long>(b))));
    }
  }
  CHECK(corner_variables(Partition({2, 1})) == std::vector<std::string>{"z(1,2)", "z(2,1)"});
}

TEST_CASE("series agree with brute-force enumeration") {
  SplitMix64 rng(31);
  for (const char* name : {"2", "1,1", "2,1", "2,2", "3,1", "2,1,1", "3,2"}) {
    const Partition shape = Partition::parse(name);
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<int> w;
      for (int i = 0; i < shape.weight(); ++i) w.push_back(rng.uniform(-1, 3));
      const WeightTableau k(shape, w);
      const std::vector<int> orders(corners(shape).size(), 4);
      CHECK(schur_polylog_series(shape, k, orders) == testing_support::brute_series(shape, k, orders));
    }
  }
}

TEST_CASE("leading coefficient of hook series") {
  const Partition hook({2, 1, 1});
  const WeightTableau k(hook, {3, 1, 2, 3});
  const auto s = schur_polylog_series(hook, k, std::vector<int>{1, 3});
  CHECK(s.coeff({1, 3}) == make_rational(1, 4 * 27));
}

TEST_CASE("numeric evaluation: spec examples") {
  const Partition one({1});
  const std::vector<double> half{0.5};
  const auto ln2 = schur_polylog_eval(one, WeightTableau(one, {1}), half, 1e-12);
  CHECK(std::abs(ln2.value - std::log(2.0)) <= ln2.bound + 1e-15);
  CHECK(ln2.bound <= 1e-12);

  const Partition col({1, 1});
  const auto v = schur_polylog_eval(col, WeightTableau(col, {1, 2}), half, 1e-12);
  double direct = 0.0;
  for (int n = 2; n <= 10000; ++n) {
    double h = 0.0;
    for (int m = 1; m < n; ++m) h += 1.0 / m;
    direct += h * std::pow(0.5, n) / (double(n) * n);
  }
  CHECK(std::abs(v.value - direct) <= v.bound + 1e-14);

  const Partition p({2, 1});
  const std::vector<double> zero{0.0, 0.0};
  CHECK(schur_polylog_eval(p, WeightTableau(p, {1, 2, 2}), zero, 1e-10).value == 0.0);
}

TEST_CASE("numeric evaluation matches exact series at small points") {
  SplitMix64 rng(32);
  for (const char* name : {"1", "2", "1,1", "2,1", "3,1", "2,2"}) {
    const Partition shape = Partition::parse(name);
    const std::size_t nc = corners(shape).size();
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<int> w;
      for (int i = 0; i < shape.weight(); ++i) w.push_back(rng.uniform(1, 3));
      const WeightTableau k(shape, w);
      std::vector<double> point;
      for (std::size_t c = 0; c < nc; ++c) point.push_back(-0.2 + 0.4 * rng.unit());
      // |z| <= 0.2: coefficients past order 30 are below 0.2^30 * 30^|lambda|.
      const auto exact = eval_series(schur_polylog_series(shape, k, std::vector<int>(nc, 30)), point);
      const auto num = schur_polylog_eval(shape, k, point, 1e-13);
      CHECK(std::abs(num.value - exact) <= num.bound + 1e-13);
    }
  }
}

TEST_CASE("numeric evaluation is bounded by the zeta value") {
  const Partition p({2, 1});
  const WeightTableau k(p, {1, 2, 2});
  const std::vector<double> near{0.999, 0.999};
  const auto li = schur_polylog_eval(p, k, near, 1e-8);
  const auto zeta = schur_zeta_eval(k.map([](int x) { return double(x); }), 1e-10);
  CHECK(li.value - li.bound <= zeta.value + zeta.bound);
  CHECK(li.value > 0.5 * zeta.value);
  // Monotone in the point.
  const std::vector<double> lower{0.9, 0.999};
  CHECK(schur_polylog_eval(p, k, lower, 1e-10).value < li.value);
}

TEST_CASE("numeric evaluation rejects bad input") {
  const Partition p({2, 1});
  const std::vector<double> ok{0.5, 0.5};
  const std::vector<double> out{1.0, 0.5};
  CHECK_THROWS_AS(schur_polylog_eval(p, WeightTableau(p, {1, 2, 2}), out, 1e-8), DomainError);
  CHECK_THROWS_AS(schur_polylog_eval(p, WeightTableau(p, {0, 2, 2}), ok, 1e-8), DomainError);
  CHECK_THROWS_AS(schur_polylog_eval(p, WeightTableau(p, {1, 2, 2}), std::vector<double>{0.5}, 1e-8), InputError);
}

TEST_CASE("multiple polylogarithm") {
  const std::vector<int> two{2}, one{1}, oneone{1, 1}, onetwo{1, 2};
  const auto z2 = multiple_polylog_eval(two, 1.0, 1e-10);
  CHECK(std::abs(z2.value - std::numbers::pi * std::numbers::pi / 6) <= z2.bound + 1e-14);
  const auto l2 = multiple_polylog_eval(one, 0.5, 1e-13);
  CHECK(std::abs(l2.value - std::log(2.0)) <= l2.bound + 1e-15);
  // Li_{1,1}(z) = log(1-z)^2 / 2
  const auto l11 = multiple_polylog_eval(oneone, 0.3, 1e-13);
  CHECK(std::abs(l11.value - std::pow(std::log(0.7), 2) / 2) <= l11.bound + 1e-15);
  // Li_{1,2}(1) = zeta(1,2) = zeta(3)
  const auto z12 = multiple_polylog_eval(onetwo, 1.0, 1e-9);
  CHECK(std::abs(z12.value - 1.2020569031595942) <= z12.bound + 1e-14);
  CHECK_THROWS_AS(multiple_polylog_eval(oneone, 1.0, 1e-8), DomainError);
  CHECK_THROWS_AS(multiple_polylog_eval(two, 1.5, 1e-8), DomainError);
}

TEST_CASE("Li_k(1 - e^z)") {
  CHECK(polylog_at_one_minus_exp(1, 3.0, 1e-12).value == -3.0);
  for (int k = 1; k <= 4; ++k) CHECK(polylog_at_one_minus_exp(k, 0.0, 1e-12).value == 0.0);

  // Taylor expansion of Li_2(1 - e^z) at 0 (radius pi), evaluated at z = 1.
  std::vector<BigRational> li2{0};
  for (int n = 1; n <= 40; ++n) li2.push_back(make_rational(BigInt(1), BigInt(n * n)));
  const auto composed = substitute(MultiSeries::univariate("x", li2), {series_scale(exp_minus_one(40), -1)});
  const double taylor = eval_series(composed, std::vector<double>{1.0});
  const auto v = polylog_at_one_minus_exp(2, 1.0, 1e-11);
  CHECK(std::abs(v.value - taylor) <= v.bound + 1e-14);

  for (double z : {0.5, 2.0, 7.0}) {
    const auto w = polylog_at_one_minus_exp(2, z, 1e-11);
    CHECK(std::abs(w.value - testing_support::li2_one_minus_exp(z)) <= w.bound + 1e-13 * (1 + z * z));
  }
  CHECK_THROWS_AS(polylog_at_one_minus_exp(0, 1.0, 1e-8), DomainError);
  CHECK_THROWS_AS(polylog_at_one_minus_exp(2, -1.0, 1e-8), DomainError);
}
