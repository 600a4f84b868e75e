#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurpb/series.hpp"
#include "support.hpp"

using namespace schurpb;
using testing_support::SplitMix64;

namespace {

MultiSeries random_series(SplitMix64& rng, std::vector<int> orders) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < orders.size(); ++i) vars.push_back("z" + std::to_string(i + 1));
  MultiSeries s(vars, orders);
  for (std::size_t i = 0; i < s.size(); ++i) s.at(i) = make_rational(rng.uniform(-9, 9), rng.uniform(1, 7));
  return s;
}

MultiSeries random_unit(SplitMix64& rng, int order, const std::string& var) {
  std::vector<BigRational> c{1};
  for (int i = 1; i <= order; ++i) c.push_back(make_rational(rng.uniform(-5, 5), rng.uniform(1, 4)));
  return MultiSeries::univariate(var, c);
}

}  // namespace

TEST_CASE("construction and coefficient access") {
  MultiSeries s({"x", "y"}, {2, 3});
  CHECK(s.size() == 12);
  CHECK(s.is_zero());
  s.coeff({1, 2}) = make_rational(3, 4);
  CHECK(s.at(s.offset(std::vector<int>{1, 2})) == make_rational(3, 4));
  CHECK(s.exponents(s.offset(std::vector<int>{1, 2})) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(s.coeff({3, 0}), InputError);
  CHECK_THROWS_AS(s.coeff({0}), InputError);
  CHECK_THROWS_AS(MultiSeries({"x"}, {-1}), InputError);
  CHECK_THROWS_AS(MultiSeries({"x"}, {1, 2}), InputError);
  CHECK(s.truncated({1, 2}).coeff({1, 2}) == make_rational(3, 4));
  CHECK_THROWS_AS(s.truncated({3, 3}), InputError);
}

TEST_CASE("ring laws on random series") {
  SplitMix64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_series(rng, {3, 2});
    const auto b = random_series(rng, {3, 2});
    const auto c = random_series(rng, {3, 2});
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
    CHECK(series_sub(series_add(a, b), b) == a);
    CHECK(series_scale(a, 0).is_zero());
  }
  CHECK_THROWS_AS(series_add(MultiSeries({"x"}, {2}), MultiSeries({"y"}, {2})), InputError);
}

TEST_CASE("mixed orders take the minimum") {
  const MultiSeries a({"x"}, {5});
  const MultiSeries b({"x"}, {3});
  CHECK(series_mul(a, b).orders() == std::vector<int>{3});
}

TEST_CASE("unit inverse") {
  SplitMix64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const auto u = random_unit(rng, 8, "z");
    const auto prod = series_mul(u, unit_inverse(u));
    CHECK(prod.coeff({0}) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(prod.coeff({n}) == 0);
  }
  CHECK_THROWS_AS(unit_inverse(MultiSeries::univariate("z", {2, 1})), DomainError);
}

TEST_CASE("exponential building blocks") {
  const auto e = exp_series(6);
  const auto em1 = exp_minus_one(6);
  const auto omen = one_minus_exp_neg(6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(em1.coeff({n}) == e.coeff({n}));
    CHECK(omen.coeff({n}) == (n % 2 ? e.coeff({n}) : BigRational(-e.coeff({n}))));
  }
  CHECK(em1.coeff({0}) == 0);
  CHECK(e.coeff({6}) == make_rational(1, 720));
}

TEST_CASE("dividing by e^z - 1 gives the Bernoulli numbers") {
  MultiSeries z({"z"}, {10});
  z.coeff({1}) = 1;
  const auto q = divide_by_corner_product(series_mul(z, exp_series(10)), {exp_minus_one(10)});
  // z e^z / (e^z - 1) = z / (1 - e^{-z}); one order is lost to the shift.
  const auto want = testing_support::bernoulli_by_inversion(9, -1);
  for (int n = 0; n <= 9; ++n) CHECK(q.coeff({n}) * BigRational(testing_support::fact(n)) == want[static_cast<std::size_t>(n)]);
  CHECK(q.orders() == std::vector<int>{9});
  MultiSeries bad({"z"}, {3});
  bad.coeff({0}) = 1;
  CHECK_THROWS_AS(divide_by_corner_product(bad, {exp_minus_one(3)}), DomainError);
}

TEST_CASE("substitution composes") {
  // log(1+x) at x = e^z - 1 is z.
  std::vector<BigRational> log1p{0};
  for (int n = 1; n <= 7; ++n) log1p.push_back(make_rational(n % 2 ? 1 : -1, n));
  const auto out = substitute(MultiSeries::univariate("x", log1p), {exp_minus_one(7)});
  CHECK(out.coeff({1}) == 1);
  for (int n = 2; n <= 7; ++n) CHECK(out.coeff({n}) == 0);
  CHECK_THROWS_AS(substitute(MultiSeries::univariate("x", log1p), {exp_series(7)}), DomainError);
}

TEST_CASE("multiply_along and euler_derivative") {
  SplitMix64 rng(23);
  const auto a = random_series(rng, {3, 4});
  const auto u = random_unit(rng, 4, "z2");
  // multiply_along equals the full product with a series constant in z1.
  MultiSeries lifted({"z1", "z2"}, {3, 4});
  for (int n = 0; n <= 4; ++n) lifted.coeff({0, n}) = u.coeff({n});
  CHECK(multiply_along(a, 1, u) == series_mul(a, lifted));
  const auto d = euler_derivative(a, 0);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 4; ++j) CHECK(d.coeff({i, j}) == BigRational(i * a.coeff({i, j})));
  CHECK_THROWS_AS(euler_derivative(a, 2), InputError);
}
