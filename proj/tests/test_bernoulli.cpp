#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "schurpb/bernoulli.hpp"
#include "support.hpp"

using namespace schurpb;
using testing_support::SplitMix64;

namespace {

WeightTableau random_weights(SplitMix64& rng, const Partition& shape, int lo, int hi) {
  std::vector<int> w;
  for (int i = 0; i < shape.weight(); ++i) w.push_back(rng.uniform(lo, hi));
  return {shape, w};
}

std::vector<BigRational> column(const BernoulliTable& t) {
  std::vector<BigRational> out;
  for (const auto& m : t.indices()) out.push_back(t.at(m));
  return out;
}

}  // namespace

TEST_CASE("single box, k = 1") {
  const Partition one({1});
  const WeightTableau k(one, {1});
  const std::vector<int> orders{4};
  const auto b = bernoulli_table(one, k, orders, Kind::B);
  const auto c = bernoulli_table(one, k, orders, Kind::C);
  CHECK(column(b) == std::vector<BigRational>{1, make_rational(1, 2), make_rational(1, 6), 0, make_rational(-1, 30)});
  CHECK(column(c) == std::vector<BigRational>{1, make_rational(-1, 2), make_rational(1, 6), 0, make_rational(-1, 30)});
  const auto classical = classical_bernoulli(4);
  for (int n = 0; n <= 4; ++n) CHECK(c.at({n}) == classical[static_cast<std::size_t>(n)]);
  CHECK(verify_classical_reduction(12).passed());
}

TEST_CASE("single box matches the classical poly-Bernoulli formula") {
  // B_n^(k) = (-1)^n sum_m (-1)^m m! S(n, m) / (m+1)^k
  const Partition one({1});
  for (int k = 1; k <= 4; ++k) {
    const auto t = bernoulli_table(one, WeightTableau(one, {k}), std::vector<int>{8}, Kind::B);
    for (int n = 0; n <= 8; ++n) {
      BigRational want = 0;
      for (int m = 0; m <= n; ++m) {
        const BigRational term = make_rational(factorial(m) * stirling2(n, m), pow_int(m + 1, static_cast<unsigned long>(k)));
        want += ((n + m) % 2) ? BigRational(-term) : term;
      }
      CHECK(t.at({n}) == want);
    }
  }
  const auto k2 = bernoulli_table(one, WeightTableau(one, {2}), std::vector<int>{4}, Kind::B);
  CHECK(column(k2) == std::vector<BigRational>{1, make_rational(1, 4), make_rational(-1, 36), make_rational(-1, 24),
                                               make_rational(7, 450)});
}

TEST_CASE("negative weights obey the duality B_n^(-k) = B_k^(-n)") {
  const Partition one({1});
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) {
      const auto a = bernoulli_table(one, WeightTableau(one, {-k}), std::vector<int>{n}, Kind::B);
      const auto b = bernoulli_table(one, WeightTableau(one, {-n}), std::vector<int>{k}, Kind::B);
      CHECK(a.at({n}) == b.at({k}));
    }
  }
}

TEST_CASE("tables agree with the brute-force substitution oracle") {
  SplitMix64 rng(41);
  for (const char* name : {"1", "2", "1,1", "2,1", "2,2", "3,1", "2,1,1"}) {
    const Partition shape = Partition::parse(name);
    const std::size_t nc = corners(shape).size();
    for (int rep = 0; rep < 3; ++rep) {
      const WeightTableau k = random_weights(rng, shape, 1, 3);
      const std::vector<int> orders(nc, 3);
      const auto li = testing_support::brute_series(shape, k, std::vector<int>(nc, 4));
      for (Kind kind : {Kind::B, Kind::C}) {
        const auto t = bernoulli_table(shape, k, orders, kind);
        for (const auto& m : t.indices())
          CHECK(t.at(m) == testing_support::brute_bernoulli(li, m, kind == Kind::C));
      }
    }
  }
}

TEST_CASE("column shapes have zero constant term") {
  const Partition col({1, 1});
  for (int a = 1; a <= 3; ++a)
    CHECK(bernoulli_table(col, WeightTableau(col, {a, 2}), std::vector<int>{2}, Kind::B).at({0}) == 0);
}

TEST_CASE("binomial transforms") {
  const Partition one({1});
  const auto c = bernoulli_table(one, WeightTableau(one, {1}), std::vector<int>{3}, Kind::C);
  const auto b = b_from_c(c);
  CHECK(b.kind == Kind::B);
  CHECK(b.at({0}) == c.at({0}));
  CHECK(b.at({1}) == make_rational(1, 2));
  CHECK_THROWS_AS(b_from_c(b), InputError);
  CHECK_THROWS_AS(c_from_b(c), InputError);

  SplitMix64 rng(42);
  for (int size = 1; size <= 5; ++size) {
    for (const Partition& shape : partitions_of(size)) {
      const WeightTableau k = random_weights(rng, shape, 1, 3);
      const std::vector<int> orders(corners(shape).size(), 3);
      const auto bt = bernoulli_table(shape, k, orders, Kind::B);
      const auto ct = bernoulli_table(shape, k, orders, Kind::C);
      CHECK(b_from_c(ct) == bt);
      CHECK(c_from_b(bt) == ct);
      CHECK(c_from_b(b_from_c(ct)) == ct);
      CHECK(verify_bc_binomial(shape, k, orders).passed());
    }
  }
}

TEST_CASE("table access") {
  const Partition p({2, 1});
  const auto t = bernoulli_table(p, WeightTableau(p, {1, 1, 2}), std::vector<int>{2, 3}, Kind::B);
  CHECK(t.values.size() == 12);
  CHECK(t.get(std::vector<int>{-1, 2}) == 0);
  CHECK(t.get(std::vector<int>{1, 2}) == t.at({1, 2}));
  CHECK_THROWS_AS(t.get(std::vector<int>{3, 0}), InputError);
  CHECK_THROWS_AS(t.at({0}), InputError);
  CHECK(t.indices().front() == std::vector<int>{0, 0});
  CHECK(t.indices().back() == std::vector<int>{2, 3});
  CHECK(parse_kind("B") == Kind::B);
  CHECK(parse_kind("C") == Kind::C);
  CHECK(to_string(Kind::C) == "C");
  CHECK_THROWS_AS(parse_kind("D"), InputError);
  CHECK_THROWS_AS(bernoulli_table(p, WeightTableau(p, {1, 1, 2}), std::vector<int>{2}, Kind::B), InputError);
}

TEST_CASE("Stirling formula for hooks") {
  const Partition p({2, 1});
  const WeightTableau k111(p, {1, 1, 1});
  const auto t = bernoulli_table(p, k111, std::vector<int>{1, 1}, Kind::B);
  CHECK(hook_b_stirling(p, k111, 1, 1) == t.at({1, 1}));
  CHECK(hook_b_stirling(p, k111, 0, 0) == 0);
  const WeightTableau k213 = parse_int_tableau(p, "[[2,1],[3]]");
  CHECK(verify_stirling_hook(p, k213, std::vector<int>{6, 6}).passed());
  CHECK_THROWS_AS(hook_b_stirling(Partition({2, 2}), WeightTableau(Partition({2, 2}), {1, 1, 1, 1}), 1, 1),
                  DomainError);
}

TEST_CASE("hook identities") {
  const Partition p({2, 1});
  for (const char* k : {"[[1,2],[2]]", "[[1,1],[2]]", "[[3,2],[3]]"}) {
    const WeightTableau w = parse_int_tableau(p, k);
    const auto rec = verify_hook_recurrence(p, w, std::vector<int>{5, 5});
    CHECK(rec.passed());
    CHECK(rec.checked == 36);
    CHECK(verify_derivative_lemma(p, w, std::vector<int>{5, 5}).passed());
    CHECK(verify_leading_coefficient(p, w).passed());
  }
  const WeightTableau w = parse_int_tableau(p, "[[1,2],[2]]");
  CHECK(verify_hook_bc_relation(p, w, std::vector<int>{4, 4}).passed());
  const Partition q({3, 1, 1});
  CHECK(verify_hook_bc_relation(q, WeightTableau(q, {1, 1, 2, 1, 2}), std::vector<int>{3, 3}).passed());
  CHECK_THROWS_AS(verify_hook_bc_relation(p, parse_int_tableau(p, "[[1,1],[2]]"), std::vector<int>{2, 2}),
                  DomainError);
  CHECK_THROWS_AS(verify_hook_recurrence(Partition({3}), WeightTableau(Partition({3}), {1, 1, 2}),
                                         std::vector<int>{2, 2}),
                  DomainError);
}

TEST_CASE("decrement_hook_corners") {
  const Partition p({3, 1, 1});
  const WeightTableau k(p, {1, 2, 3, 4, 5});
  CHECK(decrement_hook_corners(k, true, false).values() == std::vector<int>{1, 2, 2, 4, 5});
  CHECK(decrement_hook_corners(k, false, true).values() == std::vector<int>{1, 2, 3, 4, 4});
  CHECK(decrement_hook_corners(k, true, true).values() == std::vector<int>{1, 2, 2, 4, 4});
}
