#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "schurpb/shapes.hpp"
#include "support.hpp"

using namespace schurpb;
using testing_support::SplitMix64;

namespace {

Partition random_partition(SplitMix64& rng, int max_size) {
  const auto all = partitions_of(rng.uniform(1, max_size));
  return all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
}

// Hook-content formula: #SSYT with entries <= n is prod (n + j - i) / hook(i, j).
BigInt hook_content(const Partition& shape, int n) {
  const Partition conj = conjugate(shape);
  BigInt num = 1, den = 1;
  for (const Cell& c : shape.cells()) {
    num *= n + c.col - c.row;
    den *= (shape.row_length(c.row) - c.col) + (conj.row_length(c.col) - c.row) + 1;
  }
  return num / den;
}

// Standard tableaux by removing the largest entry from each corner.
BigInt syt_count(const Partition& shape) {
  if (shape.weight() <= 1) return 1;
  BigInt total = 0;
  for (const Cell& c : corners(shape)) {
    std::vector<int> parts = shape.parts();
    if (--parts[static_cast<std::size_t>(c.row - 1)] == 0) parts.pop_back();
    total += syt_count(Partition(parts));
  }
  return total;
}

}  // namespace

TEST_CASE("corners of a diagram") {
  const auto c = corners(Partition({4, 4, 3, 1}));
  CHECK(c == std::vector<Cell>{{2, 4}, {3, 3}, {4, 1}});
  CHECK(corners(Partition({1})) == std::vector<Cell>{{1, 1}});
  CHECK(corners(Partition({3, 3})) == std::vector<Cell>{{2, 3}});
  CHECK(corners(Partition({3, 1, 1})) == std::vector<Cell>{{1, 3}, {3, 1}});
  CHECK(corners(Partition()).empty());
}

TEST_CASE("corner count equals the number of distinct parts") {
  SplitMix64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Partition p = random_partition(rng, 12);
    const std::set<int> distinct(p.parts().begin(), p.parts().end());
    CHECK(corners(p).size() == distinct.size());
    for (const Cell& c : corners(p)) {
      CHECK(p.contains(c));
      CHECK_FALSE(p.contains({c.row + 1, c.col}));
      CHECK_FALSE(p.contains({c.row, c.col + 1}));
    }
  }
}

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("4,4,3,1").parts() == std::vector<int>{4, 4, 3, 1});
  CHECK(Partition::parse(" 2 , 1 ").parts() == std::vector<int>{2, 1});
  CHECK(Partition::parse("4,4,3,1").to_string() == "4,4,3,1");
  CHECK_THROWS_AS(Partition::parse(""), InputError);
  CHECK_THROWS_AS(Partition::parse("1,2"), InputError);
  CHECK_THROWS_AS(Partition::parse("2,0"), InputError);
  CHECK_THROWS_AS(Partition::parse("2,x"), InputError);
  CHECK(Partition({3, 1, 1}).is_hook());
  CHECK_FALSE(Partition({3}).is_hook());
  CHECK_FALSE(Partition({2, 2}).is_hook());
}

TEST_CASE("conjugate and transpose are involutions") {
  CHECK(conjugate(Partition({4, 4, 3, 1})).parts() == std::vector<int>{4, 3, 3, 2});
  SplitMix64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Partition p = random_partition(rng, 10);
    CHECK(conjugate(conjugate(p)) == p);
    std::vector<int> v;
    for (int j = 0; j < p.weight(); ++j) v.push_back(rng.uniform(1, 9));
    const Tableau<int> t(p, v);
    CHECK(transpose(transpose(t)) == t);
    CHECK(transpose(t).at({1, 1}) == t.at({1, 1}));
  }
}

TEST_CASE("tableau text parsing names the bad cell") {
  const Partition p({2, 1});
  const auto t = parse_int_tableau(p, "[[1,2],[3]]");
  CHECK(t.values() == std::vector<int>{1, 2, 3});
  CHECK(format_tableau(t) == "[[1,2],[3]]");
  try {
    parse_int_tableau(p, "[[1,x],[3]]");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("cell (1,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_int_tableau(p, "[[1,2],[3,4]]"), InputError);
  CHECK_THROWS_AS(parse_int_tableau(p, "[[1,2]"), InputError);
  const auto r = parse_real_tableau(p, "[[1,1.5],[2]]");
  CHECK(r.values() == std::vector<double>{1.0, 1.5, 2.0});
}

TEST_CASE("SSYT counts follow the hook-content formula") {
  CHECK(count_ssyt(Partition({2, 1}), 3) == 8);
  SplitMix64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Partition p = random_partition(rng, 6);
    const int n = rng.uniform(p.length(), p.length() + 3);
    CHECK(BigInt(static_cast<unsigned long>(count_ssyt(p, n))) == hook_content(p, n));
  }
}

TEST_CASE("enumerated SSYT are semistandard, distinct and respect corner bounds") {
  const Partition p({3, 2});
  const std::vector<int> bounds{3, 4};
  const auto all = enumerate_ssyt(p, bounds);
  std::set<std::vector<int>> seen;
  for (const auto& t : all) {
    CHECK(is_semistandard(t));
    CHECK(t.at({1, 3}) <= 3);
    CHECK(t.at({2, 2}) <= 4);
    seen.insert(t.values());
  }
  CHECK(seen.size() == all.size());
  // Brute force over all fillings with entries <= 4.
  std::size_t brute = 0;
  std::vector<int> v(5, 1);
  while (true) {
    const Tableau<int> t(p, v);
    if (is_semistandard(t) && t.at({1, 3}) <= 3 && t.at({2, 2}) <= 4) ++brute;
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] == 4) v[--i] = 1;
    if (i == 0) break;
    ++v[i - 1];
  }
  CHECK(all.size() == brute);
}

TEST_CASE("level maps of full depth are standard tableaux") {
  CHECK(hook_length_count(Partition({4, 4, 3, 1})) == syt_count(Partition({4, 4, 3, 1})));
  SplitMix64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const Partition p = random_partition(rng, 7);
    long full = 0;
    for (const LevelMap& m : enumerate_level_maps(p))
      if (m.depth == p.weight()) ++full;
    CHECK(BigInt(full) == syt_count(p));
    CHECK(hook_length_count(p) == syt_count(p));
  }
}

TEST_CASE("level maps times level injections count SSYT") {
  // Every SSYT with entries <= n is a level map of depth d followed by an
  // increasing injection 1..d -> 1..n.
  SplitMix64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Partition p = random_partition(rng, 6);
    const auto maps = enumerate_level_maps(p);
    for (const LevelMap& m : maps) {
      CHECK(is_semistandard(Tableau<int>(p, m.level)));
      CHECK(*std::max_element(m.level.begin(), m.level.end()) == m.depth);
    }
    for (int n = 1; n <= 7; ++n) {
      BigInt total = 0;
      for (const LevelMap& m : maps) total += testing_support::choose(n, m.depth);
      CHECK(total == hook_content(p, n));
    }
  }
}

TEST_CASE("decomposition of (2,1)") {
  const Tableau<std::string> s(Partition({2, 1}), {"a", "b", "c"});
  auto plus = [](const std::string& x, const std::string& y) { return x + "+" + y; };
  std::multiset<std::vector<std::string>> got;
  for (const auto& c : decompose_to_mzv(s, plus)) {
    CHECK(c.sign == 1);
    got.insert(c.parts);
  }
  const std::multiset<std::vector<std::string>> want{
      {"a", "b", "c"}, {"a", "c", "b"}, {"a+b", "c"}, {"a", "b+c"}};
  CHECK(got == want);
}

TEST_CASE("zeta-star decomposition of a column") {
  // zeta(a, b) = zeta*(a, b) - zeta*(a+b)
  const Tableau<std::string> s(Partition({1, 1}), {"a", "b"});
  auto plus = [](const std::string& x, const std::string& y) { return x + "+" + y; };
  const auto terms = decompose_to_mzv_star(s, plus);
  REQUIRE(terms.size() == 2);
  std::multiset<std::pair<int, std::vector<std::string>>> got;
  for (const auto& t : terms) got.insert({t.sign, t.parts});
  const std::multiset<std::pair<int, std::vector<std::string>>> want{{1, {"a", "b"}}, {-1, {"a+b"}}};
  CHECK(got == want);
}

TEST_CASE("level assignments of a skew set") {
  // Two incomparable cells: levels (1,1), (1,2), (2,1).
  const std::vector<Cell> cells{{1, 2}, {2, 1}};
  auto maps = level_assignments(cells);
  std::sort(maps.begin(), maps.end());
  CHECK(maps == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}});
  // A column pair is forced strict.
  const std::vector<Cell> column{{1, 1}, {2, 1}};
  CHECK(level_assignments(column) == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("partitions of n") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
  CHECK(partitions_of(3)[0].parts() == std::vector<int>{3});
}
