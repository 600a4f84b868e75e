#include "schurpb/bernoulli.hpp"

#include "schurpb/polylog.hpp"
#include "schurpb/series.hpp"

namespace schurpb {

std::string to_string(Kind kind) { return kind == Kind::B ? "B" : "C"; }

Kind parse_kind(const std::string& text) {
  if (text == "B" || text == "b") return Kind::B;
  if (text == "C" || text == "c") return Kind::C;
  throw InputError("kind must be B or C, got '" + text + "'");
}

std::size_t BernoulliTable::offset(std::span<const int> m) const {
  if (m.size() != orders.size())
    throw InputError("expected " + std::to_string(orders.size()) + " indices");
  std::size_t off = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] > orders[i])
      throw InputError("index " + std::to_string(m[i]) + " outside table order " +
                       std::to_string(orders[i]));
    off = off * static_cast<std::size_t>(orders[i] + 1) + static_cast<std::size_t>(m[i]);
  }
  return off;
}

const BigRational& BernoulliTable::at(std::span<const int> m) const {
  return values[offset(m)];
}

BigRational BernoulliTable::get(std::span<const int> m) const {
  for (int x : m)
    if (x < 0) return 0;
  return at(m);
}

std::vector<std::vector<int>> BernoulliTable::indices() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(orders.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = orders.size();
    while (i > 0 && cur[i - 1] == orders[i - 1]) cur[--i] = 0;
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

BernoulliTable bernoulli_table(const Partition& shape, const WeightTableau& k,
                               std::span<const int> orders, Kind kind) {
  const auto vars = corner_variables(shape);
  if (orders.size() != vars.size())
    throw InputError("expected " + std::to_string(vars.size()) + " orders, got " +
                     std::to_string(orders.size()));
  std::vector<int> plus_one;
  for (int o : orders) {
    if (o < 0) throw InputError("orders must be non-negative");
    plus_one.push_back(o + 1);
  }
  // Division by z * unit drops one order per variable, so build one higher.
  const MultiSeries li = schur_polylog_series(shape, k, plus_one);
  std::vector<MultiSeries> inners, denominators;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    inners.push_back(one_minus_exp_neg(plus_one[i], vars[i]));
    denominators.push_back(kind == Kind::B ? one_minus_exp_neg(plus_one[i], vars[i])
                                           : exp_minus_one(plus_one[i], vars[i]));
  }
  const MultiSeries quotient =
      divide_by_corner_product(substitute(li, inners), denominators);

  BernoulliTable table;
  table.shape = shape;
  table.k = k;
  table.kind = kind;
  table.orders.assign(orders.begin(), orders.end());
  for (const auto& m : table.indices()) {
    BigRational v = quotient.coeff(m);
    for (int mi : m) v *= BigRational(factorial(mi));
    table.values.push_back(std::move(v));
  }
  return table;
}

namespace {

BernoulliTable binomial_transform(const BernoulliTable& in, Kind out_kind,
                                  bool alternating) {
  BernoulliTable out = in;
  out.kind = out_kind;
  const auto idx = in.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const auto& m = idx[a];
    BigRational acc = 0;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const auto& n = idx[b];
      bool below = true;
      int gap = 0;
      for (std::size_t i = 0; i < m.size() && below; ++i) {
        below = n[i] <= m[i];
        gap += m[i] - n[i];
      }
      if (!below) continue;
      BigInt coef = 1;
      for (std::size_t i = 0; i < m.size(); ++i) coef *= binomial(m[i], n[i]);
      if (alternating && gap % 2 != 0) coef = -coef;
      acc += BigRational(coef) * in.values[b];
    }
    out.values[a] = std::move(acc);
  }
  return out;
}

}  // namespace

BernoulliTable b_from_c(const BernoulliTable& c_table) {
  if (c_table.kind != Kind::C) throw InputError("b_from_c needs a C table");
  return binomial_transform(c_table, Kind::B, false);
}

BernoulliTable c_from_b(const BernoulliTable& b_table) {
  if (b_table.kind != Kind::B) throw InputError("c_from_b needs a B table");
  return binomial_transform(b_table, Kind::C, true);
}

void require_hook(const Partition& shape) {
  if (!shape.is_hook())
    throw DomainError("shape " + shape.to_string() +
                      " is not a hook (h,1^(l-1)) with h,l >= 2");
}

WeightTableau decrement_hook_corners(const WeightTableau& k, bool row_corner,
                                     bool column_corner) {
  require_hook(k.shape());
  WeightTableau out = k;
  const auto cn = corners(k.shape());
  if (row_corner) out.at(cn[0]) -= 1;
  if (column_corner) out.at(cn[1]) -= 1;
  return out;
}

BigRational hook_b_stirling(const Partition& shape, const WeightTableau& k,
                            int n, int m) {
  require_hook(shape);
  if (k.shape() != shape) throw InputError("weight tableau does not match the shape");
  if (n < 0 || m < 0) throw InputError("hook_b_stirling needs n, m >= 0");
  const auto cn = corners(shape);
  const int row_corner = shape.cell_index(cn[0]);
  const int col_corner = shape.cell_index(cn[1]);
  const std::vector<int> bounds{n + 1, m + 1};
  BigRational total = 0;
  for_each_ssyt(shape, bounds, [&](std::span<const int> e) {
    const int a = e[static_cast<std::size_t>(row_corner)];
    const int b = e[static_cast<std::size_t>(col_corner)];
    const BigInt s = stirling2(n, a - 1) * stirling2(m, b - 1);
    if (s == 0) return;
    BigInt num = s * factorial(a - 1) * factorial(b - 1), den = 1;
    if ((a + b + n + m) % 2 != 0) num = -num;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int w = k[i];
      if (w > 0)
        den *= pow_int(e[i], static_cast<unsigned long>(w));
      else if (w < 0)
        num *= pow_int(e[i], static_cast<unsigned long>(-w));
    }
    total += make_rational(num, den);
  });
  return total;
}

namespace {

std::string describe(const char* what, int n, int m, const BigRational& lhs,
                     const BigRational& rhs) {
  return std::string(what) + " at (" + std::to_string(n) + "," + std::to_string(m) +
         "): " + to_string(lhs) + " != " + to_string(rhs);
}

void check_orders(std::span<const int> orders) {
  if (orders.size() != 2) throw InputError("hook identities need two orders");
  for (int o : orders)
    if (o < 0) throw InputError("orders must be non-negative");
}

}  // namespace

IdentityReport verify_hook_recurrence(const Partition& shape, const WeightTableau& k,
                                      std::span<const int> orders) {
  require_hook(shape);
  check_orders(orders);
  const int N = orders[0], M = orders[1];
  // B_{i+1, j+1} reaches one past the box.
  const std::vector<int> wide{N + 1, M + 1};
  const BernoulliTable b = bernoulli_table(shape, k, wide, Kind::B);
  const BernoulliTable bm =
      bernoulli_table(shape, decrement_hook_corners(k, true, true), orders, Kind::B);
  IdentityReport rep{"hook-recurrence", 0, {}};
  auto B = [&](int i, int j) { return b.at({i, j}); };
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= M; ++m) {
      BigRational rhs = B(n, m);
      for (int j = 0; j < m; ++j) rhs += BigRational(binomial(m, j)) * B(n, j + 1);
      for (int i = 0; i < n; ++i) rhs += BigRational(binomial(n, i)) * B(i + 1, m);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
          rhs += BigRational(binomial(n, i) * binomial(m, j)) * B(i + 1, j + 1);
      const BigRational& lhs = bm.at({n, m});
      ++rep.checked;
      if (lhs != rhs && rep.mismatches.size() < 5)
        rep.mismatches.push_back(describe("B^{k-}", n, m, lhs, rhs));
    }
  }
  return rep;
}

IdentityReport verify_hook_bc_relation(const Partition& shape, const WeightTableau& k,
                                       std::span<const int> orders) {
  require_hook(shape);
  check_orders(orders);
  const auto cn = corners(shape);
  if (k.at(cn[0]) == 1 || k.at(cn[1]) == 1)
    throw DomainError("BC relation needs both corner weights different from 1");
  const BernoulliTable b = bernoulli_table(shape, k, orders, Kind::B);
  const BernoulliTable c = bernoulli_table(shape, k, orders, Kind::C);
  const BernoulliTable c_row =
      bernoulli_table(shape, decrement_hook_corners(k, true, false), orders, Kind::C);
  const BernoulliTable c_col =
      bernoulli_table(shape, decrement_hook_corners(k, false, true), orders, Kind::C);
  const BernoulliTable c_both =
      bernoulli_table(shape, decrement_hook_corners(k, true, true), orders, Kind::C);
  IdentityReport rep{"hook-bc-relation", 0, {}};
  for (int n = 0; n <= orders[0]; ++n) {
    for (int m = 0; m <= orders[1]; ++m) {
      const std::vector<int> nm{n, m}, n1{n - 1, m}, m1{n, m - 1}, both{n - 1, m - 1};
      const BigRational rhs = c.get(nm) + c_row.get(n1) + c_col.get(m1) + c_both.get(both);
      const BigRational& lhs = b.at(nm);
      ++rep.checked;
      if (lhs != rhs && rep.mismatches.size() < 5)
        rep.mismatches.push_back(describe("B", n, m, lhs, rhs));
    }
  }
  return rep;
}

IdentityReport verify_bc_binomial(const Partition& shape, const WeightTableau& k,
                                  std::span<const int> orders) {
  const BernoulliTable b = bernoulli_table(shape, k, orders, Kind::B);
  const BernoulliTable c = bernoulli_table(shape, k, orders, Kind::C);
  IdentityReport rep{"bc-binomial", 0, {}};
  auto compare = [&](const char* what, const BernoulliTable& got, const BernoulliTable& want) {
    const auto idx = want.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      ++rep.checked;
      if (got.values[i] != want.values[i] && rep.mismatches.size() < 5) {
        std::string where;
        for (int x : idx[i]) where += (where.empty() ? "" : ",") + std::to_string(x);
        rep.mismatches.push_back(std::string(what) + " at (" + where + "): " +
                                 to_string(got.values[i]) + " != " + to_string(want.values[i]));
      }
    }
  };
  compare("b_from_c(C) vs B", b_from_c(c), b);
  compare("c_from_b(B) vs C", c_from_b(b), c);
  compare("b_from_c(c_from_b(B)) vs B", b_from_c(c_from_b(b)), b);
  compare("c_from_b(b_from_c(C)) vs C", c_from_b(b_from_c(c)), c);
  return rep;
}

IdentityReport verify_stirling_hook(const Partition& shape, const WeightTableau& k,
                                    std::span<const int> orders) {
  require_hook(shape);
  check_orders(orders);
  const BernoulliTable b = bernoulli_table(shape, k, orders, Kind::B);
  IdentityReport rep{"stirling-hook", 0, {}};
  for (int n = 0; n <= orders[0]; ++n) {
    for (int m = 0; m <= orders[1]; ++m) {
      const BigRational lhs = hook_b_stirling(shape, k, n, m);
      const BigRational& rhs = b.at({n, m});
      ++rep.checked;
      if (lhs != rhs && rep.mismatches.size() < 5)
        rep.mismatches.push_back(describe("Stirling form", n, m, lhs, rhs));
    }
  }
  return rep;
}

IdentityReport verify_derivative_lemma(const Partition& shape, const WeightTableau& k,
                                       std::span<const int> orders) {
  require_hook(shape);
  check_orders(orders);
  const MultiSeries li = schur_polylog_series(shape, k, orders);
  IdentityReport rep{"derivative-lemma", 0, {}};
  auto compare = [&](const char* what, const MultiSeries& lhs, const MultiSeries& rhs) {
    for (int a = 0; a <= orders[0]; ++a) {
      for (int b = 0; b <= orders[1]; ++b) {
        ++rep.checked;
        const BigRational& x = lhs.coeff({a, b});
        const BigRational& y = rhs.coeff({a, b});
        if (x != y && rep.mismatches.size() < 5)
          rep.mismatches.push_back(describe(what, a, b, x, y));
      }
    }
  };
  compare("z_h d/dz_h", euler_derivative(li, 0),
          schur_polylog_series(shape, decrement_hook_corners(k, true, false), orders));
  compare("z_l d/dz_l", euler_derivative(li, 1),
          schur_polylog_series(shape, decrement_hook_corners(k, false, true), orders));
  compare("z_h z_l d^2/dz_h dz_l", euler_derivative(euler_derivative(li, 0), 1),
          schur_polylog_series(shape, decrement_hook_corners(k, true, true), orders));
  return rep;
}

IdentityReport verify_leading_coefficient(const Partition& shape, const WeightTableau& k) {
  require_hook(shape);
  const int l = shape.length();
  const std::vector<int> orders{1, l};
  const MultiSeries li = schur_polylog_series(shape, k, orders);
  BigInt den = 1;
  for (int i = 2; i <= l; ++i) den *= pow_int(i, static_cast<unsigned long>(k.at({i, 1})));
  const BigRational want = make_rational(BigInt(1), den);
  IdentityReport rep{"leading-coefficient", 1, {}};
  const BigRational& got = li.coeff({1, l});
  if (got != want) rep.mismatches.push_back(describe("leading coefficient", 1, l, got, want));
  // Nothing below the leading monomial.
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= l; ++b) {
      if (a == 1 && b == l) continue;
      ++rep.checked;
      if (li.coeff({a, b}) != 0 && rep.mismatches.size() < 5)
        rep.mismatches.push_back(describe("lower coefficient", a, b, li.coeff({a, b}), 0));
    }
  }
  return rep;
}

std::vector<BigRational> classical_bernoulli(int n) {
  if (n < 0) throw InputError("classical_bernoulli needs n >= 0");
  std::vector<BigRational> b{BigRational(1)};
  for (int m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (int j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    acc /= BigRational(-(m + 1));
    b.push_back(acc);
  }
  return b;
}

IdentityReport verify_classical_reduction(int order) {
  if (order < 0) throw InputError("orders must be non-negative");
  const Partition one = Partition::parse("1");
  const WeightTableau k(one, {1});
  const std::vector<int> orders{order};
  const BernoulliTable b = bernoulli_table(one, k, orders, Kind::B);
  const BernoulliTable c = bernoulli_table(one, k, orders, Kind::C);
  const std::vector<BigRational> ref = classical_bernoulli(order);
  IdentityReport rep{"classical-reduction", 0, {}};
  for (int n = 0; n <= order; ++n) {
    const BigRational& cn = ref[static_cast<std::size_t>(n)];
    const BigRational bn = n == 1 ? BigRational(-cn) : cn;
    rep.checked += 2;
    if (b.at({n}) != bn && rep.mismatches.size() < 5)
      rep.mismatches.push_back("B_" + std::to_string(n) + ": " + to_string(b.at({n})) +
                               " != " + to_string(bn));
    if (c.at({n}) != cn && rep.mismatches.size() < 5)
      rep.mismatches.push_back("C_" + std::to_string(n) + ": " + to_string(c.at({n})) +
                               " != " + to_string(cn));
  }
  return rep;
}

}  // namespace schurpb
