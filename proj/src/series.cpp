#include "schurpb/series.hpp"

#include <algorithm>

namespace schurpb {

MultiSeries::MultiSeries(std::vector<std::string> variables,
                         std::vector<int> orders)
    : variables_(std::move(variables)), orders_(std::move(orders)) {
  if (variables_.size() != orders_.size())
    throw InputError("series: one order per variable required");
  strides_.assign(orders_.size(), 1);
  std::size_t total = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    if (orders_[i] < 0) throw InputError("series: negative truncation order");
    strides_[i] = total;
    total *= static_cast<std::size_t>(orders_[i] + 1);
  }
  coeffs_.assign(total, BigRational(0));
}

MultiSeries MultiSeries::univariate(std::string variable,
                                    std::vector<BigRational> coefficients) {
  if (coefficients.empty()) throw InputError("series: empty coefficient list");
  MultiSeries s({std::move(variable)},
                {static_cast<int>(coefficients.size()) - 1});
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    s.coeffs_[i] = std::move(coefficients[i]);
  return s;
}

void MultiSeries::check_exponents(std::span<const int> e) const {
  if (e.size() != orders_.size())
    throw InputError("series: exponent vector has wrong length");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > orders_[i])
      throw InputError("series: exponent " + std::to_string(e[i]) +
                       " outside order " + std::to_string(orders_[i]) +
                       " of " + variables_[i]);
}

std::size_t MultiSeries::offset(std::span<const int> e) const {
  check_exponents(e);
  std::size_t off = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    off += static_cast<std::size_t>(e[i]) * strides_[i];
  return off;
}

std::vector<int> MultiSeries::exponents(std::size_t off) const {
  std::vector<int> e(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e[i] = static_cast<int>(off / strides_[i]);
    off %= strides_[i];
  }
  return e;
}

const BigRational& MultiSeries::coeff(std::span<const int> e) const {
  return coeffs_[offset(e)];
}

BigRational& MultiSeries::coeff(std::span<const int> e) {
  return coeffs_[offset(e)];
}

MultiSeries MultiSeries::truncated(std::vector<int> orders) const {
  if (orders.size() != orders_.size())
    throw InputError("series: truncation order count mismatch");
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] > orders_[i])
      throw InputError("series: cannot raise a truncation order");
  MultiSeries out(variables_, std::move(orders));
  for (std::size_t off = 0; off < out.size(); ++off)
    out.coeffs_[off] = coeff(out.exponents(off));
  return out;
}

bool MultiSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigRational& q) { return q == 0; });
}

bool MultiSeries::operator==(const MultiSeries& other) const {
  return variables_ == other.variables_ && orders_ == other.orders_ &&
         coeffs_ == other.coeffs_;
}

namespace {

void require_same_variables(const MultiSeries& a, const MultiSeries& b) {
  if (a.variables() != b.variables())
    throw InputError("series: variable lists differ");
}

std::vector<int> min_orders(const MultiSeries& a, const MultiSeries& b) {
  std::vector<int> o(a.arity());
  for (std::size_t i = 0; i < o.size(); ++i)
    o[i] = std::min(a.order(i), b.order(i));
  return o;
}

template <class Op>
MultiSeries combine(const MultiSeries& a, const MultiSeries& b, Op op) {
  require_same_variables(a, b);
  MultiSeries out(a.variables(), min_orders(a, b));
  for (std::size_t off = 0; off < out.size(); ++off) {
    const auto e = out.exponents(off);
    out.at(off) = op(a.coeff(e), b.coeff(e));
  }
  return out;
}

}  // namespace

MultiSeries series_add(const MultiSeries& a, const MultiSeries& b) {
  return combine(a, b, [](const BigRational& x, const BigRational& y) {
    return BigRational(x + y);
  });
}

MultiSeries series_sub(const MultiSeries& a, const MultiSeries& b) {
  return combine(a, b, [](const BigRational& x, const BigRational& y) {
    return BigRational(x - y);
  });
}

MultiSeries series_scale(const MultiSeries& a, const BigRational& factor) {
  MultiSeries out = a;
  for (std::size_t off = 0; off < out.size(); ++off) out.at(off) *= factor;
  return out;
}

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) {
  require_same_variables(a, b);
  MultiSeries out(a.variables(), min_orders(a, b));
  const std::size_t n = out.arity();
  // Restrict both factors to the output box, then convolve.
  const MultiSeries ta = a.truncated(out.orders());
  const MultiSeries tb = b.truncated(out.orders());
  std::vector<std::vector<int>> eb(tb.size());
  std::vector<std::size_t> nonzero_b;
  for (std::size_t j = 0; j < tb.size(); ++j) {
    if (tb.at(j) == 0) continue;
    eb[j] = tb.exponents(j);
    nonzero_b.push_back(j);
  }
  std::vector<int> sum(n);
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta.at(i) == 0) continue;
    const auto ea = ta.exponents(i);
    for (std::size_t j : nonzero_b) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v) {
        sum[v] = ea[v] + eb[j][v];
        inside = sum[v] <= out.order(v);
      }
      if (inside) out.at(out.offset(sum)) += ta.at(i) * tb.at(j);
    }
  }
  return out;
}

MultiSeries one_minus_exp_neg(int order, const std::string& variable) {
  if (order < 0) throw InputError("series: negative order");
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1, BigRational(0));
  for (int n = 1; n <= order; ++n)
    c[static_cast<std::size_t>(n)] =
        BigRational(n % 2 == 1 ? 1 : -1) / BigRational(factorial(n));
  return MultiSeries::univariate(variable, std::move(c));
}

MultiSeries exp_minus_one(int order, const std::string& variable) {
  if (order < 0) throw InputError("series: negative order");
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1, BigRational(0));
  for (int n = 1; n <= order; ++n)
    c[static_cast<std::size_t>(n)] = BigRational(1) / BigRational(factorial(n));
  return MultiSeries::univariate(variable, std::move(c));
}

MultiSeries exp_series(int order, const std::string& variable) {
  MultiSeries s = exp_minus_one(order, variable);
  s.at(0) = 1;
  return s;
}

MultiSeries unit_inverse(const MultiSeries& unit) {
  if (unit.arity() != 1) throw InputError("series: unit_inverse needs one variable");
  if (unit.at(0) != 1) throw DomainError("series: unit must have constant term 1");
  const int n = unit.order(0);
  std::vector<BigRational> inv(static_cast<std::size_t>(n) + 1, BigRational(0));
  inv[0] = 1;
  for (int t = 1; t <= n; ++t) {
    BigRational acc = 0;
    for (int e = 1; e <= t; ++e)
      acc += unit.at(static_cast<std::size_t>(e)) * inv[static_cast<std::size_t>(t - e)];
    inv[static_cast<std::size_t>(t)] = -acc;
  }
  return MultiSeries::univariate(unit.variables()[0], std::move(inv));
}

MultiSeries multiply_along(const MultiSeries& a, std::size_t axis,
                           const MultiSeries& u) {
  if (axis >= a.arity()) throw InputError("series: axis out of range");
  if (u.arity() != 1) throw InputError("series: axis factor must be univariate");
  std::vector<int> orders = a.orders();
  orders[axis] = std::min(orders[axis], u.order(0));
  const MultiSeries src = a.truncated(orders);
  MultiSeries out(a.variables(), orders);
  const std::size_t st = src.stride(axis);
  const int len = orders[axis];
  for (std::size_t off = 0; off < src.size(); ++off) {
    // Visit each fibre along the axis once, from its exponent-0 element.
    if ((off / st) % static_cast<std::size_t>(len + 1) != 0) continue;
    for (int t = 0; t <= len; ++t) {
      BigRational acc = 0;
      for (int e = 0; e <= t; ++e) {
        const BigRational& x = src.at(off + static_cast<std::size_t>(e) * st);
        if (x != 0) acc += x * u.at(static_cast<std::size_t>(t - e));
      }
      out.at(off + static_cast<std::size_t>(t) * st) = std::move(acc);
    }
  }
  return out;
}

namespace {

// Replaces axis `axis` (currently in the outer variable) by the univariate
// series `inner`, truncating that axis to `order`.
MultiSeries contract_axis(const MultiSeries& a, std::size_t axis,
                          const MultiSeries& inner, int order) {
  // powers[e][t] = [z^t] inner^e for e, t <= order.
  std::vector<MultiSeries> powers;
  const MultiSeries base = inner.truncated({order});
  MultiSeries one({inner.variables()[0]}, {order});
  one.at(0) = 1;
  powers.push_back(one);
  for (int e = 1; e <= order; ++e) powers.push_back(series_mul(powers.back(), base));

  std::vector<int> out_orders = a.orders();
  out_orders[axis] = order;
  MultiSeries out(a.variables(), out_orders);
  const std::size_t st_in = a.stride(axis);
  const std::size_t st_out = out.stride(axis);
  for (std::size_t off = 0; off < out.size(); ++off) {
    const auto e = out.exponents(off);
    if (e[axis] != 0) continue;
    auto e_in = e;
    const std::size_t base_in = a.offset(e_in);
    for (int t = 0; t <= order; ++t) {
      BigRational acc = 0;
      // Powers beyond t contribute nothing since inner(0) = 0.
      for (int p = 0; p <= std::min(t, a.order(axis)); ++p) {
        const BigRational& x = a.at(base_in + static_cast<std::size_t>(p) * st_in);
        if (x == 0) continue;
        const BigRational& y = powers[static_cast<std::size_t>(p)].at(static_cast<std::size_t>(t));
        if (y != 0) acc += x * y;
      }
      out.at(off + static_cast<std::size_t>(t) * st_out) = std::move(acc);
    }
  }
  return out;
}

}  // namespace

MultiSeries substitute(const MultiSeries& outer,
                       const std::vector<MultiSeries>& inners) {
  if (inners.size() != outer.arity())
    throw InputError("series: substitute needs one inner series per variable");
  MultiSeries cur = outer;
  for (std::size_t axis = 0; axis < inners.size(); ++axis) {
    const MultiSeries& in = inners[axis];
    if (in.arity() != 1) throw InputError("series: inner series must be univariate");
    if (in.at(0) != 0)
      throw DomainError("series: inner series " + std::to_string(axis + 1) +
                        " has nonzero constant term");
    const int order = std::min(outer.order(axis), in.order(0));
    cur = contract_axis(cur, axis, in, order);
  }
  return cur;
}

MultiSeries divide_by_corner_product(const MultiSeries& numerator,
                                     const std::vector<MultiSeries>& denominators) {
  if (denominators.size() != numerator.arity())
    throw InputError("series: one denominator per variable required");
  const std::size_t n = numerator.arity();
  std::vector<int> orders(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MultiSeries& d = denominators[i];
    if (d.arity() != 1) throw InputError("series: denominators must be univariate");
    if (d.at(0) != 0 || d.order(0) < 1 || d.at(1) != 1)
      throw DomainError("series: denominator " + std::to_string(i + 1) +
                        " is not z times a unit");
    if (numerator.order(i) < 1)
      throw DomainError("series: numerator order too small to divide");
    orders[i] = numerator.order(i) - 1;
  }
  MultiSeries shifted(numerator.variables(), orders);
  for (std::size_t off = 0; off < numerator.size(); ++off) {
    if (numerator.at(off) == 0) continue;
    auto e = numerator.exponents(off);
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0)
        throw DomainError("series: numerator not divisible by " +
                          numerator.variables()[i]);
      --e[i];
      inside = inside && e[i] <= orders[i];
    }
    if (inside) shifted.coeff(e) = numerator.at(off);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const MultiSeries& d = denominators[i];
    std::vector<BigRational> unit;
    for (int t = 1; t <= d.order(0); ++t) unit.push_back(d.at(static_cast<std::size_t>(t)));
    const MultiSeries inv = unit_inverse(MultiSeries::univariate(d.variables()[0], unit));
    shifted = multiply_along(shifted, i, inv);
  }
  return shifted;
}

MultiSeries euler_derivative(const MultiSeries& a, std::size_t axis) {
  if (axis >= a.arity()) throw InputError("series: axis out of range");
  MultiSeries out = a;
  for (std::size_t off = 0; off < out.size(); ++off) {
    const int e = static_cast<int>((off / out.stride(axis)) %
                                   static_cast<std::size_t>(out.order(axis) + 1));
    out.at(off) *= e;
  }
  return out;
}

}  // namespace schurpb
