#pragma once

// Truncated multivariate power series with exact rational coefficients.
// Dense storage: the coefficient of z^e lives at the mixed-radix offset of
// the exponent vector e (last variable fastest).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "schurpb/numeric.hpp"

namespace schurpb {

class MultiSeries {
 public:
  MultiSeries() = default;
  // Zero series; orders are inclusive maximum exponents.
  MultiSeries(std::vector<std::string> variables, std::vector<int> orders);

  // Univariate series with coefficients c[0..n]; order n.
  static MultiSeries univariate(std::string variable,
                                std::vector<BigRational> coefficients);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<int>& orders() const { return orders_; }
  int order(std::size_t axis) const { return orders_[axis]; }
  std::size_t arity() const { return orders_.size(); }
  std::size_t size() const { return coeffs_.size(); }

  // Throws InputError for exponents outside the stored box.
  const BigRational& coeff(std::span<const int> exponents) const;
  BigRational& coeff(std::span<const int> exponents);
  const BigRational& coeff(std::initializer_list<int> exponents) const {
    return coeff(std::span<const int>(exponents.begin(), exponents.size()));
  }
  BigRational& coeff(std::initializer_list<int> exponents) {
    return coeff(std::span<const int>(exponents.begin(), exponents.size()));
  }

  // Raw offset access.
  const BigRational& at(std::size_t offset) const { return coeffs_[offset]; }
  BigRational& at(std::size_t offset) { return coeffs_[offset]; }
  std::size_t offset(std::span<const int> exponents) const;
  std::vector<int> exponents(std::size_t offset) const;
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }

  // Same series with smaller (or equal) orders.
  MultiSeries truncated(std::vector<int> orders) const;

  bool is_zero() const;
  bool operator==(const MultiSeries& other) const;

 private:
  void check_exponents(std::span<const int> exponents) const;

  std::vector<std::string> variables_;
  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::vector<BigRational> coeffs_;
};

// Orders of the result are the componentwise minimum; variable lists must
// agree (InputError otherwise).
MultiSeries series_add(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_sub(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_scale(const MultiSeries& a, const BigRational& factor);

// sum_{n=1}^{order} (-1)^{n+1} z^n / n!
MultiSeries one_minus_exp_neg(int order, const std::string& variable = "z");
// sum_{n=1}^{order} z^n / n!
MultiSeries exp_minus_one(int order, const std::string& variable = "z");
// sum_{n=0}^{order} z^n / n!
MultiSeries exp_series(int order, const std::string& variable = "z");

// Inverse of a univariate series with constant term 1 (DomainError
// otherwise), same order.
MultiSeries unit_inverse(const MultiSeries& unit);

// Multiplies along one axis by a univariate series:
// out[..t..] = sum_e in[..e..] * u[t-e]. Order on that axis becomes
// min(order, u.order).
MultiSeries multiply_along(const MultiSeries& a, std::size_t axis,
                           const MultiSeries& u);

// outer(inner_1(z_1), ..., inner_c(z_c)). Each inner series is univariate
// with zero constant term (DomainError otherwise). Result keeps the outer
// variable names; orders are min(outer order, inner order) per axis.
MultiSeries substitute(const MultiSeries& outer,
                       const std::vector<MultiSeries>& inners);

// numerator / prod_i d_i(z_i) where each d_i = z * unit. Exponents are
// shifted down first, which requires every stored monomial to have exponent
// >= 1 in every variable (DomainError otherwise). Orders drop by one.
MultiSeries divide_by_corner_product(const MultiSeries& numerator,
                                     const std::vector<MultiSeries>& denominators);

// z_axis * d/dz_axis
MultiSeries euler_derivative(const MultiSeries& a, std::size_t axis);

}  // namespace schurpb
