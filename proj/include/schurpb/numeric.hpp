#pragma once

// Exact integer/rational arithmetic and the combinatorial number functions
// shared by the rest of the library.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurpb {

using BigInt = mpz_class;
// mpq_class keeps itself canonical under arithmetic; values built from raw
// numerator/denominator pairs must go through make_rational().
using BigRational = mpq_class;

// Malformed input (bad shape, bad tableau text, ...). CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation. CLI exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

// "p/q" with q > 1, or "p" for integers. Decimal, no whitespace.
std::string to_string(const BigRational& q);
BigRational parse_rational(const std::string& text);

double to_double(const BigRational& q);

BigInt binomial(long n, long r);
BigInt factorial(long n);
BigInt falling_factorial(long x, long m);
BigInt pow_int(long base, unsigned long exponent);

// Triangular memo of Stirling numbers of the second kind. Rows are only ever
// appended under the lock and never mutated afterwards.
class StirlingCache {
 public:
  BigInt get(long n, long m);
  static StirlingCache& global();

 private:
  void grow_to(long n);

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_{{BigInt(1)}};
};

BigInt stirling2(long n, long m);

}  // namespace schurpb
