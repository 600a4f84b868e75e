#include "schurpb/numeric.hpp"

#include <cctype>

namespace schurpb {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw InputError("not a rational number: '" + text + "'");
  return make_rational(BigInt(strip_plus(num)), BigInt(strip_plus(den)));
}

double to_double(const BigRational& q) { return q.get_d(); }

BigInt binomial(long n, long r) {
  if (n < 0) throw DomainError("binomial: n must be non-negative");
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial: n must be non-negative");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt falling_factorial(long x, long m) {
  BigInt out = 1;
  for (long i = 0; i < m; ++i) out *= (x - i);
  return out;
}

BigInt pow_int(long base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), exponent);
  return out;
}

void StirlingCache::grow_to(long n) {
  while (static_cast<long>(rows_.size()) <= n) {
    const auto& prev = rows_.back();
    const long k = static_cast<long>(rows_.size());  // row being built
    std::vector<BigInt> row(static_cast<std::size_t>(k + 1), BigInt(0));
    // {k, m} = {k-1, m-1} + m {k-1, m}
    for (long m = 1; m <= k; ++m) {
      BigInt v = prev[static_cast<std::size_t>(m - 1)];
      if (m <= k - 1) v += m * prev[static_cast<std::size_t>(m)];
      row[static_cast<std::size_t>(m)] = v;
    }
    rows_.push_back(std::move(row));
  }
}

BigInt StirlingCache::get(long n, long m) {
  if (n < 0 || m < 0) return 0;
  if (m > n) return 0;
  std::lock_guard lock(mutex_);
  grow_to(n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

StirlingCache& StirlingCache::global() {
  static StirlingCache cache;
  return cache;
}

BigInt stirling2(long n, long m) { return StirlingCache::global().get(n, m); }

}  // namespace schurpb
