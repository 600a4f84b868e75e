#pragma once

// Schur type poly-Bernoulli numbers B and C, read off
//
//   Li_k(1-e^{-z_1}, ...) / prod (1-e^{-z_i})   (kind B)
//   Li_k(1-e^{-z_1}, ...) / prod (e^{z_i}-1)    (kind C)
//
// as sum_m X_m z^m / m!, and the identities relating them.

#include <span>
#include <string>
#include <vector>

#include "schurpb/numeric.hpp"
#include "schurpb/shapes.hpp"

namespace schurpb {

enum class Kind { B, C };

std::string to_string(Kind kind);
Kind parse_kind(const std::string& text);

struct BernoulliTable {
  Partition shape;
  WeightTableau k;
  Kind kind = Kind::B;
  std::vector<int> orders;          // one per corner, corners() order
  std::vector<BigRational> values;  // full order box, last index fastest

  std::size_t offset(std::span<const int> m) const;
  const BigRational& at(std::span<const int> m) const;
  const BigRational& at(std::initializer_list<int> m) const {
    return at(std::span<const int>(m.begin(), m.size()));
  }
  // Zero when any index is negative; InputError beyond the orders.
  BigRational get(std::span<const int> m) const;
  // Every index vector of the box in storage order.
  std::vector<std::vector<int>> indices() const;

  bool operator==(const BernoulliTable&) const = default;
};

BernoulliTable bernoulli_table(const Partition& shape, const WeightTableau& k,
                               std::span<const int> orders, Kind kind);

// B_m = sum_{n <= m} prod_i C(m_i, n_i) C_n, and its inverse
// C_m = sum_{n <= m} (-1)^{|m|-|n|} prod_i C(m_i, n_i) B_n.
BernoulliTable b_from_c(const BernoulliTable& c_table);
BernoulliTable c_from_b(const BernoulliTable& b_table);

// Corner k entries of a hook decremented by one: row corner (1,h) and/or
// column corner (l,1).
WeightTableau decrement_hook_corners(const WeightTableau& k, bool row_corner,
                                     bool column_corner);

// B_{n,m} for the hook (h, 1^{l-1}) as a sum over hook tableaux with
// m_{1h} <= n+1 and m_{l1} <= m+1 of
//   (-1)^{m_{1h}+m_{l1}+n+m} (m_{1h}-1)! (m_{l1}-1)!
//   S(n, m_{1h}-1) S(m, m_{l1}-1) / prod m_ij^{k_ij}.
BigRational hook_b_stirling(const Partition& shape, const WeightTableau& k,
                            int n, int m);

struct IdentityReport {
  std::string identity;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;  // at most a handful, first one first
  bool passed() const { return mismatches.empty(); }
};

// B^{k-}_{n,m} = B_{n,m} + [m>=1] sum_{j<m} C(m,j) B_{n,j+1}
//   + [n>=1] sum_{i<n} C(n,i) B_{i+1,m}
//   + [n,m>=1] sum_{i<n,j<m} C(n,i) C(m,j) B_{i+1,j+1},
// k- decrementing both corner weights. Checked on the whole order box.
IdentityReport verify_hook_recurrence(const Partition& shape, const WeightTableau& k,
                                      std::span<const int> orders);

// B^k_{n,m} = C^k_{n,m} + C^{k row-}_{n-1,m} + C^{k col-}_{n,m-1}
//   + C^{k both-}_{n-1,m-1}, negative indices contributing zero. Requires
// both corner weights != 1.
IdentityReport verify_hook_bc_relation(const Partition& shape, const WeightTableau& k,
                                       std::span<const int> orders);

// B = b_from_c(C), C = c_from_b(B) and both round trips, on the order box.
IdentityReport verify_bc_binomial(const Partition& shape, const WeightTableau& k,
                                  std::span<const int> orders);

// hook_b_stirling(n, m) against the series-extracted B for n, m <= orders.
IdentityReport verify_stirling_hook(const Partition& shape, const WeightTableau& k,
                                    std::span<const int> orders);

// z_h d/dz_h, z_l d/dz_l and both applied to the hook polylog series equal
// the series with the row corner, column corner, or both weights lowered.
IdentityReport verify_derivative_lemma(const Partition& shape, const WeightTableau& k,
                                       std::span<const int> orders);

// Coefficient of z_h^1 z_l^l in the hook polylog series is
// 1 / (2^{k_21} 3^{k_31} ... l^{k_l1}).
IdentityReport verify_leading_coefficient(const Partition& shape, const WeightTableau& k);

// Classical Bernoulli numbers with B_1 = -1/2 from
// sum_{j<=n} C(n+1, j) B_j = 0; t/(e^t-1) = sum B_n t^n/n!.
std::vector<BigRational> classical_bernoulli(int n);

// lambda = (1), k = 1 tables of both kinds against the classical numbers
// (B kind has B_1 = +1/2).
IdentityReport verify_classical_reduction(int order);

void require_hook(const Partition& shape);

}  // namespace schurpb
