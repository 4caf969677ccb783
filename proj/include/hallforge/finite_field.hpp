#pragma once

#include <cstdint>
#include <vector>

#include "hallforge/numeric.hpp"

namespace hallforge {

inline constexpr int kMaxFieldOrder = 16;

/// q = p^e with p prime.
struct PrimePower {
  int p = 2;
  int e = 1;
  int q = 2;

  /// Throws std::invalid_argument if q is not a prime power, BoundError if q
  /// exceeds the field-table bound.
  static PrimePower of(int q, int bound = kMaxFieldOrder);
};

bool is_prime_power(int q);

/// All prime powers in [2, upto], ascending.
std::vector<int> prime_powers_upto(int upto);

using Scalar = std::uint8_t;

/// GF(q) with elements encoded as 0..q-1 (base-p digit vectors of polynomial
/// residues modulo the lowest monic irreducible of degree e). 0 and 1 are the
/// additive and multiplicative identities.
class FiniteField {
 public:
  explicit FiniteField(PrimePower pq);

  /// Shared immutable instance per order.
  static const FiniteField& get(int q);

  int order() const noexcept { return pq_.q; }
  int characteristic() const noexcept { return pq_.p; }
  const PrimePower& prime_power() const noexcept { return pq_; }
  /// Coefficients (low degree first, monic) of the defining polynomial.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Scalar add(Scalar a, Scalar b) const noexcept { return add_[a * pq_.q + b]; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add_[a * pq_.q + neg_[b]]; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return mul_[a * pq_.q + b]; }
  Scalar neg(Scalar a) const noexcept { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const noexcept { return inv_[a]; }

 private:
  PrimePower pq_;
  std::vector<int> modulus_;
  std::vector<Scalar> add_, mul_, neg_, inv_;
};

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
BigInt gl_order(int q, int n);

/// Number of injective linear maps F_q^m -> F_q^n: prod_{i<m} (q^n - q^i).
/// Zero when m > n.
BigInt count_injections(int q, int m, int n);

}  // namespace hallforge
