#pragma once

#include <map>
#include <string>

#include "hallforge/partition.hpp"
#include "hallforge/qpoly.hpp"

namespace hallforge {

inline constexpr int kMonomialProductBound = 12;
inline constexpr int kElementaryBound = 10;

/// Homogeneous-basis expansion of a symmetric function. Coefficients are
/// integer polynomials (in t for Hall-Littlewood images, constants
/// otherwise); zero coefficients are not stored.
struct SymFunc {
  enum class Basis { monomial, elementary };
  Basis basis = Basis::monomial;
  std::map<Partition, QPoly> terms;

  static SymFunc monomial(const Partition& lambda, const QPoly& coeff = QPoly{1});

  void add(const Partition& label, const QPoly& coeff);
  QPoly coeff(const Partition& label) const;
  SymFunc& operator+=(const SymFunc& rhs);
  SymFunc scaled(const QPoly& c) const;
  /// Evaluates every coefficient at t = value.
  SymFunc specialized(const BigInt& value) const;
  /// True iff every term has size `degree`.
  bool homogeneous_of_degree(int degree) const;

  std::string to_string() const;

  friend bool operator==(const SymFunc&, const SymFunc&) = default;
};

/// m_lambda * m_mu expanded in monomial functions, by multiplying the
/// monomial symmetric polynomials in l(lambda) + l(mu) variables.
SymFunc monomial_product(const Partition& lambda, const Partition& mu);

/// Product of two monomial-basis expansions.
SymFunc multiply(const SymFunc& a, const SymFunc& b);

/// e_lambda in the monomial basis from {0,1}-matrix counts, cross-checked
/// against the iterated product of e_r = m_{(1^r)}.
SymFunc elementary_to_monomial(const Partition& lambda);

/// Image of u_lambda of the F_1[[t]] Hall algebra under u_{(1^r)} -> e_r,
/// by inverting the unitriangular elementary-product expansion. Throws
/// VerificationError unless the result is m_lambda.
SymFunc phi_image(const Partition& lambda);

/// Image of u_lambda of the Hall algebra over F_q[[t]] (q as the variable t)
/// under u_{(1^r)} -> e_r, by inverting the b-polynomial matrix over Q(t).
/// Throws VerificationError on non-integral coefficients or if t = 1 does
/// not give phi_image(lambda).
SymFunc hall_littlewood_image(const Partition& lambda);

/// Coefficients of u_lambda in the products u_{(1^{k_1})} u_{(1^{k_2})} ...
/// (keyed by kappa), for the F_1[[t]] algebra (integers) or the F_q[[t]]
/// algebra (polynomials in t).
std::map<Partition, QPoly> f1t_in_elementary_products(const Partition& lambda);
std::map<Partition, QPoly> hall_in_elementary_products(const Partition& lambda);

}  // namespace hallforge
