#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hallforge/numeric.hpp"

namespace hallforge {

/// Univariate polynomial with exact integer coefficients, low degree first.
/// Canonical form has no trailing zero coefficients; zero is the empty sequence.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(const BigInt& c);
  /// The monomial c * q^k.
  static QPoly monomial(unsigned k, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const;

  BigInt eval(const BigInt& q) const;
  Rational eval(const Rational& q) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  QPoly scaled(const BigInt& c) const;
  /// Multiplication by q^k.
  QPoly shifted(unsigned k) const;

  /// Exact division; throws VerificationError when the remainder is nonzero
  /// or a quotient coefficient would not be an integer.
  QPoly divide_exact(const QPoly& divisor) const;

  /// gcd of the coefficients (0 for the zero polynomial), always nonnegative.
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  QPoly primitive_part() const;

  /// Pretty form in the given variable, highest degree first: "t^2 + t + 1".
  std::string to_string(const std::string& var = "q") const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Polynomial gcd in Z[q], normalized primitive with positive leading coefficient
/// (the zero polynomial only when both inputs are zero).
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// Element of the fraction field Q(q) as num/den with num, den in Z[q].
///
/// Normal form: the polynomial gcd and the common integer content are divided
/// out and den has a positive leading coefficient.
class QRational {
 public:
  QRational() : num_(), den_(QPoly{1}) {}
  QRational(QPoly num) : num_(std::move(num)), den_(QPoly{1}) {}  // NOLINT: implicit lift
  QRational(QPoly num, QPoly den);

  /// q^k for any integer k.
  static QRational q_power(long k);

  const QPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when den is the constant 1 (value lies in Z[q]).
  bool is_polynomial() const noexcept { return den_ == QPoly{1}; }

  Rational eval(const Rational& q) const;

  QRational& operator+=(const QRational& rhs);
  QRational& operator-=(const QRational& rhs);
  QRational& operator*=(const QRational& rhs);
  QRational& operator/=(const QRational& rhs);
  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  QRational operator-() const { return QRational(-num_, den_); }

  std::string to_string(const std::string& var = "q") const;

  friend bool operator==(const QRational&, const QRational&) = default;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QPoly q_int(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(int n);

/// Gaussian binomial [n choose m]_q by the factorial quotient with exact
/// division. Throws std::invalid_argument unless 0 <= m <= n.
QPoly q_binomial(int n, int m);

inline constexpr int kInversionBound = 9;
inline constexpr int kLatticeAreaBound = 24;

/// sum over all permutations of {1..n} of q^{inv(sigma)}, by enumeration.
QPoly inversion_partition_function(int n);

/// sum over m-subsets K of {1..n+m} of q^{a(K)}, where a(K) is the area of
/// the n-by-m rectangle above the lattice path of K (step i north iff i in K).
QPoly lattice_area_partition_function(int m, int n);

/// Area statistic of one subset, given as the step sequence (true = north).
int lattice_path_area(const std::vector<bool>& north_steps);

/// Unique polynomial of degree <= degree_bound through the first
/// degree_bound + 1 samples; every further sample is checked against it.
/// Throws VerificationError on non-integer coefficients or a disagreeing
/// sample, std::invalid_argument on too few or repeated sample points.
QPoly interpolate_integer_poly(const std::vector<std::pair<BigInt, BigInt>>& samples, int degree_bound);

}  // namespace hallforge
