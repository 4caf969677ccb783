#pragma once

#include <map>
#include <string>
#include <utility>

#include "hallforge/numeric.hpp"
#include "hallforge/partition.hpp"

namespace hallforge {

/// Finite linear combination of basis symbols [lambda] with rational
/// coefficients. Zero coefficients are never stored. Vector-space backends
/// label dimension n by the column (1^n).
class HallElement {
 public:
  using Terms = std::map<Partition, Rational>;

  HallElement() = default;
  static HallElement basis(const Partition& label, const Rational& coeff = 1);
  static HallElement unit() { return basis(Partition{}); }

  void add(const Partition& label, const Rational& coeff);
  Rational coeff(const Partition& label) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  HallElement& operator+=(const HallElement& rhs);
  HallElement& operator-=(const HallElement& rhs);
  HallElement scaled(const Rational& c) const;
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }

  /// "3·[1,1] + 1·[2]" with terms in ascending lexicographic label order;
  /// "0" for the zero element.
  std::string to_string() const;

  friend bool operator==(const HallElement&, const HallElement&) = default;

 private:
  Terms terms_;
};

/// Finite linear combination of ordered label pairs [a] (x) [b].
class TensorElement {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, Rational>;

  TensorElement() = default;
  static TensorElement basis(const Partition& left, const Partition& right, const Rational& coeff = 1);
  static TensorElement outer(const HallElement& left, const HallElement& right);

  void add(const Key& key, const Rational& coeff);
  Rational coeff(const Key& key) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  std::string to_string() const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  Terms terms_;
};

std::string rational_to_string(const Rational& r);

}  // namespace hallforge
