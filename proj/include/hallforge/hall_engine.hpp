#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hallforge/hall_element.hpp"
#include "hallforge/numeric.hpp"
#include "hallforge/partition.hpp"
#include "hallforge/report.hpp"

namespace hallforge {

/// Source of structure constants for one finitary category. Labels are
/// partitions (dimension n of a vector-space category is the column (1^n)).
///
/// product_constant(mid, quot, sub) is the number of subobjects of type sub
/// with quotient of type quot in the object of type mid.
class HallBackend {
 public:
  virtual ~HallBackend() = default;

  virtual std::string id() const = 0;
  /// All labels of the given size.
  virtual std::vector<Partition> labels(int size) const = 0;
  virtual BigInt product_constant(const Partition& mid, const Partition& quot, const Partition& sub) const = 0;
  virtual BigInt aut_count(const Partition& label) const = 0;
  /// Unsupported counts return nullopt.
  virtual std::optional<BigInt> hom_count(const Partition& from, const Partition& to) const = 0;
  virtual std::optional<BigInt> ext1_count(const Partition& from, const Partition& to) const = 0;
  /// Chains of subobjects with successive quotients of the given types, top
  /// quotient first; nullopt when the backend does not count flags itself.
  virtual std::optional<BigInt> flag_count(const Partition& label, const std::vector<Partition>& quotient_types) const;
  /// Hereditary abelian (global dimension at most one).
  virtual bool hereditary() const = 0;

  /// |Ext(quot, sub)^mid|: groupoid cardinality of extensions of quot by sub
  /// with middle term of type mid.
  Rational ext_cardinality(const Partition& quot, const Partition& sub, const Partition& mid) const;
};

/// Finite modules over F_q[t]/(t^N); N = 1 is the category of F_q-vector
/// spaces. Structure constants are counted directly and memoized.
class FqBackend final : public HallBackend {
 public:
  FqBackend(int q, int nilpotency);

  int q() const noexcept { return q_; }
  int nilpotency() const noexcept { return nilpotency_; }

  std::string id() const override;
  std::vector<Partition> labels(int size) const override;
  BigInt product_constant(const Partition& mid, const Partition& quot, const Partition& sub) const override;
  BigInt aut_count(const Partition& label) const override;
  std::optional<BigInt> hom_count(const Partition& from, const Partition& to) const override;
  std::optional<BigInt> ext1_count(const Partition& from, const Partition& to) const override;
  std::optional<BigInt> flag_count(const Partition& label, const std::vector<Partition>& quotient_types) const override;
  bool hereditary() const override { return nilpotency_ == 1; }

 private:
  int q_;
  int nilpotency_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<Partition, Partition, Partition>, BigInt> constants_;
};

/// Nilpotent F_1[[t]]-modules (forests of chains).
class F1tBackend final : public HallBackend {
 public:
  std::string id() const override { return "f1t"; }
  std::vector<Partition> labels(int size) const override;
  BigInt product_constant(const Partition& mid, const Partition& quot, const Partition& sub) const override;
  /// Permutations of equal-length chains: prod_k m_k!.
  BigInt aut_count(const Partition& label) const override;
  std::optional<BigInt> hom_count(const Partition&, const Partition&) const override { return std::nullopt; }
  std::optional<BigInt> ext1_count(const Partition&, const Partition&) const override { return std::nullopt; }
  bool hereditary() const override { return false; }
};

/// Pointed finite sets (vector spaces over F_1); dimension n is the label (1^n).
class VectF1Backend final : public HallBackend {
 public:
  std::string id() const override { return "vect-f1"; }
  std::vector<Partition> labels(int size) const override;
  BigInt product_constant(const Partition& mid, const Partition& quot, const Partition& sub) const override;
  BigInt aut_count(const Partition& label) const override;
  /// Pointed maps injective away from the preimage of the basepoint.
  std::optional<BigInt> hom_count(const Partition& from, const Partition& to) const override;
  /// Every short exact sequence of pointed sets splits.
  std::optional<BigInt> ext1_count(const Partition& from, const Partition& to) const override;
  bool hereditary() const override { return false; }
};

/// a * b with [N][L] = sum_M g^M_{N,L} [M] (the left factor is the quotient).
HallElement hall_multiply(const HallBackend& backend, const HallElement& a, const HallElement& b);

/// The opposite product, which is the convolution of functions on the
/// groupoid of objects: 1_A * 1_C = sum_B g^B_{C,A} 1_B (the left factor is
/// the subobject).
HallElement hall_multiply_opposite(const HallBackend& backend, const HallElement& a, const HallElement& b);

/// Delta'(1_B) = sum |Ext(A', A)^B| 1_{A'} (x) 1_A, quotient label first.
TensorElement coproduct_prime(const HallBackend& backend, const HallElement& a);

/// (1_A (x) 1_B)(1_{A'} (x) 1_{B'}) = |Ext^1(A', B)| / |Hom(A', B)| (1_A 1_{A'}) (x) (1_B 1_{B'}),
/// with the components multiplied by hall_multiply_opposite.
TensorElement twisted_tensor_multiply(const HallBackend& backend, const TensorElement& x, const TensorElement& y);

/// Compares Delta'(1_a 1_b) with the twisted product Delta'(1_a) Delta'(1_b).
/// Throws std::invalid_argument for a non-hereditary backend.
CheckReport green_compatibility_check(const HallBackend& backend, const Partition& a, const Partition& b);

/// For all label triples of total size at most size_bound and every target,
/// compares both bracketings of the triple product and, when available, the
/// backend's flag count.
CheckReport associativity_check(const HallBackend& backend, int size_bound);

/// (Delta' (x) id) Delta' (1_label) against (id (x) Delta') Delta' (1_label).
CheckReport coassociativity_check(const HallBackend& backend, const Partition& label);

/// Counting data for a triple X, Y, Z of a triangulated category.
/// higher_to_target[i-1] = |Hom(X[i], Z)|, higher_to_self[i-1] = |Hom(X[i], X)|.
struct DerivedHomData {
  BigInt hom_with_cone = 1;  // |Hom(X, Z)_Y|: maps whose cone is isomorphic to Y
  std::vector<BigInt> higher_to_target;
  std::vector<BigInt> higher_to_self;
  BigInt aut = 1;  // |Aut X|
};

/// |Hom(X,Z)_Y| prod_{i>0} |Hom(X[i],Z)|^{(-1)^i} / (|Aut X| prod_{i>0} |Hom(X[i],X)|^{(-1)^i}).
/// Throws std::invalid_argument on a nonpositive count.
Rational derived_hall_constant(const DerivedHomData& data);

}  // namespace hallforge
