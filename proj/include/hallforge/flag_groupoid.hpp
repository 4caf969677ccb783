#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hallforge/groupoid.hpp"
#include "hallforge/linalg.hpp"
#include "hallforge/report.hpp"

namespace hallforge {

inline constexpr int kMaxFlagLevel = 3;
inline constexpr int kGeneralLinearOrderBound = 256;

/// GL_d(F_q) as a list of matrices with its multiplication table. Vectors are
/// rows and g acts on the right (v -> v g), so "g then h" is the matrix
/// product g h.
struct GeneralLinearGroup {
  int q = 2;
  int dim = 0;
  std::vector<Matrix> elements;
  std::map<Matrix, int> index;
  FiniteGroup table;
};

/// Cached per (q, d). Throws BoundError if the group has more than
/// kGeneralLinearOrderBound elements.
const GeneralLinearGroup& general_linear_group(int q, int dim);

/// Chain 0 = M_0 <= M_1 <= ... <= M_n = F_q^dim of subspaces, each held as
/// its RREF basis.
struct Flag {
  int dim = 0;
  std::vector<Matrix> chain;

  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// Groupoid of length-n flags of F_q-vector spaces with top dimension at most
/// dim_bound; a morphism is an element g of GL_dim carrying a flag to its
/// image under g. Level 0 holds only the zero flag.
class FlagGroupoid {
 public:
  FlagGroupoid(int q, int level, int dim_bound);

  int q() const noexcept { return q_; }
  int level() const noexcept { return level_; }
  int dim_bound() const noexcept { return dim_bound_; }
  const GroupoidPtr& groupoid() const noexcept { return groupoid_; }

  const Flag& flag(int object) const { return flags_[static_cast<std::size_t>(object)]; }
  /// -1 when the flag is not an object (for instance beyond the bound).
  int object_of(const Flag& flag) const;
  /// The morphism from `object` given by the GL element with index g.
  int morphism(int object, int g) const;
  /// (source object, GL element index) of a morphism.
  std::pair<int, int> morphism_parts(int m) const;

 private:
  int q_, level_, dim_bound_;
  std::vector<Flag> flags_;
  std::map<Flag, int> index_;
  std::vector<int> morphism_offset_;  // per object
  GroupoidPtr groupoid_;
};

using FlagGroupoidPtr = std::shared_ptr<const FlagGroupoid>;

/// Throws BoundError unless level <= 3 and every GL_d with d <= dim_bound is
/// within the group order bound.
FlagGroupoidPtr truncated_flag_groupoid(int q, int level, int dim_bound);

/// Face k: S_n -> S_{n-1}, omitting M_k. Face 0 passes to quotients by M_1 in
/// the basis of standard vectors off the pivots of M_1; face n restricts to
/// M_{n-1} in its RREF basis. `to` must have level n-1 and the same q, bound.
Functor face(const FlagGroupoid& from, const FlagGroupoid& to, int k);
/// Degeneracy k: S_n -> S_{n+1}, repeating M_k.
Functor degeneracy(const FlagGroupoid& from, const FlagGroupoid& to, int k);

/// Face and degeneracy identities between the levels 0..3, compared as
/// strict equality of functors.
CheckReport simplicial_identities_check(int q, int dim_bound);

/// For the square X -> Y, X -> Z over Y -> C <- Z (commuting strictly), checks
/// that the induced functor from X to the 2-pullback is a bijection on
/// isomorphism classes preserving automorphism group orders.
CheckReport pullback_square_check(const Functor& to_left, const Functor& to_right, const Functor& left_down,
                                  const Functor& right_down);

/// Both triangulations of the square (diagonals 02 and 13) and the unitality
/// squares for S_1 -> S_2 with i = 0, 1.
CheckReport two_segal_cardinality_check(int q, int dim_bound);

/// S_1 x S_1 <- S_2 -> S_1 with left leg (sub, quotient) and right leg the
/// middle term. The product groupoid is the target of `left`.
GroupoidSpan truncated_hall_span(int q, int dim_bound);

}  // namespace hallforge
