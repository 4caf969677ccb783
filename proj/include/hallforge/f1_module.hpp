#pragma once

#include <optional>
#include <vector>

#include "hallforge/hall_element.hpp"
#include "hallforge/numeric.hpp"
#include "hallforge/partition.hpp"

namespace hallforge {

inline constexpr int kF1SizeBound = 20;
inline constexpr int kMatrixSizeBound = 12;

/// Pointed set {*, 1, ..., n}; the basepoint is encoded as 0.
struct PointedSet {
  int size = 0;
};

/// Pointed set with a nilpotent endomorphism whose functional graph is a
/// forest of chains into the basepoint (no element other than * has two
/// preimages). action[x - 1] is the image of x, 0 meaning *.
class F1tModule {
 public:
  F1tModule() = default;
  /// Throws std::invalid_argument if the action is not nilpotent or two
  /// elements share a non-basepoint image.
  explicit F1tModule(std::vector<int> action);

  /// Chains of lengths lambda_1, lambda_2, ... numbered chain by chain, each
  /// chain running from its top element down to the element sent to *.
  static F1tModule of_type(const Partition& type);

  int size() const noexcept { return static_cast<int>(action_.size()); }
  PointedSet carrier() const noexcept { return {size()}; }
  /// Image of x in {0..n}; the basepoint is fixed.
  int apply(int x) const { return x == 0 ? 0 : action_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& action() const noexcept { return action_; }

  /// Maximal chains, each listed from its top element towards *.
  std::vector<std::vector<int>> chains() const;

  /// The forest with every edge reversed (each chain read backwards).
  F1tModule dual() const;

  friend bool operator==(const F1tModule&, const F1tModule&) = default;

 private:
  std::vector<int> action_;
};

Partition f1t_type(const F1tModule& m);
F1tModule f1t_module_of_type(const Partition& type);

/// True iff the pointed subset (given as sorted non-basepoint elements) is
/// stable under the action.
bool f1t_is_subobject(const F1tModule& m, const std::vector<int>& subset);
/// Type of the action restricted to a stable subset.
Partition f1t_sub_type(const F1tModule& m, const std::vector<int>& subset);
/// Type of the quotient obtained by collapsing the subset to *.
Partition f1t_quotient_type(const F1tModule& m, const std::vector<int>& subset);

/// Stable pointed subsets (each a sorted element list), optionally filtered by
/// sub and quotient type. Every chain meets a subobject in a bottom segment,
/// so subobjects are enumerated as one segment length per chain.
std::vector<std::vector<int>> f1t_enumerate_submodules(const F1tModule& m,
                                                        const std::optional<Partition>& sub_type = std::nullopt,
                                                        const std::optional<Partition>& quot_type = std::nullopt);

/// Number of subobjects of type nu with quotient of type mu in the module of
/// type lambda.
BigInt f1t_hall_constant(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Structure constant of the pointed-set Hall algebra: m-element pointed
/// subsets of {*, 1, ..., n+m}, by enumeration.
BigInt f1_hall_constant(int n, int m);

/// Number of {0,1}-matrices with the given column and row sums (column-wise
/// backtracking over l(row_sums) rows and l(col_sums) columns).
BigInt count_zero_one_matrices(const Partition& col_sums, const Partition& row_sums);

/// Product u_{(1^{l_1})} u_{(1^{l_2})} ... in the F_1[[t]] Hall algebra, by
/// iterated structure constants.
HallElement f1t_elementary_product(const Partition& lambda);

/// The same product computed twice (iterated products and {0,1}-matrix
/// counts); throws VerificationError if the two disagree.
HallElement elementary_product_expansion(const Partition& lambda);

}  // namespace hallforge
