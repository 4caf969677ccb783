#pragma once

#include <optional>
#include <vector>

#include "hallforge/partition.hpp"
#include "hallforge/qpoly.hpp"

namespace hallforge {

inline constexpr int kArraySizeBound = 12;

/// Labelling of the diagram of a composition by positive integers, strictly
/// increasing along each row. rows[i][j] is the label of cell (i+1, j+1).
struct RowStrictArray {
  Composition shape;
  std::vector<std::vector<int>> rows;

  /// weight[v-1] = number of cells labelled v.
  std::vector<int> weight() const;
  bool is_row_strict() const;

  friend bool operator==(const RowStrictArray&, const RowStrictArray&) = default;
};

/// All row-strict arrays of the given shape in which label v occurs weight_v
/// times, in a fixed order (rows filled top to bottom, each row's label set in
/// lexicographic order). Empty when the sizes differ.
std::vector<RowStrictArray> enumerate_row_strict_arrays(const Composition& shape, const Partition& weight);

/// Number of cell pairs (x, y) with y before x and A(x) < A(y) < A(x->), where
/// x-> is the cell right of x (label infinity off the diagram). Cells are
/// ordered by column, and within a column the lower row comes first.
int d_statistic(const RowStrictArray& a);

/// Sum of q^{d(A)} over row-strict arrays of the given shape (default mu
/// itself) and weight lambda. The shape must be a rearrangement of mu.
QPoly b_polynomial(const Partition& lambda, const Partition& mu, const std::optional<Composition>& shape = std::nullopt);

/// The same sum recomputed along chains 0 = a(0), a(1), ..., a(s) = shape of
/// compositions in which each step adds at most one cell per row and
/// lambda_i cells in total, weighting each step by q^{d(a(i), a(i-1))}.
QPoly b_polynomial_by_chains(const Partition& lambda, const Partition& mu, const std::optional<Composition>& shape = std::nullopt);

/// d(alpha, beta) for beta obtained from alpha by removing at most one cell
/// per row.
int chain_step_statistic(const Composition& alpha, const Composition& beta);

/// Every distinct rearrangement of mu.
std::vector<Composition> rearrangements(const Partition& mu);

/// True iff b_polynomial agrees for all rearrangements of mu as the shape.
bool b_polynomial_shape_independent(const Partition& lambda, const Partition& mu);

}  // namespace hallforge
