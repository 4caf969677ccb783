#include "hallforge/zelevinsky.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "hallforge/errors.hpp"

namespace hallforge {

std::vector<int> RowStrictArray::weight() const {
  std::vector<int> w;
  for (const auto& row : rows)
    for (int v : row) {
      if (v > static_cast<int>(w.size())) w.resize(static_cast<std::size_t>(v), 0);
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return w;
}

bool RowStrictArray::is_row_strict() const {
  if (static_cast<int>(rows.size()) < shape.length()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[i]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] <= rows[i][j - 1]) return false;
    }
  }
  return true;
}

namespace {

void fill_rows(const Composition& shape, std::size_t row, std::vector<int>& remaining, std::vector<std::vector<int>>& rows,
               std::vector<RowStrictArray>& out) {
  if (row == static_cast<std::size_t>(shape.length())) {
    if (std::all_of(remaining.begin(), remaining.end(), [](int r) { return r == 0; })) out.push_back({shape, rows});
    return;
  }
  const int width = shape[row];
  const int labels = static_cast<int>(remaining.size());
  // choose `width` distinct labels for this row, in increasing order
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == width) {
      rows[row] = pick;
      fill_rows(shape, row + 1, remaining, rows, out);
      return;
    }
    for (int v = from; v <= labels; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      pick.push_back(v);
      choose(v + 1);
      pick.pop_back();
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  choose(1);
}

// (row, column) cells, 0-based; true iff a precedes b in the column-major
// order with rows reversed inside a column.
bool cell_before(int row_a, int col_a, int row_b, int col_b) {
  return col_a < col_b || (col_a == col_b && row_a > row_b);
}

}  // namespace

std::vector<RowStrictArray> enumerate_row_strict_arrays(const Composition& shape, const Partition& weight) {
  if (shape.size() != weight.size()) return {};
  if (shape.size() > kArraySizeBound) throw BoundError("row-strict array bound exceeded");
  std::vector<RowStrictArray> out;
  std::vector<int> remaining = weight.parts();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  fill_rows(shape, 0, remaining, rows, out);
  return out;
}

int d_statistic(const RowStrictArray& a) {
  struct Cell {
    int row, col, label, right;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      const int right = j + 1 < a.rows[i].size() ? a.rows[i][j + 1] : INT_MAX;
      cells.push_back({static_cast<int>(i), static_cast<int>(j), a.rows[i][j], right});
    }
  int d = 0;
  for (const auto& x : cells)
    for (const auto& y : cells) {
      if (!cell_before(y.row, y.col, x.row, x.col)) continue;
      if (x.label < y.label && y.label < x.right) ++d;
    }
  return d;
}

namespace {

Composition checked_shape(const Partition& mu, const std::optional<Composition>& shape) {
  if (!shape) return Composition(mu);
  if (shape->sorted() != mu) throw std::invalid_argument("shape is not a rearrangement of " + mu.to_string());
  return *shape;
}

}  // namespace

QPoly b_polynomial(const Partition& lambda, const Partition& mu, const std::optional<Composition>& shape) {
  if (lambda.size() != mu.size()) return {};
  const Composition alpha = checked_shape(mu, shape);
  std::vector<BigInt> counts;
  for (const auto& a : enumerate_row_strict_arrays(alpha, lambda)) {
    const auto d = static_cast<std::size_t>(d_statistic(a));
    if (counts.size() <= d) counts.resize(d + 1, BigInt(0));
    counts[d] += 1;
  }
  return QPoly(std::move(counts));
}

int chain_step_statistic(const Composition& alpha, const Composition& beta) {
  const int len = std::max(alpha.length(), beta.length());
  int d = 0;
  for (int i = 0; i < len; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (beta[ui] != alpha[ui]) continue;
    for (int j = 0; j < len; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (beta[uj] != alpha[uj] - 1) continue;
      if (cell_before(j, alpha[uj], i, alpha[ui])) ++d;
    }
  }
  return d;
}

QPoly b_polynomial_by_chains(const Partition& lambda, const Partition& mu, const std::optional<Composition>& shape) {
  if (lambda.size() != mu.size()) return {};
  const Composition alpha = checked_shape(mu, shape);
  if (alpha.size() > kArraySizeBound) throw BoundError("row-strict array bound exceeded");
  const auto len = static_cast<std::size_t>(alpha.length());
  std::map<std::vector<int>, QPoly> states{{std::vector<int>(len, 0), QPoly{1}}};
  for (int step : lambda.parts()) {
    std::map<std::vector<int>, QPoly> next;
    for (const auto& [beta, weight] : states) {
      // grow by one cell in each row of a `step`-element set of rows
      std::vector<int> grown = beta;
      std::function<void(std::size_t, int)> extend = [&](std::size_t row, int left) {
        if (left == 0) {
          const int d = chain_step_statistic(Composition(grown), Composition(beta));
          next[grown] += weight.shifted(static_cast<unsigned>(d));
          return;
        }
        if (row == len || static_cast<int>(len - row) < left) return;
        if (grown[row] < alpha[row]) {
          ++grown[row];
          extend(row + 1, left - 1);
          --grown[row];
        }
        extend(row + 1, left);
      };
      extend(0, step);
    }
    states = std::move(next);
  }
  auto it = states.find(alpha.parts());
  return it == states.end() ? QPoly{} : it->second;
}

std::vector<Composition> rearrangements(const Partition& mu) {
  std::vector<int> parts = mu.parts();
  std::sort(parts.begin(), parts.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

bool b_polynomial_shape_independent(const Partition& lambda, const Partition& mu) {
  const QPoly reference = b_polynomial(lambda, mu);
  for (const auto& alpha : rearrangements(mu))
    if (b_polynomial(lambda, mu, alpha) != reference) return false;
  return true;
}

}  // namespace hallforge
