#include "hallforge/linalg.hpp"

#include <algorithm>

namespace hallforge::linalg {

int leading_index(const Vec& v) noexcept {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

bool is_zero(const Vec& v) noexcept { return leading_index(v) < 0; }

void axpy(Vec& v, Scalar c, const Vec& w, const FiniteField& field) {
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != 0) v[i] = field.add(v[i], field.mul(c, w[i]));
}

Matrix rref(Matrix rows, const FiniteField& field) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pick = r;
    while (pick < rows.size() && rows[pick][c] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    const Scalar s = field.inv(rows[r][c]);
    if (s != 1)
      for (auto& x : rows[r]) x = field.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c] != 0) axpy(rows[i], field.neg(rows[i][c]), rows[r], field);
    ++r;
  }
  rows.resize(r);
  return rows;
}

int rank(Matrix rows, const FiniteField& field) { return static_cast<int>(rref(std::move(rows), field).size()); }

Vec reduce(Vec v, const Matrix& rref_rows, const FiniteField& field) {
  for (const auto& row : rref_rows) {
    const int p = leading_index(row);
    if (v[static_cast<std::size_t>(p)] != 0) axpy(v, field.neg(v[static_cast<std::size_t>(p)]), row, field);
  }
  return v;
}

bool in_span(const Vec& v, const Matrix& rref_rows, const FiniteField& field) {
  return is_zero(reduce(v, rref_rows, field));
}

Matrix zeros(int rows, int cols) {
  return Matrix(static_cast<std::size_t>(rows), Vec(static_cast<std::size_t>(cols), 0));
}

Matrix identity(int n) {
  Matrix m = zeros(n, n);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, int inner, int cols, const FiniteField& field) {
  Matrix out = zeros(static_cast<int>(a.size()), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < inner; ++k) {
      const Scalar x = a[i][static_cast<std::size_t>(k)];
      if (x != 0) axpy(out[i], x, b[static_cast<std::size_t>(k)], field);
    }
  return out;
}

Vec apply(const Matrix& m, const Vec& v, const FiniteField& field) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && m[i][j] != 0) acc = field.add(acc, field.mul(m[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix transpose(const Matrix& m, int cols) {
  Matrix t = zeros(cols, static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < cols; ++j) t[static_cast<std::size_t>(j)][i] = m[i][static_cast<std::size_t>(j)];
  return t;
}

void for_each_matrix(int rows, int cols, const FiniteField& field, const std::function<bool(const Matrix&)>& visit) {
  const int q = field.order();
  Matrix m = zeros(rows, cols);
  const int cells = rows * cols;
  while (true) {
    if (!visit(m)) return;
    int k = 0;
    for (; k < cells; ++k) {
      auto& x = m[static_cast<std::size_t>(k / cols)][static_cast<std::size_t>(k % cols)];
      if (++x < q) break;
      x = 0;
    }
    if (k == cells) return;
  }
}

std::vector<Vec> all_vectors(int n, int q) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    for (; k >= 0; --k) {
      if (++v[static_cast<std::size_t>(k)] < q) break;
      v[static_cast<std::size_t>(k)] = 0;
    }
    if (k < 0) return out;
  }
}

}  // namespace hallforge::linalg
