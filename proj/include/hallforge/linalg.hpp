#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hallforge/finite_field.hpp"

namespace hallforge {

using Vec = std::vector<Scalar>;
/// Dense matrix as a list of rows; a map F_q^n -> F_q^m is an m-by-n matrix
/// acting on column vectors.
using Matrix = std::vector<Vec>;

namespace linalg {

/// Index of the first nonzero entry, or -1.
int leading_index(const Vec& v) noexcept;
bool is_zero(const Vec& v) noexcept;

/// Reduced row echelon form; zero rows are dropped, rows sorted by pivot.
Matrix rref(Matrix rows, const FiniteField& field);
int rank(Matrix rows, const FiniteField& field);

/// Remainder of v after clearing the pivot columns of an RREF basis.
Vec reduce(Vec v, const Matrix& rref_rows, const FiniteField& field);
bool in_span(const Vec& v, const Matrix& rref_rows, const FiniteField& field);

/// v += c * w
void axpy(Vec& v, Scalar c, const Vec& w, const FiniteField& field);

Matrix zeros(int rows, int cols);
Matrix identity(int n);
/// a (rows x inner) times b (inner x cols); shapes are explicit so that empty
/// factors keep their dimensions.
Matrix multiply(const Matrix& a, const Matrix& b, int inner, int cols, const FiniteField& field);
Vec apply(const Matrix& m, const Vec& v, const FiniteField& field);
Matrix transpose(const Matrix& m, int cols);

/// All q^{rows*cols} matrices of the given shape, visited in a fixed order.
/// The visitor returns false to stop early.
void for_each_matrix(int rows, int cols, const FiniteField& field, const std::function<bool(const Matrix&)>& visit);

/// All q^n vectors of F_q^n in lexicographic order of their entries.
std::vector<Vec> all_vectors(int n, int q);

}  // namespace linalg
}  // namespace hallforge
