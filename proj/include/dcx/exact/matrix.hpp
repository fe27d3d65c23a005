#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcx/exact/scalar.hpp"

namespace dcx {

using Vector = std::vector<Scalar>;

struct MatrixEntry {
  std::size_t col;
  Scalar value;
};

/// Sparse row-major matrix over Q(i). Rows hold entries sorted by column;
/// zero entries are never stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
  /// Columns of the result are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);
  std::span<const MatrixEntry> row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, std::vector<MatrixEntry> entries);

  Vector dense_row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> to_dense() const;

  Matrix transpose() const;
  /// Entrywise complex conjugate.
  Matrix conj() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  /// Submatrix with the given row and column index lists, in that order.
  Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  /// [this | o]
  Matrix hstack(const Matrix& o) const;
  /// [this ; o]
  Matrix vstack(const Matrix& o) const;
  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Matrix& block);

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<MatrixEntry>> data_;
};

inline bool operator==(const MatrixEntry& a, const MatrixEntry& b) {
  return a.col == b.col && a.value == b.value;
}

/// Reduced row echelon form with the list of pivot columns.
struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Leftmost pivot column first, pivot row chosen
/// as the smallest remaining row index. Dense Gauss-Jordan below 64 columns,
/// sparse elimination otherwise; row elimination runs under OpenMP for large
/// inputs. The result is unique, so thread count never changes it.
RrefResult rref(const Matrix& m);

/// Single-threaded textbook reference (forward elimination followed by back
/// substitution on dense rows). Kept for testing and benchmarking `rref`.
RrefResult rref_reference(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Solves m x = b; returns nothing when inconsistent. Free variables are zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square matrix; throws ValidationError if singular.
Matrix inverse(const Matrix& m);

/// Dense/sparse switch point used by `rref`.
inline constexpr std::size_t kDenseColumnLimit = 64;

}  // namespace dcx
