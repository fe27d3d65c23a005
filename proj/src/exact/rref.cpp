#include <algorithm>
#include <utility>

#include "dcx/error.hpp"
#include "dcx/exact/matrix.hpp"

namespace dcx {

namespace {

// Below this many stored scalars an elimination sweep stays on one thread;
// GMP arithmetic on tiny blocks is dominated by thread start-up.
constexpr std::size_t kParallelWork = 4096;

using SparseRow = std::vector<MatrixEntry>;

// target -= factor * source, both sorted by column.
SparseRow axpy(const SparseRow& target, const Scalar& factor, const SparseRow& source) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() || (a < target.size() && target[a].col < source[b].col)) {
      out.push_back(target[a++]);
    } else if (a == target.size() || source[b].col < target[a].col) {
      out.push_back({source[b].col, -(factor * source[b].value)});
      ++b;
    } else {
      Scalar v = target[a].value - factor * source[b].value;
      if (!v.is_zero()) out.push_back({target[a].col, std::move(v)});
      ++a;
      ++b;
    }
  }
  return out;
}

const Scalar* find_col(const SparseRow& row, std::size_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? &it->value : nullptr;
}

RrefResult rref_dense(const Matrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<Vector> rows = m.to_dense();
  std::vector<std::size_t> pivots;
  const bool parallel = nrows * ncols >= kParallelWork;

  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pr = r;
    while (pr < nrows && rows[pr][c].is_zero()) ++pr;
    if (pr == nrows) continue;
    std::swap(rows[r], rows[pr]);
    const Scalar inv = rows[r][c].inv();
    for (std::size_t j = c; j < ncols; ++j) {
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    }
    const Vector& pivot_row = rows[r];
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (!pivot_row[j].is_zero()) rows[i][j] -= f * pivot_row[j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {Matrix::from_dense(rows, ncols), std::move(pivots)};
}

RrefResult rref_sparse(const Matrix& m) {
  const std::size_t nrows = m.rows();
  std::vector<SparseRow> rows(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    auto span = m.row(i);
    rows[i].assign(span.begin(), span.end());
  }
  std::vector<std::size_t> pivots;

  std::size_t r = 0;
  while (r < nrows) {
    // Leftmost leading column among the unreduced rows, smallest row index on ties.
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (rows[i].empty()) continue;
      if (best == nrows || rows[i].front().col < rows[best].front().col) best = i;
    }
    if (best == nrows) break;
    std::swap(rows[r], rows[best]);
    const std::size_t c = rows[r].front().col;
    const Scalar inv = rows[r].front().value.inv();
    for (auto& e : rows[r]) e.value *= inv;
    const SparseRow& pivot_row = rows[r];

    std::size_t work = 0;
    for (const auto& row : rows) work += row.size();
    const bool parallel = work >= kParallelWork;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const Scalar* f = find_col(rows[i], c);
      if (f == nullptr) continue;
      const Scalar factor = *f;
      rows[i] = axpy(rows[i], factor, pivot_row);
    }
    pivots.push_back(c);
    ++r;
  }
  // Pivot rows were produced in increasing pivot-column order already.
  Matrix out(nrows, m.cols());
  for (std::size_t i = 0; i < nrows; ++i) out.set_row(i, std::move(rows[i]));
  return {std::move(out), std::move(pivots)};
}

}  // namespace

RrefResult rref(const Matrix& m) {
  if (m.cols() < kDenseColumnLimit) return rref_dense(m);
  return rref_sparse(m);
}

RrefResult rref_reference(const Matrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<Vector> a = m.to_dense();
  std::vector<std::size_t> pivots;

  // Forward elimination to row echelon form.
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pr = r;
    while (pr < nrows && a[pr][c].is_zero()) ++pr;
    if (pr == nrows) continue;
    std::swap(a[r], a[pr]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  // Back substitution, bottom pivot first.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const Scalar inv = a[k][c].inv();
    for (std::size_t j = c; j < ncols; ++j) a[k][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return {Matrix::from_dense(a, ncols), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
  return rref(m).rank();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw StructuralError("solve: right-hand side length mismatch");
  Matrix aug = m.hstack(Matrix::from_columns({b}, m.rows()));
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) x[red.pivots[k]] = red.reduced.at(k, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult red = rref(m.hstack(Matrix::identity(n)));
  if (red.rank() < n || (n > 0 && red.pivots[n - 1] != n - 1)) {
    throw ValidationError("matrix is singular");
  }
  std::vector<std::size_t> rows(n);
  std::vector<std::size_t> cols(n);
  for (std::size_t k = 0; k < n; ++k) {
    rows[k] = k;
    cols[k] = n + k;
  }
  return red.reduced.select(rows, cols);
}

}  // namespace dcx
