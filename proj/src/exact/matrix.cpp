#include "dcx/exact/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "dcx/error.hpp"

namespace dcx {

namespace {

void check_index(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) {
  if (r >= rows || c >= cols) {
    throw StructuralError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                          ") out of bounds " + std::to_string(rows) + "x" +
                          std::to_string(cols));
  }
}

std::vector<MatrixEntry> sparse_from_dense(const Vector& v) {
  std::vector<MatrixEntry> out;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (!v[c].is_zero()) out.push_back({c, v[c]});
  }
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.data_[k].push_back({k, Scalar(1)});
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw StructuralError("ragged dense matrix");
    m.data_[r] = sparse_from_dense(rows[r]);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw StructuralError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (!columns[c][r].is_zero()) m.data_[r].push_back({c, columns[c][r]});
    }
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c, rows_, cols_);
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Scalar();
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check_index(r, c, rows_, cols_);
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (v.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    row.insert(it, {c, v});
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  set(r, c, at(r, c) + v);
}

void Matrix::set_row(std::size_t r, std::vector<MatrixEntry> entries) {
  if (r >= rows_) throw StructuralError("row index out of bounds");
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return a.col < b.col; });
  std::erase_if(entries, [](const MatrixEntry& e) { return e.value.is_zero(); });
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].col == entries[k - 1].col) throw StructuralError("duplicate column in row");
  }
  if (!entries.empty() && entries.back().col >= cols_) {
    throw StructuralError("column index out of bounds");
  }
  data_[r] = std::move(entries);
}

Vector Matrix::dense_row(std::size_t r) const {
  Vector v(cols_);
  for (const auto& e : data_[r]) v[e.col] = e.value;
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Vector> Matrix::to_dense() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(dense_row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  return t;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& row : m.data_) {
    for (auto& e : row) e.value = e.value.conj();
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw StructuralError("product shape mismatch " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                          std::to_string(o.cols_));
  }
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].empty()) continue;
    Vector acc(o.cols_);
    std::vector<char> touched(o.cols_, 0);
    for (const auto& a : data_[r]) {
      for (const auto& b : o.data_[a.col]) {
        acc[b.col].add_product(a.value, b.value);
        touched[b.col] = 1;
      }
    }
    auto& row = out.data_[r];
    for (std::size_t c = 0; c < o.cols_; ++c) {
      if (touched[c] && !acc[c].is_zero()) row.push_back({c, std::move(acc[c])});
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw StructuralError("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r].add_product(e.value, v[e.col]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("sum shape mismatch");
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : o.data_[r]) out.add_to(r, e.col, e.value);
  }
  return out;
}

Matrix Matrix::operator-() const { return scaled(Scalar(-1)); }

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(const Scalar& s) const {
  if (s.is_zero()) return Matrix(rows_, cols_);
  Matrix out = *this;
  for (auto& row : out.data_) {
    for (auto& e : row) e.value *= s;
  }
  return out;
}

Matrix Matrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  std::vector<std::ptrdiff_t> col_map(cols_, -1);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_) throw StructuralError("column selection out of bounds");
    col_map[cols[k]] = static_cast<std::ptrdiff_t>(k);
  }
  Matrix out(rows.size(), cols.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= rows_) throw StructuralError("row selection out of bounds");
    std::vector<MatrixEntry> entries;
    for (const auto& e : data_[rows[k]]) {
      if (col_map[e.col] >= 0) entries.push_back({static_cast<std::size_t>(col_map[e.col]), e.value});
    }
    out.set_row(k, std::move(entries));
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<std::size_t> all(rows_);
  for (std::size_t r = 0; r < rows_; ++r) all[r] = r;
  return select(all, cols);
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw StructuralError("hstack row mismatch");
  Matrix out(rows_, cols_ + o.cols_);
  out.place(0, 0, *this);
  out.place(0, cols_, o);
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw StructuralError("vstack column mismatch");
  Matrix out(rows_ + o.rows_, cols_);
  out.place(0, 0, *this);
  out.place(rows_, 0, o);
  return out;
}

void Matrix::place(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) {
    throw StructuralError("block does not fit");
  }
  for (std::size_t r = 0; r < block.rows_; ++r) {
    for (const auto& e : block.data_[r]) set(r0 + r, c0 + e.col, e.value);
  }
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << at(r, c);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace dcx
