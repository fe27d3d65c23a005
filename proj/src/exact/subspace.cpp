#include "dcx/exact/subspace.hpp"

#include <algorithm>

#include "dcx/error.hpp"

namespace dcx {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw StructuralError(std::string(op) + ": ambient dimensions " +
                          std::to_string(u.ambient_dim()) + " and " +
                          std::to_string(v.ambient_dim()) + " differ");
  }
}

Matrix nonzero_rows(const RrefResult& red, std::size_t cols) {
  Matrix out(red.rank(), cols);
  for (std::size_t k = 0; k < red.rank(); ++k) {
    auto row = red.reduced.row(k);
    out.set_row(k, std::vector<MatrixEntry>(row.begin(), row.end()));
  }
  return out;
}

Subspace from_row_matrix(const Matrix& rows);

}  // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), rows_(0, ambient) {}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  s.rows_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace(ambient);
  Subspace s(ambient);
  const Matrix m = Matrix::from_dense(vectors, ambient);
  s.rows_ = nonzero_rows(rref(m), ambient);
  return s;
}

Subspace Subspace::column_span(const Matrix& m) {
  Subspace s(m.rows());
  if (m.cols() == 0 || m.is_zero()) return s;
  s.rows_ = nonzero_rows(rref(m.transpose()), m.rows());
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> coords) {
  std::vector<std::size_t> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subspace s(ambient);
  s.rows_ = Matrix(sorted.size(), ambient);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] >= ambient) throw StructuralError("coordinate out of range");
    s.rows_.set(k, sorted[k], Scalar(1));
  }
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const { return rows_.to_dense(); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw StructuralError("contains: vector length mismatch");
  Matrix stacked = rows_.vstack(Matrix::from_dense({v}, ambient_));
  return rank(stacked) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  if (other.dim() == 0) return true;
  return rank(rows_.vstack(other.rows_)) == dim();
}

namespace {

Subspace from_row_matrix(const Matrix& rows) {
  return Subspace::span(rows.cols(), rows.to_dense());
}

}  // namespace

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0 || m.is_zero()) return Subspace::whole(n);
  const RrefResult red = rref(m);
  std::vector<char> is_pivot(n, 0);
  for (auto c : red.pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < red.pivots.size(); ++k) {
      v[red.pivots[k]] = -red.reduced.at(k, free);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Matrix& m) { return Subspace::column_span(m); }

Subspace image(const Matrix& m, const Subspace& domain) {
  if (domain.ambient_dim() != m.cols()) throw StructuralError("image: domain mismatch");
  if (domain.dim() == 0) return Subspace(m.rows());
  return Subspace::column_span(m * domain.basis());
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "sum");
  if (u.dim() == 0) return v;
  if (v.dim() == 0) return u;
  return from_row_matrix(u.basis_rows().vstack(v.basis_rows()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "intersect");
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace(n);
  // x = U a = V b  <=>  [U | -V] (a; b) = 0.
  const Matrix ub = u.basis();
  const Matrix system = ub.hstack(-v.basis());
  const Subspace coeffs = kernel(system);
  if (coeffs.dim() == 0) return Subspace(n);
  std::vector<std::size_t> first(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) first[k] = k;
  const Matrix a = coeffs.basis().transpose().select_columns(first).transpose();
  return Subspace::column_span(ub * a);
}

Subspace annihilator(const Subspace& u) {
  if (u.dim() == 0) return Subspace::whole(u.ambient_dim());
  return kernel(u.basis_rows());
}

Subspace preimage(const Matrix& m, const Subspace& v) {
  if (v.ambient_dim() != m.rows()) throw StructuralError("preimage: codomain mismatch");
  if (v.dim() == v.ambient_dim()) return Subspace::whole(m.cols());
  const Subspace ann = annihilator(v);
  return kernel(ann.basis_rows() * m);
}

std::size_t quotient_dim(const Subspace& u, const Subspace& w) {
  if (!u.contains(w)) throw StructuralError("quotient_dim: not a subspace");
  return u.dim() - w.dim();
}

std::vector<Vector> complement_basis(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w, "complement");
  if (!u.contains(w)) throw StructuralError("complement: not a subspace");
  std::vector<Vector> out;
  Matrix acc = w.basis_rows();
  std::size_t r = w.dim();
  for (const auto& v : u.basis_vectors()) {
    if (r == u.dim()) break;
    Matrix next = acc.vstack(Matrix::from_dense({v}, u.ambient_dim()));
    if (rank(next) > r) {
      acc = std::move(next);
      ++r;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace dcx
