#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dcx/exact/matrix.hpp"

namespace dcx {

/// A linear subspace of Q(i)^n in canonical form: its basis vectors are the
/// rows of a reduced row echelon matrix, so equal subspaces compare equal.
class Subspace {
 public:
  /// The zero subspace of Q(i)^n.
  explicit Subspace(std::size_t ambient = 0);

  static Subspace whole(std::size_t ambient);
  /// Span of the given vectors (need not be independent).
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  /// Span of the columns of m.
  static Subspace column_span(const Matrix& m);
  /// Span of the standard basis vectors e_k for k in `coords`.
  static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> coords);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Basis as columns (ambient x dim), in reduced column echelon form.
  Matrix basis() const { return rows_.transpose(); }
  /// Basis as rows (dim x ambient), in reduced row echelon form.
  const Matrix& basis_rows() const { return rows_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix rows_;
};

Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// m applied to a subspace of its domain.
Subspace image(const Matrix& m, const Subspace& domain);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// {x : m x in v}.
Subspace preimage(const Matrix& m, const Subspace& v);
/// Linear functionals (as row vectors) vanishing on u, without conjugation.
Subspace annihilator(const Subspace& u);
/// dim(u / w) for w contained in u; throws StructuralError otherwise.
std::size_t quotient_dim(const Subspace& u, const Subspace& w);
/// Basis of a complement of w inside u, chosen among the basis vectors of u
/// (the lowest-index ones that extend a basis of w).
std::vector<Vector> complement_basis(const Subspace& u, const Subspace& w);

}  // namespace dcx
