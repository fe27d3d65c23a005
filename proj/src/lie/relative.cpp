#include <bit>

#include "dcx/error.hpp"
#include "dcx/lie/exterior.hpp"
#include "dcx/lie/lie.hpp"

namespace dcx {

namespace {

/// Interior product with X = sum_m x_m X_m, from degree k to k - 1.
Matrix contraction(const ExteriorBasis& basis, const Vector& x, int k) {
  Matrix out(basis.dim(k - 1), basis.dim(k));
  const auto& monomials = basis.degree(k);
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    const Mask m = monomials[col];
    for (Mask rest = m; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if (x[static_cast<std::size_t>(i)].is_zero()) continue;
      const Scalar v = front_sign(m, i) > 0 ? x[static_cast<std::size_t>(i)] : -x[static_cast<std::size_t>(i)];
      out.add_to(basis.index(m & ~(Mask{1} << i)), col, v);
    }
  }
  return out;
}

}  // namespace

std::map<int, std::size_t> relative_ce_cohomology(const LieAlgebra& g, const Subalgebra& k) {
  if (!validate_lie(g).ok) throw ValidationError("Jacobi identity fails");
  validate_subalgebra(g, k);
  const int n = static_cast<int>(g.dim());
  const ExteriorBasis basis(n);
  const SimpleComplex ce = ce_complex(g);

  std::map<int, Subspace> basic;
  for (int p = 0; p <= n; ++p) {
    Subspace s = Subspace::whole(basis.dim(p));
    for (std::size_t a = 0; a < k.inclusion.cols(); ++a) {
      const Vector x = k.inclusion.column(a);
      if (p > 0) {
        const Matrix iota = contraction(basis, x, p);
        s = subspace_intersect(s, kernel(iota));
        const Matrix lie = ce.differential(p - 1) * iota + contraction(basis, x, p + 1) * ce.differential(p);
        s = subspace_intersect(s, kernel(lie));
      }
    }
    basic.emplace(p, std::move(s));
  }
  std::map<int, std::size_t> out;
  for (int p = 0; p <= n; ++p) {
    const Subspace& here = basic.at(p);
    const Matrix d = ce.differential(p);
    if (p < n && !basic.at(p + 1).contains(image(d, here))) {
      throw InternalError("CE differential leaves the relative subcomplex in degree " + std::to_string(p));
    }
    const std::size_t cocycles = subspace_intersect(here, kernel(d)).dim();
    const std::size_t coboundaries = p > 0 ? image(ce.differential(p - 1), basic.at(p - 1)).dim() : 0;
    out[p] = cocycles - coboundaries;
  }
  return out;
}

}  // namespace dcx
