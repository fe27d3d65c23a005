#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"

namespace dcx {

/// Finite-dimensional Lie algebra over Q(i) with basis X_0 .. X_{n-1} and
/// [X_i, X_j] = sum_k c_{ij}^k X_k, stored for i < j only.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  /// Sets c_{ij}^k; i > j stores the negated constant on (j, i). i == j is rejected.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// [X_i, X_j] as a coordinate vector.
  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x) in the basis.
  Matrix ad(const Vector& x) const;

  bool is_abelian() const { return constants_.empty(); }
  const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar>& constants() const {
    return constants_;
  }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> constants_;
};

struct LieReport {
  bool ok = true;
  /// First basis triple violating Jacobi.
  std::optional<std::array<std::size_t, 3>> failing;
};

LieReport validate_lie(const LieAlgebra& g);

/// Chevalley-Eilenberg complex on Lambda^k g^*, monomials in lexicographic
/// order; d e^k = -sum_{i<j} c_{ij}^k e^i ^ e^j extended as a derivation.
/// Throws ValidationError if Jacobi fails (d^2 != 0).
SimpleComplex ce_complex(const LieAlgebra& g);

struct BicomplexWithReal {
  DoubleComplex complex;
  RealStructure real;
};

/// CE(g) tensor conj(CE(g)) with the factor-swap real structure.
BicomplexWithReal invariant_bicomplex(const LieAlgebra& g);

LieAlgebra abelian_algebra(std::size_t n);
/// [X_0, X_1] = X_2.
LieAlgebra heisenberg3();
/// Basis H, E, F with [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebra sl2();
/// `abelian:<n>`, `heisenberg3`, `sl2`. Throws std::invalid_argument.
LieAlgebra lie_catalog(const std::string& name);
std::vector<std::string> lie_catalog_names();

/// The underlying real Lie algebra: basis X_0..X_{n-1}, iX_0..iX_{n-1}.
LieAlgebra realification(const LieAlgebra& g);

/// Columns span a subalgebra of g.
struct Subalgebra {
  Matrix inclusion;
};

/// Throws ValidationError unless the columns are independent and closed under bracket.
void validate_subalgebra(const LieAlgebra& g, const Subalgebra& k);
/// Compact form su(2) inside realification(sl2()): iH, E - F, i(E + F).
Subalgebra su2_in_realified_sl2();

/// Killing form nondegenerate.
bool is_semisimple(const LieAlgebra& g);

/// Cohomology of the forms on g that vanish on k and are k-invariant
/// (i_X w = 0 and L_X w = 0 for X in k), with the CE differential.
std::map<int, std::size_t> relative_ce_cohomology(const LieAlgebra& g, const Subalgebra& k);

struct SemisimpleModel {
  /// dims[(p,q)] = dim H^p(CE(g)) * betti[q], zeros included on the grid.
  std::map<Bidegree, std::size_t> e2;
  /// Degeneration is known to happen at page 2; recorded, not computed.
  int degeneration_page = 2;
  /// (p,q) with p < q and dims[(p,q)] != dims[(q,p)].
  std::vector<Bidegree> asymmetric;
  bool page1 = false;
};

/// E_2 model H^p(CE(g)) (x) C^{betti[q]}. Throws ValidationError unless betti[0] == 1.
SemisimpleModel semisimple_e2_model(const LieAlgebra& g, const std::vector<std::size_t>& betti);

/// Relative cohomology of (g, k) equals the Betti vector in every degree.
/// Throws ValidationError if g is not semisimple.
bool relative_cohomology_matches_betti(const LieAlgebra& g, const Subalgebra& k,
                                       const std::vector<std::size_t>& betti);

}  // namespace dcx
