#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcx/exact/matrix.hpp"
#include "dcx/exact/subspace.hpp"

namespace dcx {

struct Bidegree {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  Bidegree transposed() const { return {q, p}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(Bidegree b);

/// A bounded double complex A^{p,q} with anticommuting differentials
/// del: (p,q) -> (p+1,q) and delbar: (p,q) -> (p,q+1).
///
/// Spaces are finite dimensional with finite support. A differential is stored
/// only where it was set; absent maps read as zero matrices of the right shape.
class DoubleComplex {
 public:
  void set_space(Bidegree b, std::size_t dim);
  /// Matrix of del from b to (p+1,q); shape dim(p+1,q) x dim(p,q).
  void set_del(Bidegree b, Matrix m);
  /// Matrix of delbar from b to (p,q+1); shape dim(p,q+1) x dim(p,q).
  void set_delbar(Bidegree b, Matrix m);

  std::size_t dim(Bidegree b) const;
  Matrix del(Bidegree b) const;
  Matrix delbar(Bidegree b) const;
  /// del o delbar on b, landing in (p+1,q+1).
  Matrix del_delbar(Bidegree b) const;

  /// Bidegrees with nonzero space, sorted.
  std::vector<Bidegree> support() const;
  bool empty() const { return support().empty(); }
  std::size_t total_dim() const;
  int min_p() const;
  int max_p() const;
  int min_q() const;
  int max_q() const;
  int min_total() const;
  int max_total() const;

  /// Swap (p,q) and the roles of del and delbar.
  DoubleComplex transposed() const;

  /// Raw stored maps, for serialization.
  const std::map<Bidegree, Matrix>& stored_del() const { return del_; }
  const std::map<Bidegree, Matrix>& stored_delbar() const { return delbar_; }
  const std::map<Bidegree, std::size_t>& spaces() const { return dims_; }

  friend bool operator==(const DoubleComplex& a, const DoubleComplex& b);

 private:
  std::map<Bidegree, std::size_t> dims_;
  std::map<Bidegree, Matrix> del_;
  std::map<Bidegree, Matrix> delbar_;
};

/// Result of checking the double complex identities.
struct ValidationReport {
  bool ok = true;
  std::optional<Bidegree> failing;
  /// "del^2", "delbar^2" or "anticommutation" when !ok.
  std::string identity;
};

/// Checks del^2 = 0, delbar^2 = 0 and del delbar + delbar del = 0 everywhere.
/// Throws StructuralError when a stored matrix has the wrong shape.
ValidationReport validate(const DoubleComplex& dc);
void check_structure(const DoubleComplex& dc);

/// Bounded cochain complex with d: C^k -> C^{k+1}.
struct SimpleComplex {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> d;

  std::size_t dim(int k) const;
  Matrix differential(int k) const;
  /// Degrees with nonzero space, sorted.
  std::vector<int> support() const;
  SimpleComplex conj() const;
  bool is_complex() const;
  std::map<int, std::size_t> cohomology() const;
};

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b);

/// A^p (x) B^q at (p,q) with del = d1 (x) id and delbar = (-1)^p id (x) d2.
/// Basis of A^p (x) B^q is ordered with the B index fastest.
DoubleComplex tensor_product(const SimpleComplex& a, const SimpleComplex& b);

/// Antilinear map sigma: A^{p,q} -> A^{q,p}, x -> S_{p,q} conj(x).
struct RealStructure {
  std::map<Bidegree, Matrix> sigma;
};

/// sigma^2 = id and sigma del sigma = delbar on every bidegree.
/// Throws StructuralError on shape mismatch.
bool check_real_structure(const DoubleComplex& dc, const RealStructure& rs);

/// Real structure on tensor_product(a, a.conj()) given by the Koszul-signed
/// swap of tensor factors.
RealStructure swap_real_structure(const SimpleComplex& a);

// -- one-page cohomologies ----------------------------------------------

enum class Flavor { dolbeault, del, bott_chern, aeppli };

std::string to_string(Flavor f);

/// Per-bidegree dimensions. Bidegrees with zero space are absent.
struct CohomologyTable {
  Flavor flavor = Flavor::dolbeault;
  std::map<Bidegree, std::size_t> dims;

  std::size_t at(Bidegree b) const;
  /// h^k = sum over p+q = k.
  std::size_t total(int k) const;
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

CohomologyTable dolbeault(const DoubleComplex& dc);
CohomologyTable del_cohomology(const DoubleComplex& dc);
CohomologyTable bott_chern(const DoubleComplex& dc);
CohomologyTable aeppli(const DoubleComplex& dc);
CohomologyTable cohomology(const DoubleComplex& dc, Flavor f);

/// Tot^k = sum_{p+q=k} A^{p,q}, blocks ordered by increasing p.
class TotalComplex {
 public:
  explicit TotalComplex(const DoubleComplex& dc);

  int min_degree() const { return lo_; }
  int max_degree() const { return hi_; }
  std::size_t dim(int k) const;
  /// d = del + delbar : Tot^k -> Tot^{k+1}.
  const Matrix& d(int k) const;
  /// Coordinates of block (p, k-p) inside Tot^k; empty if absent.
  std::vector<std::size_t> block_coords(int k, int p) const;
  /// Coordinates of blocks (i, k-i) with i >= p (column filtration F^p).
  std::vector<std::size_t> column_filtration(int k, int p) const;
  /// Coordinates of blocks (k-j, j) with j >= q (row filtration Fbar^q).
  std::vector<std::size_t> row_filtration(int k, int q) const;
  /// Embeds a vector of A^{p,q} into Tot^{p+q}.
  Vector embed(Bidegree b, const Vector& v) const;

 private:
  struct Block {
    int p;
    std::size_t offset;
    std::size_t dim;
  };
  int lo_ = 0;
  int hi_ = -1;
  std::map<int, std::vector<Block>> blocks_;
  std::map<int, std::size_t> dims_;
  std::map<int, Matrix> d_;
  Matrix empty_;
};

struct TotalCohomology {
  std::map<int, std::size_t> dims;
  std::map<int, Subspace> cocycles;
  std::map<int, Subspace> coboundaries;

  std::size_t at(int k) const;
};

TotalCohomology de_rham(const DoubleComplex& dc);

/// sum_k (-1)^k dim A^k of the total complex.
long euler_characteristic(const DoubleComplex& dc);

}  // namespace dcx
