#include <algorithm>
#include <exception>

#include "dcx/error.hpp"
#include "dcx/spectral/spectral.hpp"

namespace dcx {

std::size_t HodgePieces::at(Bidegree b) const {
  auto it = dims.find(b);
  return it == dims.end() ? 0 : it->second;
}

namespace {

struct DegreeResult {
  std::map<Bidegree, std::size_t> dims;
  std::map<int, std::size_t> f_dims;
  std::map<int, std::size_t> fbar_dims;
  DegreePurity purity;
};

// Functionals on Tot^k that vanish on B = im D_{k-1} and restrict to a basis
// of (Z / B)^*, Z = ker D_k. Applied to vectors of Z they give coordinates in
// H^k; the cohomology class of a cocycle is zero iff its coordinates are.
Matrix cohomology_coordinates(const TotalComplex& tot, int k) {
  const Subspace ann = kernel(tot.d(k - 1).transpose());
  const Matrix z = kernel(tot.d(k)).basis();
  const Matrix functionals = ann.basis_rows();
  const RrefResult red = rref((functionals * z).transpose());
  std::vector<std::size_t> all(tot.dim(k));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return functionals.select(red.pivots, all);
}

// Classes in H^k of the cocycles D_k x = 0 with x supported on `coords`.
Subspace classes_supported_on(const TotalComplex& tot, const Matrix& phi, int k,
                              const std::vector<std::size_t>& coords) {
  if (coords.empty()) return Subspace(phi.rows());
  const Matrix local = kernel(tot.d(k).select_columns(coords)).basis();
  return Subspace::column_span(phi.select_columns(coords) * local);
}

DegreeResult hodge_degree(const DoubleComplex& dc, const TotalComplex& tot, int k) {
  DegreeResult out;
  const Matrix phi = cohomology_coordinates(tot, k);
  const std::size_t h = phi.rows();
  const int lo = dc.min_p();
  const int hi = dc.max_p();
  const int qlo = dc.min_q();
  const int qhi = dc.max_q();

  std::map<int, Subspace> w, wbar;
  for (int p = lo; p <= hi + 1; ++p) {
    w.emplace(p, classes_supported_on(tot, phi, k, tot.column_filtration(k, p)));
    out.f_dims[p] = w.at(p).dim();
  }
  for (int q = qlo; q <= qhi + 1; ++q) {
    wbar.emplace(q, classes_supported_on(tot, phi, k, tot.row_filtration(k, q)));
    out.fbar_dims[q] = wbar.at(q).dim();
  }
  auto w_at = [&](int p) -> const Subspace& { return w.at(std::max(lo, std::min(p, hi + 1))); };
  auto wbar_at = [&](int q) -> const Subspace& {
    return wbar.at(std::max(qlo, std::min(q, qhi + 1)));
  };

  Subspace span(h);
  std::size_t piece_sum = 0;
  for (int p = lo; p <= hi; ++p) {
    const Bidegree b{p, k - p};
    if (dc.dim(b) == 0) continue;
    const Subspace piece = subspace_intersect(w_at(p), wbar_at(k - p));
    const std::size_t d = piece.dim();

    // Image of Bott-Chern: d-closed forms of pure bidegree (p,q) modulo exact ones.
    const Matrix closed = kernel(dc.del(b).vstack(dc.delbar(b))).basis();
    const Matrix local = phi.select_columns(tot.block_coords(k, p));
    const std::size_t bc = closed.cols() == 0 ? 0 : Subspace::column_span(local * closed).dim();
    if (bc != d) {
      throw InternalError("Hodge piece at " + to_string(b) + ": filtration route gives " +
                          std::to_string(d) + ", Bott-Chern route gives " + std::to_string(bc));
    }
    out.dims[b] = d;
    piece_sum += d;
    span = subspace_sum(span, piece);
  }
  out.purity.piece_sum = piece_sum;
  out.purity.span_dim = span.dim();
  out.purity.de_rham = h;
  out.purity.direct = out.purity.span_dim == piece_sum;
  out.purity.pure = out.purity.direct && out.purity.span_dim == out.purity.de_rham;
  return out;
}

}  // namespace

HodgePieces hodge_pieces(const DoubleComplex& dc) {
  check_structure(dc);
  HodgePieces out;
  if (dc.empty()) return out;
  const TotalComplex tot(dc);
  std::vector<int> degrees;
  for (int k = tot.min_degree(); k <= tot.max_degree(); ++k) degrees.push_back(k);
  std::vector<DegreeResult> results(degrees.size());
  std::vector<std::exception_ptr> errors(degrees.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    try {
      results[i] = hodge_degree(dc, tot, degrees[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const int k = degrees[i];
    for (const auto& [b, d] : results[i].dims) out.dims[b] = d;
    for (const auto& [p, d] : results[i].f_dims) out.f_dims[{k, p}] = d;
    for (const auto& [q, d] : results[i].fbar_dims) out.fbar_dims[{k, q}] = d;
    out.purity[k] = results[i].purity;
  }
  return out;
}

std::map<int, bool> purity_check(const DoubleComplex& dc) {
  std::map<int, bool> out;
  for (const auto& [k, p] : hodge_pieces(dc).purity) out[k] = p.pure;
  return out;
}

}  // namespace dcx
