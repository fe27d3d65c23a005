#include <algorithm>

#include "dcx/bicomplex/bicomplex.hpp"
#include "dcx/error.hpp"

namespace dcx {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::dolbeault: return "dolbeault";
    case Flavor::del: return "del";
    case Flavor::bott_chern: return "bott_chern";
    case Flavor::aeppli: return "aeppli";
  }
  return "unknown";
}

std::size_t CohomologyTable::at(Bidegree b) const {
  auto it = dims.find(b);
  return it == dims.end() ? 0 : it->second;
}

std::size_t CohomologyTable::total(int k) const {
  std::size_t n = 0;
  for (const auto& [b, d] : dims) {
    if (b.total() == k) n += d;
  }
  return n;
}

CohomologyTable dolbeault(const DoubleComplex& dc) {
  check_structure(dc);
  CohomologyTable t{Flavor::dolbeault, {}};
  for (const Bidegree b : dc.support()) {
    t.dims[b] = dc.dim(b) - rank(dc.delbar(b)) - rank(dc.delbar({b.p, b.q - 1}));
  }
  return t;
}

CohomologyTable del_cohomology(const DoubleComplex& dc) {
  check_structure(dc);
  CohomologyTable t{Flavor::del, {}};
  for (const Bidegree b : dc.support()) {
    t.dims[b] = dc.dim(b) - rank(dc.del(b)) - rank(dc.del({b.p - 1, b.q}));
  }
  return t;
}

CohomologyTable bott_chern(const DoubleComplex& dc) {
  check_structure(dc);
  CohomologyTable t{Flavor::bott_chern, {}};
  for (const Bidegree b : dc.support()) {
    const std::size_t closed = dc.dim(b) - rank(dc.del(b).vstack(dc.delbar(b)));
    t.dims[b] = closed - rank(dc.del_delbar({b.p - 1, b.q - 1}));
  }
  return t;
}

CohomologyTable aeppli(const DoubleComplex& dc) {
  check_structure(dc);
  CohomologyTable t{Flavor::aeppli, {}};
  for (const Bidegree b : dc.support()) {
    const std::size_t closed = dc.dim(b) - rank(dc.del_delbar(b));
    const Matrix in = dc.del({b.p - 1, b.q}).hstack(dc.delbar({b.p, b.q - 1}));
    t.dims[b] = closed - rank(in);
  }
  return t;
}

CohomologyTable cohomology(const DoubleComplex& dc, Flavor f) {
  switch (f) {
    case Flavor::dolbeault: return dolbeault(dc);
    case Flavor::del: return del_cohomology(dc);
    case Flavor::bott_chern: return bott_chern(dc);
    case Flavor::aeppli: return aeppli(dc);
  }
  throw InternalError("unknown cohomology flavor");
}

// -- total complex -------------------------------------------------------

TotalComplex::TotalComplex(const DoubleComplex& dc) {
  check_structure(dc);
  if (dc.empty()) return;
  lo_ = dc.min_total();
  hi_ = dc.max_total();
  for (const Bidegree b : dc.support()) {
    auto& blocks = blocks_[b.total()];
    blocks.push_back({b.p, dims_[b.total()], dc.dim(b)});
    dims_[b.total()] += dc.dim(b);
  }
  for (int k = lo_ - 1; k <= hi_; ++k) {
    Matrix d(dim(k + 1), dim(k));
    auto it = blocks_.find(k);
    if (it != blocks_.end()) {
      for (const Block& blk : it->second) {
        const Bidegree b{blk.p, k - blk.p};
        for (const Block& tgt : blocks_[k + 1]) {
          if (tgt.p == blk.p + 1) d.place(tgt.offset, blk.offset, dc.del(b));
          if (tgt.p == blk.p) d.place(tgt.offset, blk.offset, dc.delbar(b));
        }
      }
    }
    d_[k] = std::move(d);
  }
  std::erase_if(blocks_, [](const auto& kv) { return kv.second.empty(); });
}

std::size_t TotalComplex::dim(int k) const {
  auto it = dims_.find(k);
  return it == dims_.end() ? 0 : it->second;
}

const Matrix& TotalComplex::d(int k) const {
  auto it = d_.find(k);
  if (it != d_.end()) return it->second;
  // Outside the stored range both ends are zero-dimensional or one is; build lazily.
  static thread_local Matrix scratch;
  scratch = Matrix(dim(k + 1), dim(k));
  return scratch;
}

std::vector<std::size_t> TotalComplex::block_coords(int k, int p) const {
  std::vector<std::size_t> out;
  auto it = blocks_.find(k);
  if (it == blocks_.end()) return out;
  for (const Block& blk : it->second) {
    if (blk.p != p) continue;
    for (std::size_t j = 0; j < blk.dim; ++j) out.push_back(blk.offset + j);
  }
  return out;
}

std::vector<std::size_t> TotalComplex::column_filtration(int k, int p) const {
  std::vector<std::size_t> out;
  auto it = blocks_.find(k);
  if (it == blocks_.end()) return out;
  for (const Block& blk : it->second) {
    if (blk.p < p) continue;
    for (std::size_t j = 0; j < blk.dim; ++j) out.push_back(blk.offset + j);
  }
  return out;
}

std::vector<std::size_t> TotalComplex::row_filtration(int k, int q) const {
  std::vector<std::size_t> out;
  auto it = blocks_.find(k);
  if (it == blocks_.end()) return out;
  for (const Block& blk : it->second) {
    if (k - blk.p < q) continue;
    for (std::size_t j = 0; j < blk.dim; ++j) out.push_back(blk.offset + j);
  }
  return out;
}

Vector TotalComplex::embed(Bidegree b, const Vector& v) const {
  const int k = b.total();
  const auto coords = block_coords(k, b.p);
  if (coords.size() != v.size()) throw StructuralError("embed: vector length mismatch");
  Vector out(dim(k));
  for (std::size_t j = 0; j < v.size(); ++j) out[coords[j]] = v[j];
  return out;
}

std::size_t TotalCohomology::at(int k) const {
  auto it = dims.find(k);
  return it == dims.end() ? 0 : it->second;
}

TotalCohomology de_rham(const DoubleComplex& dc) {
  const TotalComplex tot(dc);
  TotalCohomology out;
  for (int k = tot.min_degree(); k <= tot.max_degree(); ++k) {
    if (tot.dim(k) == 0) continue;
    Subspace z = kernel(tot.d(k));
    Subspace b = image(tot.d(k - 1));
    out.dims[k] = z.dim() - b.dim();
    out.cocycles.emplace(k, std::move(z));
    out.coboundaries.emplace(k, std::move(b));
  }
  return out;
}

long euler_characteristic(const DoubleComplex& dc) {
  long chi = 0;
  for (const Bidegree b : dc.support()) {
    const long n = static_cast<long>(dc.dim(b));
    chi += (b.total() % 2 == 0) ? n : -n;
  }
  return chi;
}

}  // namespace dcx
