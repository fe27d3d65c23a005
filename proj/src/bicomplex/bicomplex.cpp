#include "dcx/bicomplex/bicomplex.hpp"

#include <algorithm>
#include <climits>

#include "dcx/error.hpp"

namespace dcx {

std::string to_string(Bidegree b) {
  return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
}

void DoubleComplex::set_space(Bidegree b, std::size_t dim) {
  if (dim == 0) {
    dims_.erase(b);
  } else {
    dims_[b] = dim;
  }
}

void DoubleComplex::set_del(Bidegree b, Matrix m) { del_[b] = std::move(m); }

void DoubleComplex::set_delbar(Bidegree b, Matrix m) { delbar_[b] = std::move(m); }

std::size_t DoubleComplex::dim(Bidegree b) const {
  auto it = dims_.find(b);
  return it == dims_.end() ? 0 : it->second;
}

Matrix DoubleComplex::del(Bidegree b) const {
  auto it = del_.find(b);
  if (it != del_.end()) return it->second;
  return Matrix(dim({b.p + 1, b.q}), dim(b));
}

Matrix DoubleComplex::delbar(Bidegree b) const {
  auto it = delbar_.find(b);
  if (it != delbar_.end()) return it->second;
  return Matrix(dim({b.p, b.q + 1}), dim(b));
}

Matrix DoubleComplex::del_delbar(Bidegree b) const {
  return del({b.p, b.q + 1}) * delbar(b);
}

std::vector<Bidegree> DoubleComplex::support() const {
  std::vector<Bidegree> out;
  for (const auto& [b, d] : dims_) out.push_back(b);
  return out;
}

std::size_t DoubleComplex::total_dim() const {
  std::size_t n = 0;
  for (const auto& [b, d] : dims_) n += d;
  return n;
}

namespace {

template <typename F>
int extreme(const std::map<Bidegree, std::size_t>& dims, F key, bool want_max) {
  if (dims.empty()) return 0;
  int best = want_max ? INT_MIN : INT_MAX;
  for (const auto& [b, d] : dims) best = want_max ? std::max(best, key(b)) : std::min(best, key(b));
  return best;
}

}  // namespace

int DoubleComplex::min_p() const { return extreme(dims_, [](Bidegree b) { return b.p; }, false); }
int DoubleComplex::max_p() const { return extreme(dims_, [](Bidegree b) { return b.p; }, true); }
int DoubleComplex::min_q() const { return extreme(dims_, [](Bidegree b) { return b.q; }, false); }
int DoubleComplex::max_q() const { return extreme(dims_, [](Bidegree b) { return b.q; }, true); }
int DoubleComplex::min_total() const {
  return extreme(dims_, [](Bidegree b) { return b.total(); }, false);
}
int DoubleComplex::max_total() const {
  return extreme(dims_, [](Bidegree b) { return b.total(); }, true);
}

DoubleComplex DoubleComplex::transposed() const {
  DoubleComplex t;
  for (const auto& [b, d] : dims_) t.dims_[b.transposed()] = d;
  for (const auto& [b, m] : del_) t.delbar_[b.transposed()] = m;
  for (const auto& [b, m] : delbar_) t.del_[b.transposed()] = m;
  return t;
}

bool operator==(const DoubleComplex& a, const DoubleComplex& b) {
  if (a.dims_ != b.dims_) return false;
  for (const auto& bd : a.support()) {
    if (a.del(bd) != b.del(bd) || a.delbar(bd) != b.delbar(bd)) return false;
  }
  return true;
}

void check_structure(const DoubleComplex& dc) {
  auto check = [&](const std::map<Bidegree, Matrix>& maps, int dp, int dq, const char* name) {
    for (const auto& [b, m] : maps) {
      const Bidegree target{b.p + dp, b.q + dq};
      if (m.cols() != dc.dim(b) || m.rows() != dc.dim(target)) {
        throw StructuralError(std::string(name) + " at " + to_string(b) + " has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(dc.dim(target)) + "x" +
                              std::to_string(dc.dim(b)));
      }
    }
  };
  check(dc.stored_del(), 1, 0, "del");
  check(dc.stored_delbar(), 0, 1, "delbar");
}

ValidationReport validate(const DoubleComplex& dc) {
  check_structure(dc);
  for (const Bidegree b : dc.support()) {
    if (!(dc.del({b.p + 1, b.q}) * dc.del(b)).is_zero()) return {false, b, "del^2"};
    if (!(dc.delbar({b.p, b.q + 1}) * dc.delbar(b)).is_zero()) return {false, b, "delbar^2"};
    const Matrix anti = dc.del({b.p, b.q + 1}) * dc.delbar(b) + dc.delbar({b.p + 1, b.q}) * dc.del(b);
    if (!anti.is_zero()) return {false, b, "anticommutation"};
  }
  return {};
}

// -- simple complexes ----------------------------------------------------

std::size_t SimpleComplex::dim(int k) const {
  auto it = dims.find(k);
  return it == dims.end() ? 0 : it->second;
}

Matrix SimpleComplex::differential(int k) const {
  auto it = d.find(k);
  if (it != d.end()) return it->second;
  return Matrix(dim(k + 1), dim(k));
}

std::vector<int> SimpleComplex::support() const {
  std::vector<int> out;
  for (const auto& [k, n] : dims) {
    if (n > 0) out.push_back(k);
  }
  return out;
}

SimpleComplex SimpleComplex::conj() const {
  SimpleComplex c = *this;
  for (auto& [k, m] : c.d) m = m.conj();
  return c;
}

bool SimpleComplex::is_complex() const {
  for (int k : support()) {
    const Matrix dk = differential(k);
    if (dk.rows() != dim(k + 1) || dk.cols() != dim(k)) {
      throw StructuralError("simple complex differential at degree " + std::to_string(k) +
                            " has wrong shape");
    }
    if (!(differential(k + 1) * dk).is_zero()) return false;
  }
  return true;
}

std::map<int, std::size_t> SimpleComplex::cohomology() const {
  std::map<int, std::size_t> out;
  for (int k : support()) {
    const std::size_t ker = dim(k) - rank(differential(k));
    out[k] = ker - rank(differential(k - 1));
  }
  return out;
}

// -- constructions -------------------------------------------------------

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b) {
  DoubleComplex out;
  std::vector<Bidegree> all = a.support();
  for (auto bd : b.support()) all.push_back(bd);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (auto bd : all) out.set_space(bd, a.dim(bd) + b.dim(bd));
  auto block = [](const Matrix& x, const Matrix& y) {
    Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
    m.place(0, 0, x);
    m.place(x.rows(), x.cols(), y);
    return m;
  };
  for (auto bd : all) {
    Matrix del = block(a.del(bd), b.del(bd));
    if (!del.is_zero()) out.set_del(bd, std::move(del));
    Matrix delbar = block(a.delbar(bd), b.delbar(bd));
    if (!delbar.is_zero()) out.set_delbar(bd, std::move(delbar));
  }
  return out;
}

namespace {

// Kronecker product x (x) y with the y index fastest.
Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (const auto& ex : x.row(r)) {
      for (std::size_t s = 0; s < y.rows(); ++s) {
        for (const auto& ey : y.row(s)) {
          out.set(r * y.rows() + s, ex.col * y.cols() + ey.col, ex.value * ey.value);
        }
      }
    }
  }
  return out;
}

}  // namespace

DoubleComplex tensor_product(const SimpleComplex& a, const SimpleComplex& b) {
  DoubleComplex out;
  for (int p : a.support()) {
    for (int q : b.support()) out.set_space({p, q}, a.dim(p) * b.dim(q));
  }
  for (int p : a.support()) {
    for (int q : b.support()) {
      Matrix del = kron(a.differential(p), Matrix::identity(b.dim(q)));
      if (!del.is_zero()) out.set_del({p, q}, std::move(del));
      Matrix delbar = kron(Matrix::identity(a.dim(p)), b.differential(q));
      if (p % 2 != 0) delbar = -delbar;
      if (!delbar.is_zero()) out.set_delbar({p, q}, std::move(delbar));
    }
  }
  return out;
}

RealStructure swap_real_structure(const SimpleComplex& a) {
  RealStructure rs;
  for (int p : a.support()) {
    for (int q : a.support()) {
      const std::size_t np = a.dim(p);
      const std::size_t nq = a.dim(q);
      Matrix s(nq * np, np * nq);
      const Scalar sign((p * q) % 2 == 0 ? 1 : -1);
      for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < nq; ++j) s.set(j * np + i, i * nq + j, sign);
      }
      rs.sigma[{p, q}] = std::move(s);
    }
  }
  return rs;
}

bool check_real_structure(const DoubleComplex& dc, const RealStructure& rs) {
  for (const auto& [b, s] : rs.sigma) {
    if (s.cols() != dc.dim(b) || s.rows() != dc.dim(b.transposed())) {
      throw StructuralError("real structure at " + to_string(b) + " has wrong shape");
    }
  }
  auto sigma = [&](Bidegree b) -> std::optional<Matrix> {
    auto it = rs.sigma.find(b);
    if (it == rs.sigma.end()) return std::nullopt;
    return it->second;
  };
  for (const Bidegree b : dc.support()) {
    if (dc.dim(b.transposed()) != dc.dim(b)) return false;
    auto s = sigma(b);
    auto st = sigma(b.transposed());
    if (!s || !st) return false;
    // sigma(sigma(x)) = S_{q,p} conj(S_{p,q}) x.
    if (*st * s->conj() != Matrix::identity(dc.dim(b))) return false;
    // sigma(del x) = delbar(sigma x): S_{p+1,q} conj(Del_{p,q}) = Delbar_{q,p} S_{p,q}.
    const Bidegree right{b.p + 1, b.q};
    const Matrix lhs_del = dc.dim(right) == 0 ? Matrix(0, dc.dim(b))
                                              : sigma(right).value_or(Matrix()) * dc.del(b).conj();
    if (dc.dim(right) != 0 && !sigma(right)) return false;
    if (lhs_del != dc.delbar(b.transposed()) * *s) return false;
    const Bidegree up{b.p, b.q + 1};
    if (dc.dim(up) != 0 && !sigma(up)) return false;
    const Matrix lhs_delbar = dc.dim(up) == 0 ? Matrix(0, dc.dim(b))
                                              : sigma(up).value_or(Matrix()) * dc.delbar(b).conj();
    if (lhs_delbar != dc.del(b.transposed()) * *s) return false;
  }
  return true;
}

}  // namespace dcx
