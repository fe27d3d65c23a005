#pragma once

// Independent reference computations for tests: naive dense elimination and
// cohomology dimensions read straight off the definitions.

#include <map>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"

namespace oracle {

using Dense = std::vector<std::vector<dcx::Scalar>>;

inline Dense dense(const dcx::Matrix& m) {
  Dense out(m.rows(), std::vector<dcx::Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  }
  return out;
}

inline std::size_t rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const dcx::Scalar f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(const dcx::Matrix& m) { return rank(dense(m)); }

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
  Dense out(a.size(), std::vector<dcx::Scalar>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Dense side_by_side(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t r = 0; r < out.size(); ++r) out[r].insert(out[r].end(), b[r].begin(), b[r].end());
  return out;
}

inline Dense stacked(Dense a, const Dense& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Tables {
  std::map<dcx::Bidegree, std::size_t> dolbeault, del, bott_chern, aeppli;
  std::map<int, std::size_t> de_rham;
};

inline Tables tables(const dcx::DoubleComplex& dc) {
  using dcx::Bidegree;
  Tables t;
  for (const Bidegree b : dc.support()) {
    const std::size_t n = dc.dim(b);
    const Bidegree left{b.p - 1, b.q};
    const Bidegree down{b.p, b.q - 1};
    const Bidegree diag{b.p - 1, b.q - 1};
    const auto del_out = dense(dc.del(b));
    const auto delbar_out = dense(dc.delbar(b));
    const auto del_in = dense(dc.del(left));
    const auto delbar_in = dense(dc.delbar(down));
    // Every bidegree with a nonzero space gets an entry, zero or not.
    auto put = [](auto& m, Bidegree b, std::size_t v) { m[b] = v; };
    put(t.dolbeault, b, n - rank(delbar_out) - rank(delbar_in));
    put(t.del, b, n - rank(del_out) - rank(del_in));
    // del delbar from (p-1, q-1) and at (p, q).
    const auto into = multiply(del_in, dense(dc.delbar(diag)), dc.dim({b.p - 1, b.q}), dc.dim(diag));
    const auto at = multiply(dense(dc.del({b.p, b.q + 1})), delbar_out, dc.dim({b.p, b.q + 1}), n);
    put(t.bott_chern, b, n - rank(stacked(del_out, delbar_out)) - rank(into));
    put(t.aeppli, b, n - rank(at) - rank(side_by_side(del_in, delbar_in)));
  }
  // Total complex assembled by hand.
  if (dc.empty()) return t;
  const int lo = dc.min_p() + dc.min_q();
  const int hi = dc.max_p() + dc.max_q();
  auto offsets = [&](int k) {
    std::map<int, std::size_t> off;
    std::size_t n = 0;
    for (int p = dc.min_p(); p <= dc.max_p(); ++p) {
      off[p] = n;
      n += dc.dim({p, k - p});
    }
    off[dc.max_p() + 1] = n;
    return off;
  };
  std::map<int, std::size_t> rank_d;
  for (int k = lo; k <= hi; ++k) {
    const auto src = offsets(k);
    const auto tgt = offsets(k + 1);
    Dense d(tgt.at(dc.max_p() + 1), std::vector<dcx::Scalar>(src.at(dc.max_p() + 1)));
    for (int p = dc.min_p(); p <= dc.max_p(); ++p) {
      const Bidegree b{p, k - p};
      const dcx::Matrix& a = dc.del(b);
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) d[tgt.at(p + 1) + r][src.at(p) + c] += a.at(r, c);
      }
      const dcx::Matrix& e = dc.delbar(b);
      for (std::size_t r = 0; r < e.rows(); ++r) {
        for (std::size_t c = 0; c < e.cols(); ++c) d[tgt.at(p) + r][src.at(p) + c] += e.at(r, c);
      }
    }
    rank_d[k] = rank(d);
  }
  for (int k = lo; k <= hi; ++k) {
    const std::size_t n = offsets(k).at(dc.max_p() + 1);
    const std::size_t in = rank_d.count(k - 1) ? rank_d[k - 1] : 0;
    t.de_rham[k] = n - rank_d[k] - in;
  }
  return t;
}

}  // namespace oracle
