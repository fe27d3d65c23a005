#pragma once

// Hand-built micro complexes and small random inputs shared by the tests.

#include <random>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"

namespace fixture {

/// Drops zero entries, for comparing tables with literal expectations.
inline std::map<dcx::Bidegree, std::size_t> nonzero(const std::map<dcx::Bidegree, std::size_t>& dims) {
  std::map<dcx::Bidegree, std::size_t> out;
  for (const auto& [b, d] : dims) {
    if (d != 0) out[b] = d;
  }
  return out;
}

inline dcx::Matrix entry(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c,
                         const dcx::Scalar& v) {
  dcx::Matrix m(rows, cols);
  m.set(r, c, v);
  return m;
}

inline dcx::DoubleComplex dot(dcx::Bidegree b) {
  dcx::DoubleComplex dc;
  dc.set_space(b, 1);
  return dc;
}

/// a at (0,0) with del a at (1,0).
inline dcx::DoubleComplex del_line() {
  dcx::DoubleComplex dc;
  dc.set_space({0, 0}, 1);
  dc.set_space({1, 0}, 1);
  dc.set_del({0, 0}, entry(1, 1, 0, 0, 1));
  return dc;
}

/// a at (0,0) with delbar a at (0,1).
inline dcx::DoubleComplex delbar_line() {
  dcx::DoubleComplex dc;
  dc.set_space({0, 0}, 1);
  dc.set_space({0, 1}, 1);
  dc.set_delbar({0, 0}, entry(1, 1, 0, 0, 1));
  return dc;
}

/// Generator a at (0,0); del delbar a = 1, so delbar del a = -1.
/// `commuting` flips the second sign and breaks anticommutation.
inline dcx::DoubleComplex square(bool commuting = false) {
  dcx::DoubleComplex dc;
  for (dcx::Bidegree b : {dcx::Bidegree{0, 0}, {1, 0}, {0, 1}, {1, 1}}) dc.set_space(b, 1);
  dc.set_del({0, 0}, entry(1, 1, 0, 0, 1));
  dc.set_delbar({0, 0}, entry(1, 1, 0, 0, 1));
  dc.set_del({0, 1}, entry(1, 1, 0, 0, 1));
  dc.set_delbar({1, 0}, entry(1, 1, 0, 0, commuting ? 1 : -1));
  return dc;
}

/// a at (0,0) with del a and delbar a nonzero, del delbar a = 0.
inline dcx::DoubleComplex wedge() {
  dcx::DoubleComplex dc;
  dc.set_space({0, 0}, 1);
  dc.set_space({1, 0}, 1);
  dc.set_space({0, 1}, 1);
  dc.set_del({0, 0}, entry(1, 1, 0, 0, 1));
  dc.set_delbar({0, 0}, entry(1, 1, 0, 0, 1));
  return dc;
}

inline dcx::Scalar random_scalar(std::mt19937_64& rng, bool complex = true) {
  std::uniform_int_distribution<int> small(-3, 3);
  const long re = small(rng);
  const long im = complex && rng() % 3 == 0 ? small(rng) : 0;
  return dcx::Scalar(mpq_class(re, 1 + rng() % 2), mpq_class(im));
}

/// Sparse-ish random matrix; every entry nonzero with probability `density`.
inline dcx::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                 double density = 0.5) {
  std::bernoulli_distribution keep(density);
  dcx::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep(rng)) m.set(r, c, random_scalar(rng));
    }
  }
  return m;
}

/// Matrix of the given rank: a product of random rows x rank and rank x cols.
inline dcx::Matrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                   std::size_t rank) {
  return random_matrix(rng, rows, rank, 0.7) * random_matrix(rng, rank, cols, 0.7);
}

/// Random bounded simple complex: a direct sum of shifted copies of
/// (C -> C) and C, conjugated per degree by random invertible maps.
inline dcx::SimpleComplex random_simple(std::mt19937_64& rng, int max_degree = 2) {
  dcx::SimpleComplex c;
  std::vector<std::pair<int, bool>> summands;  // (degree, is_arrow)
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < count; ++k) {
    const int deg = static_cast<int>(rng() % (max_degree + 1));
    const bool arrow = deg < max_degree && rng() % 2 == 0;
    summands.push_back({deg, arrow});
  }
  for (auto [deg, arrow] : summands) {
    c.dims[deg] += 1;
    if (arrow) c.dims[deg + 1] += 1;
  }
  std::map<int, std::size_t> used;
  std::map<int, dcx::Matrix> d;
  for (auto& [k, n] : c.dims) d[k] = dcx::Matrix(c.dims.count(k + 1) ? c.dims[k + 1] : 0, n);
  for (auto [deg, arrow] : summands) {
    const std::size_t src = used[deg]++;
    if (arrow) {
      const std::size_t tgt = used[deg + 1]++;
      d[deg].set(tgt, src, dcx::Scalar(1));
    }
  }
  // Conjugate by upper unitriangular changes of basis with random entries.
  std::map<int, dcx::Matrix> g, g_inv;
  for (auto& [k, n] : c.dims) {
    dcx::Matrix u = dcx::Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) u.set(i, j, random_scalar(rng));
    }
    g[k] = u;
    g_inv[k] = dcx::inverse(u);
  }
  for (auto& [k, m] : d) {
    if (m.rows() == 0 || m.cols() == 0) continue;
    c.d[k] = g[k + 1] * m * g_inv[k];
  }
  return c;
}

}  // namespace fixture
