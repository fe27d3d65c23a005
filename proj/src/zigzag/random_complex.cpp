#include <random>

#include "dcx/error.hpp"
#include "dcx/zigzag/zigzag.hpp"

namespace dcx {

namespace {

Matrix unimodular(std::size_t n, std::mt19937_64& rng) {
  Matrix u = Matrix::identity(n);
  if (n == 0) return u;
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = index(rng);
    const std::size_t j = index(rng);
    if (i == j) {
      if (flip(rng)) {
        std::vector<MatrixEntry> row(u.row(i).begin(), u.row(i).end());
        for (auto& e : row) e.value = -e.value;
        u.set_row(i, std::move(row));
      }
      continue;
    }
    const Scalar c(coeff(rng));
    if (c.is_zero()) continue;
    for (const auto& e : std::vector<MatrixEntry>(u.row(j).begin(), u.row(j).end())) {
      u.add_to(i, e.col, c * e.value);
    }
  }
  return u;
}

}  // namespace

Matrix random_unimodular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return unimodular(n, rng);
}

DoubleComplex shuffle_basis(const DoubleComplex& dc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<Bidegree, Matrix> u, u_inv;
  for (Bidegree b : dc.support()) {
    u[b] = unimodular(dc.dim(b), rng);
    u_inv[b] = inverse(u[b]);
  }
  DoubleComplex out;
  for (Bidegree b : dc.support()) out.set_space(b, dc.dim(b));
  for (Bidegree b : dc.support()) {
    const Bidegree right{b.p + 1, b.q};
    const Bidegree up{b.p, b.q + 1};
    if (dc.dim(right) > 0) {
      Matrix d = u[right] * dc.del(b) * u_inv[b];
      if (!d.is_zero()) out.set_del(b, std::move(d));
    }
    if (dc.dim(up) > 0) {
      Matrix d = u[up] * dc.delbar(b) * u_inv[b];
      if (!d.is_zero()) out.set_delbar(b, std::move(d));
    }
  }
  return out;
}

RandomSum random_zigzag_sum(std::uint64_t seed, const ShapeOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<int> kinds;
  if (options.dots) kinds.push_back(0);
  if (options.lines) kinds.push_back(1);
  if (options.squares) kinds.push_back(2);
  if (options.long_zigzags && options.max_length >= 3) kinds.push_back(3);
  if (kinds.empty()) throw StructuralError("no shapes allowed");
  std::uniform_int_distribution<std::size_t> count(options.min_parts, options.max_parts);
  std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
  std::uniform_int_distribution<int> coord(0, options.grid);
  std::uniform_int_distribution<std::size_t> long_length(3, std::max<std::size_t>(3, options.max_length));
  std::bernoulli_distribution coin(0.5);

  std::vector<Part> parts;
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    const Bidegree start{coord(rng), coord(rng)};
    const Step first = coin(rng) ? Step::del : Step::delbar;
    switch (kinds[pick(rng)]) {
      case 0: parts.push_back({Indecomposable::dot(start), 1}); break;
      case 1: parts.push_back({Indecomposable::zigzag(start, 2, first), 1}); break;
      case 2: parts.push_back({Indecomposable::square(start), 1}); break;
      default: parts.push_back({Indecomposable::zigzag(start, long_length(rng), first), 1}); break;
    }
  }
  RandomSum out;
  out.parts = normalize_parts(std::move(parts));
  out.complex = shuffle_basis(model_complex(out.parts), rng());
  return out;
}

RandomSum random_page1_complex(std::uint64_t seed, const ShapeOptions& options) {
  ShapeOptions page1 = options;
  page1.long_zigzags = false;
  return random_zigzag_sum(seed, page1);
}

}  // namespace dcx
