#include <random>

#include "doctest.h"
#include "dcx/error.hpp"
#include "dcx/exact/subspace.hpp"
#include "dcx/zigzag/zigzag.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using dcx::Matrix;
using dcx::Scalar;
using dcx::Subspace;
using dcx::Vector;

namespace {

Matrix dense(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<Vector> v;
  std::size_t cols = 0;
  for (auto r : rows) {
    v.emplace_back(r);
    cols = r.size();
  }
  return Matrix::from_dense(v, cols);
}

Vector e(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = Scalar(1);
  return v;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("scalar arithmetic") {
  const Scalar half = Scalar::rational(1, 2);
  CHECK((half + Scalar::i()) * (half - Scalar::i()) == Scalar::rational(5, 4));
  CHECK(Scalar(2, 3).conj() == Scalar(2, -3));
  CHECK(Scalar(1, 1).inv() == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(Scalar(7, -2).conj().conj() == Scalar(7, -2));
  CHECK_THROWS_AS(Scalar().inv(), dcx::DivisionByZero);
  CHECK_FALSE(Scalar().try_inv().has_value());
  CHECK_THROWS_AS(Scalar::rational(1, 0), dcx::DivisionByZero);
}

TEST_CASE("scalar field axioms on random values") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = fixture::random_scalar(rng);
    const Scalar b = fixture::random_scalar(rng);
    const Scalar c = fixture::random_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
  }
}

TEST_CASE("scalar literals") {
  CHECK(Scalar::parse("3/2") == Scalar::rational(3, 2));
  CHECK(Scalar::parse("-i") == Scalar(0, -1));
  CHECK(Scalar::parse("2-1/3i") == Scalar(mpq_class(2), mpq_class(-1, 3)));
  CHECK(Scalar::parse("2 + 1/3 i") == Scalar(mpq_class(2), mpq_class(1, 3)));
  CHECK(Scalar::parse("4/6") == Scalar::rational(2, 3));
  CHECK(Scalar(mpq_class(2), mpq_class(-1, 3)).to_string() == "2-1/3i");
  CHECK(Scalar(0, -1).to_string() == "-i");
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS(Scalar::parse("x"));
  CHECK_THROWS(Scalar::parse(""));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Scalar a = fixture::random_scalar(rng);
    CHECK(Scalar::parse(a.to_string()) == a);
  }
}

TEST_CASE("rref examples") {
  auto r = dcx::rref(dense({{1, 2}, {2, 4}}));
  CHECK(r.rank() == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});

  r = dcx::rref(Matrix::identity(3));
  CHECK(r.reduced == Matrix::identity(3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  CHECK(dcx::rank(dense({{Scalar::i(), 1}, {1, Scalar(0, -1)}})) == 1);
}

TEST_CASE("rref agrees with the serial reference and a naive rank") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % (k % 3 == 0 ? 90 : 12);
    const Matrix m = k % 2 == 0 ? fixture::random_matrix(rng, rows, cols, 0.3)
                                : fixture::random_low_rank(rng, rows, cols, 1 + rng() % 3);
    const auto fast = dcx::rref(m);
    const auto ref = dcx::rref_reference(m);
    CHECK(fast.reduced == ref.reduced);
    CHECK(fast.pivots == ref.pivots);
    CHECK(fast.rank() == oracle::rank(m));
    CHECK(dcx::rref(fast.reduced).reduced == fast.reduced);
  }
}

TEST_CASE("kernel and image") {
  CHECK(dcx::kernel(Matrix(2, 3)) == Subspace::whole(3));
  CHECK(dcx::image(Matrix::identity(2)) == Subspace::whole(2));
  const Subspace k = dcx::kernel(dense({{1, 1}}));
  CHECK(k == Subspace::span(2, {Vector{Scalar(1), Scalar(-1)}}));

  std::mt19937_64 rng(7);
  for (int n = 0; n < 40; ++n) {
    const Matrix m = fixture::random_low_rank(rng, 1 + rng() % 8, 1 + rng() % 8, 1 + rng() % 3);
    const Subspace ker = dcx::kernel(m);
    CHECK(ker.dim() + oracle::rank(m) == m.cols());
    for (const auto& v : ker.basis_vectors()) {
      for (const auto& x : m * v) CHECK(x.is_zero());
    }
    CHECK(dcx::image(m).dim() == oracle::rank(m));
  }
}

TEST_CASE("subspace sum, intersection and preimage") {
  CHECK(dcx::subspace_intersect(Subspace::span(2, {e(2, 0)}), Subspace::span(2, {e(2, 1)})).dim() == 0);
  CHECK(dcx::subspace_sum(Subspace::span(2, {e(2, 0)}), Subspace::span(2, {Vector{Scalar(1), Scalar(1)}})) ==
        Subspace::whole(2));
  CHECK(dcx::preimage(dense({{1, 0}}), Subspace(1)) == Subspace::span(2, {e(2, 1)}));
  CHECK_THROWS_AS(dcx::subspace_sum(Subspace(2), Subspace(3)), dcx::StructuralError);
}

TEST_CASE("dimension formula on random pairs") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 50; ++n) {
    const std::size_t amb = 2 + rng() % 6;
    const Subspace u = dcx::image(fixture::random_low_rank(rng, amb, 4, 1 + rng() % 3));
    const Subspace v = dcx::image(fixture::random_low_rank(rng, amb, 4, 1 + rng() % 3));
    const Subspace s = dcx::subspace_sum(u, v);
    const Subspace i = dcx::subspace_intersect(u, v);
    CHECK(u.dim() + v.dim() == s.dim() + i.dim());
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(s.contains(u));
    // Oracle for the sum: rank of the stacked spanning sets.
    CHECK(s.dim() == oracle::rank(u.basis_rows().vstack(v.basis_rows())));
  }
}

TEST_CASE("preimage property") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 30; ++n) {
    const Matrix m = fixture::random_matrix(rng, 4, 5, 0.5);
    const Subspace v = dcx::image(fixture::random_low_rank(rng, 4, 3, 1 + rng() % 2));
    const Subspace pre = dcx::preimage(m, v);
    for (const auto& x : pre.basis_vectors()) CHECK(v.contains(m * x));
    // dim preimage = dim ker m + dim (im m cap v).
    CHECK(pre.dim() == dcx::kernel(m).dim() + dcx::subspace_intersect(dcx::image(m), v).dim());
  }
}

TEST_CASE("canonical form is basis independent") {
  std::mt19937_64 rng(19);
  for (int n = 0; n < 40; ++n) {
    const std::size_t amb = 2 + rng() % 6;
    const std::size_t dim = 1 + rng() % amb;
    const Matrix basis = fixture::random_low_rank(rng, amb, dim, dim);
    const Matrix mix = dcx::random_unimodular(dim, rng());
    const Subspace a = Subspace::column_span(basis);
    const Subspace b = Subspace::column_span(basis * mix);
    CHECK(a == b);
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 30; ++n) {
    const std::size_t k = 1 + rng() % 5;
    Matrix m = fixture::random_matrix(rng, k, k, 0.8);
    if (oracle::rank(m) < k) continue;
    const Matrix inv = dcx::inverse(m);
    CHECK(m * inv == Matrix::identity(k));
    Vector b(k);
    for (auto& x : b) x = fixture::random_scalar(rng);
    const auto x = dcx::solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
  }
  CHECK_THROWS_AS(dcx::inverse(dense({{1, 2}, {2, 4}})), dcx::ValidationError);
  CHECK_FALSE(dcx::solve(dense({{1, 1}, {1, 1}}), Vector{Scalar(1), Scalar(2)}).has_value());
}

TEST_CASE("complement basis") {
  const Subspace w = Subspace::span(3, {e(3, 0)});
  const auto comp = dcx::complement_basis(Subspace::whole(3), w);
  CHECK(comp.size() == 2);
  CHECK(dcx::quotient_dim(Subspace::whole(3), w) == 2);
  CHECK_THROWS_AS(dcx::quotient_dim(w, Subspace::whole(3)), dcx::StructuralError);
}

}
