#include "doctest.h"
#include "dcx/error.hpp"
#include "dcx/lie/lie.hpp"
#include "dcx/solv/solv.hpp"
#include "dcx/spectral/spectral.hpp"
#include "dcx/zigzag/zigzag.hpp"
#include "fixtures.hpp"

using dcx::Bidegree;
using dcx::DoubleComplex;
using dcx::Filtration;

namespace {

void check_same_sequence(const dcx::SpectralSequence& a, const dcx::SpectralSequence& b) {
  REQUIRE(a.pages.size() == b.pages.size());
  CHECK(a.degeneration_page == b.degeneration_page);
  for (std::size_t k = 0; k < a.pages.size(); ++k) {
    CHECK(a.pages[k].dims == b.pages[k].dims);
    CHECK(a.pages[k].dr_ranks == b.pages[k].dr_ranks);
  }
}

void check_sequence_laws(const DoubleComplex& dc, const dcx::SpectralSequence& s) {
  const auto dr = dcx::de_rham(dc);
  for (const auto& [k, h] : dr.dims) CHECK(s.limit().total(k) == h);
  for (std::size_t k = 0; k + 1 < s.pages.size(); ++k) {
    const auto& cur = s.pages[k];
    const auto& next = s.pages[k + 1];
    for (const auto& [b, d] : next.dims) CHECK(d <= cur.at(b));
  }
}

DoubleComplex sum_of(std::initializer_list<DoubleComplex> parts) {
  DoubleComplex out;
  for (const auto& p : parts) out = dcx::direct_sum(out, p);
  return out;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("dot degenerates at page 1") {
  const auto s = dcx::spectral_sequence(fixture::dot({2, 1}), Filtration::column);
  CHECK(s.degeneration_page == 1);
  CHECK(s.pages.front().dims == s.limit().dims);
}

TEST_CASE("abelian invariant bicomplex") {
  const auto inv = dcx::invariant_bicomplex(dcx::abelian_algebra(1));
  const auto s = dcx::spectral_sequence(inv.complex, Filtration::column);
  CHECK(s.degeneration_page == 1);
  const std::map<Bidegree, std::size_t> ones{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  CHECK(fixture::nonzero(s.pages.front().dims) == ones);
}

TEST_CASE("heisenberg invariant bicomplex degenerates at page 2") {
  const auto inv = dcx::invariant_bicomplex(dcx::heisenberg3());
  const auto s = dcx::spectral_sequence(inv.complex, Filtration::column);
  CHECK(s.degeneration_page == 2);
  CHECK(s.pages.at(0).total(1) == 5);
  CHECK(s.pages.at(1).total(1) == 4);
  CHECK(s.pages.at(0).at({1, 0}) == 3);
  CHECK(s.pages.at(0).at({0, 1}) == 2);
}

TEST_CASE("fast engine matches the subspace reference") {
  std::vector<DoubleComplex> cases{fixture::wedge(), fixture::square(), fixture::del_line()};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    dcx::ShapeOptions opts;
    opts.long_zigzags = true;
    opts.max_parts = 4;
    cases.push_back(dcx::shuffle_basis(dcx::random_zigzag_sum(seed, opts).complex, seed));
  }
  for (const auto& name : dcx::lie_catalog_names()) cases.push_back(dcx::invariant_bicomplex(dcx::lie_catalog(name)).complex);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    cases.push_back(dcx::build_C(dcx::random_solvable(seed, 1 + seed % 3)).complex);
  }
  for (const auto& dc : cases) {
    for (auto f : {Filtration::column, Filtration::row}) {
      const auto fast = dcx::spectral_sequence(dc, f);
      check_same_sequence(fast, dcx::spectral_sequence_reference(dc, f));
      check_sequence_laws(dc, fast);
    }
  }
}

TEST_CASE("E1 equals the one-page tables") {
  const auto inv = dcx::invariant_bicomplex(dcx::sl2());
  const auto col = dcx::spectral_sequence(inv.complex, Filtration::column);
  const auto row = dcx::spectral_sequence(inv.complex, Filtration::row);
  CHECK(fixture::nonzero(col.pages.front().dims) == fixture::nonzero(dcx::dolbeault(inv.complex).dims));
  CHECK(fixture::nonzero(row.pages.front().dims) == fixture::nonzero(dcx::del_cohomology(inv.complex).dims));
}

TEST_CASE("mirrored row sequence equals the independent one") {
  for (const auto& name : dcx::lie_catalog_names()) {
    const auto inv = dcx::invariant_bicomplex(dcx::lie_catalog(name));
    const auto mirrored = dcx::spectral_sequences(inv.complex, &inv.real, false);
    const auto independent = dcx::spectral_sequences(inv.complex, &inv.real, true);
    check_same_sequence(mirrored.second, independent.second);
  }
}

TEST_CASE("hodge pieces") {
  const auto dot = dcx::hodge_pieces(fixture::dot({1, 2}));
  CHECK(fixture::nonzero(dot.dims) == std::map<Bidegree, std::size_t>{{{1, 2}, 1}});
  CHECK(dot.purity.at(3).pure);

  const auto wedge = dcx::hodge_pieces(fixture::wedge());
  CHECK(wedge.at({1, 0}) == 1);
  CHECK(wedge.at({0, 1}) == 1);
  CHECK(wedge.purity.at(1).piece_sum == 2);
  CHECK(wedge.purity.at(1).span_dim == 1);
  CHECK(wedge.purity.at(1).de_rham == 1);
  CHECK_FALSE(wedge.purity.at(1).direct);
  CHECK_FALSE(wedge.purity.at(1).pure);

  CHECK(fixture::nonzero(dcx::hodge_pieces(fixture::square()).dims).empty());
}

TEST_CASE("purity check") {
  for (const auto& [k, pure] : dcx::purity_check(sum_of({fixture::dot({0, 0}), fixture::dot({1, 0}), fixture::dot({1, 1})}))) {
    CHECK(pure);
  }
  CHECK_FALSE(dcx::purity_check(fixture::wedge()).at(1));
  for (const auto& [k, pure] : dcx::purity_check(fixture::del_line())) CHECK(pure);
}

TEST_CASE("classify micro complexes") {
  const auto mixed = dcx::classify(sum_of({fixture::dot({0, 0}), fixture::del_line(), fixture::square()}));
  CHECK(mixed.verdict.page1_by_definition);
  CHECK(mixed.verdict.page1_by_dims);
  CHECK_FALSE(mixed.verdict.ddbar_lemma);
  CHECK(mixed.verdict.degeneration_page_F == 2);

  const auto wedge = dcx::classify(fixture::wedge());
  CHECK_FALSE(wedge.verdict.page1_by_definition);
  CHECK_FALSE(wedge.verdict.page1_by_dims);
  CHECK(wedge.aeppli.total(0) + wedge.bott_chern.total(0) == 1);
  CHECK(wedge.dolbeault.total(0) + wedge.del.total(0) == 0);

  const auto sq = dcx::classify(fixture::square());
  CHECK(sq.verdict.ddbar_lemma);
  CHECK(sq.verdict.page1_by_definition);

  CHECK_THROWS_AS(dcx::classify(fixture::square(true)), dcx::ValidationError);
}

TEST_CASE("page-1 property on random dot, line and square sums") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    dcx::ShapeOptions opts;
    opts.max_parts = 4;
    const auto sample = dcx::random_page1_complex(seed, opts);
    const auto c = dcx::classify(sample.complex);
    CHECK(c.verdict.page1_by_definition);
    CHECK(c.verdict.page1_by_dims);
    if (c.verdict.ddbar_lemma) CHECK(c.verdict.page1_by_definition);
    if (seed % 20 == 0) {
      const auto with_wedge = dcx::classify(dcx::direct_sum(sample.complex, dcx::model_complex({{dcx::Indecomposable::wedge({1, 1}), 1}})));
      CHECK_FALSE(with_wedge.verdict.page1_by_definition);
      CHECK_FALSE(with_wedge.verdict.page1_by_dims);
    }
  }
}

TEST_CASE("E2 symmetry under a real structure with page-1") {
  for (const auto& name : dcx::lie_catalog_names()) {
    const auto inv = dcx::invariant_bicomplex(dcx::lie_catalog(name));
    dcx::ClassifyOptions opts;
    opts.real = &inv.real;
    const auto c = dcx::classify(inv.complex, opts);
    REQUIRE(c.verdict.page1_by_definition);
    const auto& e2 = c.column.pages.size() > 1 ? c.column.pages[1] : c.column.pages[0];
    for (const auto& [b, d] : e2.dims) CHECK(e2.at(b.transposed()) == d);
  }
}

TEST_CASE("verdict lines round trip") {
  auto v = dcx::classify(fixture::wedge()).verdict;
  v.page1_by_shape = false;
  CHECK(dcx::parse_verdict_lines(dcx::verdict_lines(v)) == v);
  v.page1_by_shape.reset();
  CHECK(dcx::parse_verdict_lines(dcx::verdict_lines(v)) == v);
  CHECK_THROWS(dcx::parse_verdict_lines({"nonsense 1"}));
}

}
