#include "doctest.h"
#include "dcx/lie/lie.hpp"
#include "dcx/spectral/spectral.hpp"
#include "dcx/zigzag/zigzag.hpp"
#include "fixtures.hpp"

using dcx::Bidegree;
using dcx::Indecomposable;
using dcx::Part;
using dcx::Step;

TEST_SUITE("zigzag") {

TEST_CASE("shape factories") {
  const auto w = Indecomposable::wedge({0, 0});
  CHECK(w.length() == 3);
  CHECK(w.is_canonical());
  CHECK(Indecomposable::dot({1, 2}).is_dot());
  CHECK(Indecomposable::zigzag({0, 1}, 2, Step::delbar).is_line());
  CHECK(Indecomposable::square({0, 0}).length() == 4);
  const auto z = Indecomposable::zigzag({0, 2}, 4, Step::del);
  CHECK(z.bidegrees() == std::vector<Bidegree>{{0, 2}, {1, 2}, {1, 1}, {2, 1}});
}

TEST_CASE("model complexes match the hand-built ones") {
  CHECK(dcx::model_complex({{Indecomposable::dot({1, 1}), 1}}) == fixture::dot({1, 1}));
  const auto sq = dcx::model_complex({{Indecomposable::square({0, 0}), 1}});
  CHECK(dcx::validate(sq).ok);
  CHECK(dcx::classify(sq).verdict.ddbar_lemma);
}

TEST_CASE("decompose examples") {
  const auto sq = dcx::decompose(fixture::square());
  REQUIRE(sq.parts.size() == 1);
  CHECK(sq.parts[0].shape == Indecomposable::square({0, 0}));

  const auto w = dcx::decompose(fixture::wedge());
  REQUIRE(w.parts.size() == 1);
  CHECK(w.parts[0].shape.length() == 3);
  CHECK_FALSE(dcx::page1_by_shape(w));

  const auto iwasawa = dcx::decompose(dcx::invariant_bicomplex(dcx::heisenberg3()).complex);
  for (const auto& p : iwasawa.parts) {
    CHECK((p.shape.is_square() || p.shape.length() <= 2));
  }
  CHECK(dcx::page1_by_shape(iwasawa));
}

TEST_CASE("page1_by_shape examples") {
  CHECK(dcx::page1_by_shape(std::vector<Part>{{Indecomposable::dot({0, 0}), 1},
                                              {Indecomposable::zigzag({0, 0}, 2, Step::del), 1},
                                              {Indecomposable::square({1, 1}), 1}}));
  CHECK_FALSE(dcx::page1_by_shape(std::vector<Part>{{Indecomposable::dot({0, 0}), 1},
                                                    {Indecomposable::wedge({0, 0}), 1}}));
  CHECK(dcx::page1_by_shape(std::vector<Part>{}));
}

TEST_CASE("generator examples") {
  const auto three_dots = dcx::shuffle_basis(dcx::model_complex({{Indecomposable::dot({1, 0}), 3}}), 4);
  const auto d = dcx::decompose(three_dots);
  CHECK(d.parts == std::vector<Part>{{Indecomposable::dot({1, 0}), 3}});

  const auto sq_line = dcx::shuffle_basis(
      dcx::model_complex({{Indecomposable::square({0, 0}), 1}, {Indecomposable::zigzag({0, 0}, 2, Step::del), 1}}), 9);
  const auto v = dcx::classify(sq_line).verdict;
  CHECK(v.page1_by_definition);
  CHECK_FALSE(v.ddbar_lemma);

  const auto four = dcx::shuffle_basis(dcx::model_complex({{Indecomposable::zigzag({0, 1}, 4, Step::del), 1}}), 2);
  CHECK_FALSE(dcx::page1_by_shape(dcx::decompose(four)));
  CHECK_FALSE(dcx::classify(four).verdict.page1_by_dims);

}

TEST_CASE("generators are deterministic and valid") {
  dcx::ShapeOptions opts;
  opts.long_zigzags = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = dcx::random_zigzag_sum(seed, opts);
    const auto b = dcx::random_zigzag_sum(seed, opts);
    CHECK(a.complex == b.complex);
    CHECK(a.parts == b.parts);
    CHECK(dcx::validate(a.complex).ok);
    CHECK(dcx::shuffle_basis(a.complex, seed) == dcx::shuffle_basis(a.complex, seed));
    const auto u = dcx::random_unimodular(4, seed);
    CHECK(dcx::rank(u) == 4);
  }
}

TEST_CASE("round trip and route agreement") {
  dcx::ShapeOptions opts;
  opts.long_zigzags = true;
  opts.max_parts = 5;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto sample = dcx::random_zigzag_sum(seed, opts);
    const auto dc = dcx::shuffle_basis(sample.complex, seed + 7);
    const auto d = dcx::decompose(dc);
    CHECK(d.parts == dcx::normalize_parts(sample.parts));
    const auto v = dcx::classify(dc).verdict;
    CHECK(v.page1_by_definition == dcx::page1_by_shape(d));
    CHECK(v.page1_by_dims == dcx::page1_by_shape(d));
    for (auto f : {dcx::Flavor::dolbeault, dcx::Flavor::del, dcx::Flavor::bott_chern, dcx::Flavor::aeppli}) {
      CHECK(dcx::cohomology(d.model, f) == dcx::cohomology(dc, f));
    }
  }
}

TEST_CASE("change of basis conjugates into the model") {
  dcx::ShapeOptions opts;
  opts.long_zigzags = true;
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const auto dc = dcx::shuffle_basis(dcx::random_zigzag_sum(seed, opts).complex, seed);
    const auto d = dcx::decompose(dc);
    for (const Bidegree b : dc.support()) {
      const Bidegree right{b.p + 1, b.q};
      const Bidegree up{b.p, b.q + 1};
      const dcx::Matrix& pb = d.change_of_basis.at(b);
      if (dc.dim(right) > 0) CHECK(d.change_of_basis.at(right) * dc.del(b) == d.model.del(b) * pb);
      if (dc.dim(up) > 0) CHECK(d.change_of_basis.at(up) * dc.delbar(b) == d.model.delbar(b) * pb);
    }
  }
}

TEST_CASE("decomposition lines") {
  const auto lines = dcx::decomposition_lines(
      {{Indecomposable::square({0, 1}), 2}, {Indecomposable::zigzag({0, 1}, 3, Step::del), 1}});
  CHECK(lines == std::vector<std::string>{"square 0 1 2", "zigzag 1 0 1 del delbar"});
}

}
