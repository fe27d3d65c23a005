#include "doctest.h"
#include "dcx/error.hpp"
#include "dcx/lie/lie.hpp"
#include "dcx/solv/solv.hpp"
#include "dcx/solv/solv_io.hpp"
#include "dcx/spectral/spectral.hpp"
#include "dcx/zigzag/zigzag.hpp"
#include "oracle.hpp"

using dcx::Bidegree;
using dcx::Character;
using dcx::GammaFlags;
using dcx::Mask;
using dcx::Scalar;
using dcx::SolvData;
using dcx::Vector;

namespace {

using SolvMode = GammaFlags<Mask>::Mode;

std::size_t h01(const dcx::DoubleComplex& dc) { return dcx::dolbeault(dc).at({0, 1}); }

void check_page1_all_routes(const dcx::BicomplexWithReal& built) {
  REQUIRE(dcx::validate(built.complex).ok);
  CHECK(dcx::check_real_structure(built.complex, built.real));
  dcx::ClassifyOptions opts;
  opts.real = &built.real;
  const auto c = dcx::classify(built.complex, opts);
  CHECK(c.verdict.page1_by_definition);
  CHECK(c.verdict.page1_by_dims);
  CHECK(dcx::page1_by_shape(dcx::decompose(built.complex)));
}

}  // namespace

TEST_SUITE("solv") {

TEST_CASE("characters") {
  const Character a{{Scalar(1)}, {Scalar(2, 1)}};
  CHECK_FALSE(a.is_holomorphic());
  CHECK((a * a.inverse()).is_trivial());
  CHECK(a.conj().conj() == a);
  const Character beta = dcx::unitary_holomorphic_part(a);
  const Character gamma = dcx::unitary_antiholomorphic_part(a);
  CHECK(beta.is_unitary());
  CHECK(gamma.is_unitary());
  CHECK((a * beta.inverse()).is_holomorphic());
  CHECK((a.conj() * gamma.inverse()).is_holomorphic());
  CHECK(Character{{Scalar(0, 1)}, {Scalar(0, 1)}}.is_unitary());
}

TEST_CASE("nakamura presets") {
  const SolvData id = dcx::nakamura_preset(dcx::NakamuraCase::identically);
  CHECK(dcx::flag(id, 0b110));
  CHECK_FALSE(dcx::flag(id, 0b010));
  const SolvData real = dcx::nakamura_preset(dcx::NakamuraCase::real);
  CHECK(dcx::flag(real, 0b010));

  const auto c_id = dcx::build_C(id);
  const auto c_real = dcx::build_C(real);
  CHECK(dcx::validate(c_id.complex).ok);
  CHECK(dcx::validate(c_real.complex).ok);
  CHECK(h01(c_id.complex) == 1);
  CHECK(h01(c_real.complex) == 3);
  // Oracle for the two values.
  CHECK(oracle::tables(c_id.complex).dolbeault.at({0, 1}) == 1);
  CHECK(oracle::tables(c_real.complex).dolbeault.at({0, 1}) == 3);
  check_page1_all_routes(c_id);
  check_page1_all_routes(c_real);
  CHECK_FALSE(dcx::classify(c_real.complex).verdict.ddbar_lemma);
}

TEST_CASE("abelian with all flags is the invariant bicomplex") {
  SolvData sd;
  sd.g = dcx::abelian_algebra(2);
  sd.weights.assign(2, Vector(2));
  sd.flags.mode = SolvMode::all;
  const auto built = dcx::build_C(sd);
  const auto inv = dcx::invariant_bicomplex(sd.g);
  CHECK(built.complex == inv.complex);
}

TEST_CASE("nilpotent with identically trivial flags is the invariant bicomplex") {
  SolvData sd;
  sd.g = dcx::heisenberg3();
  sd.weights.assign(3, Vector(3));
  const auto built = dcx::build_C(sd);
  const auto inv = dcx::invariant_bicomplex(sd.g);
  CHECK(built.complex == inv.complex);
  CHECK(built.real.sigma == inv.real.sigma);

  std::size_t nilpotent_seen = 0;
  for (std::uint64_t seed = 0; seed < 80 && nilpotent_seen < 5; ++seed) {
    SolvData r = dcx::random_solvable(seed, 2 + seed % 3);
    if (!dcx::is_nilpotent(r.g)) continue;
    ++nilpotent_seen;
    r.flags = {};
    CHECK(dcx::build_C(r).complex == dcx::invariant_bicomplex(r.g).complex);
  }
  CHECK(nilpotent_seen > 0);
}

TEST_CASE("validation") {
  SolvData sl2;
  sl2.g = dcx::sl2();
  sl2.weights.assign(3, Vector(3));
  CHECK_THROWS_AS(dcx::validate_solv(sl2), dcx::ValidationError);

  SolvData missing = dcx::nakamura_preset(dcx::NakamuraCase::identically);
  missing.flags.mode = SolvMode::listed;
  missing.flags.listed = {0b000, 0b001};
  CHECK_THROWS_AS(dcx::build_C(missing), dcx::ValidationError);

  SolvData not_closed = dcx::nakamura_preset(dcx::NakamuraCase::identically);
  not_closed.flags.mode = SolvMode::listed;
  not_closed.flags.listed = {0b000, 0b001, 0b110, 0b111, 0b010};
  CHECK_THROWS_AS(dcx::validate_solv(not_closed), dcx::ValidationError);

  SolvData wrong_weight = dcx::nakamura_preset(dcx::NakamuraCase::real);
  wrong_weight.weights[1][0] = Scalar(2);
  CHECK_THROWS_AS(dcx::validate_solv(wrong_weight), dcx::ValidationError);
}

TEST_CASE("random solvable data") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SolvData one = dcx::random_solvable(seed, 1);
    CHECK(one.g.is_abelian());
    for (std::size_t n = 1; n <= 4; ++n) {
      const SolvData sd = dcx::random_solvable(seed, n);
      CHECK(dcx::validate_lie(sd.g).ok);
      CHECK(dcx::is_solvable(sd.g));
      dcx::validate_solv(sd);
      const Mask full = (Mask{1} << n) - 1;
      SolvData identically = sd;
      identically.flags = {};
      for (Mask s = 0; s <= full; ++s) {
        if (dcx::flag(identically, s)) CHECK(dcx::flag(sd, s));
      }
    }
  }
  CHECK_THROWS_AS(dcx::random_solvable(0, 7), std::invalid_argument);
}

TEST_CASE("page-1 on random solvable builds") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto built = dcx::build_C(dcx::random_solvable(seed, 1 + seed % 4));
    check_page1_all_routes(built);
    const auto dbar = dcx::dolbeault(built.complex);
    const auto del = dcx::del_cohomology(built.complex);
    for (const Bidegree b : built.complex.support()) CHECK(dbar.at(b) == del.at(b.transposed()));
  }
}

TEST_CASE("lattice monotonicity") {
  std::size_t listed_seen = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SolvData sd = dcx::random_solvable(seed, 2 + seed % 3);
    if (sd.flags.mode != SolvMode::listed) continue;
    ++listed_seen;
    SolvData smaller = sd;
    smaller.flags = {};
    SolvData larger = sd;
    larger.flags.mode = SolvMode::all;
    const auto h_small = dcx::dolbeault(dcx::build_C(smaller).complex);
    const auto h_mid = dcx::dolbeault(dcx::build_C(sd).complex);
    const auto h_large = dcx::dolbeault(dcx::build_C(larger).complex);
    for (const auto& [b, d] : h_small.dims) CHECK(d <= h_mid.at(b));
    for (const auto& [b, d] : h_mid.dims) CHECK(d <= h_large.at(b));
  }
  CHECK(listed_seen > 0);
}

TEST_CASE("splitting presets") {
  const auto id = dcx::build_splitting(dcx::splitting_preset(dcx::SplittingCase::identically));
  const auto real = dcx::build_splitting(dcx::splitting_preset(dcx::SplittingCase::real));
  check_page1_all_routes(id);
  check_page1_all_routes(real);
  auto h0 = [](const dcx::DoubleComplex& dc) {
    std::size_t s = 0;
    for (const auto& [b, d] : dcx::dolbeault(dc).dims) {
      if (b.p == 0) s += d;
    }
    return s;
  };
  CHECK(h0(id.complex) < h0(real.complex));
  CHECK_FALSE(dcx::classify(real.complex).verdict.ddbar_lemma);
}

TEST_CASE("splitting without a nilpotent factor") {
  dcx::SplittingData sp;
  sp.n_abelian = 2;
  sp.flags.mode = GammaFlags<std::pair<Mask, Mask>>::Mode::all;
  const auto built = dcx::build_splitting(sp);
  CHECK(built.complex == dcx::invariant_bicomplex(dcx::abelian_algebra(2)).complex);
}

TEST_CASE("random splittings") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto sp = dcx::random_splitting(seed);
    dcx::validate_splitting(sp);
    check_page1_all_routes(dcx::build_splitting(sp));
  }
}

TEST_CASE("file formats") {
  const SolvData sd = dcx::parse_solv_string(
      "dim 3\nbracket 0 1 1 1\nbracket 0 2 2 -1\nweight 1 0 1\nweight 2 0 -1\ngamma_trivial { 1 2 }\ngamma_trivial { }\ngamma_trivial { 0 }\ngamma_trivial { 0 1 2 }\n");
  CHECK(sd.flags.mode == SolvMode::listed);
  CHECK(dcx::flag(sd, 0b110));
  CHECK(dcx::flag(sd, 0));
  dcx::validate_solv(sd);
  const SolvData again = dcx::parse_solv_string(dcx::write_solv(sd));
  CHECK(again.g == sd.g);
  CHECK(again.weights == sd.weights);
  CHECK(again.flags == sd.flags);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SolvData r = dcx::random_solvable(seed, 3);
    const SolvData back = dcx::parse_solv_string(dcx::write_solv(r));
    CHECK(back.g == r.g);
    CHECK(back.weights == r.weights);
    CHECK(back.flags == r.flags);
    const auto sp = dcx::random_splitting(seed);
    CHECK(dcx::write_splitting(dcx::parse_splitting_string(dcx::write_splitting(sp))) == dcx::write_splitting(sp));
  }
  CHECK_THROWS_AS(dcx::parse_solv_string("dim 2\nweight 5 0 1\n"), dcx::ParseError);
  CHECK_THROWS_AS(dcx::parse_solv_string("dim 2\ngamma_trivial sometimes\n"), dcx::ParseError);
}

}
