#include "dcx/cli/selftest.hpp"

#include "dcx/error.hpp"
#include "dcx/solv/solv.hpp"
#include "dcx/spectral/spectral.hpp"
#include "dcx/zigzag/zigzag.hpp"

namespace dcx::cli {

namespace {

std::string boolean(bool b) { return b ? "true" : "false"; }

// Empty string on success, otherwise the first failed check.
std::string check_sum(const DoubleComplex& dc, const std::vector<Part>& parts, bool expected,
                      bool& page1) {
  const Classification c = classify(dc);
  const Decomposition d = decompose(dc);
  page1 = c.verdict.page1_by_definition;
  if (c.verdict.page1_by_dims != page1) return "dimension route disagrees";
  if (page1_by_shape(d) != page1) return "shape route disagrees";
  if (d.parts != normalize_parts(parts)) return "decomposition differs from generating parts";
  if (page1 != expected) return "unexpected page-1 verdict";
  return {};
}

std::string check_solvable(std::uint64_t seed, std::size_t n, bool& page1) {
  const SolvData sd = random_solvable(seed, n);
  const BicomplexWithReal b = build_C(sd);
  ClassifyOptions options;
  options.real = &b.real;
  const Classification c = classify(b.complex, options);
  page1 = c.verdict.page1_by_definition;
  if (!page1) return "solvable complex is not page-1";
  if (!page1_by_shape(decompose(b.complex))) return "solvable complex shape route disagrees";
  const BicomplexWithReal inv = invariant_bicomplex(sd.g);
  const Classification ci = classify(inv.complex, {&inv.real, false});
  if (ci.verdict.e1_degenerate != sd.g.is_abelian()) return "E1 degeneration differs from abelian";
  return {};
}

}  // namespace

SelftestResult run_selftest(std::uint64_t seed, std::size_t samples) {
  SelftestResult out;
  ShapeOptions shapes;
  shapes.max_parts = 5;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t s = seed + i;
    const bool wedge = i % 10 == 9;
    std::vector<Part> parts = random_page1_complex(s, shapes).parts;
    if (wedge) parts.push_back({Indecomposable::wedge({static_cast<int>(s % 3), 1}), 1});
    const DoubleComplex dc = shuffle_basis(model_complex(parts), s);
    bool page1 = false;
    std::string failure;
    try {
      failure = check_sum(dc, parts, !wedge, page1);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    out.lines.push_back("sample " + std::to_string(s) + (wedge ? " wedge" : " page1") + " page1 " +
                        boolean(page1) + (failure.empty() ? " ok" : " FAIL " + failure));
    if (!failure.empty()) {
      ++out.failures;
      if (!out.counterexample) out.counterexample = dc;
    }
    if (i % 4 != 0) continue;
    const std::size_t n = 1 + (i / 4) % 4;
    failure.clear();
    try {
      failure = check_solvable(s, n, page1);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    out.lines.push_back("solvable " + std::to_string(s) + " dim " + std::to_string(n) + " page1 " +
                        boolean(page1) + (failure.empty() ? " ok" : " FAIL " + failure));
    if (!failure.empty()) {
      ++out.failures;
      if (!out.counterexample) {
        try {
          out.counterexample = build_C(random_solvable(s, n)).complex;
        } catch (const std::exception&) {
          // Construction itself failed; the report line carries the reason.
        }
      }
    }
  }
  out.lines.push_back("selftest samples " + std::to_string(samples) + " failures " +
                      std::to_string(out.failures));
  return out;
}

}  // namespace dcx::cli
