// Times the OpenMP kernels against their serial references.
// Usage: dcx_bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "dcx/lie/lie.hpp"
#include "dcx/solv/solv.hpp"
#include "dcx/spectral/spectral.hpp"

namespace {

double time_ms(const std::function<void()>& f, int repeats) {
  double best = 1e300;
  for (int k = 0; k < repeats; ++k) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

dcx::Matrix random_sparse(std::size_t rows, std::size_t cols, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto factor = [&](std::size_t r, std::size_t c) {
    dcx::Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (int t = 0; t < 3; ++t) m.set(i, rng() % c, dcx::Scalar(static_cast<long>(rng() % 7) - 3));
    }
    return m;
  };
  return factor(rows, rank) * factor(rank, cols);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-28s %12s %12s %8s\n", "kernel", "parallel_ms", "serial_ms", "agree");

  for (std::size_t n : {60, 150, 300}) {
    const dcx::Matrix m = random_sparse(n, n, n / 2, n);
    dcx::RrefResult fast, ref;
    const double tf = time_ms([&] { fast = dcx::rref(m); }, repeats);
    const double ts = time_ms([&] { ref = dcx::rref_reference(m); }, repeats);
    const bool agree = fast.reduced == ref.reduced && fast.pivots == ref.pivots;
    std::printf("rref %3zux%-3zu rank %-10zu %12.2f %12.2f %8s\n", n, n, fast.rank(), tf, ts, agree ? "yes" : "NO");
  }

  struct Case {
    const char* name;
    dcx::DoubleComplex dc;
  };
  std::vector<Case> cases{{"sl2 invariant", dcx::invariant_bicomplex(dcx::sl2()).complex},
                          {"nakamura real", dcx::build_C(dcx::nakamura_preset(dcx::NakamuraCase::real)).complex},
                          {"random solvable n=4", dcx::build_C(dcx::random_solvable(3, 4)).complex}};
  for (const auto& c : cases) {
    dcx::SpectralSequence fast, ref;
    const double tf = time_ms([&] { fast = dcx::spectral_sequence(c.dc, dcx::Filtration::column); }, repeats);
    const double ts = time_ms([&] { ref = dcx::spectral_sequence_reference(c.dc, dcx::Filtration::column); }, repeats);
    bool agree = fast.pages.size() == ref.pages.size();
    for (std::size_t k = 0; agree && k < fast.pages.size(); ++k) {
      agree = fast.pages[k].dims == ref.pages[k].dims && fast.pages[k].dr_ranks == ref.pages[k].dr_ranks;
    }
    std::printf("fss %-24s %12.2f %12.2f %8s\n", c.name, tf, ts, agree ? "yes" : "NO");
  }
  return 0;
}
