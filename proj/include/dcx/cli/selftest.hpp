#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"

namespace dcx::cli {

struct SelftestResult {
  std::vector<std::string> lines;
  std::size_t failures = 0;
  /// First failing complex, for replay.
  std::optional<DoubleComplex> counterexample;
};

/// Seeds seed .. seed + samples - 1. Every sample is a shuffled sum of dots,
/// lines and squares; every tenth also carries a wedge and must classify
/// page-1 false. Every fourth sample also builds a random solvable complex.
/// Checks: the three page-1 routes agree and match the expectation, and
/// decompose recovers the generating parts.
SelftestResult run_selftest(std::uint64_t seed, std::size_t samples);

}  // namespace dcx::cli
