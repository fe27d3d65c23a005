#pragma once

#include <istream>
#include <string>

#include "dcx/solv/solv.hpp"

namespace dcx {

/// Lie algebra lines, `weight <i> <j> <scalar>` (a_i(X_j), 0-based) and
/// `gamma_trivial all | identically | { <i> ... }`. Without any
/// `gamma_trivial` line the flags are `identically`.
SolvData parse_solv(std::istream& in);
SolvData parse_solv_string(const std::string& text);
std::string write_solv(const SolvData& sd);

/// `abelian <n>`, a `dim`/`bracket` block for the nilpotent factor,
/// `phi <j> <hol_1..hol_n> <antihol_1..antihol_n>` and
/// `gamma_trivial all | identically | <J>;<L>` with comma-separated index lists.
SplittingData parse_splitting(std::istream& in);
SplittingData parse_splitting_string(const std::string& text);
std::string write_splitting(const SplittingData& sp);

}  // namespace dcx
