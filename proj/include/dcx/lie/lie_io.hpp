#pragma once

#include <istream>
#include <string>

#include "dcx/lie/lie.hpp"
#include "dcx/text.hpp"

namespace dcx {

/// `dim <n>` followed by `bracket <i> <j> <k> <scalar>` lines (0-based, i < j).
LieAlgebra parse_lie(std::istream& in);
LieAlgebra parse_lie_string(const std::string& text);
/// Applies `dim`/`bracket` lines to an algebra; other keywords are returned
/// untouched so that richer formats can embed a Lie algebra block.
std::vector<text::Line> read_lie_lines(const std::vector<text::Line>& lines, LieAlgebra& g);
std::string write_lie(const LieAlgebra& g);

/// `gen <scalar> ... <scalar>` rows, each of length dim g.
Subalgebra parse_subalgebra(std::istream& in, std::size_t dim);
std::string write_subalgebra(const Subalgebra& k);

}  // namespace dcx
