#include "dcx/lie/lie_io.hpp"

#include <set>
#include <sstream>

#include "dcx/error.hpp"

namespace dcx {

std::vector<text::Line> read_lie_lines(const std::vector<text::Line>& lines, LieAlgebra& g) {
  std::vector<text::Line> rest;
  const text::Line* dim_line = nullptr;
  std::vector<const text::Line*> brackets;
  for (const auto& line : lines) {
    if (line.keyword() == "dim") {
      line.expect_count(2);
      if (dim_line) line.fail(0, "dim given twice");
      dim_line = &line;
    } else if (line.keyword() == "bracket") {
      line.expect_at_least(5);
      brackets.push_back(&line);
    } else {
      rest.push_back(line);
    }
  }
  if (!dim_line) {
    const std::size_t at = lines.empty() ? 1 : lines.front().number;
    throw ParseError(at, 1, "missing 'dim <n>' line");
  }
  const std::size_t n = dim_line->count(1);
  if (n > 62) dim_line->fail(1, "dimension too large");
  g = LieAlgebra(n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto* line : brackets) {
    const std::size_t i = line->count(1);
    const std::size_t j = line->count(2);
    const std::size_t k = line->count(3);
    if (i >= n) line->fail(1, "index out of range");
    if (j >= n) line->fail(2, "index out of range");
    if (k >= n) line->fail(3, "index out of range");
    if (i >= j) line->fail(2, "bracket needs i < j");
    if (!seen.insert({i, j, k}).second) line->fail(1, "bracket given twice");
    g.set_bracket(i, j, k, line->trailing_scalar(4));
  }
  return rest;
}

LieAlgebra parse_lie(std::istream& in) {
  LieAlgebra g;
  const auto rest = read_lie_lines(text::tokenize(in), g);
  if (!rest.empty()) rest.front().fail(0, "unknown keyword '" + rest.front().keyword() + "'");
  return g;
}

LieAlgebra parse_lie_string(const std::string& text) {
  std::istringstream in(text);
  return parse_lie(in);
}

std::string write_lie(const LieAlgebra& g) {
  std::string out = "dim " + std::to_string(g.dim()) + "\n";
  for (const auto& [key, c] : g.constants()) {
    const auto [i, j, k] = key;
    out += "bracket " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) +
           " " + c.to_string() + "\n";
  }
  return out;
}

Subalgebra parse_subalgebra(std::istream& in, std::size_t dim) {
  std::vector<Vector> gens;
  for (const auto& line : text::tokenize(in)) {
    if (line.keyword() != "gen") line.fail(0, "unknown keyword '" + line.keyword() + "'");
    line.expect_count(dim + 1);
    Vector v;
    for (std::size_t k = 1; k <= dim; ++k) v.push_back(line.scalar(k));
    gens.push_back(std::move(v));
  }
  return {Matrix::from_columns(gens, dim)};
}

std::string write_subalgebra(const Subalgebra& k) {
  std::string out;
  for (std::size_t c = 0; c < k.inclusion.cols(); ++c) {
    out += "gen";
    for (const auto& s : k.inclusion.column(c)) out += " " + s.to_string();
    out += "\n";
  }
  return out;
}

}  // namespace dcx
