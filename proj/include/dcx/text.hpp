#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "dcx/exact/scalar.hpp"

namespace dcx::text {

struct Token {
  std::string text;
  std::size_t column = 1;
};

/// One non-empty input line with `#` comments removed.
struct Line {
  std::size_t number = 1;
  std::vector<Token> tokens;

  const std::string& keyword() const { return tokens.front().text; }
  /// Throws ParseError unless the line has exactly n tokens.
  void expect_count(std::size_t n) const;
  /// Throws ParseError unless the line has at least n tokens.
  void expect_at_least(std::size_t n) const;

  long integer(std::size_t index) const;
  std::size_t count(std::size_t index) const;
  Scalar scalar(std::size_t index) const;
  /// Tokens from `index` to the end joined, parsed as one scalar literal.
  Scalar trailing_scalar(std::size_t index) const;
  [[noreturn]] void fail(std::size_t index, const std::string& what) const;
};

std::vector<Line> tokenize(std::istream& in);
std::vector<Line> tokenize_string(const std::string& s);

/// "1,2,3" -> {1,2,3}; empty string -> {}.
std::vector<long> split_integers(const std::string& s, const Line& line, std::size_t index);

}  // namespace dcx::text
