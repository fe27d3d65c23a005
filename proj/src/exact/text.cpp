#include "dcx/text.hpp"

#include <charconv>
#include <sstream>

#include "dcx/error.hpp"

namespace dcx::text {

void Line::expect_count(std::size_t n) const {
  if (tokens.size() < n) fail(tokens.size(), "expected " + std::to_string(n) + " fields");
  if (tokens.size() > n) fail(n, "unexpected extra field");
}

void Line::expect_at_least(std::size_t n) const {
  if (tokens.size() < n) fail(tokens.size(), "expected at least " + std::to_string(n) + " fields");
}

void Line::fail(std::size_t index, const std::string& what) const {
  std::size_t column = 1;
  if (index < tokens.size()) {
    column = tokens[index].column;
  } else if (!tokens.empty()) {
    column = tokens.back().column + tokens.back().text.size();
  }
  throw ParseError(number, column, what);
}

long Line::integer(std::size_t index) const {
  if (index >= tokens.size()) fail(index, "missing integer");
  const std::string& s = tokens[index].text;
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(index, "expected integer, got '" + s + "'");
  return value;
}

std::size_t Line::count(std::size_t index) const {
  const long v = integer(index);
  if (v < 0) fail(index, "expected nonnegative integer");
  return static_cast<std::size_t>(v);
}

Scalar Line::scalar(std::size_t index) const {
  if (index >= tokens.size()) fail(index, "missing scalar");
  try {
    return Scalar::parse(tokens[index].text);
  } catch (const std::invalid_argument& e) {
    fail(index, std::string("bad scalar: ") + e.what());
  }
}

Scalar Line::trailing_scalar(std::size_t index) const {
  if (index >= tokens.size()) fail(index, "missing scalar");
  std::string joined;
  for (std::size_t k = index; k < tokens.size(); ++k) joined += tokens[k].text;
  try {
    return Scalar::parse(joined);
  } catch (const std::invalid_argument& e) {
    fail(index, std::string("bad scalar: ") + e.what());
  }
}

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::vector<Line> tokenize_string(const std::string& s) {
  std::istringstream in(s);
  return tokenize(in);
}

std::vector<long> split_integers(const std::string& s, const Line& line, std::size_t index) {
  std::vector<long> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    long v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      line.fail(index, "bad integer list '" + s + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace dcx::text
