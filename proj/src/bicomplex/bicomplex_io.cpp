#include "dcx/bicomplex/bicomplex_io.hpp"

#include <algorithm>
#include <sstream>

#include "dcx/error.hpp"
#include "dcx/text.hpp"

namespace dcx {

namespace {

struct Entry {
  bool is_del;
  Bidegree b;
  std::size_t row, col;
  Scalar value;
  const text::Line* line;
};

}  // namespace

DoubleComplex parse_bicomplex(std::istream& in) {
  const auto lines = text::tokenize(in);
  DoubleComplex dc;
  std::map<Bidegree, std::size_t> declared;
  std::vector<Entry> entries;
  for (const auto& line : lines) {
    const std::string& kw = line.keyword();
    if (kw == "space") {
      line.expect_count(4);
      const Bidegree b{static_cast<int>(line.integer(1)), static_cast<int>(line.integer(2))};
      if (declared.contains(b)) line.fail(1, "space " + to_string(b) + " declared twice");
      declared[b] = line.count(3);
    } else if (kw == "del" || kw == "delbar") {
      line.expect_at_least(6);
      entries.push_back({kw == "del",
                         {static_cast<int>(line.integer(1)), static_cast<int>(line.integer(2))},
                         line.count(3), line.count(4), line.trailing_scalar(5), &line});
    } else {
      line.fail(0, "unknown keyword '" + kw + "'");
    }
  }
  for (const auto& [b, n] : declared) dc.set_space(b, n);
  auto dim_of = [&](Bidegree b) {
    auto it = declared.find(b);
    return it == declared.end() ? std::size_t{0} : it->second;
  };
  std::map<Bidegree, Matrix> del, delbar;
  for (const Entry& e : entries) {
    const Bidegree target = e.is_del ? Bidegree{e.b.p + 1, e.b.q} : Bidegree{e.b.p, e.b.q + 1};
    const std::size_t rows = dim_of(target);
    const std::size_t cols = dim_of(e.b);
    if (e.row >= rows) e.line->fail(3, "row index out of range for target " + to_string(target));
    if (e.col >= cols) e.line->fail(4, "column index out of range for source " + to_string(e.b));
    auto& maps = e.is_del ? del : delbar;
    auto it = maps.try_emplace(e.b, rows, cols).first;
    if (!it->second.at(e.row, e.col).is_zero()) e.line->fail(3, "entry given twice");
    it->second.set(e.row, e.col, e.value);
  }
  for (auto& [b, m] : del) {
    if (!m.is_zero()) dc.set_del(b, std::move(m));
  }
  for (auto& [b, m] : delbar) {
    if (!m.is_zero()) dc.set_delbar(b, std::move(m));
  }
  return dc;
}

DoubleComplex parse_bicomplex_string(const std::string& text) {
  std::istringstream in(text);
  return parse_bicomplex(in);
}

std::string write_bicomplex(const DoubleComplex& dc) {
  std::vector<std::string> lines;
  for (const auto& [b, n] : dc.spaces()) {
    lines.push_back("space " + std::to_string(b.p) + " " + std::to_string(b.q) + " " +
                    std::to_string(n));
  }
  auto emit = [&](const std::map<Bidegree, Matrix>& maps, const char* kw) {
    for (const auto& [b, m] : maps) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& e : m.row(r)) {
          lines.push_back(std::string(kw) + " " + std::to_string(b.p) + " " +
                          std::to_string(b.q) + " " + std::to_string(r) + " " +
                          std::to_string(e.col) + " " + e.value.to_string());
        }
      }
    }
  };
  emit(dc.stored_del(), "del");
  emit(dc.stored_delbar(), "delbar");
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace dcx
