#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"

namespace dcx::cli {

inline constexpr std::string_view kVersion = "1.0.0";

std::uint64_t fnv1a64(std::string_view bytes);

/// A grid of counts over [p_min, p_max] x [q_min, q_max].
struct Table {
  std::string label;
  int p_min = 0;
  int p_max = -1;
  int q_min = 0;
  int q_max = -1;
  std::map<Bidegree, std::size_t> dims;

  std::size_t at(Bidegree b) const;
  friend bool operator==(const Table&, const Table&) = default;
};

/// Table over the bounding box of dc (or of the keys when dc is empty).
Table make_table(std::string label, const std::map<Bidegree, std::size_t>& dims,
                 const DoubleComplex& dc);
Table make_table(std::string label, const std::map<Bidegree, std::size_t>& dims);

/// Either a table or a single machine line; `note` is decoration shown only
/// in the text format.
struct Item {
  bool is_table = false;
  Table table;
  std::string line;
  std::string note;

  friend bool operator==(const Item& a, const Item& b) {
    return a.is_table == b.is_table && a.table == b.table && a.line == b.line;
  }
};

struct Report {
  std::string provenance;
  std::vector<Item> items;

  void add_line(std::string line) { items.push_back({false, {}, std::move(line), {}}); }
  void add_table(Table t, std::string note = {}) {
    items.push_back({true, std::move(t), {}, std::move(note)});
  }
  void add_note(std::string note) { items.push_back({false, {}, {}, std::move(note)}); }
};

/// `provenance <hash> <version>` for the given input bytes.
std::string provenance(std::string_view input);

/// Machine format: the provenance line, then per table a header
/// `table <label> <p_min> <p_max> <q_min> <q_max>` and one `row <q> <counts>`
/// line per q from q_max down to q_min (p increasing to the right), and plain
/// lines verbatim.
std::string render_machine(const Report& r);
/// Machine lines interleaved with `#` decoration lines.
std::string render_text(const Report& r, std::string_view title);
/// Inverse of render_machine; decoration lines are skipped, so text output
/// parses as well. Throws ParseError.
Report parse_machine(std::string_view text);

}  // namespace dcx::cli
