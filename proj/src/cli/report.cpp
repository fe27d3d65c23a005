#include "dcx/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dcx/error.hpp"
#include "dcx/text.hpp"

namespace dcx::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string provenance(std::string_view input) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(input)));
  return "provenance " + std::string(buf) + " " + std::string(kVersion);
}

std::size_t Table::at(Bidegree b) const {
  auto it = dims.find(b);
  return it == dims.end() ? 0 : it->second;
}

Table make_table(std::string label, const std::map<Bidegree, std::size_t>& dims,
                 const DoubleComplex& dc) {
  if (dc.empty()) return make_table(std::move(label), dims);
  Table t{std::move(label), dc.min_p(), dc.max_p(), dc.min_q(), dc.max_q(), {}};
  for (const auto& [b, d] : dims) {
    if (d != 0) t.dims[b] = d;
  }
  return t;
}

Table make_table(std::string label, const std::map<Bidegree, std::size_t>& dims) {
  Table t;
  t.label = std::move(label);
  bool first = true;
  for (const auto& [b, d] : dims) {
    if (first) {
      t.p_min = t.p_max = b.p;
      t.q_min = t.q_max = b.q;
      first = false;
    }
    t.p_min = std::min(t.p_min, b.p);
    t.p_max = std::max(t.p_max, b.p);
    t.q_min = std::min(t.q_min, b.q);
    t.q_max = std::max(t.q_max, b.q);
    if (d != 0) t.dims[b] = d;
  }
  return t;
}

namespace {

void emit_table(std::string& out, const Table& t) {
  out += "table " + t.label + " " + std::to_string(t.p_min) + " " + std::to_string(t.p_max) + " " +
         std::to_string(t.q_min) + " " + std::to_string(t.q_max) + "\n";
  for (int q = t.q_max; q >= t.q_min; --q) {
    out += "row " + std::to_string(q);
    for (int p = t.p_min; p <= t.p_max; ++p) out += " " + std::to_string(t.at({p, q}));
    out += "\n";
  }
}

}  // namespace

std::string render_machine(const Report& r) {
  std::string out = r.provenance + "\n";
  for (const auto& item : r.items) {
    if (item.is_table) {
      emit_table(out, item.table);
    } else if (!item.line.empty()) {
      out += item.line + "\n";
    }
  }
  return out;
}

std::string render_text(const Report& r, std::string_view title) {
  std::string out = "# dcx " + std::string(title) + "\n" + r.provenance + "\n";
  for (const auto& item : r.items) {
    if (!item.note.empty()) out += "# " + item.note + "\n";
    if (item.is_table) {
      emit_table(out, item.table);
      if (item.table.p_max >= item.table.p_min) {
        std::string axis = "#     ";
        for (int p = item.table.p_min; p <= item.table.p_max; ++p) axis += " p" + std::to_string(p);
        out += axis + "\n";
      }
    } else if (!item.line.empty()) {
      out += item.line + "\n";
    }
  }
  return out;
}

Report parse_machine(std::string_view text) {
  Report r;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  Table* open = nullptr;
  int expected_q = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(number, 1, what); };
  while (std::getline(in, raw)) {
    ++number;
    if (raw.empty() || raw.front() == '#') continue;
    std::istringstream words(raw);
    std::string key;
    words >> key;
    if (open != nullptr && open->q_max >= open->q_min && expected_q >= open->q_min) {
      if (key != "row") fail("expected a table row");
      int q = 0;
      words >> q;
      if (!words || q != expected_q) fail("table rows out of order");
      for (int p = open->p_min; p <= open->p_max; ++p) {
        std::size_t v = 0;
        if (!(words >> v)) fail("short table row");
        if (v != 0) open->dims[{p, q}] = v;
      }
      std::string extra;
      if (words >> extra) fail("long table row");
      --expected_q;
      continue;
    }
    open = nullptr;
    if (key == "provenance") {
      if (!r.provenance.empty()) fail("provenance given twice");
      r.provenance = raw;
    } else if (key == "table") {
      Table t;
      words >> t.label >> t.p_min >> t.p_max >> t.q_min >> t.q_max;
      if (!words) fail("malformed table header");
      r.add_table(std::move(t));
      open = &r.items.back().table;
      expected_q = open->q_max;
    } else {
      r.add_line(raw);
    }
  }
  if (open != nullptr && expected_q >= open->q_min) fail("table ends early");
  if (r.provenance.empty()) throw ParseError(1, 1, "missing provenance line");
  return r;
}

}  // namespace dcx::cli
