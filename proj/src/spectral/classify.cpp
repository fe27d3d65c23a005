#include <set>
#include <sstream>

#include "dcx/error.hpp"
#include "dcx/spectral/spectral.hpp"

namespace dcx {

bool page1_dimension_criterion(const CohomologyTable& dolbeault, const CohomologyTable& del,
                               const CohomologyTable& bott_chern, const CohomologyTable& aeppli) {
  std::set<int> degrees;
  for (const auto* t : {&dolbeault, &del, &bott_chern, &aeppli}) {
    for (const auto& [b, d] : t->dims) degrees.insert(b.total());
  }
  for (int k : degrees) {
    if (aeppli.total(k) + bott_chern.total(k) != dolbeault.total(k) + del.total(k)) return false;
  }
  return true;
}

Classification classify(const DoubleComplex& dc, const ClassifyOptions& options) {
  const ValidationReport report = validate(dc);
  if (!report.ok) {
    throw ValidationError(report.identity + " fails at " + to_string(*report.failing));
  }
  Classification c;
  c.dolbeault = dolbeault(dc);
  c.del = del_cohomology(dc);
  c.bott_chern = bott_chern(dc);
  c.aeppli = aeppli(dc);
  c.de_rham = de_rham(dc);
  auto [col, row] = spectral_sequences(dc, options.real, options.force_independent);
  c.column = std::move(col);
  c.row = std::move(row);
  c.hodge = hodge_pieces(dc);

  for (const auto* seq : {&c.column, &c.row}) {
    for (const auto& [k, h] : c.de_rham.dims) {
      if (seq->limit().total(k) != h) {
        throw InternalError(to_string(seq->filtration) + " spectral sequence does not converge to de Rham in degree " +
                            std::to_string(k));
      }
    }
  }

  Verdict& v = c.verdict;
  v.degeneration_page_F = c.column.degeneration_page;
  v.degeneration_page_Fbar = c.row.degeneration_page;
  bool all_pure = true;
  for (const auto& [k, p] : c.hodge.purity) {
    v.pure[k] = p.pure;
    all_pure = all_pure && p.pure;
  }
  v.ddbar_lemma = v.degeneration_page_F == 1 && v.degeneration_page_Fbar == 1 && all_pure;
  v.page1_by_definition = v.degeneration_page_F <= 2 && v.degeneration_page_Fbar <= 2 && all_pure;
  v.page1_by_dims = page1_dimension_criterion(c.dolbeault, c.del, c.bott_chern, c.aeppli);
  v.e1_degenerate = v.degeneration_page_F == 1;
  if (v.page1_by_definition != v.page1_by_dims) {
    throw InternalError(std::string("page-1 routes disagree: definition says ") +
                        (v.page1_by_definition ? "true" : "false") + ", dimension criterion says " +
                        (v.page1_by_dims ? "true" : "false"));
  }
  return c;
}

namespace {

const char* boolean(bool b) { return b ? "true" : "false"; }

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("expected true or false, got '" + s + "'");
}

}  // namespace

std::vector<std::string> verdict_lines(const Verdict& v) {
  std::vector<std::string> out;
  out.push_back("degeneration_F " + std::to_string(v.degeneration_page_F));
  out.push_back("degeneration_Fbar " + std::to_string(v.degeneration_page_Fbar));
  for (const auto& [k, p] : v.pure) out.push_back("pure " + std::to_string(k) + " " + boolean(p));
  out.push_back(std::string("ddbar ") + boolean(v.ddbar_lemma));
  out.push_back(std::string("page1_def ") + boolean(v.page1_by_definition));
  out.push_back(std::string("page1_dims ") + boolean(v.page1_by_dims));
  out.push_back(std::string("page1_shape ") +
                (v.page1_by_shape ? boolean(*v.page1_by_shape) : "na"));
  return out;
}

Verdict parse_verdict_lines(const std::vector<std::string>& lines) {
  Verdict v;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string key, a, b;
    in >> key >> a;
    if (key == "degeneration_F") {
      v.degeneration_page_F = std::stoi(a);
      v.e1_degenerate = v.degeneration_page_F == 1;
    } else if (key == "degeneration_Fbar") {
      v.degeneration_page_Fbar = std::stoi(a);
    } else if (key == "pure") {
      in >> b;
      v.pure[std::stoi(a)] = parse_bool(b);
    } else if (key == "ddbar") {
      v.ddbar_lemma = parse_bool(a);
    } else if (key == "page1_def") {
      v.page1_by_definition = parse_bool(a);
    } else if (key == "page1_dims") {
      v.page1_by_dims = parse_bool(a);
    } else if (key == "page1_shape") {
      if (a == "na") {
        v.page1_by_shape.reset();
      } else {
        v.page1_by_shape = parse_bool(a);
      }
    } else {
      throw std::invalid_argument("unknown verdict line '" + line + "'");
    }
  }
  return v;
}

}  // namespace dcx
