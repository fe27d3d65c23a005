#include "dcx/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include "dcx/bicomplex/bicomplex_io.hpp"
#include "dcx/cli/selftest.hpp"
#include "dcx/error.hpp"
#include "dcx/lie/lie_io.hpp"
#include "dcx/solv/solv_io.hpp"
#include "dcx/spectral/spectral.hpp"
#include "dcx/text.hpp"
#include "dcx/zigzag/zigzag.hpp"

namespace dcx::cli {

namespace {

constexpr std::string_view kCatalog = "catalog:";

std::string boolean(bool b) { return b ? "true" : "false"; }

bool is_catalog(const std::string& input) { return input.starts_with(kCatalog); }

std::string catalog_name(const std::string& input) { return input.substr(kCatalog.size()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(1, 1, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedComplex with_real(BicomplexWithReal b, std::string source) {
  return {std::move(b.complex), std::move(b.real), std::move(source)};
}

SolvData load_solv(const std::string& input, std::string& source) {
  if (!is_catalog(input)) {
    source = read_file(input);
    return parse_solv_string(source);
  }
  source = input;
  const std::string name = catalog_name(input);
  if (name == "nakamura-identically") return nakamura_preset(NakamuraCase::identically);
  if (name == "nakamura-real") return nakamura_preset(NakamuraCase::real);
  throw ParseError(1, 1, "unknown solvable catalog entry '" + name + "'");
}

SplittingData load_splitting(const std::string& input, std::string& source) {
  if (!is_catalog(input)) {
    source = read_file(input);
    return parse_splitting_string(source);
  }
  source = input;
  const std::string name = catalog_name(input);
  if (name == "splitting-identically") return splitting_preset(SplittingCase::identically);
  if (name == "splitting-real") return splitting_preset(SplittingCase::real);
  throw ParseError(1, 1, "unknown splitting catalog entry '" + name + "'");
}

LieAlgebra load_lie(const std::string& input, std::string& source) {
  if (!is_catalog(input)) {
    source = read_file(input);
    return parse_lie_string(source);
  }
  source = input;
  try {
    return lie_catalog(catalog_name(input));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
}

std::vector<std::size_t> parse_betti(const std::string& s) {
  const text::Line line{1, {{s, 1}}};
  std::vector<std::size_t> out;
  for (long v : text::split_integers(s, line, 0)) {
    if (v < 0) throw ParseError(1, 1, "Betti numbers must be nonnegative");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw ParseError(1, 1, "empty Betti vector");
  return out;
}

std::vector<Filtration> selected(const Options& o) {
  if (o.filtration == "col") return {Filtration::column};
  if (o.filtration == "row") return {Filtration::row};
  if (o.filtration == "both") return {Filtration::column, Filtration::row};
  throw std::invalid_argument("--filtration must be col, row or both");
}

const SpectralSequence& sequence_of(const Classification& c, Filtration f) {
  return f == Filtration::column ? c.column : c.row;
}

void add_one_page_tables(Report& r, const DoubleComplex& dc, const CohomologyTable& dol,
                         const CohomologyTable& del, const CohomologyTable& bc,
                         const CohomologyTable& a) {
  r.add_table(make_table("h_dolbeault", dol.dims, dc), "Dolbeault cohomology h^{p,q}");
  r.add_table(make_table("h_del", del.dims, dc), "del cohomology");
  r.add_table(make_table("h_bott_chern", bc.dims, dc), "Bott-Chern cohomology");
  r.add_table(make_table("h_aeppli", a.dims, dc), "Aeppli cohomology");
}

void add_pages(Report& r, const DoubleComplex& dc, const SpectralSequence& seq,
               const Options& o, bool with_ranks) {
  const std::string f = to_string(seq.filtration);
  for (const auto& page : seq.pages) {
    if (o.max_page && page.r > *o.max_page) break;
    r.add_table(make_table("E" + std::to_string(page.r) + "_" + f, page.dims, dc),
                "page E_" + std::to_string(page.r) + ", " + f + " filtration");
    if (with_ranks && !page.dr_ranks.empty()) {
      r.add_table(make_table("d" + std::to_string(page.r) + "_" + f, page.dr_ranks, dc),
                  "ranks of d_" + std::to_string(page.r) + " by source bidegree");
    }
  }
  r.add_line("degeneration_" + f + " " + std::to_string(seq.degeneration_page));
}

void add_classification(Report& r, const DoubleComplex& dc, Classification& c, const Options& o) {
  add_one_page_tables(r, dc, c.dolbeault, c.del, c.bott_chern, c.aeppli);
  r.add_note("de Rham cohomology");
  for (const auto& [k, d] : c.de_rham.dims) {
    r.add_line("de_rham " + std::to_string(k) + " " + std::to_string(d));
  }
  for (Filtration f : selected(o)) add_pages(r, dc, sequence_of(c, f), o, false);
  r.add_table(make_table("hodge", c.hodge.dims, dc), "Hodge pieces F^p cap Fbar^q of de Rham cohomology");
  r.add_note("purity: degree, sum of pieces, dim of their span, de Rham dim");
  for (const auto& [k, p] : c.hodge.purity) {
    r.add_line("purity " + std::to_string(k) + " " + std::to_string(p.piece_sum) + " " +
               std::to_string(p.span_dim) + " " + std::to_string(p.de_rham));
  }
  const Decomposition d = decompose(dc);
  c.verdict.page1_by_shape = page1_by_shape(d);
  if (*c.verdict.page1_by_shape != c.verdict.page1_by_definition) {
    throw InternalError("shape route disagrees with the definition route");
  }
  r.add_note("verdicts");
  for (auto& line : verdict_lines(c.verdict)) r.add_line(std::move(line));
}

Classification classify_loaded(const LoadedComplex& in) {
  ClassifyOptions options;
  if (in.real) options.real = &*in.real;
  return classify(in.complex, options);
}

Report verb_validate(const LoadedComplex& in, int& exit_code) {
  Report r;
  const ValidationReport v = validate(in.complex);
  r.add_line("valid " + boolean(v.ok));
  if (!v.ok) {
    r.add_line("failing " + v.identity + " " + std::to_string(v.failing->p) + " " +
               std::to_string(v.failing->q));
    exit_code = kValidationFailure;
  }
  if (in.real) {
    const bool ok = check_real_structure(in.complex, *in.real);
    r.add_line("real_structure " + boolean(ok));
    if (!ok) exit_code = kValidationFailure;
  }
  return r;
}

void require_valid(const DoubleComplex& dc) {
  const ValidationReport v = validate(dc);
  if (!v.ok) throw ValidationError(v.identity + " fails at " + to_string(*v.failing));
}

Report verb_cohomology(const LoadedComplex& in) {
  require_valid(in.complex);
  Report r;
  const DoubleComplex& dc = in.complex;
  add_one_page_tables(r, dc, dolbeault(dc), del_cohomology(dc), bott_chern(dc), aeppli(dc));
  const TotalCohomology h = de_rham(dc);
  long alternating = 0;
  for (const auto& [k, d] : h.dims) {
    r.add_line("de_rham " + std::to_string(k) + " " + std::to_string(d));
    alternating += (k % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  }
  const long chi = euler_characteristic(dc);
  if (chi != alternating) throw InternalError("Euler characteristic differs from de Rham");
  r.add_line("euler_characteristic " + std::to_string(chi));
  return r;
}

Report verb_fss(const LoadedComplex& in, const Options& o) {
  require_valid(in.complex);
  Report r;
  const TotalCohomology h = de_rham(in.complex);
  for (Filtration f : selected(o)) {
    const SpectralSequence seq = spectral_sequence(in.complex, f);
    add_pages(r, in.complex, seq, o, true);
    for (const auto& [k, d] : h.dims) {
      if (seq.limit().total(k) != d) throw InternalError("spectral sequence misses de Rham");
    }
  }
  for (const auto& [k, d] : h.dims) r.add_line("de_rham " + std::to_string(k) + " " + std::to_string(d));
  return r;
}

Report verb_classify(const LoadedComplex& in, const Options& o) {
  Report r;
  Classification c = classify_loaded(in);
  add_classification(r, in.complex, c, o);
  return r;
}

Report verb_decompose(const LoadedComplex& in) {
  require_valid(in.complex);
  Report r;
  const Decomposition d = decompose(in.complex);
  r.add_note("parts: square p q mult | zigzag mult p0 q0 steps");
  for (auto& line : decomposition_lines(d.parts)) r.add_line(std::move(line));
  r.add_line("page1_shape " + boolean(page1_by_shape(d)));
  return r;
}

Report verb_lie(const LieAlgebra& g, const Options& o) {
  if (const LieReport v = validate_lie(g); !v.ok) {
    const auto& t = *v.failing;
    throw ValidationError("Jacobi identity fails on (" + std::to_string(t[0]) + "," +
                          std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }
  Report r;
  r.add_line("dim " + std::to_string(g.dim()));
  r.add_line("abelian " + boolean(g.is_abelian()));
  r.add_line("nilpotent " + boolean(is_nilpotent(g)));
  r.add_line("solvable " + boolean(is_solvable(g)));
  r.add_line("semisimple " + boolean(is_semisimple(g)));
  for (const auto& [k, d] : ce_complex(g).cohomology()) {
    r.add_line("ce_betti " + std::to_string(k) + " " + std::to_string(d));
  }
  r.add_note("invariant bicomplex");
  const BicomplexWithReal b = invariant_bicomplex(g);
  Classification c = classify(b.complex, {&b.real, false});
  add_classification(r, b.complex, c, o);
  return r;
}

Report verb_built(const BicomplexWithReal& b, const Options& o) {
  Report r;
  r.add_line("dim_total " + std::to_string(b.complex.total_dim()));
  r.add_line("real_structure " + boolean(check_real_structure(b.complex, b.real)));
  Classification c = classify(b.complex, {&b.real, false});
  add_classification(r, b.complex, c, o);
  return r;
}

Report verb_ssmodel(const Options& o) {
  if (o.algebra.empty()) throw std::invalid_argument("ssmodel needs --algebra");
  if (o.betti.empty()) throw std::invalid_argument("ssmodel needs --betti");
  LieAlgebra g;
  try {
    g = lie_catalog(o.algebra);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
  const std::vector<std::size_t> betti = parse_betti(o.betti);
  const SemisimpleModel m = semisimple_e2_model(g, betti);
  Report r;
  r.add_table(make_table("E2", m.e2), "E_2^{p,q} = H^p(g) x H^q(lattice)");
  r.add_line("degeneration " + std::to_string(m.degeneration_page));
  for (const Bidegree b : m.asymmetric) {
    r.add_line("asymmetric " + std::to_string(b.p) + " " + std::to_string(b.q));
  }
  r.add_line("symmetric " + boolean(m.asymmetric.empty()));
  r.add_line("page1 " + boolean(m.page1));
  if (o.algebra == "sl2") {
    const LieAlgebra real = realification(g);
    const Subalgebra k = su2_in_realified_sl2();
    r.add_note("relative cohomology of the realified algebra over su(2)");
    for (const auto& [deg, d] : relative_ce_cohomology(real, k)) {
      r.add_line("relative_cohomology " + std::to_string(deg) + " " + std::to_string(d));
    }
    r.add_line("relative_matches_betti " + boolean(relative_cohomology_matches_betti(real, k, betti)));
  }
  return r;
}

std::string render(const Report& r, const Options& o, const std::string& title) {
  if (o.format == "machine") return render_machine(r);
  if (o.format == "text") return render_text(r, title);
  throw std::invalid_argument("--format must be text or machine");
}

}  // namespace

std::vector<std::string> verbs() {
  return {"validate", "cohomology", "fss",   "classify", "decompose",
          "lie",      "solv",       "splitting", "ssmodel",  "selftest"};
}

std::vector<std::string> bicomplex_catalog_names() {
  std::vector<std::string> out = {"dot", "line", "square", "wedge"};
  for (const auto& n : lie_catalog_names()) out.push_back(n + "-invariant");
  for (const char* n : {"nakamura-identically", "nakamura-real", "splitting-identically",
                        "splitting-real"}) {
    out.emplace_back(n);
  }
  return out;
}

LoadedComplex load_bicomplex(const std::string& input) {
  if (!is_catalog(input)) {
    LoadedComplex out;
    out.source = read_file(input);
    out.complex = parse_bicomplex_string(out.source);
    return out;
  }
  const std::string name = catalog_name(input);
  auto model = [&](Indecomposable shape) {
    return LoadedComplex{model_complex({{shape, 1}}), std::nullopt, input};
  };
  if (name == "dot") return model(Indecomposable::dot({0, 0}));
  if (name == "line") return model(Indecomposable::zigzag({0, 0}, 2, Step::del));
  if (name == "square") return model(Indecomposable::square({0, 0}));
  if (name == "wedge") return model(Indecomposable::wedge({0, 0}));
  if (name == "nakamura-identically") return with_real(build_C(nakamura_preset(NakamuraCase::identically)), input);
  if (name == "nakamura-real") return with_real(build_C(nakamura_preset(NakamuraCase::real)), input);
  if (name == "splitting-identically") {
    return with_real(build_splitting(splitting_preset(SplittingCase::identically)), input);
  }
  if (name == "splitting-real") return with_real(build_splitting(splitting_preset(SplittingCase::real)), input);
  constexpr std::string_view suffix = "-invariant";
  if (name.ends_with(suffix)) {
    try {
      return with_real(invariant_bicomplex(lie_catalog(name.substr(0, name.size() - suffix.size()))), input);
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, e.what());
    }
  }
  throw ParseError(1, 1, "unknown catalog entry '" + name + "'");
}

Outcome run(const std::string& verb, const std::string& input, const Options& o) {
  Outcome out;
  try {
    Report r;
    std::string source = input;
    if (verb == "validate" || verb == "cohomology" || verb == "fss" || verb == "classify" ||
        verb == "decompose") {
      const LoadedComplex in = load_bicomplex(input);
      source = in.source;
      if (verb == "validate") r = verb_validate(in, out.exit_code);
      if (verb == "cohomology") r = verb_cohomology(in);
      if (verb == "fss") r = verb_fss(in, o);
      if (verb == "classify") r = verb_classify(in, o);
      if (verb == "decompose") r = verb_decompose(in);
    } else if (verb == "lie") {
      const LieAlgebra g = load_lie(input, source);
      r = verb_lie(g, o);
    } else if (verb == "solv") {
      const SolvData sd = load_solv(input, source);
      r = verb_built(build_C(sd), o);
    } else if (verb == "splitting") {
      const SplittingData sp = load_splitting(input, source);
      r = verb_built(build_splitting(sp), o);
    } else if (verb == "ssmodel") {
      source = "ssmodel " + o.algebra + " " + o.betti;
      r = verb_ssmodel(o);
    } else if (verb == "selftest") {
      if (!o.seed) throw std::invalid_argument("selftest needs an explicit --seed");
      source = "selftest " + std::to_string(*o.seed) + " " + std::to_string(o.samples);
      SelftestResult st = run_selftest(*o.seed, o.samples);
      for (auto& line : st.lines) r.add_line(std::move(line));
      if (st.failures > 0) {
        out.exit_code = kInternalFailure;
        if (st.counterexample) {
          std::ofstream dump(o.dump, std::ios::binary);
          dump << write_bicomplex(*st.counterexample);
          r.add_line("counterexample " + o.dump);
        }
      }
    } else {
      throw std::invalid_argument("unknown verb '" + verb + "'");
    }
    r.provenance = provenance(source);
    out.out = render(r, o, verb + (input.empty() ? "" : " " + input));
  } catch (const ParseError& e) {
    out = {kParseFailure, {}, "parse error: " + std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    out = {kParseFailure, {}, "usage error: " + std::string(e.what()) + "\n"};
  } catch (const ValidationError& e) {
    out = {kValidationFailure, {}, "validation failed: " + std::string(e.what()) + "\n"};
  } catch (const StructuralError& e) {
    out = {kValidationFailure, {}, "validation failed: " + std::string(e.what()) + "\n"};
  } catch (const InternalError& e) {
    out = {kInternalFailure, {}, "internal error: " + std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    out = {kInternalFailure, {}, "internal error: " + std::string(e.what()) + "\n"};
  }
  return out;
}

}  // namespace dcx::cli
