#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dcx/bicomplex/bicomplex_io.hpp"
#include "dcx/cli/commands.hpp"
#include "dcx/cli/report.hpp"
#include "dcx/cli/selftest.hpp"
#include "dcx/error.hpp"
#include "fixtures.hpp"

namespace cli = dcx::cli;
namespace fs = std::filesystem;

namespace {

cli::Options machine() {
  cli::Options o;
  o.format = "machine";
  return o;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines_of(text)) {
    if (l == line) return true;
  }
  return false;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "dcx_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify heisenberg invariant") {
  const auto r = cli::run("classify", "catalog:heisenberg3-invariant", machine());
  REQUIRE(r.exit_code == cli::kSuccess);
  CHECK(has_line(r.out, "page1_def true"));
  CHECK(has_line(r.out, "ddbar false"));
  CHECK(has_line(r.out, "degeneration_F 2"));
  CHECK(has_line(r.out, "page1_shape true"));
}

TEST_CASE("ssmodel sl2") {
  cli::Options o = machine();
  o.algebra = "sl2";
  o.betti = "1,2,2,1";
  const auto r = cli::run("ssmodel", "", o);
  REQUIRE(r.exit_code == cli::kSuccess);
  for (const char* line : {"asymmetric 0 1", "asymmetric 0 2", "asymmetric 1 3", "asymmetric 2 3", "page1 false",
                           "symmetric false"}) {
    CHECK(has_line(r.out, line));
  }
  o.betti = "1,0,0,1";
  const auto ok = cli::run("ssmodel", "", o);
  CHECK(has_line(ok.out, "symmetric true"));
  CHECK(has_line(ok.out, "relative_matches_betti true"));
  o.betti = "1,x";
  CHECK(cli::run("ssmodel", "", o).exit_code == cli::kParseFailure);
}

TEST_CASE("validate reports the failing bidegree") {
  const auto bad = write_temp("bad.dcx", dcx::write_bicomplex(fixture::square(true)));
  const auto r = cli::run("validate", bad.string(), machine());
  CHECK(r.exit_code == cli::kValidationFailure);
  CHECK(has_line(r.out, "valid false"));
  CHECK(has_line(r.out, "failing anticommutation 0 0"));

  const auto good = write_temp("good.dcx", dcx::write_bicomplex(fixture::square()));
  CHECK(cli::run("validate", good.string(), machine()).exit_code == cli::kSuccess);
}

TEST_CASE("exit codes") {
  const auto garbled = write_temp("garbled.dcx", "space 0 0 1\ndel 0 0 zero 0 1\n");
  const auto parse = cli::run("cohomology", garbled.string(), machine());
  CHECK(parse.exit_code == cli::kParseFailure);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(cli::run("classify", "catalog:nonexistent", machine()).exit_code == cli::kParseFailure);
  CHECK(cli::run("classify", "/nonexistent/file.dcx", machine()).exit_code == cli::kParseFailure);
  CHECK(cli::run("frobnicate", "catalog:dot", machine()).exit_code == cli::kParseFailure);

  const auto bad = write_temp("bad2.dcx", dcx::write_bicomplex(fixture::square(true)));
  CHECK(cli::run("classify", bad.string(), machine()).exit_code == cli::kValidationFailure);
  CHECK(cli::run("solv", "catalog:unknown", machine()).exit_code == cli::kParseFailure);

  const auto sl2 = write_temp("sl2.solv", "dim 3\nbracket 0 1 1 2\nbracket 0 2 2 -2\nbracket 1 2 0 1\n");
  CHECK(cli::run("solv", sl2.string(), machine()).exit_code == cli::kValidationFailure);
  CHECK(cli::run("selftest", "", machine()).exit_code == cli::kParseFailure);
}

TEST_CASE("every verb runs on a catalog input") {
  const std::map<std::string, std::string> inputs{
      {"validate", "catalog:sl2-invariant"},  {"cohomology", "catalog:wedge"},
      {"fss", "catalog:heisenberg3-invariant"}, {"classify", "catalog:nakamura-real"},
      {"decompose", "catalog:splitting-real"}, {"lie", "catalog:heisenberg3"},
      {"solv", "catalog:nakamura-identically"}, {"splitting", "catalog:splitting-identically"}};
  for (const auto& [verb, input] : inputs) {
    const auto r = cli::run(verb, input, machine());
    INFO(verb);
    CHECK(r.exit_code == cli::kSuccess);
    CHECK(r.out.rfind("provenance ", 0) == 0);
  }
}

TEST_CASE("machine output round trips and text is machine plus decoration") {
  for (const auto& name : {"catalog:wedge", "catalog:heisenberg3-invariant", "catalog:nakamura-identically"}) {
    const auto m = cli::run("classify", name, machine());
    REQUIRE(m.exit_code == cli::kSuccess);
    CHECK(cli::render_machine(cli::parse_machine(m.out)) == m.out);
    CHECK(cli::run("classify", name, machine()).out == m.out);

    cli::Options text;
    const auto t = cli::run("classify", name, text);
    std::string stripped;
    for (const auto& line : lines_of(t.out)) {
      if (!line.empty() && line[0] != '#') stripped += line + "\n";
    }
    CHECK(stripped == m.out);
    CHECK(cli::render_machine(cli::parse_machine(t.out)) == m.out);
  }
  CHECK_THROWS_AS(cli::parse_machine("table h 0 1 0\n"), dcx::ParseError);
}

TEST_CASE("tables put q rows from the top") {
  cli::Report r;
  r.add_table(cli::make_table("h", {{{0, 0}, 1}, {{1, 1}, 2}}));
  const auto out = lines_of(cli::render_machine(r));
  REQUIRE(out.size() == 4);
  CHECK(out[1] == "table h 0 1 0 1");
  CHECK(out[2] == "row 1 0 2");
  CHECK(out[3] == "row 0 1 0");
}

TEST_CASE("filtration option") {
  cli::Options o = machine();
  o.filtration = "col";
  const auto col = cli::run("fss", "catalog:line", o);
  CHECK(has_line(col.out, "degeneration_col 2"));
  CHECK(col.out.find("degeneration_row") == std::string::npos);
  o.filtration = "diagonal";
  CHECK(cli::run("fss", "catalog:line", o).exit_code == cli::kParseFailure);
}

TEST_CASE("selftest") {
  cli::Options o = machine();
  o.seed = 0;
  o.samples = 20;
  o.dump = (fs::temp_directory_path() / "dcx_cli_tests" / "counterexample.dcx").string();
  const auto a = cli::run("selftest", "", o);
  CHECK(a.exit_code == cli::kSuccess);
  CHECK(has_line(a.out, "selftest samples 20 failures 0"));
  CHECK(cli::run("selftest", "", o).out == a.out);

  const auto st = cli::run_selftest(0, 20);
  bool wedge_seen = false;
  for (const auto& line : st.lines) {
    if (line.rfind("sample 9 wedge page1 false ok", 0) == 0) wedge_seen = true;
  }
  CHECK(wedge_seen);
  CHECK(st.failures == 0);
  CHECK_FALSE(st.counterexample.has_value());
}

TEST_CASE("provenance depends on input bytes") {
  CHECK(cli::provenance("a") != cli::provenance("b"));
  CHECK(cli::provenance("a") == cli::provenance("a"));
  CHECK(cli::fnv1a64("") == 0xcbf29ce484222325ULL);
}

}
