#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "dcx/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact double complex engine"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(dcx::cli::kVersion));

  dcx::cli::Options options;
  std::string input;

  const std::map<std::string, std::string> about{
      {"validate", "Check the double complex identities and any real structure"},
      {"cohomology", "Dolbeault, del, Bott-Chern, Aeppli and de Rham dimensions"},
      {"fss", "Pages of the column and row spectral sequences"},
      {"classify", "All tables, Hodge pieces, purity and the page-1 verdicts"},
      {"decompose", "Split into squares and zigzags"},
      {"lie", "Lie algebra invariants and its invariant bicomplex"},
      {"solv", "Build and classify the subcomplex of a solvable algebra"},
      {"splitting", "Build and classify a splitting-type complex"},
      {"ssmodel", "E2 model of a semisimple algebra with lattice Betti numbers"},
      {"selftest", "Cross-route property checks over a seeded corpus"}};

  for (const auto& verb : dcx::cli::verbs()) {
    CLI::App* sub = app.add_subcommand(verb, about.at(verb));
    sub->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
    if (verb == "fss" || verb == "classify" || verb == "lie" || verb == "solv" || verb == "splitting") {
      sub->add_option("--filtration", options.filtration, "Spectral sequences to print")
          ->check(CLI::IsMember({"col", "row", "both"}));
      sub->add_option("--max-page", options.max_page, "Last page to print")->check(CLI::PositiveNumber);
    }
    if (verb == "ssmodel") {
      sub->add_option("--algebra", options.algebra, "Lie catalog name")->required();
      sub->add_option("--betti", options.betti, "Betti numbers b0,b1,... of the lattice")->required();
    } else if (verb == "selftest") {
      sub->add_option("--seed", options.seed, "First seed")->required();
      sub->add_option("--samples", options.samples, "Number of seeds");
      sub->add_option("--dump", options.dump, "Path for the first counterexample");
    } else {
      sub->add_option("input", input, "File path or catalog:<name>")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dcx::cli::kParseFailure;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  const dcx::cli::Outcome outcome = dcx::cli::run(verb, input, options);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
