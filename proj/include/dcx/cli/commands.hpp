#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"
#include "dcx/cli/report.hpp"

namespace dcx::cli {

enum ExitCode { kSuccess = 0, kParseFailure = 1, kValidationFailure = 2, kInternalFailure = 3 };

struct Options {
  /// `text` or `machine`.
  std::string format = "text";
  /// `col`, `row` or `both`.
  std::string filtration = "both";
  std::optional<std::uint64_t> seed;
  std::optional<int> max_page;
  /// ssmodel: Lie catalog name and Betti numbers `b0,b1,...`.
  std::string algebra;
  std::string betti;
  /// selftest: sample count and counterexample path.
  std::size_t samples = 200;
  std::string dump = "selftest-counterexample.dcx";
};

struct Outcome {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

std::vector<std::string> verbs();

/// Runs one verb. Input is a file path or `catalog:<name>`. Never throws:
/// parse errors give exit 1, validation failures 2, internal errors 3.
Outcome run(const std::string& verb, const std::string& input, const Options& options);

struct LoadedComplex {
  DoubleComplex complex;
  std::optional<RealStructure> real;
  /// Bytes hashed into the provenance line.
  std::string source;
};

/// Bicomplex file or one of `catalog:dot|line|square|wedge|<lie>-invariant|
/// nakamura-identically|nakamura-real|splitting-identically|splitting-real`.
/// Throws ParseError for unknown names and unreadable files.
LoadedComplex load_bicomplex(const std::string& input);
std::vector<std::string> bicomplex_catalog_names();

}  // namespace dcx::cli
