#pragma once

#include <istream>
#include <string>

#include "dcx/bicomplex/bicomplex.hpp"

namespace dcx {

/// Reads the line format
///   space <p> <q> <dim>
///   del <p> <q> <row> <col> <scalar>
///   delbar <p> <q> <row> <col> <scalar>
/// with `#` comments and 0-based indices. Throws ParseError with line/column.
DoubleComplex parse_bicomplex(std::istream& in);
DoubleComplex parse_bicomplex_string(const std::string& text);

/// Writes the same format with lines sorted lexicographically, so that
/// write(parse(write(dc))) == write(dc) byte for byte.
std::string write_bicomplex(const DoubleComplex& dc);

}  // namespace dcx
