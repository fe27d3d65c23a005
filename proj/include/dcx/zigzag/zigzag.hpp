#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"

namespace dcx {

/// A step along a zigzag path, walking from its start: `del` moves (+1,0) and
/// the source of the arrow is the current element; `delbar` moves (0,-1) and
/// the source of the arrow is the next element.
enum class Step { del, delbar };

std::string to_string(Step s);

/// An indecomposable double complex: a square {a, del a, delbar a, del delbar a}
/// with generator at `start`, or a zigzag. Zigzags are canonical: they start at
/// the endpoint with the smallest p (larger q on ties), so the steps alternate
/// between del and delbar.
struct Indecomposable {
  enum class Kind { square, zigzag };

  Kind kind = Kind::zigzag;
  Bidegree start;
  std::vector<Step> steps;

  static Indecomposable square(Bidegree generator);
  static Indecomposable dot(Bidegree b);
  /// Zigzag of `length` bidegrees starting at `start` whose first step is `first`.
  static Indecomposable zigzag(Bidegree start, std::size_t length, Step first);
  /// a at b with del a and delbar a both nonzero.
  static Indecomposable wedge(Bidegree b);

  /// Number of basis vectors.
  std::size_t length() const;
  /// Occupied bidegrees; for zigzags in path order.
  std::vector<Bidegree> bidegrees() const;
  bool is_square() const { return kind == Kind::square; }
  bool is_dot() const { return kind == Kind::zigzag && steps.empty(); }
  bool is_line() const { return kind == Kind::zigzag && steps.size() == 1; }
  /// Steps alternate (always true for values built by the factories).
  bool is_canonical() const;

  friend auto operator<=>(const Indecomposable&, const Indecomposable&) = default;
};

struct Part {
  Indecomposable shape;
  std::size_t multiplicity = 1;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Sorts and merges equal shapes.
std::vector<Part> normalize_parts(std::vector<Part> parts);

/// Direct sum of model indecomposables, in the order of `parts`, each copy
/// contributing one basis vector at each of its bidegrees.
DoubleComplex model_complex(const std::vector<Part>& parts);

struct Decomposition {
  std::vector<Part> parts;
  /// Per bidegree, P with P * (input coordinates) = model coordinates.
  std::map<Bidegree, Matrix> change_of_basis;
  DoubleComplex model;
};

/// Splits off all squares, then all zigzags. The result is verified: P
/// conjugates the input differentials exactly into the block model, and the
/// four one-page cohomology tables agree. Failure throws InternalError.
Decomposition decompose(const DoubleComplex& dc);

/// True iff every part is a square, a dot or a line.
bool page1_by_shape(const std::vector<Part>& parts);
bool page1_by_shape(const Decomposition& d);

/// `square p q mult` and `zigzag mult p0 q0 step...` lines.
std::vector<std::string> decomposition_lines(const std::vector<Part>& parts);

// -- random generators ---------------------------------------------------

struct ShapeOptions {
  bool dots = true;
  bool lines = true;
  bool squares = true;
  /// Zigzags with 3 .. max_length bidegrees.
  bool long_zigzags = false;
  std::size_t max_length = 5;
  std::size_t min_parts = 1;
  std::size_t max_parts = 6;
  /// Start bidegrees are drawn from [0, grid]^2.
  int grid = 3;
};

struct RandomSum {
  DoubleComplex complex;
  std::vector<Part> parts;
};

RandomSum random_zigzag_sum(std::uint64_t seed, const ShapeOptions& options);
/// Direct sum of dots, lines and squares in a shuffled basis.
RandomSum random_page1_complex(std::uint64_t seed, const ShapeOptions& options = {});
/// Conjugates every differential by random unimodular integer matrices.
DoubleComplex shuffle_basis(const DoubleComplex& dc, std::uint64_t seed);
/// A random invertible integer matrix with determinant +-1.
Matrix random_unimodular(std::size_t n, std::uint64_t seed);

}  // namespace dcx
