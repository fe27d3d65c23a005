#pragma once

#include <compare>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"
#include "dcx/lie/exterior.hpp"
#include "dcx/lie/lie.hpp"

namespace dcx {

/// A frame e_0..e_{n-1} of (1,0)-forms together with their conjugates. Forms
/// are monomials over 2n generators: index a < n is e_a, index n + a is
/// conj(e_a); sorted monomials list all e's before all conj(e)'s.
struct TwistedFrame {
  std::size_t n = 0;
  /// d e_a as a sum of (2,0) and (1,1) monomials over the 2n generators.
  std::vector<std::vector<std::pair<Mask, Scalar>>> d;
};

/// The form phi * e_P ^ conj(e)_Q, where phi is a unitary function with
/// dlog phi = w . e - conj(w) . conj(e).
struct TwistedElement {
  Mask p = 0;
  Mask q = 0;
  Vector w;

  Bidegree bidegree() const { return {popcount(p), popcount(q)}; }
  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;
};

/// Frame of left-invariant holomorphic forms: d e_k = -sum c_{ij}^k e_i ^ e_j.
TwistedFrame holomorphic_frame(const LieAlgebra& g);

/// The double complex spanned by `elements` with d(phi w) = phi (dlog phi ^ w + dw)
/// split by bidegree, and the real structure
/// (P, Q, w) -> (-1)^{|P||Q|} (Q, P, -w).
/// Within a bidegree elements are ordered by (index of P, index of Q, w) with
/// monomials in lexicographic order. Throws InternalError when d leaves the
/// span, conjugation leaves the element set, or d^2 != 0.
BicomplexWithReal build_twisted_complex(const TwistedFrame& frame,
                                        std::vector<TwistedElement> elements);

}  // namespace dcx
