#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dcx/lie/exterior.hpp"
#include "dcx/lie/lie.hpp"

namespace dcx {

/// t -> exp(hol . t + antihol . conj(t)) on C^n.
struct Character {
  Vector hol;
  Vector antihol;

  static Character trivial(std::size_t n);
  bool is_trivial() const;
  bool is_holomorphic() const;
  bool is_unitary() const;
  Character operator*(const Character& o) const;
  Character inverse() const;
  /// The complex conjugate function.
  Character conj() const;

  friend bool operator==(const Character&, const Character&) = default;
};

/// The unitary beta with alpha / beta holomorphic.
Character unitary_holomorphic_part(const Character& alpha);
/// The unitary gamma with conj(alpha) / gamma holomorphic.
Character unitary_antiholomorphic_part(const Character& alpha);

/// Gamma-triviality oracle on index sets.
template <class Key>
struct GammaFlags {
  enum class Mode { all, identically, listed };
  Mode mode = Mode::identically;
  std::set<Key> listed;

  friend bool operator==(const GammaFlags&, const GammaFlags&) = default;
};

struct SolvData {
  LieAlgebra g;
  /// weights[i][j] = a_i(X_j).
  std::vector<Vector> weights;
  /// flag(I) iff conj(alpha_I) / alpha_I is trivial on the lattice.
  GammaFlags<Mask> flags;
};

/// Sum of a_i over i in I.
Vector subset_weight(const SolvData& sd, Mask subset);
bool flag(const SolvData& sd, Mask subset);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// Throws ValidationError on a non-solvable algebra, weights that are not
/// characters, brackets that break the weight grading, diagonal entries of ad
/// that differ from the weights, or flags that miss an identically trivial
/// subset, are not closed under disjoint union, or separate subsets of equal
/// weight.
void validate_solv(const SolvData& sd);

/// The subcomplex C: forms x_P ^ (conj(alpha_K)/alpha_K) xbar_K for flagged K,
/// their conjugates, with the overlap counted once.
BicomplexWithReal build_C(const SolvData& sd);

enum class NakamuraCase { identically, real };
/// X, Y1, Y2 with [X,Y1] = Y1, [X,Y2] = -Y2.
SolvData nakamura_preset(NakamuraCase c);

/// Toral part plus a weighted nilpotent part; flags from a random
/// per-coordinate congruence on the weights. Requires 1 <= n <= 6.
SolvData random_solvable(std::uint64_t seed, std::size_t n);

struct SplittingData {
  std::size_t n_abelian = 0;
  /// Complex nilpotent algebra on Y_0..Y_{m-1}.
  LieAlgebra nilp;
  /// alpha_j on C^n, acting on Y_j.
  std::vector<Character> phi;
  /// flag(J, L) iff beta_J gamma_L is trivial on the lattice.
  GammaFlags<std::pair<Mask, Mask>> flags;
};

/// beta_J gamma_L.
Character pair_character(const SplittingData& sp, Mask j, Mask l);
bool flag(const SplittingData& sp, Mask j, Mask l);

/// Throws ValidationError unless nilp is nilpotent, the characters have the
/// right lengths, brackets respect the characters, and the flags satisfy the
/// same conditions as for SolvData.
void validate_splitting(const SplittingData& sp);

/// C_Gamma = B_Gamma + conj(B_Gamma) over the frame x_1..x_n,
/// yhat_j = alpha_j^{-1} y_j.
BicomplexWithReal build_splitting(const SplittingData& sp);

enum class SplittingCase { identically, real };
/// n = 1, N = C^2, alpha = (e^z, e^{-z}).
SplittingData splitting_preset(SplittingCase c);

/// Small random splitting data: n in {1,2}, m in {1,2}, integer exponents.
SplittingData random_splitting(std::uint64_t seed);

}  // namespace dcx
