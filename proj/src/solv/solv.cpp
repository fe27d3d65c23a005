#include "dcx/solv/solv.hpp"

#include <random>

#include "dcx/error.hpp"
#include "dcx/exact/subspace.hpp"
#include "dcx/solv/twisted.hpp"

namespace dcx {

namespace {

bool is_zero_vector(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

Vector negate(Vector a) {
  for (auto& s : a) s = -s;
  return a;
}

Vector conj(Vector a) {
  for (auto& s : a) s = s.conj();
  return a;
}

// Span of [u, v] for u in `left`, v in `right`.
Subspace bracket_span(const LieAlgebra& g, const std::vector<Vector>& left,
                      const std::vector<Vector>& right) {
  std::vector<Vector> out;
  for (const auto& u : left) {
    for (const auto& v : right) out.push_back(g.bracket(u, v));
  }
  return Subspace::span(g.dim(), out);
}

std::vector<Vector> unit_vectors(std::size_t n) {
  std::vector<Vector> out(n, Vector(n));
  for (std::size_t k = 0; k < n; ++k) out[k][k] = Scalar(1);
  return out;
}

}  // namespace

Character Character::trivial(std::size_t n) { return {Vector(n), Vector(n)}; }

bool Character::is_trivial() const { return is_zero_vector(hol) && is_zero_vector(antihol); }

bool Character::is_holomorphic() const { return is_zero_vector(antihol); }

bool Character::is_unitary() const { return antihol == negate(dcx::conj(hol)); }

Character Character::operator*(const Character& o) const {
  return {add(hol, o.hol), add(antihol, o.antihol)};
}

Character Character::inverse() const { return {negate(hol), negate(antihol)}; }

Character Character::conj() const { return {dcx::conj(antihol), dcx::conj(hol)}; }

Character unitary_holomorphic_part(const Character& alpha) {
  return {negate(dcx::conj(alpha.antihol)), alpha.antihol};
}

Character unitary_antiholomorphic_part(const Character& alpha) {
  return {negate(alpha.hol), dcx::conj(alpha.hol)};
}

bool is_solvable(const LieAlgebra& g) {
  std::vector<Vector> current = unit_vectors(g.dim());
  while (!current.empty()) {
    const Subspace next = bracket_span(g, current, current);
    if (next.dim() == current.size()) return false;
    current = next.basis_vectors();
  }
  return true;
}

bool is_nilpotent(const LieAlgebra& g) {
  const std::vector<Vector> all = unit_vectors(g.dim());
  std::vector<Vector> current = all;
  while (!current.empty()) {
    const Subspace next = bracket_span(g, all, current);
    if (next.dim() == current.size()) return false;
    current = next.basis_vectors();
  }
  return true;
}

Vector subset_weight(const SolvData& sd, Mask subset) {
  Vector w(sd.g.dim());
  for (std::size_t i = 0; i < sd.g.dim(); ++i) {
    if (subset >> i & 1) w = add(w, sd.weights[i]);
  }
  return w;
}

bool flag(const SolvData& sd, Mask subset) {
  using Mode = GammaFlags<Mask>::Mode;
  switch (sd.flags.mode) {
    case Mode::all:
      return true;
    case Mode::identically:
      return is_zero_vector(subset_weight(sd, subset));
    case Mode::listed:
      return sd.flags.listed.contains(subset);
  }
  return false;
}

namespace {

// Shared flag checks over a finite key set. `character` maps a key to the
// character it flags, `identically` says whether that character is trivial.
template <class Key, class CharacterOf, class Flag, class Disjoint, class Union>
void validate_flags(const std::vector<Key>& keys, CharacterOf character, Flag flagged,
                    Disjoint disjoint, Union join) {
  std::vector<decltype(character(keys.front()))> chars;
  chars.reserve(keys.size());
  for (const auto& k : keys) chars.push_back(character(k));
  const auto trivial = character(keys.front());
  for (std::size_t a = 0; a < keys.size(); ++a) {
    if (chars[a] == trivial && !flagged(keys[a])) {
      throw ValidationError("flags miss an identically trivial character");
    }
    for (std::size_t b = 0; b < keys.size(); ++b) {
      if (!flagged(keys[a]) || !flagged(keys[b])) continue;
      if (disjoint(keys[a], keys[b]) && !flagged(join(keys[a], keys[b]))) {
        throw ValidationError("flags are not closed under disjoint union");
      }
    }
    for (std::size_t b = a + 1; b < keys.size(); ++b) {
      if (chars[a] == chars[b] && flagged(keys[a]) != flagged(keys[b])) {
        throw ValidationError("flags separate index sets with the same character");
      }
    }
  }
}

}  // namespace

void validate_solv(const SolvData& sd) {
  const LieAlgebra& g = sd.g;
  const std::size_t n = g.dim();
  if (n > 20) throw ValidationError("solvable algebra too large");
  if (const auto r = validate_lie(g); !r.ok) throw ValidationError("Jacobi identity fails");
  if (!is_solvable(g)) throw ValidationError("algebra is not solvable");
  if (sd.weights.size() != n) throw ValidationError("one weight per basis vector required");
  for (const auto& w : sd.weights) {
    if (w.size() != n) throw ValidationError("weight covector has the wrong length");
  }
  for (const auto& [key, c] : g.constants()) {
    const auto [i, j, k] = key;
    for (std::size_t l = 0; l < n; ++l) {
      if (!sd.weights[l][k].is_zero()) {
        throw ValidationError("weight " + std::to_string(l) + " does not vanish on [g,g]");
      }
    }
    if (sd.weights[k] != add(sd.weights[i], sd.weights[j])) {
      throw ValidationError("bracket [X_" + std::to_string(i) + ",X_" + std::to_string(j) +
                            "] breaks the weight grading");
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar diag = m == i ? Scalar(0) : g.constant(m, i, i);
      if (diag != sd.weights[i][m]) {
        throw ValidationError("ad(X_" + std::to_string(m) + ") has diagonal entry " +
                              diag.to_string() + " on X_" + std::to_string(i) +
                              ", weight says " + sd.weights[i][m].to_string());
      }
    }
  }
  if (sd.flags.mode != GammaFlags<Mask>::Mode::listed) return;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask s : sd.flags.listed) {
    if (s & ~full) throw ValidationError("flagged subset has an index out of range");
  }
  std::vector<Mask> keys;
  for (Mask s = 0; s <= full; ++s) keys.push_back(s);
  validate_flags(
      keys, [&](Mask s) { return subset_weight(sd, s); }, [&](Mask s) { return flag(sd, s); },
      [](Mask a, Mask b) { return (a & b) == 0; }, [](Mask a, Mask b) { return a | b; });
}

BicomplexWithReal build_C(const SolvData& sd) {
  validate_solv(sd);
  const std::size_t n = sd.g.dim();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<TwistedElement> elements;
  for (Mask k = 0; k <= full; ++k) {
    if (!flag(sd, k)) continue;
    const Vector a = subset_weight(sd, k);
    const Vector minus_a = negate(a);
    for (Mask p = 0; p <= full; ++p) {
      // x_P ^ (conj(alpha_K)/alpha_K) xbar_K and its conjugate.
      elements.push_back({p, k, minus_a});
      elements.push_back({k, p, a});
    }
  }
  return build_twisted_complex(holomorphic_frame(sd.g), std::move(elements));
}

SolvData nakamura_preset(NakamuraCase c) {
  SolvData sd;
  sd.g = LieAlgebra(3);
  sd.g.set_bracket(0, 1, 1, Scalar(1));
  sd.g.set_bracket(0, 2, 2, Scalar(-1));
  sd.weights = {Vector(3), Vector{Scalar(1), Scalar(0), Scalar(0)},
                Vector{Scalar(-1), Scalar(0), Scalar(0)}};
  sd.flags.mode = c == NakamuraCase::identically ? GammaFlags<Mask>::Mode::identically
                                                 : GammaFlags<Mask>::Mode::all;
  return sd;
}

SolvData random_solvable(std::uint64_t seed, std::size_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("random_solvable needs 1 <= n <= 6");
  std::mt19937_64 rng(seed);
  SolvData sd;
  sd.g = LieAlgebra(n);
  sd.weights.assign(n, Vector(n));
  const std::size_t toral = n <= 2 ? 1 : 1 + rng() % 2;
  std::uniform_int_distribution<int> weight(-2, 2);
  for (std::size_t j = toral; j < n; ++j) {
    for (std::size_t a = 0; a < toral; ++a) sd.weights[j][a] = Scalar(weight(rng));
  }
  if (n > 1 && rng() % 4 == 0) {
    // Nilpotent case: no toral action at all.
    for (auto& w : sd.weights) w = Vector(n);
  }
  for (std::size_t a = 0; a < toral; ++a) {
    for (std::size_t j = toral; j < n; ++j) {
      if (!sd.weights[j][a].is_zero()) sd.g.set_bracket(a, j, j, sd.weights[j][a]);
    }
  }
  static const long coefficients[] = {1, -1, 2};
  for (std::size_t i = toral; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (rng() % 2 == 0) continue;
        if (sd.weights[k] != add(sd.weights[i], sd.weights[j])) continue;
        sd.g.set_bracket(i, j, k, Scalar(coefficients[rng() % 3]));
        if (!validate_lie(sd.g).ok) sd.g.set_bracket(i, j, k, Scalar(0));
        break;
      }
    }
  }
  using Mode = GammaFlags<Mask>::Mode;
  switch (rng() % 4) {
    case 0:
      sd.flags.mode = Mode::all;
      break;
    case 1:
      sd.flags.mode = Mode::identically;
      break;
    default: {
      // flag(I) iff each toral coordinate of a_I is divisible by its modulus
      // (modulus 0 means the coordinate must vanish).
      std::vector<long> modulus(toral);
      for (auto& m : modulus) m = static_cast<long>(rng() % 4);
      sd.flags.mode = Mode::listed;
      for (Mask s = 0; s < (Mask{1} << n); ++s) {
        const Vector w = subset_weight(sd, s);
        bool ok = true;
        for (std::size_t a = 0; a < toral && ok; ++a) {
          const long v = w[a].re().get_num().get_si();
          ok = modulus[a] == 0 ? v == 0 : v % modulus[a] == 0;
        }
        if (ok) sd.flags.listed.insert(s);
      }
    }
  }
  validate_solv(sd);
  return sd;
}

Character pair_character(const SplittingData& sp, Mask j, Mask l) {
  Character c = Character::trivial(sp.n_abelian);
  for (std::size_t k = 0; k < sp.phi.size(); ++k) {
    if (j >> k & 1) c = c * unitary_holomorphic_part(sp.phi[k]);
    if (l >> k & 1) c = c * unitary_antiholomorphic_part(sp.phi[k]);
  }
  return c;
}

bool flag(const SplittingData& sp, Mask j, Mask l) {
  using Mode = GammaFlags<std::pair<Mask, Mask>>::Mode;
  switch (sp.flags.mode) {
    case Mode::all:
      return true;
    case Mode::identically:
      return pair_character(sp, j, l).is_trivial();
    case Mode::listed:
      return sp.flags.listed.contains({j, l});
  }
  return false;
}

void validate_splitting(const SplittingData& sp) {
  const std::size_t n = sp.n_abelian;
  const std::size_t m = sp.nilp.dim();
  if (n + m > 10) throw ValidationError("splitting data too large");
  if (const auto r = validate_lie(sp.nilp); !r.ok) throw ValidationError("Jacobi identity fails");
  if (!is_nilpotent(sp.nilp)) throw ValidationError("nilpotent factor is not nilpotent");
  if (sp.phi.size() != m) throw ValidationError("one character per nilpotent basis vector required");
  for (const auto& c : sp.phi) {
    if (c.hol.size() != n || c.antihol.size() != n) {
      throw ValidationError("character exponents have the wrong length");
    }
  }
  for (const auto& [key, c] : sp.nilp.constants()) {
    const auto [i, j, k] = key;
    if (sp.phi[k] != sp.phi[i] * sp.phi[j]) {
      throw ValidationError("bracket [Y_" + std::to_string(i) + ",Y_" + std::to_string(j) +
                            "] is not equivariant for the characters");
    }
  }
  for (const auto& c : sp.phi) {
    if (!unitary_holomorphic_part(c).is_unitary() || !unitary_antiholomorphic_part(c).is_unitary()) {
      throw InternalError("computed unitary character is not unitary");
    }
  }
  if (sp.flags.mode != GammaFlags<std::pair<Mask, Mask>>::Mode::listed) return;
  const Mask full = (Mask{1} << m) - 1;
  for (const auto& [j, l] : sp.flags.listed) {
    if ((j | l) & ~full) throw ValidationError("flagged pair has an index out of range");
  }
  using Key = std::pair<Mask, Mask>;
  std::vector<Key> keys;
  for (Mask j = 0; j <= full; ++j) {
    for (Mask l = 0; l <= full; ++l) keys.push_back({j, l});
  }
  validate_flags(
      keys, [&](const Key& k) { return pair_character(sp, k.first, k.second); },
      [&](const Key& k) { return flag(sp, k.first, k.second); },
      [](const Key& a, const Key& b) { return (a.first & b.first) == 0 && (a.second & b.second) == 0; },
      [](const Key& a, const Key& b) { return Key{a.first | b.first, a.second | b.second}; });
}

BicomplexWithReal build_splitting(const SplittingData& sp) {
  validate_splitting(sp);
  const std::size_t n = sp.n_abelian;
  const std::size_t m = sp.nilp.dim();
  const std::size_t big = n + m;
  TwistedFrame frame;
  frame.n = big;
  frame.d.resize(big);
  for (std::size_t j = 0; j < m; ++j) {
    const Mask y = Mask{1} << (n + j);
    // d yhat_j = -(h_j . x + k_j . xbar) ^ yhat_j - sum c yhat ^ yhat
    for (std::size_t a = 0; a < n; ++a) {
      const Scalar& h = sp.phi[j].hol[a];
      const Scalar& k = sp.phi[j].antihol[a];
      if (!h.is_zero()) frame.d[n + j].push_back({(Mask{1} << a) | y, -h});
      if (!k.is_zero()) frame.d[n + j].push_back({(Mask{1} << (big + a)) | y, k});
    }
  }
  for (const auto& [key, c] : sp.nilp.constants()) {
    const auto [i, j, k] = key;
    frame.d[n + k].push_back({(Mask{1} << (n + i)) | (Mask{1} << (n + j)), -c});
  }

  const Mask full = (Mask{1} << big) - 1;
  auto twist = [&](const Character& c) {
    if (!c.is_unitary()) throw InternalError("twisting character is not unitary");
    Vector w(big);
    for (std::size_t a = 0; a < n; ++a) w[a] = c.hol[a];
    return w;
  };
  std::vector<TwistedElement> elements;
  for (Mask p = 0; p <= full; ++p) {
    for (Mask q = 0; q <= full; ++q) {
      const Mask jp = p >> n;
      const Mask lq = q >> n;
      if (flag(sp, jp, lq)) elements.push_back({p, q, twist(pair_character(sp, jp, lq))});
      if (flag(sp, lq, jp)) elements.push_back({p, q, twist(pair_character(sp, lq, jp).conj())});
    }
  }
  return build_twisted_complex(frame, std::move(elements));
}

SplittingData splitting_preset(SplittingCase c) {
  SplittingData sp;
  sp.n_abelian = 1;
  sp.nilp = LieAlgebra(2);
  sp.phi = {Character{Vector{Scalar(1)}, Vector{Scalar(0)}},
            Character{Vector{Scalar(-1)}, Vector{Scalar(0)}}};
  using Mode = GammaFlags<std::pair<Mask, Mask>>::Mode;
  sp.flags.mode = c == SplittingCase::identically ? Mode::identically : Mode::all;
  return sp;
}

SplittingData random_splitting(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SplittingData sp;
  sp.n_abelian = 1 + rng() % 2;
  const bool heisenberg = sp.n_abelian == 1 && rng() % 3 == 0;
  const std::size_t m = heisenberg ? 3 : 1 + rng() % 2;
  sp.nilp = LieAlgebra(m);
  static const Scalar exponents[] = {Scalar(0), Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  auto random_vector = [&] {
    Vector v(sp.n_abelian);
    for (auto& s : v) s = exponents[rng() % 5];
    return v;
  };
  for (std::size_t j = 0; j < m; ++j) {
    Character c{random_vector(), rng() % 2 ? random_vector() : Vector(sp.n_abelian)};
    sp.phi.push_back(c);
  }
  if (heisenberg) {
    sp.nilp.set_bracket(0, 1, 2, Scalar(1));
    sp.phi[2] = sp.phi[0] * sp.phi[1];
  }
  using Mode = GammaFlags<std::pair<Mask, Mask>>::Mode;
  switch (rng() % 3) {
    case 0:
      sp.flags.mode = Mode::all;
      break;
    case 1:
      sp.flags.mode = Mode::identically;
      break;
    default: {
      // flag iff the real and imaginary parts of every exponent are even.
      sp.flags.mode = Mode::listed;
      const Mask full = (Mask{1} << m) - 1;
      for (Mask j = 0; j <= full; ++j) {
        for (Mask l = 0; l <= full; ++l) {
          const Character c = pair_character(sp, j, l);
          bool ok = true;
          for (const auto& s : c.hol) {
            ok = ok && s.re().get_num().get_si() % 2 == 0 && s.im().get_num().get_si() % 2 == 0;
          }
          if (ok) sp.flags.listed.insert({j, l});
        }
      }
    }
  }
  validate_splitting(sp);
  return sp;
}

}  // namespace dcx
