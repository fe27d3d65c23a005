#include "dcx/lie/lie.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dcx/error.hpp"
#include "dcx/lie/exterior.hpp"

namespace dcx {

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw StructuralError("bracket index out of range");
  if (i == j) throw StructuralError("bracket [X_i, X_i] is zero by antisymmetry");
  Scalar v = value;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  if (v.is_zero()) {
    constants_.erase({i, j, k});
  } else {
    constants_[{i, j, k}] = v;
  }
}

Scalar LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Scalar();
  const bool flip = i > j;
  auto it = constants_.find(flip ? std::tuple{j, i, k} : std::tuple{i, j, k});
  if (it == constants_.end()) return Scalar();
  return flip ? -it->second : it->second;
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = constant(i, j, k);
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw StructuralError("bracket: vector length mismatch");
  Vector out(dim_);
  for (const auto& [key, c] : constants_) {
    const auto [i, j, k] = key;
    // [x, y] picks up c_{ij}^k (x_i y_j - x_j y_i).
    Scalar coeff = x[i] * y[j] - x[j] * y[i];
    if (!coeff.is_zero()) out[k].add_product(coeff, c);
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vector e(dim_);
    e[j] = Scalar(1);
    const Vector col = bracket(x, e);
    for (std::size_t k = 0; k < dim_; ++k) m.set(k, j, col[k]);
  }
  return m;
}

LieReport validate_lie(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto basis = [n](std::size_t i) {
    Vector e(n);
    e[i] = Scalar(1);
    return e;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        const Vector a = g.bracket(g.bracket(i, j), basis(l));
        const Vector b = g.bracket(g.bracket(j, l), basis(i));
        const Vector c = g.bracket(g.bracket(l, i), basis(j));
        for (std::size_t k = 0; k < n; ++k) {
          if (!(a[k] + b[k] + c[k]).is_zero()) return {false, std::array{i, j, l}};
        }
      }
    }
  }
  return {};
}

SimpleComplex ce_complex(const LieAlgebra& g) {
  const int n = static_cast<int>(g.dim());
  const ExteriorBasis basis(n);
  // d e^k = -sum_{a<b} c_{ab}^k e^a ^ e^b.
  std::vector<std::vector<std::pair<Mask, Scalar>>> de(static_cast<std::size_t>(n));
  for (const auto& [key, c] : g.constants()) {
    const auto [a, b, k] = key;
    de[k].push_back({(Mask{1} << a) | (Mask{1} << b), -c});
  }
  SimpleComplex ce;
  for (int k = 0; k <= n; ++k) ce.dims[k] = basis.dim(k);
  for (int k = 0; k < n; ++k) {
    Matrix d(basis.dim(k + 1), basis.dim(k));
    const auto& monomials = basis.degree(k);
    for (std::size_t col = 0; col < monomials.size(); ++col) {
      const Mask m = monomials[col];
      int t = 0;
      for (Mask rest = m; rest; rest &= rest - 1, ++t) {
        const int i = std::countr_zero(rest);
        const Mask left = m & ((Mask{1} << i) - 1);
        const Mask right = m & ~((Mask{1} << (i + 1)) - 1);
        for (const auto& [pair, c] : de[static_cast<std::size_t>(i)]) {
          const int s1 = wedge_sign(left, pair);
          if (s1 == 0) continue;
          const int s2 = wedge_sign(left | pair, right);
          if (s2 == 0) continue;
          const int sign = (t % 2 == 0 ? 1 : -1) * s1 * s2;
          d.add_to(basis.index(left | pair | right), col, sign > 0 ? c : -c);
        }
      }
    }
    if (!d.is_zero()) ce.d[k] = std::move(d);
  }
  if (!ce.is_complex()) throw ValidationError("Chevalley-Eilenberg differential does not square to zero");
  return ce;
}

BicomplexWithReal invariant_bicomplex(const LieAlgebra& g) {
  const SimpleComplex ce = ce_complex(g);
  return {tensor_product(ce, ce.conj()), swap_real_structure(ce)};
}

LieAlgebra abelian_algebra(std::size_t n) { return LieAlgebra(n); }

LieAlgebra heisenberg3() {
  LieAlgebra g(3);
  g.set_bracket(0, 1, 2, Scalar(1));
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g(3);
  g.set_bracket(0, 1, 1, Scalar(2));
  g.set_bracket(0, 2, 2, Scalar(-2));
  g.set_bracket(1, 2, 0, Scalar(1));
  return g;
}

LieAlgebra lie_catalog(const std::string& name) {
  if (name == "heisenberg3") return heisenberg3();
  if (name == "sl2") return sl2();
  if (name.rfind("abelian:", 0) == 0) {
    const std::string digits = name.substr(8);
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != digits.size() || n < 1 || n > 6) {
      throw std::invalid_argument("abelian:<n> needs 1 <= n <= 6");
    }
    return abelian_algebra(static_cast<std::size_t>(n));
  }
  throw std::invalid_argument("unknown Lie algebra '" + name + "'");
}

std::vector<std::string> lie_catalog_names() {
  return {"abelian:1", "abelian:2", "abelian:3", "heisenberg3", "sl2"};
}

LieAlgebra realification(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  LieAlgebra r(2 * n);
  for (const auto& [key, c] : g.constants()) {
    const auto [a, b, k] = key;
    const Scalar re(c.re());
    const Scalar im(c.im());
    // c = re + i im;  X_k -> k,  iX_k -> n + k.
    r.set_bracket(a, b, k, re);
    r.set_bracket(a, b, n + k, im);
    // [X_a, iX_b] = [iX_a, X_b] = i c X_k = -im X_k + re iX_k.
    for (auto [x, y] : {std::pair{a, n + b}, std::pair{n + a, b}}) {
      r.set_bracket(x, y, k, r.constant(x, y, k) - im);
      r.set_bracket(x, y, n + k, r.constant(x, y, n + k) + re);
    }
    // [iX_a, iX_b] = -c X_k.
    r.set_bracket(n + a, n + b, k, -re);
    r.set_bracket(n + a, n + b, n + k, -im);
  }
  return r;
}

void validate_subalgebra(const LieAlgebra& g, const Subalgebra& k) {
  const Matrix& inc = k.inclusion;
  if (inc.rows() != g.dim()) throw ValidationError("subalgebra generators have the wrong length");
  if (rank(inc) != inc.cols()) throw ValidationError("subalgebra generators are dependent");
  const Subspace span = Subspace::column_span(inc);
  for (std::size_t a = 0; a < inc.cols(); ++a) {
    for (std::size_t b = a + 1; b < inc.cols(); ++b) {
      if (!span.contains(g.bracket(inc.column(a), inc.column(b)))) {
        throw ValidationError("generators " + std::to_string(a) + " and " + std::to_string(b) +
                              " bracket outside the span");
      }
    }
  }
}

Subalgebra su2_in_realified_sl2() {
  const std::vector<Vector> gens = {
      {0, 0, 0, 1, 0, 0},   // iH
      {0, 1, -1, 0, 0, 0},  // E - F
      {0, 0, 0, 0, 1, 1},   // i(E + F)
  };
  return {Matrix::from_columns(gens, 6)};
}

bool is_semisimple(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n == 0) return false;
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = Scalar(1);
    ads.push_back(g.ad(e));
  }
  Matrix killing(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Matrix prod = ads[a] * ads[b];
      Scalar tr;
      for (std::size_t k = 0; k < n; ++k) tr += prod.at(k, k);
      killing.set(a, b, tr);
      killing.set(b, a, tr);
    }
  }
  return rank(killing) == n;
}

SemisimpleModel semisimple_e2_model(const LieAlgebra& g, const std::vector<std::size_t>& betti) {
  if (betti.empty() || betti[0] != 1) throw ValidationError("Betti vector must start with 1");
  const auto h = ce_complex(g).cohomology();
  SemisimpleModel model;
  const int pmax = static_cast<int>(g.dim());
  const int qmax = static_cast<int>(betti.size()) - 1;
  auto value = [&](int p, int q) -> std::size_t {
    if (p < 0 || q < 0 || p > pmax || q > qmax) return 0;
    auto it = h.find(p);
    return (it == h.end() ? 0 : it->second) * betti[static_cast<std::size_t>(q)];
  };
  for (int p = 0; p <= pmax; ++p) {
    for (int q = 0; q <= qmax; ++q) model.e2[{p, q}] = value(p, q);
  }
  const int top = std::max(pmax, qmax);
  for (int p = 0; p <= top; ++p) {
    for (int q = p + 1; q <= top; ++q) {
      if (value(p, q) != value(q, p)) model.asymmetric.push_back({p, q});
    }
  }
  model.page1 = model.asymmetric.empty();
  return model;
}

bool relative_cohomology_matches_betti(const LieAlgebra& g, const Subalgebra& k,
                                       const std::vector<std::size_t>& betti) {
  if (!is_semisimple(g)) throw ValidationError("Lie algebra is not semisimple");
  const auto rel = relative_ce_cohomology(g, k);
  int top = static_cast<int>(betti.size()) - 1;
  for (const auto& [j, d] : rel) top = std::max(top, j);
  for (int j = 0; j <= top; ++j) {
    auto it = rel.find(j);
    const std::size_t have = it == rel.end() ? 0 : it->second;
    const std::size_t want = j < static_cast<int>(betti.size()) ? betti[static_cast<std::size_t>(j)] : 0;
    if (have != want) return false;
  }
  return true;
}

}  // namespace dcx
