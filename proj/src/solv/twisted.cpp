#include "dcx/solv/twisted.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "dcx/error.hpp"

namespace dcx {

TwistedFrame holomorphic_frame(const LieAlgebra& g) {
  TwistedFrame f;
  f.n = g.dim();
  f.d.resize(f.n);
  for (const auto& [key, c] : g.constants()) {
    const auto [i, j, k] = key;
    f.d[k].push_back({(Mask{1} << i) | (Mask{1} << j), -c});
  }
  return f;
}

namespace {

struct Key {
  std::size_t p_index;
  std::size_t q_index;
  Vector w;
  friend auto operator<=>(const Key&, const Key&) = default;
};

// Terms of a form as monomial -> coefficient.
using Form = std::map<Mask, Scalar>;

void add_term(Form& f, Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

class Engine {
 public:
  explicit Engine(const TwistedFrame& frame) : n_(frame.n), dgen_(2 * frame.n) {
    if (frame.d.size() != n_) throw StructuralError("frame differential has the wrong length");
    const Mask low = (Mask{1} << n_) - 1;
    for (std::size_t a = 0; a < n_; ++a) {
      for (const auto& [m, c] : frame.d[a]) {
        if (std::popcount(m) != 2 || (m >> (2 * n_)) != 0) {
          throw StructuralError("frame differential must be a 2-form");
        }
        if (std::popcount(m & ~low) > 1) throw StructuralError("frame differential has a (0,2) part");
        dgen_[a].push_back({m, c});
        // conj: swap e_i <-> conj(e_i) and conjugate the coefficient.
        const int g1 = std::countr_zero(m);
        const int g2 = std::countr_zero(m & (m - 1));
        const int s1 = swap_index(g1);
        const int s2 = swap_index(g2);
        const int sign = wedge_sign(Mask{1} << s1, Mask{1} << s2);
        const Mask swapped = (Mask{1} << s1) | (Mask{1} << s2);
        dgen_[n_ + a].push_back({swapped, sign > 0 ? c.conj() : -c.conj()});
      }
    }
  }

  Mask combine(Mask p, Mask q) const { return p | (q << n_); }
  Mask p_part(Mask m) const { return m & ((Mask{1} << n_) - 1); }
  Mask q_part(Mask m) const { return m >> n_; }

  Form d(Mask m, const Vector& w) const {
    Form out;
    int t = 0;
    for (Mask rest = m; rest; rest &= rest - 1, ++t) {
      const int g = std::countr_zero(rest);
      const Mask left = m & ((Mask{1} << g) - 1);
      const Mask right = m & ~((Mask{1} << (g + 1)) - 1);
      for (const auto& [pair, c] : dgen_[static_cast<std::size_t>(g)]) {
        const int s1 = wedge_sign(left, pair);
        if (s1 == 0) continue;
        const int s2 = wedge_sign(left | pair, right);
        if (s2 == 0) continue;
        const int sign = (t % 2 == 0 ? 1 : -1) * s1 * s2;
        add_term(out, left | pair | right, sign > 0 ? c : -c);
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (w[j].is_zero()) continue;
      const Mask e = Mask{1} << j;
      if (const int s = wedge_sign(e, m)) add_term(out, e | m, s > 0 ? w[j] : -w[j]);
      const Mask ebar = Mask{1} << (n_ + j);
      const Scalar cw = -w[j].conj();
      if (const int s = wedge_sign(ebar, m)) add_term(out, ebar | m, s > 0 ? cw : -cw);
    }
    return out;
  }

 private:
  int swap_index(int g) const {
    const int n = static_cast<int>(n_);
    return g < n ? g + n : g - n;
  }

  std::size_t n_;
  std::vector<std::vector<std::pair<Mask, Scalar>>> dgen_;
};

}  // namespace

BicomplexWithReal build_twisted_complex(const TwistedFrame& frame,
                                        std::vector<TwistedElement> elements) {
  const Engine engine(frame);
  const ExteriorBasis basis(static_cast<int>(frame.n));
  for (auto& e : elements) {
    if (e.w.size() != frame.n) throw StructuralError("twist covector has the wrong length");
  }
  auto key_of = [&](const TwistedElement& e) {
    return Key{basis.index(e.p), basis.index(e.q), e.w};
  };
  std::sort(elements.begin(), elements.end(), [&](const TwistedElement& a, const TwistedElement& b) {
    const Bidegree ba = a.bidegree();
    const Bidegree bb = b.bidegree();
    if (ba != bb) return ba < bb;
    return key_of(a) < key_of(b);
  });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  // (mask, w) -> (bidegree, position)
  std::map<std::pair<Mask, Vector>, std::pair<Bidegree, std::size_t>> where;
  std::map<Bidegree, std::size_t> dims;
  for (const auto& e : elements) {
    const Bidegree b = e.bidegree();
    where[{engine.combine(e.p, e.q), e.w}] = {b, dims[b]++};
  }

  BicomplexWithReal out;
  for (const auto& [b, n] : dims) out.complex.set_space(b, n);
  std::map<Bidegree, Matrix> del, delbar;
  auto matrix_for = [&](std::map<Bidegree, Matrix>& maps, Bidegree src, Bidegree tgt) -> Matrix& {
    return maps.try_emplace(src, dims[tgt], dims[src]).first->second;
  };
  for (const auto& e : elements) {
    const Bidegree b = e.bidegree();
    const std::size_t col = where.at({engine.combine(e.p, e.q), e.w}).second;
    for (const auto& [m, c] : engine.d(engine.combine(e.p, e.q), e.w)) {
      auto it = where.find({m, e.w});
      if (it == where.end()) {
        throw InternalError("twisted differential leaves the complex from " + to_string(b));
      }
      const auto [tb, row] = it->second;
      if (tb == Bidegree{b.p + 1, b.q}) {
        matrix_for(del, b, tb).set(row, col, c);
      } else if (tb == Bidegree{b.p, b.q + 1}) {
        matrix_for(delbar, b, tb).set(row, col, c);
      } else {
        throw InternalError("twisted differential has the wrong bidegree");
      }
    }
  }
  for (auto& [b, m] : del) {
    if (!m.is_zero()) out.complex.set_del(b, std::move(m));
  }
  for (auto& [b, m] : delbar) {
    if (!m.is_zero()) out.complex.set_delbar(b, std::move(m));
  }

  for (const auto& [b, n] : dims) out.real.sigma[b] = Matrix(dims[b.transposed()], n);
  for (const auto& e : elements) {
    const Bidegree b = e.bidegree();
    Vector neg(e.w.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -e.w[j];
    auto it = where.find({engine.combine(e.q, e.p), neg});
    if (it == where.end()) throw InternalError("conjugate of a generator is missing at " + to_string(b));
    const std::size_t col = where.at({engine.combine(e.p, e.q), e.w}).second;
    const Scalar sign((b.p * b.q) % 2 == 0 ? 1 : -1);
    out.real.sigma[b].set(it->second.second, col, sign);
  }

  const ValidationReport report = validate(out.complex);
  if (!report.ok) {
    throw InternalError("twisted complex fails " + report.identity + " at " + to_string(*report.failing));
  }
  return out;
}

}  // namespace dcx
