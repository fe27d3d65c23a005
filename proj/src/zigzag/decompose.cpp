#include <algorithm>
#include <optional>
#include <set>

#include "dcx/error.hpp"
#include "dcx/zigzag/zigzag.hpp"

namespace dcx {

namespace {

struct Instance {
  Indecomposable shape;
  /// One vector per bidegree of the shape, in input coordinates.
  std::vector<Vector> vectors;
};

std::vector<std::size_t> pivots_of(const Subspace& s) {
  std::vector<std::size_t> out;
  const Matrix& rows = s.basis_rows();
  for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(rows.row(r).front().col);
  return out;
}

/// The remaining subcomplex in its own coordinates, with the matrices that
/// express its basis in input coordinates.
struct Working {
  DoubleComplex cur;
  std::map<Bidegree, Matrix> to_input;

  Vector lift(Bidegree b, const Vector& v) const { return to_input.at(b) * v; }

  /// Replaces the spaces at the given bidegrees by the subspaces `subs`,
  /// which must form a subcomplex together with the untouched spaces.
  void restrict_to(const std::map<Bidegree, Subspace>& subs) {
    auto sub = [&](Bidegree b) -> std::optional<Subspace> {
      auto it = subs.find(b);
      if (it == subs.end()) return std::nullopt;
      return it->second;
    };
    auto restrict_map = [&](const Matrix& m, Bidegree src, Bidegree tgt) {
      Matrix out = m;
      if (auto s = sub(src)) out = out * s->basis();
      if (auto t = sub(tgt)) {
        const auto piv = pivots_of(*t);
        std::vector<std::size_t> cols(out.cols());
        for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
        Matrix coords = out.select(piv, cols);
        if (t->basis() * coords != out) {
          throw InternalError("square complement is not a subcomplex at " + to_string(tgt));
        }
        out = std::move(coords);
      }
      return out;
    };
    std::set<Bidegree> touched;
    for (const auto& [b, s] : subs) {
      touched.insert(b);
      touched.insert({b.p - 1, b.q});
      touched.insert({b.p, b.q - 1});
    }
    DoubleComplex next;
    for (Bidegree b : cur.support()) {
      auto s = sub(b);
      next.set_space(b, s ? s->dim() : cur.dim(b));
    }
    for (Bidegree b : cur.support()) {
      const Bidegree right{b.p + 1, b.q};
      const Bidegree up{b.p, b.q + 1};
      Matrix d = touched.contains(b) ? restrict_map(cur.del(b), b, right) : cur.del(b);
      Matrix db = touched.contains(b) ? restrict_map(cur.delbar(b), b, up) : cur.delbar(b);
      if (!d.is_zero()) next.set_del(b, std::move(d));
      if (!db.is_zero()) next.set_delbar(b, std::move(db));
    }
    for (const auto& [b, s] : subs) to_input[b] = to_input.at(b) * s.basis();
    cur = std::move(next);
  }
};

std::vector<Bidegree> by_total_then_p(std::vector<Bidegree> bs) {
  std::sort(bs.begin(), bs.end(), [](Bidegree a, Bidegree b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.p < b.p;
  });
  return bs;
}

/// Left inverse of an injective matrix.
Matrix left_inverse(const Matrix& m) {
  const auto rows = rref(m.transpose()).pivots;
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  const Matrix square = inverse(m.select(rows, cols));
  Matrix pick(rows.size(), m.rows());
  for (std::size_t k = 0; k < rows.size(); ++k) pick.set(k, rows[k], Scalar(1));
  return square * pick;
}

void extract_squares(Working& w, std::vector<Instance>& out) {
  for (Bidegree b : by_total_then_p(w.cur.support())) {
    if (w.cur.dim(b) == 0) continue;
    const Matrix dd = w.cur.del_delbar(b);
    if (dd.is_zero()) continue;
    const std::size_t n = w.cur.dim(b);
    const auto gens = complement_basis(Subspace::whole(n), kernel(dd));
    const Bidegree right{b.p + 1, b.q};
    const Bidegree up{b.p, b.q + 1};
    const Bidegree diag{b.p + 1, b.q + 1};

    for (const auto& a : gens) {
      const Vector da = w.cur.del(b) * a;
      const Vector dba = w.cur.delbar(b) * a;
      const Vector ddba = w.cur.del(up) * dba;
      out.push_back({Indecomposable::square(b),
                     {w.lift(b, a), w.lift(right, da), w.lift(up, dba), w.lift(diag, ddba)}});
    }

    const Matrix m = dd * Matrix::from_columns(gens, n);
    const Matrix l = left_inverse(m);
    std::map<Bidegree, Subspace> subs;
    subs.emplace(b, kernel(l * dd));
    subs.emplace(right, kernel(-(l * w.cur.delbar(right))));
    subs.emplace(up, kernel(l * w.cur.del(up)));
    subs.emplace(diag, kernel(l));
    w.restrict_to(subs);
  }
}

enum class Born { cokernel, origin, kernel };

struct Chain {
  std::size_t start = 0;
  Born born = Born::origin;
  /// vecs[t] is the vector at vertex start + t.
  std::vector<Vector> vecs;

  std::size_t end() const { return start + vecs.size() - 1; }
  const Vector& at(std::size_t vertex) const { return vecs[vertex - start]; }
};

// c may be added into d (on their overlap) iff c precedes d in this order.
bool precedes(const Chain& c, const Chain& d) {
  auto key = [](const Chain& x) {
    switch (x.born) {
      case Born::kernel: return std::pair<int, long>(0, -static_cast<long>(x.start));
      case Born::origin: return std::pair<int, long>(1, 0);
      case Born::cokernel: return std::pair<int, long>(2, static_cast<long>(x.start));
    }
    return std::pair<int, long>(3, 0);
  };
  return key(c) < key(d);
}

struct Vertex {
  Bidegree b;
  bool source = false;  // a complement of the closed forms; else the incoming image
  std::size_t ambient = 0;
  std::vector<Vector> basis;
};

Vector axpy(Vector y, const Scalar& a, const Vector& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k].add_product(a, x[k]);
  return y;
}

void sweep(const DoubleComplex& cur, const std::vector<Vertex>& verts, std::vector<Chain>& done) {
  std::vector<Chain> alive;
  for (const auto& v : verts.front().basis) alive.push_back({0, Born::origin, {v}});
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    std::stable_sort(alive.begin(), alive.end(), precedes);
    const Vertex& here = verts[i];
    const Vertex& there = verts[i + 1];
    std::vector<Chain> next;
    if (here.source) {
      // Forward arrow del: here -> there.
      const Matrix f = cur.del(here.b);
      std::vector<std::size_t> kept;
      std::vector<Vector> images;
      for (std::size_t j = 0; j < alive.size(); ++j) {
        const Vector u = f * alive[j].at(i);
        std::optional<Vector> coeff;
        if (!images.empty()) coeff = solve(Matrix::from_columns(images, there.ambient), u);
        const bool zero = std::all_of(u.begin(), u.end(), [](const Scalar& s) { return s.is_zero(); });
        if (zero || coeff) {
          if (!zero) {
            for (std::size_t l = 0; l < kept.size(); ++l) {
              const Chain& src = alive[kept[l]];
              Chain& dst = alive[j];
              for (std::size_t t = std::max(src.start, dst.start); t <= i; ++t) {
                dst.vecs[t - dst.start] = axpy(dst.vecs[t - dst.start], -(*coeff)[l], src.at(t));
              }
            }
          }
          done.push_back(std::move(alive[j]));
        } else {
          kept.push_back(j);
          images.push_back(u);
        }
      }
      for (std::size_t l = 0; l < kept.size(); ++l) {
        Chain c = std::move(alive[kept[l]]);
        c.vecs.push_back(images[l]);
        next.push_back(std::move(c));
      }
      const Subspace target = Subspace::span(there.ambient, there.basis);
      for (const auto& v : complement_basis(target, Subspace::span(there.ambient, images))) {
        next.push_back({i + 1, Born::cokernel, {v}});
      }
    } else {
      // Backward arrow delbar: there -> here.
      const Matrix g = cur.delbar(there.b) * Matrix::from_columns(there.basis, there.ambient);
      const std::size_t m = alive.size();
      std::vector<Vector> chain_vecs;
      for (const auto& c : alive) chain_vecs.push_back(c.at(i));
      const Matrix chain_mat = Matrix::from_columns(chain_vecs, here.ambient);
      std::vector<Vector> reversed_coords;
      for (std::size_t t = 0; t < g.cols(); ++t) {
        auto a = solve(chain_mat, g.column(t));
        if (!a) throw InternalError("image of delbar leaves the incoming span at " + to_string(here.b));
        std::reverse(a->begin(), a->end());
        reversed_coords.push_back(std::move(*a));
      }
      const RrefResult red = rref(Matrix::from_dense(reversed_coords, m));
      std::vector<char> pivot_chain(m, 0);
      std::vector<Chain> replaced;
      for (std::size_t r = 0; r < red.rank(); ++r) {
        Vector a = red.reduced.dense_row(r);
        std::reverse(a.begin(), a.end());
        const std::size_t star = m - 1 - red.pivots[r];
        pivot_chain[star] = 1;
        Chain c{alive[star].start, alive[star].born, {}};
        for (std::size_t t = c.start; t <= i; ++t) {
          Vector v(verts[t].ambient);
          for (std::size_t j = 0; j < m; ++j) {
            if (!a[j].is_zero() && alive[j].start <= t) v = axpy(std::move(v), a[j], alive[j].at(t));
          }
          c.vecs.push_back(std::move(v));
        }
        auto y = solve(g, c.vecs.back());
        if (!y) throw InternalError("no preimage under delbar at " + to_string(there.b));
        c.vecs.push_back(Matrix::from_columns(there.basis, there.ambient) * *y);
        replaced.push_back(std::move(c));
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (!pivot_chain[j]) done.push_back(std::move(alive[j]));
      }
      for (auto& c : replaced) next.push_back(std::move(c));
      const Matrix basis = Matrix::from_columns(there.basis, there.ambient);
      for (const auto& coeff : kernel(g).basis_vectors()) {
        next.push_back({i + 1, Born::kernel, {basis * coeff}});
      }
    }
    alive = std::move(next);
  }
  for (auto& c : alive) done.push_back(std::move(c));
}

void extract_zigzags(const Working& w, std::vector<Instance>& out) {
  const DoubleComplex& cur = w.cur;
  for (Bidegree b : cur.support()) {
    if (!cur.del_delbar(b).is_zero()) throw InternalError("del delbar survives square extraction");
  }
  std::map<Bidegree, std::vector<Vector>> sources;
  std::map<Bidegree, std::vector<Vector>> sinks;
  for (Bidegree b : cur.support()) {
    const std::size_t n = cur.dim(b);
    const Subspace closed = kernel(cur.del(b).vstack(cur.delbar(b)));
    sources[b] = complement_basis(Subspace::whole(n), closed);
    const Subspace incoming =
        subspace_sum(image(cur.del({b.p - 1, b.q})), image(cur.delbar({b.p, b.q - 1})));
    sinks[b] = incoming.basis_vectors();
    for (const auto& v : complement_basis(closed, incoming)) {
      out.push_back({Indecomposable::dot(b), {w.lift(b, v)}});
    }
  }
  if (cur.empty()) return;
  for (int k = cur.min_total() - 1; k <= cur.max_total(); ++k) {
    std::vector<Vertex> verts;
    for (int p = cur.min_p() - 1; p <= cur.max_p() + 1; ++p) {
      const Bidegree y{p, k + 1 - p};
      const Bidegree x{p, k - p};
      verts.push_back({y, false, cur.dim(y), sinks.count(y) ? sinks[y] : std::vector<Vector>{}});
      verts.push_back({x, true, cur.dim(x), sources.count(x) ? sources[x] : std::vector<Vector>{}});
    }
    std::vector<Chain> chains;
    sweep(cur, verts, chains);
    for (const auto& c : chains) {
      const Step first = verts[c.start].source ? Step::del : Step::delbar;
      Instance inst{Indecomposable::zigzag(verts[c.start].b, c.vecs.size(), first), {}};
      for (std::size_t t = c.start; t <= c.end(); ++t) {
        inst.vectors.push_back(w.lift(verts[t].b, c.at(t)));
      }
      out.push_back(std::move(inst));
    }
  }
}

}  // namespace

Decomposition decompose(const DoubleComplex& dc) {
  const ValidationReport report = validate(dc);
  if (!report.ok) {
    throw ValidationError(report.identity + " fails at " + to_string(*report.failing));
  }
  Working w{dc, {}};
  for (Bidegree b : dc.support()) w.to_input[b] = Matrix::identity(dc.dim(b));

  std::vector<Instance> instances;
  extract_squares(w, instances);
  extract_zigzags(w, instances);
  std::stable_sort(instances.begin(), instances.end(),
                   [](const Instance& a, const Instance& b) { return a.shape < b.shape; });

  Decomposition d;
  std::vector<Part> parts;
  for (const auto& inst : instances) parts.push_back({inst.shape, 1});
  d.parts = normalize_parts(std::move(parts));
  d.model = model_complex(d.parts);

  std::map<Bidegree, std::vector<Vector>> columns;
  for (const auto& inst : instances) {
    const auto bds = inst.shape.bidegrees();
    for (std::size_t k = 0; k < bds.size(); ++k) columns[bds[k]].push_back(inst.vectors[k]);
  }
  for (Bidegree b : dc.support()) {
    const auto& cols = columns[b];
    if (cols.size() != dc.dim(b) || d.model.dim(b) != dc.dim(b)) {
      throw InternalError("decomposition has the wrong dimension at " + to_string(b));
    }
    const Matrix q = Matrix::from_columns(cols, dc.dim(b));
    if (rank(q) != dc.dim(b)) throw InternalError("adapted basis is singular at " + to_string(b));
    d.change_of_basis[b] = inverse(q);
  }
  for (const auto& [b, cols] : columns) {
    if (dc.dim(b) == 0 && !cols.empty()) {
      throw InternalError("decomposition places vectors outside the support at " + to_string(b));
    }
  }

  auto p_at = [&](Bidegree b) {
    auto it = d.change_of_basis.find(b);
    return it == d.change_of_basis.end() ? Matrix(0, 0) : it->second;
  };
  for (Bidegree b : dc.support()) {
    const Bidegree right{b.p + 1, b.q};
    const Bidegree up{b.p, b.q + 1};
    if (d.model.del(b) * p_at(b) != p_at(right) * dc.del(b)) {
      throw InternalError("del is not block diagonal after decomposition at " + to_string(b));
    }
    if (d.model.delbar(b) * p_at(b) != p_at(up) * dc.delbar(b)) {
      throw InternalError("delbar is not block diagonal after decomposition at " + to_string(b));
    }
  }
  for (Flavor f : {Flavor::dolbeault, Flavor::del, Flavor::bott_chern, Flavor::aeppli}) {
    if (cohomology(d.model, f) != cohomology(dc, f)) {
      throw InternalError(to_string(f) + " cohomology of the block model differs from the input");
    }
  }
  return d;
}

}  // namespace dcx
