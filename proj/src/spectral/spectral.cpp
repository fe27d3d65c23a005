#include "dcx/spectral/spectral.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <set>

#include "dcx/error.hpp"

namespace dcx {

std::string to_string(Filtration f) { return f == Filtration::column ? "col" : "row"; }

std::size_t SpectralPage::at(Bidegree b) const {
  auto it = dims.find(b);
  return it == dims.end() ? 0 : it->second;
}

std::size_t SpectralPage::rank_at(Bidegree b) const {
  auto it = dr_ranks.find(b);
  return it == dr_ranks.end() ? 0 : it->second;
}

std::size_t SpectralPage::total(int k) const {
  std::size_t n = 0;
  for (const auto& [b, d] : dims) {
    if (b.total() == k) n += d;
  }
  return n;
}

namespace {

// Filtration pieces F^s Tot^k and the two derived families
//   pre[k][s] = D_k^{-1}(F^s Tot^{k+1}),  img[k][s] = D_{k-1}(F^s Tot^{k-1}),
// for s in [lo_p, hi_p + 1]. Outside that range F^s is everything or nothing.
class FiltrationData {
 public:
  explicit FiltrationData(const DoubleComplex& dc) : tot_(dc), lo_p_(dc.min_p()), hi_p_(dc.max_p()) {
    const int k_lo = tot_.min_degree() - 1;
    const int k_hi = tot_.max_degree() + 1;
    for (int k = k_lo; k <= k_hi; ++k) degrees_.push_back(k);
    for (int k : degrees_) {
      f_[k];
      pre_[k];
      img_[k];
    }
    for (int k : degrees_) {
      for (int s = lo_p_; s <= hi_p_ + 1; ++s) {
        f_[k].emplace(s, Subspace::coordinate(tot_.dim(k), tot_.column_filtration(k, s)));
      }
    }
    for (int k : degrees_) {
      for (int s = lo_p_; s <= hi_p_ + 1; ++s) {
        pre_[k].emplace(s, preimage(tot_.d(k), F(k + 1, s)));
        img_[k].emplace(s, image(tot_.d(k - 1), F(k - 1, s)));
      }
    }
  }

  const TotalComplex& tot() const { return tot_; }

  Subspace F(int k, int s) const {
    auto it = f_.find(k);
    if (it == f_.end()) return Subspace(tot_.dim(k));
    return it->second.at(clamp(s));
  }
  const Subspace& pre(int k, int s) const { return pre_.at(k).at(clamp(s)); }
  const Subspace& img(int k, int s) const { return img_.at(k).at(clamp(s)); }

  Subspace Z(int p, int k, int r) const { return subspace_intersect(F(k, p), pre(k, p + r)); }
  Subspace B(int p, int k, int r) const {
    return subspace_sum(subspace_intersect(F(k, p + 1), pre(k, p + r)),
                        subspace_intersect(F(k, p), img(k, p - r + 1)));
  }

 private:
  int clamp(int s) const { return std::max(lo_p_, std::min(s, hi_p_ + 1)); }

  TotalComplex tot_;
  int lo_p_;
  int hi_p_;
  std::vector<int> degrees_;
  std::map<int, std::map<int, Subspace>> f_;
  std::map<int, std::map<int, Subspace>> pre_;
  std::map<int, std::map<int, Subspace>> img_;
};

// Checks E_1 against Dolbeault cohomology and E_{r+1} = ker d_r / im d_r,
// then truncates after the degeneration page.
SpectralSequence finish(const DoubleComplex& dc, std::vector<SpectralPage> pages) {
  const std::vector<Bidegree> support = dc.support();
  for (std::size_t i = 0; i + 1 < pages.size(); ++i) {
    const int r = pages[i].r;
    for (const Bidegree b : support) {
      const std::size_t out = pages[i].rank_at(b);
      const std::size_t in = pages[i].rank_at({b.p - r, b.q + r - 1});
      if (pages[i].at(b) < out + in || pages[i + 1].at(b) != pages[i].at(b) - out - in) {
        throw InternalError("spectral page recursion fails at r=" + std::to_string(r) + " " +
                            to_string(b));
      }
    }
  }
  const CohomologyTable e1 = dolbeault(dc);
  for (const Bidegree b : support) {
    if (pages.front().at(b) != e1.at(b)) {
      throw InternalError("E_1 differs from Dolbeault cohomology at " + to_string(b));
    }
  }
  SpectralSequence seq;
  seq.filtration = Filtration::column;
  int degeneration = 1;
  for (const auto& page : pages) {
    if (!page.dr_ranks.empty()) degeneration = page.r + 1;
  }
  pages.resize(static_cast<std::size_t>(std::min<int>(degeneration, static_cast<int>(pages.size()))));
  seq.pages = std::move(pages);
  seq.degeneration_page = degeneration;
  return seq;
}

SpectralSequence empty_sequence() {
  SpectralSequence seq;
  seq.filtration = Filtration::column;
  seq.pages.push_back(SpectralPage{1, Filtration::column, {}, {}});
  return seq;
}

// Subspace route: E_r = Z_r / B_r and rank d_r = dim(D Z_r + B_r^tgt) - dim B_r^tgt.
SpectralSequence column_sequence_reference(const DoubleComplex& dc) {
  if (dc.empty()) return empty_sequence();
  const FiltrationData data(dc);
  const std::vector<Bidegree> support = dc.support();
  const int max_r = dc.max_p() - dc.min_p() + 1;
  std::vector<SpectralPage> pages;
  for (int r = 1; r <= max_r; ++r) {
    SpectralPage page{r, Filtration::column, {}, {}};
    for (const Bidegree b : support) {
      const int k = b.total();
      const Subspace z = data.Z(b.p, k, r);
      const std::size_t dim = z.dim() - data.B(b.p, k, r).dim();
      page.dims[b] = dim;
      const Bidegree target{b.p + r, b.q - r + 1};
      if (dc.dim(target) == 0 || dim == 0) continue;
      const Subspace btgt = data.B(target.p, k + 1, r);
      const std::size_t rank = subspace_sum(image(data.tot().d(k), z), btgt).dim() - btgt.dim();
      if (rank > 0) page.dr_ranks[b] = rank;
    }
    pages.push_back(std::move(page));
  }
  return finish(dc, std::move(pages));
}

// rho(k, a, b) = rank of D_k restricted to F^a Tot^k and projected to
// Tot^{k+1} / F^b. With f(s) = dim F^s Tot^k,
//   dim E_r^{p,q} = f(p) - f(p+1) - rho_k(p, p+r) + rho_k(p+1, p+r)
//                   - rho_{k-1}(p-r+1, p+1) + rho_{k-1}(p-r+1, p).
class RankTable {
 public:
  RankTable(const DoubleComplex& dc, int max_r) : tot_(dc), lo_(dc.min_p()), hi_(dc.max_p()) {
    std::set<Key> wanted;
    for (const Bidegree b : dc.support()) {
      const int k = b.total();
      for (int r = 1; r <= max_r + 1; ++r) {
        for (const Key& key : terms(b.p, k, r)) wanted.insert(normalize(key));
      }
    }
    std::vector<Key> keys;
    for (const Key& key : wanted) {
      if (!trivially_zero(key)) keys.push_back(key);
    }
    std::vector<std::size_t> ranks(keys.size());
    std::vector<std::exception_ptr> errors(keys.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < keys.size(); ++i) {
      try {
        ranks[i] = compute(keys[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < keys.size(); ++i) rho_[keys[i]] = ranks[i];
  }

  std::size_t page_dim(const DoubleComplex& dc, Bidegree b, int r) const {
    const int k = b.total();
    const auto t = terms(b.p, k, r);
    const long v = static_cast<long>(dc.dim(b)) - static_cast<long>(rho(t[0])) +
                   static_cast<long>(rho(t[1])) - static_cast<long>(rho(t[2])) +
                   static_cast<long>(rho(t[3]));
    if (v < 0) throw InternalError("negative spectral page dimension at " + to_string(b));
    return static_cast<std::size_t>(v);
  }

 private:
  struct Key {
    int k;
    int a;
    int b;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  static std::array<Key, 4> terms(int p, int k, int r) {
    return {Key{k, p, p + r}, Key{k, p + 1, p + r}, Key{k - 1, p - r + 1, p + 1},
            Key{k - 1, p - r + 1, p}};
  }

  Key normalize(Key key) const {
    key.a = std::clamp(key.a, lo_, hi_ + 1);
    key.b = std::clamp(key.b, lo_, hi_ + 1);
    return key;
  }

  bool trivially_zero(const Key& key) const {
    return key.b <= key.a || key.k < tot_.min_degree() - 1 || key.k > tot_.max_degree();
  }

  std::size_t rho(const Key& key) const {
    const Key n = normalize(key);
    if (trivially_zero(n)) return 0;
    return rho_.at(n);
  }

  std::size_t compute(const Key& key) const {
    const std::vector<std::size_t> cols = tot_.column_filtration(key.k, key.a);
    const std::vector<std::size_t> upper = tot_.column_filtration(key.k + 1, key.b);
    std::vector<std::size_t> rows;
    std::size_t next = 0;
    for (std::size_t i = 0; i < tot_.dim(key.k + 1); ++i) {
      if (next < upper.size() && upper[next] == i) {
        ++next;
      } else {
        rows.push_back(i);
      }
    }
    if (rows.empty() || cols.empty()) return 0;
    return rank(tot_.d(key.k).select(rows, cols));
  }

  TotalComplex tot_;
  int lo_;
  int hi_;
  std::map<Key, std::size_t> rho_;
};

SpectralSequence column_sequence(const DoubleComplex& dc) {
  if (dc.empty()) return empty_sequence();
  const std::vector<Bidegree> support = dc.support();
  const int max_r = dc.max_p() - dc.min_p() + 1;
  const RankTable table(dc, max_r);

  std::vector<std::map<Bidegree, std::size_t>> dims(static_cast<std::size_t>(max_r) + 2);
  for (int r = 1; r <= max_r + 1; ++r) {
    for (const Bidegree b : support) dims[r][b] = table.page_dim(dc, b, r);
  }
  std::vector<SpectralPage> pages;
  for (int r = 1; r <= max_r; ++r) {
    SpectralPage page{r, Filtration::column, dims[r], {}};
    // Along a d_r chain, out(b) = E_r(b) - E_{r+1}(b) - out(b - (r, 1 - r)).
    std::map<Bidegree, long> out;
    for (const Bidegree b : support) {
      const auto src = out.find({b.p - r, b.q + r - 1});
      const long in = src == out.end() ? 0 : src->second;
      const long o = static_cast<long>(dims[r][b]) - static_cast<long>(dims[r + 1][b]) - in;
      const Bidegree target{b.p + r, b.q - r + 1};
      if (o < 0 || (o > 0 && dc.dim(target) == 0)) {
        throw InternalError("inconsistent d_" + std::to_string(r) + " ranks at " + to_string(b));
      }
      out[b] = o;
      if (o > 0) page.dr_ranks[b] = static_cast<std::size_t>(o);
    }
    pages.push_back(std::move(page));
  }
  return finish(dc, std::move(pages));
}

SpectralSequence mirror(const SpectralSequence& s, Filtration target) {
  SpectralSequence out;
  out.filtration = target;
  out.degeneration_page = s.degeneration_page;
  for (const auto& page : s.pages) {
    SpectralPage m{page.r, target, {}, {}};
    for (const auto& [b, d] : page.dims) m.dims[b.transposed()] = d;
    for (const auto& [b, d] : page.dr_ranks) m.dr_ranks[b.transposed()] = d;
    out.pages.push_back(std::move(m));
  }
  return out;
}

}  // namespace

SpectralSequence spectral_sequence(const DoubleComplex& dc, Filtration f) {
  check_structure(dc);
  if (f == Filtration::column) return column_sequence(dc);
  return mirror(column_sequence(dc.transposed()), Filtration::row);
}

SpectralSequence spectral_sequence_reference(const DoubleComplex& dc, Filtration f) {
  check_structure(dc);
  if (f == Filtration::column) return column_sequence_reference(dc);
  return mirror(column_sequence_reference(dc.transposed()), Filtration::row);
}

std::pair<SpectralSequence, SpectralSequence> spectral_sequences(const DoubleComplex& dc,
                                                                 const RealStructure* real,
                                                                 bool force_independent) {
  SpectralSequence col = spectral_sequence(dc, Filtration::column);
  if (real != nullptr && !force_independent && check_real_structure(dc, *real)) {
    SpectralSequence row = mirror(col, Filtration::row);
    return {std::move(col), std::move(row)};
  }
  return {std::move(col), spectral_sequence(dc, Filtration::row)};
}

}  // namespace dcx
