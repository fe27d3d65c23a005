#include <algorithm>

#include "dcx/error.hpp"
#include "dcx/zigzag/zigzag.hpp"

namespace dcx {

std::string to_string(Step s) { return s == Step::del ? "del" : "delbar"; }

Indecomposable Indecomposable::square(Bidegree generator) {
  return {Kind::square, generator, {}};
}

Indecomposable Indecomposable::dot(Bidegree b) { return {Kind::zigzag, b, {}}; }

Indecomposable Indecomposable::zigzag(Bidegree start, std::size_t length, Step first) {
  if (length == 0) throw StructuralError("zigzag needs at least one bidegree");
  Indecomposable z{Kind::zigzag, start, {}};
  Step s = first;
  for (std::size_t k = 1; k < length; ++k) {
    z.steps.push_back(s);
    s = s == Step::del ? Step::delbar : Step::del;
  }
  return z;
}

Indecomposable Indecomposable::wedge(Bidegree b) {
  return zigzag({b.p, b.q + 1}, 3, Step::delbar);
}

std::size_t Indecomposable::length() const {
  return kind == Kind::square ? 4 : steps.size() + 1;
}

std::vector<Bidegree> Indecomposable::bidegrees() const {
  if (kind == Kind::square) {
    return {start, {start.p + 1, start.q}, {start.p, start.q + 1}, {start.p + 1, start.q + 1}};
  }
  std::vector<Bidegree> out{start};
  for (Step s : steps) {
    const Bidegree last = out.back();
    out.push_back(s == Step::del ? Bidegree{last.p + 1, last.q} : Bidegree{last.p, last.q - 1});
  }
  return out;
}

bool Indecomposable::is_canonical() const {
  for (std::size_t k = 1; k < steps.size(); ++k) {
    if (steps[k] == steps[k - 1]) return false;
  }
  return true;
}

std::vector<Part> normalize_parts(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.shape < b.shape; });
  std::vector<Part> out;
  for (auto& part : parts) {
    if (part.multiplicity == 0) continue;
    if (!out.empty() && out.back().shape == part.shape) {
      out.back().multiplicity += part.multiplicity;
    } else {
      out.push_back(std::move(part));
    }
  }
  return out;
}

DoubleComplex model_complex(const std::vector<Part>& parts) {
  std::map<Bidegree, std::size_t> dims;
  for (const auto& part : parts) {
    if (!part.shape.is_canonical()) throw StructuralError("zigzag steps must alternate");
    for (Bidegree b : part.shape.bidegrees()) dims[b] += part.multiplicity;
  }
  DoubleComplex dc;
  for (const auto& [b, n] : dims) dc.set_space(b, n);
  std::map<Bidegree, Matrix> del, delbar;
  auto entry = [&](std::map<Bidegree, Matrix>& maps, Bidegree src, Bidegree tgt, std::size_t row,
                   std::size_t col, const Scalar& v) {
    auto it = maps.try_emplace(src, dims[tgt], dims[src]).first;
    it->second.set(row, col, v);
  };
  std::map<Bidegree, std::size_t> next;
  for (const auto& part : parts) {
    const auto bds = part.shape.bidegrees();
    for (std::size_t copy = 0; copy < part.multiplicity; ++copy) {
      std::vector<std::size_t> idx;
      for (Bidegree b : bds) idx.push_back(next[b]++);
      if (part.shape.is_square()) {
        // a, del a, delbar a, del delbar a; delbar del a = -del delbar a.
        entry(del, bds[0], bds[1], idx[1], idx[0], Scalar(1));
        entry(delbar, bds[0], bds[2], idx[2], idx[0], Scalar(1));
        entry(del, bds[2], bds[3], idx[3], idx[2], Scalar(1));
        entry(delbar, bds[1], bds[3], idx[3], idx[1], Scalar(-1));
        continue;
      }
      for (std::size_t k = 0; k < part.shape.steps.size(); ++k) {
        if (part.shape.steps[k] == Step::del) {
          entry(del, bds[k], bds[k + 1], idx[k + 1], idx[k], Scalar(1));
        } else {
          entry(delbar, bds[k + 1], bds[k], idx[k], idx[k + 1], Scalar(1));
        }
      }
    }
  }
  for (auto& [b, m] : del) dc.set_del(b, std::move(m));
  for (auto& [b, m] : delbar) dc.set_delbar(b, std::move(m));
  return dc;
}

bool page1_by_shape(const std::vector<Part>& parts) {
  return std::all_of(parts.begin(), parts.end(), [](const Part& p) {
    return p.shape.is_square() || p.shape.is_dot() || p.shape.is_line();
  });
}

bool page1_by_shape(const Decomposition& d) { return page1_by_shape(d.parts); }

std::vector<std::string> decomposition_lines(const std::vector<Part>& parts) {
  std::vector<std::string> out;
  for (const auto& part : parts) {
    const auto& s = part.shape;
    if (s.is_square()) {
      out.push_back("square " + std::to_string(s.start.p) + " " + std::to_string(s.start.q) +
                    " " + std::to_string(part.multiplicity));
      continue;
    }
    std::string line = "zigzag " + std::to_string(part.multiplicity) + " " +
                       std::to_string(s.start.p) + " " + std::to_string(s.start.q);
    for (Step step : s.steps) line += " " + to_string(step);
    out.push_back(line);
  }
  return out;
}

}  // namespace dcx
