#include "dcx/lie/exterior.hpp"

#include <bit>
#include <functional>

#include "dcx/error.hpp"

namespace dcx {

int popcount(Mask m) { return std::popcount(m); }

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Each pair (x in a, y in b) with x > y costs one transposition.
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    swaps += std::popcount(a >> (y + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

int front_sign(Mask m, int i) {
  const Mask below = m & ((Mask{1} << i) - 1);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

ExteriorBasis::ExteriorBasis(int n) : n_(n), by_degree_(static_cast<std::size_t>(n) + 1) {
  if (n < 0 || n > 62) throw StructuralError("exterior algebra supports 0..62 generators");
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int next) {
    Mask m = 0;
    for (int i : chosen) m |= Mask{1} << i;
    auto& bucket = by_degree_[chosen.size()];
    index_[m] = bucket.size();
    bucket.push_back(m);
    for (int i = next; i < n; ++i) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  // Depth-first enumeration visits each degree's subsets in lexicographic order.
  rec(0);
}

const std::vector<Mask>& ExteriorBasis::degree(int k) const {
  static const std::vector<Mask> empty;
  if (k < 0 || k > n_) return empty;
  return by_degree_[static_cast<std::size_t>(k)];
}

}  // namespace dcx
