#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace dcx {

/// A wedge monomial e^{i_1} ^ ... ^ e^{i_k} with i_1 < ... < i_k, as a bit set.
using Mask = std::uint64_t;

int popcount(Mask m);

/// Sign of (monomial a) ^ (monomial b) relative to the sorted monomial a|b,
/// or 0 if they share an index.
int wedge_sign(Mask a, Mask b);

/// Sign of moving generator `i` to the front of monomial `m` (i must be in m).
int front_sign(Mask m, int i);

/// Monomials of each degree of the exterior algebra on n generators, in
/// lexicographic order of their index tuples.
class ExteriorBasis {
 public:
  explicit ExteriorBasis(int n);

  int generators() const { return n_; }
  const std::vector<Mask>& degree(int k) const;
  std::size_t dim(int k) const { return degree(k).size(); }
  std::size_t index(Mask m) const { return index_.at(m); }

 private:
  int n_;
  std::vector<std::vector<Mask>> by_degree_;
  std::unordered_map<Mask, std::size_t> index_;
};

}  // namespace dcx
