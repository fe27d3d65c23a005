#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcx/bicomplex/bicomplex.hpp"

namespace dcx {

enum class Filtration { column, row };

std::string to_string(Filtration f);

/// E_r^{p,q} dimensions and ranks of d_r, keyed by the bidegree of the source.
/// For the column filtration d_r goes (p,q) -> (p+r, q-r+1); for the row
/// filtration it goes (p,q) -> (p-r+1, q+r).
struct SpectralPage {
  int r = 1;
  Filtration filtration = Filtration::column;
  std::map<Bidegree, std::size_t> dims;
  std::map<Bidegree, std::size_t> dr_ranks;

  std::size_t at(Bidegree b) const;
  std::size_t rank_at(Bidegree b) const;
  std::size_t total(int k) const;
};

struct SpectralSequence {
  Filtration filtration = Filtration::column;
  /// Pages 1 .. degeneration_page; the last one is E_infinity.
  std::vector<SpectralPage> pages;
  /// Smallest r with d_s = 0 for all s >= r.
  int degeneration_page = 1;

  const SpectralPage& limit() const { return pages.back(); }
};

/// Spectral sequence of the column filtration F^p = sum_{i>=p} A^{i,*} (or of
/// the row filtration) on the total complex. Page dimensions come from ranks of
/// filtered blocks of D; d_r ranks follow from consecutive pages along each
/// d_r chain. Internal consistency (E_1 = H_delbar or H_del, nonnegative
/// ranks, d_r landing in the support) is checked and violations throw
/// InternalError.
SpectralSequence spectral_sequence(const DoubleComplex& dc, Filtration f);

/// Single-threaded reference built from the subspaces Z_r and B_r of the total
/// complex, with rank d_r = dim(D Z_r + B_r^tgt) - dim B_r^tgt.
SpectralSequence spectral_sequence_reference(const DoubleComplex& dc, Filtration f);

/// Both sequences. With a valid real structure and !force_independent the row
/// sequence is obtained by mirroring the column one.
std::pair<SpectralSequence, SpectralSequence> spectral_sequences(
    const DoubleComplex& dc, const RealStructure* real = nullptr, bool force_independent = false);

// -- Hodge filtration on de Rham cohomology --------------------------------

struct DegreePurity {
  /// Sum over p+q = k of dim H^{p,q}.
  std::size_t piece_sum = 0;
  /// Dimension of the span of the pieces inside H^k.
  std::size_t span_dim = 0;
  std::size_t de_rham = 0;
  bool direct = true;
  bool pure = true;
};

struct HodgePieces {
  /// dim (F^p cap Fbar^q) H^{p+q}.
  std::map<Bidegree, std::size_t> dims;
  /// (k, p) -> dim F^p H^k.
  std::map<std::pair<int, int>, std::size_t> f_dims;
  /// (k, q) -> dim Fbar^q H^k.
  std::map<std::pair<int, int>, std::size_t> fbar_dims;
  std::map<int, DegreePurity> purity;

  std::size_t at(Bidegree b) const;
};

/// Computes H^{p,q} both as F^p cap Fbar^q and as the image of Bott-Chern
/// cohomology; throws InternalError if the two disagree.
HodgePieces hodge_pieces(const DoubleComplex& dc);

/// pure[k] iff the pieces form a direct sum spanning H^k.
std::map<int, bool> purity_check(const DoubleComplex& dc);

// -- classification ------------------------------------------------------

struct Verdict {
  int degeneration_page_F = 1;
  int degeneration_page_Fbar = 1;
  std::map<int, bool> pure;
  bool ddbar_lemma = false;
  bool page1_by_definition = false;
  bool page1_by_dims = false;
  std::optional<bool> page1_by_shape;
  bool e1_degenerate = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Classification {
  CohomologyTable dolbeault;
  CohomologyTable del;
  CohomologyTable bott_chern;
  CohomologyTable aeppli;
  TotalCohomology de_rham;
  SpectralSequence column;
  SpectralSequence row;
  HodgePieces hodge;
  Verdict verdict;
};

struct ClassifyOptions {
  const RealStructure* real = nullptr;
  bool force_independent = false;
};

/// All cohomologies, both spectral sequences, Hodge pieces and the verdict.
/// page1_by_shape is left empty. Throws InternalError if the definition and
/// the dimension criterion disagree.
Classification classify(const DoubleComplex& dc, const ClassifyOptions& options = {});

/// h_A^k + h_BC^k == h_delbar^k + h_del^k for every total degree k.
bool page1_dimension_criterion(const CohomologyTable& dolbeault, const CohomologyTable& del,
                               const CohomologyTable& bott_chern, const CohomologyTable& aeppli);

/// Machine lines `degeneration_F <r>`, `degeneration_Fbar <r>`, `pure <k> <b>`,
/// `ddbar <b>`, `page1_def <b>`, `page1_dims <b>`, `page1_shape <b|na>`.
std::vector<std::string> verdict_lines(const Verdict& v);
/// Inverse of verdict_lines; e1_degenerate is recovered from degeneration_F.
Verdict parse_verdict_lines(const std::vector<std::string>& lines);

}  // namespace dcx
