#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetquiver/bott.hpp"
#include "jetquiver/linalg.hpp"
#include "jetquiver/quiver.hpp"

namespace jetquiver {

/// Decomposition of the order-k principal parts of O(d) on P^n.
struct SplittingReport {
  enum class Case { trivializing, split };

  int n = 1, k = 0, d = 0;
  Case tag = Case::trivializing;
  /// One-line human summary of the decomposition.
  std::string description;
  /// Graded pieces S^iOmega(d): i = 0..k when trivializing, i = d+1..k
  /// (the kernel bundle part) when split.
  std::vector<IrreducibleSummand> graded_pieces;
  /// binom(k+n, n).
  Int total_rank;
  /// Rank of the kernel bundle Q_{k,d}; zero in the trivializing case.
  Int q_rank;
  /// Present when split and n >= 2.
  std::optional<StabilityVerdict> stability;
};

SplittingReport splitting_type(int n, int k, int d);

/// Matrix of the order-(k-h) collapse S^kV (x) S^{d-k}V -> S^hV (x) S^{d-h}V
/// induced by eta^{k-h}, in the graded-lex tensor bases (left factor major).
/// The entry at column x^I (x) x^A and row x^J (x) x^B is
/// multinomial(k-h, I-J) * I!/J! when I >= J and B = A + I - J, else zero.
/// Requires d >= k >= h >= 0, n >= 1.
RationalMatrix truncation_matrix(int n, int d, int k, int h);

struct TruncationReport {
  int n = 1, d = 0, k = 0, h = 0;
  Int dim_domain;
  Int dim_codomain;
  Int rank;
  bool maximal = false;
  Int kernel_dim;
  bool injective = false;
  bool surjective = false;
  RankMethod method = RankMethod::exact;
  std::vector<std::uint64_t> primes;
  /// Empty when the matrix was ranked directly; otherwise records the
  /// factorization that reduced the computation to smaller parameters.
  std::string reduction;
};

/// Rank data of the global-section truncation H^0 P^kO(d) -> H^0 P^hO(d).
/// For d >= k the matrix above is ranked (exactly or by the two-prime
/// modular certificate, per policy). For k > d >= 0 the map factors through
/// the order-d truncation and the (n, d, d, h) matrix carries the rank; for
/// h > d both spaces are S^dV and the map reduces to the identity. For
/// d < 0 every space is zero. Requires k >= h >= 0, n >= 1.
TruncationReport truncation_rank(int n, int d, int k, int h, const RankPolicy& policy = {});

/// Matrix of sum_{|I|=m} multinomial(m, I) point^I d^I : S^kV -> S^{k-m}V,
/// the fiber of the order-m collapse at the given point. Requires
/// 0 <= m <= k and point != 0 of length n+1.
RationalMatrix fiber_matrix(int n, int k, int m, const std::vector<Rat>& point);

struct CrossCheckReport {
  bool ok = false;
  Int kernel_dim;
  Int h0_dim;
  /// The module predicted to span the kernel.
  GModuleSum summands{0};
  TruncationReport trunc;
};

/// Compares the truncation-map kernel dimension against the independent
/// cohomology computation dim H^0 Q_{k,h}(d-h). Requires d >= k > h >= 0.
CrossCheckReport cross_check_kernel(int n, int d, int k, int h, const RankPolicy& policy = {});

struct SweepRow {
  int n = 1, d = 0, k = 0, h = 0;
  TruncationReport report;
  Int h0_dim;
  bool rank_maximal_ok = false;
  bool kernel_matches_h0 = false;
  bool injectivity_boundary_ok = false;
  bool ok() const { return rank_maximal_ok && kernel_matches_h0 && injectivity_boundary_ok; }
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool all_ok = true;
};

/// Runs every (n, d, k, h) with n in ns, 0 <= h < k <= d <= d_max through
/// truncation_rank and checks: rank is maximal, kernel dimension matches
/// dim H^0 Q_{k,h}(d-h), and kernel = 0 exactly when d <= h+k. Each point
/// derives its own prime seed from the policy seed and the grid key, so
/// results do not depend on scheduling; rows come back sorted by
/// (n, d, k, h). `threads` <= 0 means the hardware default.
SweepResult sweep_truncation_grid(const std::vector<int>& ns, int d_max,
                                  const RankPolicy& policy = {}, int threads = 0);

/// Stable per-point seed derived from a base seed and the grid key.
std::uint64_t point_seed(std::uint64_t base, int n, int d, int k, int h);

}  // namespace jetquiver
