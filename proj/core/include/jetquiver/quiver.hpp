#pragma once

#include <string>
#include <vector>

#include "jetquiver/partitions.hpp"
#include "jetquiver/schur.hpp"

namespace jetquiver {

/// The bundle S_muOmega(twist) on P^n: an irreducible homogeneous bundle
/// determined by a partition with at most n rows and an integer twist.
struct IrreducibleSummand {
  int n = 1;
  Partition mu;
  int twist = 0;

  Int rank() const { return schur_dim(mu, n); }
  /// Slope |mu| * (-(n+1)/n) + twist, exact.
  Rat slope() const;
  /// First Chern class rank * slope; always an integer, asserted.
  Int c1() const;

  /// "O(2)", "Omega", "S^2Omega(3)", "S_(2,1)Omega(3)"; the twist is
  /// omitted when zero.
  std::string to_string() const;

  bool operator==(const IrreducibleSummand&) const = default;
};

struct QuiverVertex {
  IrreducibleSummand summand;
  int multiplicity = 1;
};

/// Arrow between vertex indices; present arrows have nonzero structure map
/// (all multiplicity spaces in scope are one-dimensional, so a flag is the
/// whole datum).
struct QuiverArrow {
  int from = 0;
  int to = 0;
  bool nonzero = true;
};

struct QuiverRep {
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;

  /// Connectivity of the underlying undirected graph on all vertices.
  bool is_connected() const;
};

/// Quiver of S_mu(V) (x) O: vertices S_nuOmega(|mu|) over the interlacing
/// nu with at most n rows, all multiplicity 1; arrows are the single-box
/// inclusions nu in eta. Vertices are ordered by |nu| ascending (then lex
/// ascending) so arrows point forward.
QuiverRep quiver_schur(int n, const Partition& mu);

/// Quiver of the order-k principal parts of O(d): the chain
/// [S^0Omega(d)] -> ... -> [S^kOmega(d)] when d >= k or d < 0, and the same
/// vertex set with the arrow d -> d+1 missing when k > d >= 0 (the bundle
/// splits there).
QuiverRep quiver_pp(int n, int k, int d);

/// Quiver of the kernel bundle Q_{k,d} for k > d >= 0: the chain
/// [S^{d+1}Omega(d)] -> ... -> [S^kOmega(d)]. Throws for k <= d.
QuiverRep quiver_Q(int n, int k, int d);

/// Slope functional c1(F) rk(E') - rk(F) c1(E'), an exact integer.
Int mu_F(const std::vector<QuiverVertex>& F, const std::vector<QuiverVertex>& Eprime);

struct StabilityRow {
  /// Chain suffix [S^iOmega(d)] -> ... -> [S^kOmega(d)].
  int i = 0;
  Int muF;
};

struct StabilityVerdict {
  bool stable = false;
  std::vector<StabilityRow> table;
};

/// Stability of Q_{k,d} on P^n in the sense of the slope functional: every
/// nonzero subrepresentation is a chain suffix; stable means mu_F > 0 on
/// every proper suffix (the full chain always gives 0). Requires n >= 2,
/// k > d >= 0.
StabilityVerdict stability_Q(int n, int k, int d);

}  // namespace jetquiver
