#pragma once

#include "jetquiver/schur.hpp"

namespace jetquiver {

/// Cohomology of S^iOmega(l) on P^n. At most one of h0, h1 is nonempty;
/// when both are empty and higher_possible is set, a cohomology group
/// outside the two closed forms below may be nonzero (not computed here,
/// flagged to prevent silent misuse).
struct SymOmegaCohomology {
  GModuleSum h0;
  GModuleSum h1;
  bool higher_possible = false;
};

/// Bott's theorem for twisted symmetric powers of the cotangent bundle:
/// H^0 = S_{(l-i,i)}V exactly when l >= 2i, H^1 = S_{(i-1,l-i+1)}V exactly
/// when 0 <= l-i+1 < i, everything vanishes when l = 2i-1. Ambient
/// dimension of the returned modules is n+1.
SymOmegaCohomology cohomology_sym_omega(int n, int i, int l);

/// Global sections of the twisted kernel bundle Q_{k,h}(d-h), whose graded
/// pieces are S^iOmega(d) for i = h+1..k: the sum of S_{(d-i,i)}V over all
/// i in [h+1, min(k, floor(d/2))] with d-i+1 > k. The surviving range is
/// empty precisely when d <= h+k. Requires n >= 1, k > h >= 0.
GModuleSum h0_Q_twist(int n, int k, int h, int d);

/// Global sections of the order-k principal parts of O(d) on P^n:
/// S^kV (x) S^{d-k}V for d >= k (returned as its multiplicity-free
/// decomposition S_{(d-j,j)}V, j = 0..min(k,d-k)), S^dV for 0 <= d < k,
/// zero for d < 0.
GModuleSum h0_pp(int n, int k, int d);

}  // namespace jetquiver
