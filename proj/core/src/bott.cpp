#include "jetquiver/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetquiver {

SymOmegaCohomology cohomology_sym_omega(int n, int i, int l) {
  if (n < 1) throw std::invalid_argument("cohomology_sym_omega: need n >= 1");
  if (i < 0) throw std::invalid_argument("cohomology_sym_omega: negative symmetric power");
  SymOmegaCohomology out{GModuleSum(n + 1), GModuleSum(n + 1), false};
  if (l >= 2 * i) {
    out.h0.add(Partition({l - i, i}));
  } else if (l - i + 1 >= 0 && l - i + 1 < i) {
    out.h1.add(Partition({i - 1, l - i + 1}));
  } else {
    // Both closed forms vanish; l = 2i-1 kills all cohomology, otherwise a
    // group outside the two forms may survive.
    out.higher_possible = (l != 2 * i - 1) && (l < i - 1);
  }
  return out;
}

GModuleSum h0_Q_twist(int n, int k, int h, int d) {
  if (n < 1) throw std::invalid_argument("h0_Q_twist: need n >= 1");
  if (!(k > h && h >= 0)) throw std::invalid_argument("h0_Q_twist: need k > h >= 0");
  GModuleSum sum(n + 1);
  // A graded piece S^iOmega(d) contributes its H^0 = S_{(d-i,i)}V unless the
  // same module shows up as H^1 of the piece at j = d-i+1, which happens
  // exactly when that j stays within the range j <= k.
  const int top = std::min(k, d >= 0 ? d / 2 : -1);
  for (int i = h + 1; i <= top; ++i) {
    if (d - i + 1 > k) sum.add(Partition({d - i, i}));
  }
  return sum;
}

GModuleSum h0_pp(int n, int k, int d) {
  if (n < 1) throw std::invalid_argument("h0_pp: need n >= 1");
  if (k < 0) throw std::invalid_argument("h0_pp: negative order");
  GModuleSum sum(n + 1);
  if (d < 0) return sum;
  if (d < k) {
    sum.add(Partition({d}));
    return sum;
  }
  for (int j = 0; j <= std::min(k, d - k); ++j) sum.add(Partition({d - j, j}));
  return sum;
}

}  // namespace jetquiver
