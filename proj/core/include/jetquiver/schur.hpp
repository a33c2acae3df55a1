#pragma once

#include <utility>
#include <vector>

#include "jetquiver/numeric.hpp"
#include "jetquiver/partitions.hpp"

namespace jetquiver {

/// dim S_lambda(C^m) by the Weyl dimension formula
/// prod_{1<=i<j<=m} (lambda_i - lambda_j + j - i)/(j - i), all arithmetic
/// exact. Throws std::invalid_argument when lambda has more than m rows
/// (the module would be zero; callers must not ask for it).
Int schur_dim(const Partition& lambda, int m);

/// Formal nonnegative-integer combination of Schur modules over a fixed
/// ambient dimension. Terms are kept merged and sorted by partition,
/// lexicographically descending, so serialization is deterministic.
class GModuleSum {
 public:
  explicit GModuleSum(int ambient);

  int ambient() const { return ambient_; }
  bool empty() const { return terms_.empty(); }
  const std::vector<std::pair<Partition, int>>& terms() const { return terms_; }

  /// Adds mult copies of S_lambda; partitions with more than ambient() rows
  /// are rejected (std::invalid_argument).
  void add(const Partition& lambda, int mult = 1);

  Int dimension() const;

  bool operator==(const GModuleSum&) const = default;

 private:
  int ambient_ = 0;
  std::vector<std::pair<Partition, int>> terms_;
};

/// Restriction of S_mu(C^{n+1}) to the subgroup fixing a hyperplane:
/// the multiplicity-free sum of S_nu(C^n) over all nu interlacing mu
/// (branching rule). mu may have up to n+1 rows.
GModuleSum res_to_levi(const Partition& mu, int n);

}  // namespace jetquiver
