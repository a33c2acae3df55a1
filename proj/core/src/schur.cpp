#include "jetquiver/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetquiver {

Int schur_dim(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("schur_dim: negative ambient dimension");
  if (lambda.rows() > m)
    throw std::invalid_argument("schur_dim: partition has more rows than the ambient dimension");
  Int num = 1, den = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      num *= lambda.part(i) - lambda.part(j) + j - i;
      den *= j - i;
    }
  // num is divisible by den (hook content product); division is exact.
  return num / den;
}

GModuleSum::GModuleSum(int ambient) : ambient_(ambient) {
  if (ambient < 0) throw std::invalid_argument("GModuleSum: negative ambient dimension");
}

void GModuleSum::add(const Partition& lambda, int mult) {
  if (mult < 1) throw std::invalid_argument("GModuleSum::add: multiplicity must be >= 1");
  if (lambda.rows() > ambient_)
    throw std::invalid_argument("GModuleSum::add: partition has too many rows");
  auto pos = std::lower_bound(
      terms_.begin(), terms_.end(), lambda,
      [](const std::pair<Partition, int>& t, const Partition& p) { return t.first.parts() > p.parts(); });
  if (pos != terms_.end() && pos->first == lambda)
    pos->second += mult;
  else
    terms_.insert(pos, {lambda, mult});
}

Int GModuleSum::dimension() const {
  Int d = 0;
  for (const auto& [lambda, mult] : terms_) d += mult * schur_dim(lambda, ambient_);
  return d;
}

GModuleSum res_to_levi(const Partition& mu, int n) {
  if (n < 1) throw std::invalid_argument("res_to_levi: need n >= 1");
  if (mu.rows() > n + 1) throw std::invalid_argument("res_to_levi: mu has too many rows");
  GModuleSum sum(n);
  for (const Partition& nu : horizontal_strips(mu, n)) sum.add(nu);
  return sum;
}

}  // namespace jetquiver
