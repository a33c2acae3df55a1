#include "jetquiver/numeric.hpp"

#include <stdexcept>

namespace jetquiver {

Int factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  // Partial products are themselves binomials, so every division is exact.
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int falling_factorial(int a, int m) {
  if (m < 0) throw std::invalid_argument("falling_factorial: negative length");
  Int r = 1;
  for (int i = 0; i < m; ++i) r *= a - i;
  return r;
}

}  // namespace jetquiver
