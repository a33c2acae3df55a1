#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace jetquiver {

// Arbitrary-precision integers and rationals. Everything in this library is
// exact; no floating point is used anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// k!, with 0! = 1. Requires k >= 0.
Int factorial(int k);

/// Binomial coefficient C(n, k) for n >= 0. Zero when k < 0 or k > n.
Int binomial(int n, int k);

/// Falling factorial a(a-1)...(a-m+1) with m factors; 1 when m = 0.
/// a may be negative (exponents of Laurent monomials land here).
Int falling_factorial(int a, int m);

}  // namespace jetquiver
