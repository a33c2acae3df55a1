#include <random>

#include "doctest.h"
#include "jetquiver/diffop.hpp"

using namespace jetquiver;

namespace {

// Homogeneous Laurent monomial with exponents summing to deg, entries drawn
// from the given engine. Used for randomized identity checks.
LaurentCombo random_monomial(int n, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-5, 8);
  std::vector<int> e(static_cast<size_t>(n) + 1);
  for (;;) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      e[static_cast<size_t>(i)] = pick(rng);
      sum += e[static_cast<size_t>(i)];
    }
    e[static_cast<size_t>(n)] = deg - sum;
    if (e[static_cast<size_t>(n)] >= -5 && e[static_cast<size_t>(n)] <= 8) break;
  }
  return LaurentCombo::monomial(MultiIndex(e));
}

}  // namespace

TEST_CASE("xi expansion: pinned examples") {
  // x_0^2, first order: only d_0 survives, with coefficient 2.
  TensorElement t = xi_power(LaurentCombo::monomial(MultiIndex({2, 0})), 1);
  REQUIRE(t.terms().size() == 1);
  auto [key, c] = *t.terms().begin();
  CHECK(key.first == MultiIndex({1, 0}));
  CHECK(key.second == MultiIndex({1, 0}));
  CHECK(c == 2);

  // Order zero is the identity 1 (x) f.
  LaurentCombo f(3, 2);
  f.add_term(MultiIndex({2, 0, 0}), Rat(1, 2));
  f.add_term(MultiIndex({0, 1, 1}), 3);
  TensorElement id = xi_power(f, 0);
  REQUIRE(id.terms().size() == 2);
  CHECK(id.left_degree() == 0);
  CHECK(id.terms().at({MultiIndex::zero(3), MultiIndex({2, 0, 0})}) == Rat(1, 2));

  // Every second derivative of a linear polynomial vanishes.
  CHECK(xi_power(LaurentCombo::monomial(MultiIndex({1, 0})), 2).is_zero());
}

TEST_CASE("xi kills polynomials of degree below the order") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d)
      for (int k = d + 1; k <= 6; ++k) {
        std::uniform_int_distribution<int> pick(0, d);
        std::vector<int> e(static_cast<size_t>(n) + 1, 0);
        int left = d;
        for (int i = 0; i < n && left > 0; ++i) {
          e[static_cast<size_t>(i)] = pick(rng) % (left + 1);
          left -= e[static_cast<size_t>(i)];
        }
        e[static_cast<size_t>(n)] = left;
        CHECK(xi_power(LaurentCombo::monomial(MultiIndex(e)), k).is_zero());
      }
}

TEST_CASE("eta application: pinned examples") {
  TensorElement t(2, 1);
  t.add_term(MultiIndex({1, 0}), MultiIndex({1, 0}), 2);
  TensorElement u = eta_apply(t);
  REQUIRE(u.terms().size() == 1);
  CHECK(u.terms().at({MultiIndex({0, 0}), MultiIndex({2, 0})}) == 2);
  CHECK_THROWS_AS(eta_apply(u), std::invalid_argument);

  TensorElement v(2, 2);
  v.add_term(MultiIndex({1, 1}), MultiIndex({0, 0}), 1);
  TensorElement w = eta_apply(v);
  REQUIRE(w.terms().size() == 2);
  CHECK(w.terms().at({MultiIndex({0, 1}), MultiIndex({1, 0})}) == 1);
  CHECK(w.terms().at({MultiIndex({1, 0}), MultiIndex({0, 1})}) == 1);
}

TEST_CASE("composition identity: pinned instances") {
  CHECK(verify_lemma(1, 1, LaurentCombo::monomial(MultiIndex({2, 0}))).ok);
  CHECK(verify_lemma(2, 2, LaurentCombo::monomial(MultiIndex({1, 1, -3}))).ok);

  // Degree k-1 input: the scalar k(deg - k + 1) vanishes, so eta applied to
  // xi^k must vanish identically.
  TensorElement z = eta_apply(xi_power(LaurentCombo::monomial(MultiIndex({1, 1})), 3));
  CHECK(z.is_zero());
}

TEST_CASE("composition identity on random Laurent monomials") {
  std::mt19937_64 rng(20260819);
  std::uniform_int_distribution<int> deg(-5, 8);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 5; ++k)
      for (int rep = 0; rep < 10; ++rep) {
        LaurentCombo f = random_monomial(n, deg(rng), rng);
        LemmaReport report = verify_lemma(n, k, f);
        CHECK(report.ok);
        CHECK(report.discrepancies.empty());
      }
}

TEST_CASE("iterated composition collapses with the expected scalar") {
  // eta^{k-d}(xi^k(f)) = prod_{i=0}^{k-d-1} (k-i)(deg f - k + i + 1) xi^d(f)
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 2; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int d = 0; d < k; ++d)
        for (int rep = 0; rep < 5; ++rep) {
          std::uniform_int_distribution<int> degree(-5, 8);
          LaurentCombo f = random_monomial(n, degree(rng), rng);
          TensorElement lhs = xi_power(f, k);
          for (int step = 0; step < k - d; ++step) lhs = eta_apply(lhs);
          Rat scalar = 1;
          for (int i = 0; i <= k - d - 1; ++i)
            scalar *= Rat(Int(k - i) * (f.degree() - k + i + 1));
          TensorElement rhs = xi_power(f, d) * scalar;
          CHECK((lhs - rhs).is_zero());
          // Nonnegative degree below the order forces collapse to zero.
          if (f.degree() >= 0 && f.degree() < k && d == f.degree()) {
            bool laurent = false;
            for (const auto& [a, c] : f.terms())
              if (!a.is_polynomial()) laurent = true;
            if (!laurent) CHECK(lhs.is_zero());
          }
        }
}
