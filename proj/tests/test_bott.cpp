#include "doctest.h"
#include "jetquiver/bott.hpp"

using namespace jetquiver;

TEST_CASE("cohomology of twisted symmetric powers: pinned examples") {
  SymOmegaCohomology a = cohomology_sym_omega(2, 1, 2);
  REQUIRE(a.h0.terms().size() == 1);
  CHECK(a.h0.terms()[0].first == Partition({1, 1}));
  CHECK(a.h0.dimension() == 3);
  CHECK(a.h1.empty());
  CHECK_FALSE(a.higher_possible);

  SymOmegaCohomology b = cohomology_sym_omega(2, 2, 3);
  CHECK(b.h0.empty());
  CHECK(b.h1.empty());
  CHECK_FALSE(b.higher_possible);  // l = 2i-1: everything vanishes

  SymOmegaCohomology c = cohomology_sym_omega(2, 2, 2);
  CHECK(c.h0.empty());
  REQUIRE(c.h1.terms().size() == 1);
  CHECK(c.h1.terms()[0].first == Partition({1, 1}));
  CHECK(c.h1.dimension() == 3);

  CHECK(cohomology_sym_omega(3, 0, 0).h0.dimension() == 1);       // O
  CHECK(cohomology_sym_omega(3, 0, -1).higher_possible == false); // O(-1): nothing anywhere
  CHECK(cohomology_sym_omega(3, 0, -2).higher_possible);
}

TEST_CASE("cohomology windows are exclusive and exact") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= 6; ++i)
      for (int l = -8; l <= 12; ++l) {
        SymOmegaCohomology r = cohomology_sym_omega(n, i, l);
        CHECK_FALSE((!r.h0.empty() && !r.h1.empty()));
        CHECK(!r.h0.empty() == (l >= 2 * i));
        CHECK(!r.h1.empty() == (l - i + 1 >= 0 && l - i + 1 < i));
        if (l == 2 * i - 1) {
          CHECK(r.h0.empty());
          CHECK(r.h1.empty());
          CHECK_FALSE(r.higher_possible);
        }
        if (r.higher_possible) {
          CHECK(r.h0.empty());
          CHECK(r.h1.empty());
          CHECK(l < i - 1);
        }
        if (!r.h0.empty()) CHECK(r.h0.terms()[0].first == Partition({l - i, i}));
        if (!r.h1.empty()) CHECK(r.h1.terms()[0].first == Partition({i - 1, l - i + 1}));
      }
}

TEST_CASE("sections of the twisted kernel bundle: pinned examples") {
  GModuleSum q = h0_Q_twist(2, 3, 1, 6);
  REQUIRE(q.terms().size() == 2);
  CHECK(q.terms()[0].first == Partition({4, 2}));
  CHECK(q.terms()[1].first == Partition({3, 3}));
  CHECK(schur_dim(q.terms()[0].first, 3) == 27);
  CHECK(schur_dim(q.terms()[1].first, 3) == 10);
  CHECK(q.dimension() == 37);

  CHECK(h0_Q_twist(2, 2, 0, 2).empty());
  CHECK_THROWS_AS(h0_Q_twist(2, 1, 1, 4), std::invalid_argument);
}

TEST_CASE("twisted kernel sections vanish up to the boundary") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k)
      for (int h = 0; h < k; ++h)
        for (int d = -3; d <= h + k; ++d)
          CHECK(h0_Q_twist(n, k, h, d).empty());
  // ... and are nonempty just past it.
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k)
      for (int h = 0; h < k; ++h) CHECK_FALSE(h0_Q_twist(n, k, h, h + k + 1).empty());
}

TEST_CASE("sections of principal parts: pinned examples and dimensions") {
  GModuleSum low = h0_pp(2, 2, 1);
  REQUIRE(low.terms().size() == 1);
  CHECK(low.terms()[0].first == Partition({1}));
  CHECK(low.dimension() == 3);

  CHECK(h0_pp(1, 1, 3).dimension() == 6);
  CHECK(h0_pp(2, 4, -1).empty());
  CHECK(h0_pp(3, 2, -5).empty());

  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 5; ++k)
      for (int d = -2; d <= 8; ++d) {
        Int dim = h0_pp(n, k, d).dimension();
        if (d < 0)
          CHECK(dim == 0);
        else if (d < k)
          CHECK(dim == binomial(d + n, n));
        else
          CHECK(dim == binomial(k + n, n) * binomial(d - k + n, n));
      }
}
