#include "doctest.h"
#include "jetquiver/schur.hpp"
#include "oracles.hpp"

using namespace jetquiver;

TEST_CASE("Weyl dimension formula: pinned values") {
  CHECK(schur_dim(Partition(), 3) == 1);
  CHECK(schur_dim(Partition({1, 1}), 3) == 3);
  CHECK(schur_dim(Partition({2, 1}), 3) == 8);
  CHECK(schur_dim(Partition({4, 2}), 3) == 27);
  CHECK(schur_dim(Partition({3, 3}), 3) == 10);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 6; ++k)
      CHECK(schur_dim(Partition({k}), n + 1) == binomial(n + k, k));
  CHECK_THROWS_AS(schur_dim(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("Weyl dimension formula agrees with tableau counting") {
  for (int size = 0; size <= 5; ++size)
    for (const Partition& lambda : oracles::partitions_of(size))
      for (int m = 1; m <= 4; ++m) {
        if (lambda.rows() > m) continue;
        Int dim = schur_dim(lambda, m);
        CHECK(dim == oracles::ssyt_count(lambda, m));
        CHECK(dim >= 1);
      }
}

TEST_CASE("formal module sums") {
  GModuleSum s(3);
  CHECK(s.empty());
  s.add(Partition({1}));
  s.add(Partition({2, 1}), 2);
  s.add(Partition({1}));
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0].first == Partition({2, 1}));  // lex-descending order
  CHECK(s.terms()[0].second == 2);
  CHECK(s.terms()[1].second == 2);
  CHECK(s.dimension() == 2 * 8 + 2 * 3);
  CHECK_THROWS_AS(s.add(Partition({1, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(s.add(Partition({1}), 0), std::invalid_argument);
}

TEST_CASE("restriction to the hyperplane subgroup: pinned examples") {
  GModuleSum r1 = res_to_levi(Partition({1}), 2);
  CHECK(r1.ambient() == 2);
  REQUIRE(r1.terms().size() == 2);
  CHECK(r1.terms()[0].first == Partition({1}));
  CHECK(r1.terms()[1].first == Partition());
  CHECK(r1.dimension() == 3);

  GModuleSum r21 = res_to_levi(Partition({2, 1}), 2);
  REQUIRE(r21.terms().size() == 4);
  CHECK(r21.dimension() == 8);

  GModuleSum r11 = res_to_levi(Partition({1, 1}), 2);
  REQUIRE(r11.terms().size() == 2);
  CHECK(r11.dimension() == 3);
}

TEST_CASE("restriction preserves dimension") {
  for (int size = 0; size <= 5; ++size)
    for (const Partition& mu : oracles::partitions_of(size))
      for (int n = 1; n <= 4; ++n) {
        if (mu.rows() > n + 1) continue;
        CHECK(res_to_levi(mu, n).dimension() == schur_dim(mu, n + 1));
      }
}
