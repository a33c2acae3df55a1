#include <algorithm>

#include "doctest.h"
#include "jetquiver/quiver.hpp"
#include "oracles.hpp"

using namespace jetquiver;

TEST_CASE("irreducible summand bookkeeping") {
  IrreducibleSummand omega{2, Partition({1}), 0};
  CHECK(omega.rank() == 2);
  CHECK(omega.slope() == Rat(-3, 2));
  CHECK(omega.c1() == -3);
  CHECK(omega.to_string() == "Omega");

  IrreducibleSummand s2{2, Partition({2}), 0};
  CHECK(s2.rank() == 3);
  CHECK(s2.slope() == -3);
  CHECK(s2.c1() == -9);
  CHECK(s2.to_string() == "S^2Omega");

  CHECK(IrreducibleSummand{2, Partition(), 2}.to_string() == "O(2)");
  CHECK(IrreducibleSummand{3, Partition({2, 1}), 3}.to_string() == "S_(2,1)Omega(3)");
  CHECK(IrreducibleSummand{3, Partition({1}), 1}.to_string() == "Omega(1)");

  // slope of S^iOmega(d) = i * slope(Omega) + d
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= 5; ++i)
      for (int d = -2; d <= 4; ++d) {
        IrreducibleSummand s{n, Partition({i}), d};
        CHECK(s.slope() == Rat(-(n + 1), n) * i + d);
      }
}

TEST_CASE("quiver of a Schur module: pinned examples") {
  QuiverRep r1 = quiver_schur(2, Partition({1}));
  REQUIRE(r1.vertices.size() == 2);
  CHECK(r1.vertices[0].summand.to_string() == "O(1)");
  CHECK(r1.vertices[1].summand.to_string() == "Omega(1)");
  REQUIRE(r1.arrows.size() == 1);
  CHECK(r1.arrows[0].from == 0);
  CHECK(r1.arrows[0].to == 1);
  CHECK(r1.is_connected());

  QuiverRep r2 = quiver_schur(2, Partition({2}));
  REQUIRE(r2.vertices.size() == 3);
  CHECK(r2.vertices[0].summand.to_string() == "O(2)");
  CHECK(r2.vertices[1].summand.to_string() == "Omega(2)");
  CHECK(r2.vertices[2].summand.to_string() == "S^2Omega(2)");
  CHECK(r2.arrows.size() == 2);

  QuiverRep r11 = quiver_schur(2, Partition({1, 1}));
  REQUIRE(r11.vertices.size() == 2);
  CHECK(r11.vertices[0].summand.to_string() == "Omega(2)");
  CHECK(r11.vertices[1].summand.to_string() == "S_(1,1)Omega(2)");
  CHECK(r11.arrows.size() == 1);
}

TEST_CASE("quiver of a Schur module: structure on small partitions") {
  for (int size = 0; size <= 5; ++size)
    for (const Partition& mu : oracles::partitions_of(size))
      for (int n = 1; n <= 3; ++n) {
        if (mu.rows() > n + 1) continue;
        QuiverRep rep = quiver_schur(n, mu);
        CHECK(rep.is_connected());
        Int total = 0;
        for (const QuiverVertex& v : rep.vertices) {
          CHECK(v.multiplicity == 1);
          CHECK(v.summand.twist == mu.size());
          total += v.summand.rank();
        }
        CHECK(total == schur_dim(mu, n + 1));  // restriction identity
        for (const QuiverArrow& a : rep.arrows) {
          const Partition& from = rep.vertices[static_cast<size_t>(a.from)].summand.mu;
          const Partition& to = rep.vertices[static_cast<size_t>(a.to)].summand.mu;
          CHECK(to.size() == from.size() + 1);
          CHECK(to.contains(from));
          CHECK(a.nonzero);
        }
      }
}

TEST_CASE("quiver of principal parts") {
  QuiverRep split = quiver_pp(2, 1, 0);
  REQUIRE(split.vertices.size() == 2);
  CHECK(split.vertices[0].summand.to_string() == "O");
  CHECK(split.vertices[1].summand.to_string() == "Omega");
  CHECK(split.arrows.empty());
  CHECK_FALSE(split.is_connected());

  QuiverRep chain = quiver_pp(2, 2, 3);
  REQUIRE(chain.vertices.size() == 3);
  CHECK(chain.arrows.size() == 2);
  CHECK(chain.is_connected());
  CHECK(chain.vertices[2].summand.to_string() == "S^2Omega(3)");

  QuiverRep two = quiver_pp(3, 3, 1);
  REQUIRE(two.vertices.size() == 4);
  REQUIRE(two.arrows.size() == 2);
  CHECK(two.arrows[0].from == 0);
  CHECK(two.arrows[0].to == 1);
  CHECK(two.arrows[1].from == 2);
  CHECK(two.arrows[1].to == 3);
  CHECK_FALSE(two.is_connected());

  QuiverRep negative = quiver_pp(2, 2, -1);
  CHECK(negative.arrows.size() == 2);
  CHECK(negative.is_connected());
}

TEST_CASE("the split principal parts quiver is the disjoint union of its halves") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 5; ++k)
      for (int d = 0; d < k; ++d) {
        QuiverRep pp = quiver_pp(n, k, d);
        QuiverRep trivial = quiver_schur(n, d == 0 ? Partition() : Partition({d}));
        QuiverRep q = quiver_Q(n, k, d);
        REQUIRE(pp.vertices.size() == trivial.vertices.size() + q.vertices.size());
        for (size_t i = 0; i < trivial.vertices.size(); ++i)
          CHECK(pp.vertices[i].summand == trivial.vertices[i].summand);
        for (size_t i = 0; i < q.vertices.size(); ++i)
          CHECK(pp.vertices[trivial.vertices.size() + i].summand == q.vertices[i].summand);
        // Arrow sets: the trivial chain, then the kernel chain, no bridge.
        CHECK(pp.arrows.size() == trivial.arrows.size() + q.arrows.size());
      }
}

TEST_CASE("quiver of the kernel bundle") {
  QuiverRep q = quiver_Q(2, 2, 0);
  REQUIRE(q.vertices.size() == 2);
  CHECK(q.vertices[0].summand.to_string() == "Omega");
  CHECK(q.vertices[1].summand.to_string() == "S^2Omega");
  CHECK(q.arrows.size() == 1);

  CHECK(quiver_Q(2, 1, 0).vertices.size() == 1);
  CHECK(quiver_Q(2, 1, 0).arrows.empty());

  QuiverRep q341 = quiver_Q(3, 4, 1);
  REQUIRE(q341.vertices.size() == 3);
  CHECK(q341.vertices[0].summand.to_string() == "S^2Omega(1)");
  CHECK(q341.vertices[2].summand.to_string() == "S^4Omega(1)");

  CHECK_THROWS_AS(quiver_Q(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(quiver_Q(2, 2, 3), std::invalid_argument);
}

TEST_CASE("slope functional: pinned examples") {
  QuiverRep q = quiver_Q(2, 2, 0);
  CHECK(mu_F(q.vertices, q.vertices) == 0);
  CHECK(mu_F(q.vertices, {}) == 0);
  std::vector<QuiverVertex> sub{q.vertices[1]};
  CHECK(mu_F(q.vertices, sub) == 9);
}

TEST_CASE("stability of the kernel bundle") {
  StabilityVerdict v = stability_Q(2, 2, 0);
  CHECK(v.stable);
  REQUIRE(v.table.size() == 2);
  CHECK(v.table[0].i == 1);
  CHECK(v.table[0].muF == 0);
  CHECK(v.table[1].i == 2);
  CHECK(v.table[1].muF == 9);

  StabilityVerdict single = stability_Q(2, 1, 0);
  CHECK(single.stable);
  REQUIRE(single.table.size() == 1);
  CHECK(single.table[0].muF == 0);

  StabilityVerdict big = stability_Q(3, 3, 1);
  CHECK(big.stable);
  REQUIRE(big.table.size() == 2);
  CHECK(big.table[1].muF > 0);

  CHECK_THROWS_AS(stability_Q(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(stability_Q(2, 2, 2), std::invalid_argument);
}

TEST_CASE("slopes decrease strictly along the kernel chain") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 8; ++k)
      for (int d = 0; d < k; ++d)
        for (int i = d + 1; i < k; ++i) {
          IrreducibleSummand a{n, Partition({i}), d};
          IrreducibleSummand b{n, Partition({i + 1}), d};
          CHECK(a.slope() > b.slope());
        }
}
