#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "splitsys/families.hpp"
#include "splitsys/split_system.hpp"

using namespace splitsys;

namespace {

Split mk(std::initializer_list<int> oneBased, int n) {
  Mask m = 0;
  for (int x : oneBased) m |= Mask{1} << (x - 1);
  return Split::fromMask(m, n);
}

Mask maskOf(std::initializer_list<int> oneBased) {
  Mask m = 0;
  for (int x : oneBased) m |= Mask{1} << (x - 1);
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("splits-core");

TEST_CASE("split canonicalization") {
  Split a = mk({1, 5}, 5);
  Split b = mk({2, 3, 4}, 5);
  CHECK(a == b);
  CHECK(a.canonicalPart() == b.canonicalPart());
  CHECK_THROWS_AS(Split::fromMask(fullMask(5), 5), std::invalid_argument);
  CHECK_THROWS_AS(Split::fromMask(0, 5), std::invalid_argument);

  // every nonempty proper subset and its complement give the same split
  for (Mask m = 1; m < fullMask(5); ++m)
    CHECK(Split::fromMask(m, 5) == Split::fromMask(fullMask(5) & ~m, 5));
}

TEST_CASE("size and small part") {
  Split s = mk({1, 5}, 5);
  CHECK(s.size() == 2);
  CHECK(!s.isTrivial());
  auto small = s.smallPart();
  CHECK(!small.ambiguous);
  CHECK(small.part == maskOf({1, 5}));

  Split t = mk({1}, 5);
  CHECK(t.size() == 1);
  CHECK(t.isTrivial());

  Split balanced = mk({1, 2, 3}, 6);
  CHECK(balanced.size() == 3);
  CHECK(balanced.smallPart().ambiguous);
  CHECK(balanced.smallPart().part == balanced.canonicalPart());
}

TEST_CASE("part containing and separation") {
  Split s = mk({1, 5}, 5);
  CHECK(s.partContaining(0) == maskOf({1, 5}));
  CHECK(s.partContaining(2) == maskOf({2, 3, 4}));
  CHECK_THROWS_AS(s.partContaining(5), std::invalid_argument);

  CHECK(s.separates(0, 1));
  CHECK(!s.separates(0, 4));
  // a trivial split separates its element from everything else
  Split t = mk({3}, 5);
  for (int y = 0; y < 5; ++y)
    CHECK(t.separates(2, y) == (y != 2));
}

TEST_CASE("compatibility") {
  // 15|234 vs 24|135: {1,5} and {2,4} are disjoint, so compatible
  CHECK(mk({1, 5}, 5).compatibleWith(mk({2, 4}, 5)));
  CHECK(mk({1}, 5).compatibleWith(mk({2}, 5)));
  CHECK(mk({1, 2}, 6).compatibleWith(mk({1, 2}, 6)));
  // 12|345 vs 23|145: all four intersections nonempty
  CHECK(!mk({1, 2}, 5).compatibleWith(mk({2, 3}, 5)));

  SUBCASE("agrees with the set-based oracle on all split pairs, n=5,6") {
    for (int n : {5, 6}) {
      std::vector<Split> all;
      for (Mask m = 2; m < fullMask(n); m += 2)
        all.push_back(Split::fromMask(m, n));
      for (const Split& s : all)
        for (const Split& t : all)
          CHECK(s.compatibleWith(t) == oracle::compatible(s, t));
    }
  }

  SUBCASE("symmetric") {
    for (Mask a = 2; a < fullMask(5); a += 2)
      for (Mask b = 2; b < fullMask(5); b += 2) {
        Split s = Split::fromMask(a, 5), t = Split::fromMask(b, 5);
        CHECK(s.compatibleWith(t) == t.compatibleWith(s));
      }
  }
}

TEST_CASE("system construction adds trivials and dedupes") {
  SplitSystem sys(GroundSet(5), {mk({1, 5}, 5), mk({2, 3, 4}, 5), mk({2, 4}, 5)});
  CHECK(sys.splitCount() == 7);  // 5 trivials + 2 distinct non-trivial
  CHECK(sys.nontrivialCount() == 2);
  for (int x = 0; x < 5; ++x)
    CHECK(sys.contains(Split::fromMask(Mask{1} << x, 5)));
  CHECK_THROWS_AS(SplitSystem(GroundSet(2), {}), std::invalid_argument);
}

TEST_CASE("restriction") {
  SplitSystem mc5 = maximalCircular(5);

  SUBCASE("circular system on {1..5} restricted to {1,2,3,4}") {
    SplitSystem r = mc5.restrictTo(maskOf({1, 2, 3, 4}));
    CHECK(r.groundSize() == 4);
    CHECK(r.splitCount() == 6);
    CHECK(r.contains(mk({1, 2}, 4)));
    CHECK(r.contains(mk({2, 3}, 4)));
  }

  SUBCASE("identity restriction") {
    CHECK(mc5.restrictTo(fullMask(5)) == mc5);
  }

  SUBCASE("trivial splits of a 4-set restrict to trivials of the 3-set") {
    SplitSystem t4 = trivialSystem(4);
    SplitSystem r = t4.restrictTo(maskOf({1, 2, 3}));
    CHECK(r == trivialSystem(3));
  }

  SUBCASE("too small") {
    CHECK_THROWS_AS(mc5.restrictTo(maskOf({1, 2})), std::invalid_argument);
  }

  SUBCASE("contains all trivials of the subset, random systems") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      SplitSystem sys = randomSystem(7, seed, 0.4);
      forEachSubsetMask(fullMask(7), 4, [&](Mask y) {
        SplitSystem r = sys.restrictTo(y);
        for (int x = 0; x < 4; ++x)
          CHECK(r.contains(Split::fromMask(Mask{1} << x, 4)));
      });
    }
  }

  SUBCASE("restriction composes") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      SplitSystem sys = randomSystem(7, seed, 0.35);
      Mask y = maskOf({1, 2, 4, 5, 7});
      Mask zInY = maskOf({1, 2, 4});  // subset of y
      // indices inside the restricted ground set follow the kept order
      SplitSystem once = sys.restrictTo(zInY);
      SplitSystem twice = sys.restrictTo(y).restrictTo(maskOf({1, 2, 3}));
      CHECK(once == twice);
    }
  }

  SUBCASE("matches the set-based restriction oracle") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      SplitSystem sys = randomSystem(6, seed, 0.5);
      forEachSubsetMask(fullMask(6), 4, [&](Mask y) {
        auto expect = oracle::restrictNaive(sys, oracle::setOf(y));
        SplitSystem r = sys.restrictTo(y);
        CHECK(r.splitCount() == static_cast<int>(expect.size()));
      });
    }
  }
}

TEST_CASE("incompatibility graph") {
  SUBCASE("tree system has no incompatible pair") {
    SplitSystem s1 = exampleTree5();
    CHECK(s1.incompatibilityGraph().edges().empty());
  }

  SUBCASE("trivial-only system") {
    CHECK(trivialSystem(5).incompatibilityGraph().edges().empty());
  }

  SUBCASE("all-2-splits on 5: adjacency is small-part overlap") {
    SplitSystem sys = smallSplitsSystem(5);
    IncompatibilityGraph g = sys.incompatibilityGraph();
    for (int i = 0; i < sys.splitCount(); ++i)
      for (int j = i + 1; j < sys.splitCount(); ++j) {
        const Split &a = sys.split(i), &b = sys.split(j);
        bool expect = !a.isTrivial() && !b.isTrivial() &&
                      (a.smallPart().part & b.smallPart().part) != 0;
        CHECK(g.adjacent(i, j) == expect);
      }
  }
}

TEST_CASE("dimension") {
  CHECK(exampleTree5().dimension() == 1);  // Buneman graph is a tree
  CHECK(trivialSystem(6).dimension() == 1);
  CHECK(exampleNetwork5().dimension() == 2);

  SUBCASE("all-small-splits has dimension n-1") {
    for (int n = 3; n <= 8; ++n) {
      SplitSystem sys = n == 3 ? trivialSystem(3) : smallSplitsSystem(n);
      CHECK(sys.dimension() == (n == 3 ? 1 : n - 1));
    }
  }

  SUBCASE("maximal circular has dimension floor(n/2)") {
    for (int n = 4; n <= 8; ++n)
      CHECK(maximalCircular(n).dimension() == n / 2);
  }

  SUBCASE("clique solver agrees with naive recursion on random systems") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      SplitSystem sys = randomSystem(6, seed, 0.45);
      IncompatibilityGraph g = sys.incompatibilityGraph();
      std::vector<std::vector<bool>> adj(
          g.vertexCount(), std::vector<bool>(g.vertexCount(), false));
      for (auto [i, j] : g.edges()) adj[i][j] = adj[j][i] = true;
      int naive = oracle::maxCliqueNaive(adj);
      CHECK(maxCliqueSize(g) == naive);
      CHECK(sys.dimension() == std::max(1, naive));
    }
  }
}

TEST_CASE("restriction preserves incompatibility upward") {
  // if two restricted splits are incompatible, the originals already were
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    SplitSystem sys = randomSystem(7, seed, 0.4);
    forEachSubsetMask(fullMask(7), 5, [&](Mask y) {
      std::vector<int> keep = bitsOf(y);
      for (const Split& s : sys.splits())
        for (const Split& t : sys.splits()) {
          Mask sa = s.canonicalPart() & y, ta = t.canonicalPart() & y;
          if (sa == 0 || sa == y || ta == 0 || ta == y) continue;
          Mask saC = 0, taC = 0;
          for (int i = 0; i < 5; ++i) {
            if (hasBit(sa, keep[i])) saC |= Mask{1} << i;
            if (hasBit(ta, keep[i])) taC |= Mask{1} << i;
          }
          Split rs = Split::fromMask(saC, 5), rt = Split::fromMask(taC, 5);
          if (rs.incompatibleWith(rt)) CHECK(s.incompatibleWith(t));
        }
    });
  }
}

TEST_SUITE_END();
