#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "splitsys/buneman_graph.hpp"
#include "splitsys/errors.hpp"
#include "splitsys/families.hpp"
#include "splitsys/injectivity.hpp"

using namespace splitsys;

namespace {

Mask maskOf(std::initializer_list<int> oneBased) {
  Mask m = 0;
  for (int x : oneBased) m |= Mask{1} << (x - 1);
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("buneman");

TEST_CASE("leaf maps") {
  SplitSystem s1 = exampleTree5();
  PhiMap phi1 = leafMap(s1, 0);
  for (int i = 0; i < s1.splitCount(); ++i)
    CHECK(chosenPart(s1, phi1, i) == s1.split(i).partContaining(0));
  CHECK(pairwiseIntersecting(s1, phi1));

  // all parts of phi_x share x, so the intersection condition always holds
  for (int x = 0; x < 5; ++x)
    CHECK(pairwiseIntersecting(s1, leafMap(s1, x)));

  SplitSystem t3 = trivialSystem(3);
  PhiMap phi2 = leafMap(t3, 1);
  CHECK(chosenPart(t3, phi2, t3.indexOf(Split::fromMask(0b010, 3))) == 0b010);
  CHECK(chosenPart(t3, phi2, t3.indexOf(Split::fromMask(0b001, 3))) == 0b110);
}

TEST_CASE("graph shapes") {
  SUBCASE("tree: V = |S|+1, leaves = n") {
    BunemanGraph b = BunemanGraph::build(exampleTree5());
    CHECK(b.vertexCount() == 8);
    CHECK(b.edgeCount() == 7);
    CHECK(b.internalCount() == 3);
    CHECK(b.largestCubeDimension() == 1);
  }

  SUBCASE("network on 5: 16 vertices, 11 internal") {
    BunemanGraph b = BunemanGraph::build(exampleNetwork5());
    CHECK(b.vertexCount() == 16);
    CHECK(b.internalCount() == 11);
    CHECK(b.largestCubeDimension() == 2);
  }

  SUBCASE("trivial-only on 3: star") {
    BunemanGraph b = BunemanGraph::build(trivialSystem(3));
    CHECK(b.vertexCount() == 4);
    CHECK(b.internalCount() == 1);
    int center = -1;
    for (int v = 0; v < 4; ++v)
      if (!b.isLeafVertex(v)) center = v;
    CHECK(b.degree(center) == 3);
  }

  SUBCASE("maximal circular on 4: 4-cycle core, 8 vertices") {
    BunemanGraph b = BunemanGraph::build(maximalCircular(4));
    CHECK(b.vertexCount() == 8);
    CHECK(b.internalCount() == 4);
    for (int v = 0; v < 8; ++v)
      if (!b.isLeafVertex(v)) CHECK(b.degree(v) == 3);  // 2 cycle + 1 pendant
  }

  SUBCASE("compatible random systems build trees") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      SplitSystem sys = randomSystem(6, seed, 0.15);
      if (sys.dimension() != 1) continue;
      BunemanGraph b = BunemanGraph::build(sys);
      CHECK(b.vertexCount() == sys.splitCount() + 1);
      CHECK(static_cast<int>(b.edgeCount()) == sys.splitCount());
    }
  }

  SUBCASE("vertex budget enforced") {
    CHECK_THROWS_AS(BunemanGraph::build(maximalCircular(6), 10),
                    ResourceLimitError);
  }
}

TEST_CASE("leaves are leaves (S1)") {
  for (const SplitSystem& sys :
       {exampleTree5(), exampleNetwork5(), maximalCircular(5), witnessId8()}) {
    BunemanGraph b = BunemanGraph::build(sys);
    for (int x = 0; x < sys.groundSize(); ++x) {
      int id = b.leafVertex(x);
      CHECK(b.degree(id) == 1);
      CHECK(b.vertex(id) == leafMap(sys, x));
    }
  }
}

TEST_CASE("median formula equals graph median") {
  for (const SplitSystem& sys :
       {exampleTree5(), exampleNetwork5(), maximalCircular(5), maximalCircular(6),
        bipartitePairs6(), halfGrid(6)}) {
    BunemanGraph b = BunemanGraph::build(sys);
    forEachSubsetMask(sys.ground().full(), 3, [&](Mask triple) {
      auto elems = bitsOf(triple);
      int med = b.medianVertex(b.leafVertex(elems[0]), b.leafVertex(elems[1]),
                               b.leafVertex(elems[2]));
      CHECK(b.vertex(med) == tripleMedian(sys, triple));
    });
  }
}

TEST_CASE("median of a degenerate triple") {
  BunemanGraph b = BunemanGraph::build(exampleNetwork5());
  int u = b.leafVertex(0), v = b.leafVertex(3);
  CHECK(b.medianVertex(u, u, v) == u);
  CHECK(b.medianVertex(u, v, v) == v);

  BunemanGraph star = BunemanGraph::build(trivialSystem(3));
  int center = star.medianVertex(star.leafVertex(0), star.leafVertex(1),
                                 star.leafVertex(2));
  CHECK(!star.isLeafVertex(center));
}

TEST_CASE("trivial-only systems: every triple's median is the star center") {
  for (int n : {3, 5}) {
    SplitSystem sys = trivialSystem(n);
    BunemanGraph b = BunemanGraph::build(sys);
    int center = -1;
    for (int v = 0; v < b.vertexCount(); ++v)
      if (!b.isLeafVertex(v)) center = v;
    forEachSubsetMask(sys.ground().full(), 3, [&](Mask triple) {
      CHECK(b.indexOf(tripleMedian(sys, triple)) == center);
    });
  }
}

TEST_CASE("network median vertices for the displayed triples") {
  // the medians of {1,2,3} and {3,4,5} are distinct internal vertices
  SplitSystem net = exampleNetwork5();
  BunemanGraph b = BunemanGraph::build(net);
  PhiMap m123 = tripleMedian(net, maskOf({1, 2, 3}));
  PhiMap m345 = tripleMedian(net, maskOf({3, 4, 5}));
  CHECK(!(m123 == m345));
  int id123 = b.indexOf(m123), id345 = b.indexOf(m345);
  REQUIRE(id123 >= 0);
  REQUIRE(id345 >= 0);
  CHECK(!b.isLeafVertex(id123));
  CHECK(!b.isLeafVertex(id345));
}

TEST_CASE("S2: removing a split's edges leaves two components") {
  for (const SplitSystem& sys :
       {exampleTree5(), exampleNetwork5(), maximalCircular(5), halfGrid(5)}) {
    BunemanGraph b = BunemanGraph::build(sys);
    for (int i = 0; i < sys.splitCount(); ++i) {
      auto cut = b.removeSplitEdges(i);
      CHECK(cut.componentCount == 2);
      // each part's leaves land in the same component
      Mask a = sys.split(i).canonicalPart();
      std::set<int> compA, compB;
      for (int x = 0; x < sys.groundSize(); ++x)
        (hasBit(a, x) ? compA : compB).insert(cut.componentOf[b.leafVertex(x)]);
      CHECK(compA.size() == 1);
      CHECK(compB.size() == 1);
      CHECK(*compA.begin() != *compB.begin());
    }
  }
}

TEST_CASE("S3/S4 hold for constructed graphs") {
  for (const SplitSystem& sys :
       {exampleTree5(), exampleNetwork5(), maximalCircular(6), witnessId8(),
        bipartitePairs6(), halfGrid(7)}) {
    BunemanGraph b = BunemanGraph::build(sys);
    CHECK(b.medianGraphCheck());
    CHECK(b.partialCubeCheck());
  }

  SUBCASE("fast median check agrees with the distance-based oracle") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      SplitSystem sys = randomSystem(5, seed, 0.5);
      BunemanGraph b = BunemanGraph::build(sys);
      oracle::SmallGraph g(b.vertexCount());
      for (auto [u, v] : b.edges()) g.addEdge(u, v);
      CHECK(b.medianGraphCheck() == g.isMedianGraph());
    }
  }
}

TEST_CASE("adversarial fixtures fail the checks") {
  SUBCASE("diamond is not a median graph") {
    // 4-cycle with a chord: the triangle triples have no median
    oracle::SmallGraph g(4);
    g.addEdge(0, 1);
    g.addEdge(1, 2);
    g.addEdge(2, 3);
    g.addEdge(3, 0);
    g.addEdge(0, 2);
    CHECK(!g.isMedianGraph());
    auto d = g.distances();
    CHECK(g.medianCount(d, 0, 1, 2) == 0);
  }

  SUBCASE("cube minus both geodesic interiors is not isometric") {
    // Q3 without 001 and 010: the Hamming-2 pair (000,011) needs 4 steps
    std::vector<int> labels{0b000, 0b100, 0b101, 0b110, 0b111, 0b011};
    oracle::SmallGraph g(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        int x = labels[i] ^ labels[j];
        if ((x & (x - 1)) == 0) g.addEdge(static_cast<int>(i), static_cast<int>(j));
      }
    auto d = g.distances();
    bool isometric = true;
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        int hamming = __builtin_popcount(labels[i] ^ labels[j]);
        if (d[i][j] != hamming) isometric = false;
      }
    CHECK(!isometric);
    CHECK(d[0][5] == 4);  // 000 to 011
  }
}

TEST_CASE("largest cube dimension equals split dimension") {
  for (const SplitSystem& sys :
       {exampleTree5(), exampleNetwork5(), maximalCircular(4), maximalCircular(6),
        witnessId8(), halfGrid(8), bipartitePairs6()}) {
    BunemanGraph b = BunemanGraph::build(sys);
    CHECK(b.largestCubeDimension() == sys.dimension());
  }
  CHECK(BunemanGraph::build(maximalCircular(6)).largestCubeDimension() == 3);
}

TEST_CASE("vertex count is at least 2^dimension") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SplitSystem sys = randomSystem(6, seed, 0.35);
    BunemanGraph b = BunemanGraph::build(sys);
    CHECK(b.vertexCount() >= (1 << sys.dimension()));
  }
}

TEST_SUITE_END();
