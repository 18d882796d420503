#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "splitsys/buneman_graph.hpp"
#include "splitsys/phi_map.hpp"
#include "splitsys/split_system.hpp"

namespace splitsys {

// All C(n,3) triple medians of a system, keyed by element mask in
// lexicographic combination order. Backbone of the brute-force injectivity
// route and the surjectivity check.
class MedianTable {
 public:
  static MedianTable build(const SplitSystem& sys);
  const std::vector<std::pair<Mask, PhiMap>>& entries() const {
    return entries_;
  }
  const PhiMap& at(Mask triple) const;

 private:
  std::vector<std::pair<Mask, PhiMap>> entries_;
};

struct CollisionWitness {
  Mask first;   // 3-subset as element mask
  Mask second;  // distinct 3-subset with the same median
};

struct InjectivityResult {
  bool injective;
  std::optional<CollisionWitness> collision;  // set when not injective
};

// Direct route: all triple medians via the median formula, collision
// detection by hashing. No graph construction.
InjectivityResult isInjectiveBruteforce(const SplitSystem& sys);

// k-dicing predicates: vacuously true when n < k, otherwise every k-subset
// restriction must contain enough 2-splits (or, for k = 6, a 3-split or a
// triangle of 2-splits). Distinct splits of the restricted system count.
bool dices4(const SplitSystem& sys);
bool dices5(const SplitSystem& sys);
bool dices6(const SplitSystem& sys);

struct DiceFailure {
  int k;        // 4, 5 or 6
  Mask subset;  // the k-subset whose restriction falls short
};
// First failing subset in (k, lex) order, or nullopt when the system dices.
std::optional<DiceFailure> dicingFailure(const SplitSystem& sys);

// Characterization route: injective iff the system 4-, 5- and 6-dices.
bool isInjectiveDicing(const SplitSystem& sys);

struct RootedInjectivityResult {
  bool injective;
  // When not: two distinct {root, a, b} triples with equal medians.
  std::optional<CollisionWitness> collision;
};
// Medians of {root} u Z over 2-subsets Z of X - {root} pairwise distinct.
RootedInjectivityResult isRootedInjective(const SplitSystem& sys, int root);

// Every non-leaf Buneman vertex is the median of some leaf triple. Builds
// the Buneman graph, so inherits the vertex budget.
bool isSurjective(const SplitSystem& sys,
                  std::size_t vertexBudget = BunemanGraph::kDefaultVertexBudget);

bool isBijective(const SplitSystem& sys,
                 std::size_t vertexBudget = BunemanGraph::kDefaultVertexBudget);

// P(S): graph on the ground set with an edge {x,y} for every 2-split whose
// small part is {x,y}. Defined only for systems whose non-trivial splits all
// have size 2.
class TwoSplitGraph {
 public:
  // Throws std::invalid_argument if a non-trivial split of size >= 3 exists.
  static TwoSplitGraph fromSystem(const SplitSystem& sys);
  // Direct construction from an edge-mask adjacency (for graph searches).
  TwoSplitGraph(int n, std::vector<Mask> adjacency);

  int vertexCount() const { return n_; }
  Mask adjacency(int x) const { return adj_[x]; }
  bool hasEdge(int x, int y) const { return hasBit(adj_[x], y); }
  int degree(int x) const { return popcount(adj_[x]); }
  int maxDegree() const;
  int edgeCount() const;
  bool hasTriangle() const;
  std::vector<std::pair<int, int>> edges() const;

  // The corresponding split system: trivials plus one 2-split per edge.
  SplitSystem toSystem() const;

 private:
  int n_;
  std::vector<Mask> adj_;
};

struct DiceTriple {
  bool four;
  bool five;
  bool six;
};

// Dicing verdicts computed purely on induced subgraphs of sizes 4/5/6:
// a 4-subset needs a vertex of induced degree >= 2, a 5-subset >= 5 induced
// edges, a 6-subset an induced triangle. Agrees with dices4/5/6 on the
// originating system.
DiceTriple dicesViaGraph(const TwoSplitGraph& g);

// max degree (triangle-free case) or max(max degree, 3); floored at 1 to
// match the compatible-system convention of SplitSystem::dimension().
int dimensionViaGraph(const TwoSplitGraph& g);

}  // namespace splitsys
