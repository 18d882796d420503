#include "splitsys/injectivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace splitsys {

MedianTable MedianTable::build(const SplitSystem& sys) {
  MedianTable table;
  forEachSubsetMask(sys.ground().full(), 3, [&](Mask triple) {
    table.entries_.emplace_back(triple, tripleMedian(sys, triple));
  });
  return table;
}

const PhiMap& MedianTable::at(Mask triple) const {
  for (const auto& [key, phi] : entries_)
    if (key == triple) return phi;
  throw std::invalid_argument("triple not in median table");
}

InjectivityResult isInjectiveBruteforce(const SplitSystem& sys) {
  std::unordered_map<PhiMap, Mask, PhiMapHash> seen;
  InjectivityResult result{true, std::nullopt};
  forEachSubsetMask(sys.ground().full(), 3, [&](Mask triple) {
    if (!result.injective) return;
    auto [it, inserted] = seen.emplace(tripleMedian(sys, triple), triple);
    if (!inserted) {
      result.injective = false;
      result.collision = CollisionWitness{it->second, triple};
    }
  });
  return result;
}

namespace {

// Distinct splits of S restricted to `subset`, keyed by the side not
// containing the lowest element of the subset. Degenerate images excluded.
void restrictedKeys(const SplitSystem& sys, Mask subset,
                    std::vector<Mask>& keys) {
  keys.clear();
  Mask low = Mask{1} << lowestBit(subset);
  for (const Split& s : sys.splits()) {
    Mask a = s.canonicalPart() & subset;
    Mask b = subset & ~a;
    if (a == 0 || b == 0) continue;
    keys.push_back((a & low) ? b : a);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

int countSize2(const std::vector<Mask>& keys, int subsetSize) {
  int count = 0;
  for (Mask key : keys) {
    int p = popcount(key);
    if (std::min(p, subsetSize - p) == 2) ++count;
  }
  return count;
}

bool subsetDices4(const SplitSystem& sys, Mask subset, std::vector<Mask>& keys) {
  restrictedKeys(sys, subset, keys);
  return countSize2(keys, 4) >= 2;
}

bool subsetDices5(const SplitSystem& sys, Mask subset, std::vector<Mask>& keys) {
  restrictedKeys(sys, subset, keys);
  return countSize2(keys, 5) >= 5;
}

bool subsetDices6(const SplitSystem& sys, Mask subset, std::vector<Mask>& keys) {
  restrictedKeys(sys, subset, keys);
  std::vector<Mask> pairs;  // small parts of restricted 2-splits
  for (Mask key : keys) {
    int p = popcount(key);
    if (p == 3) return true;  // a 3-split of the 6-subset
    int small = std::min(p, 6 - p);
    if (small == 2) pairs.push_back(p == 2 ? key : (subset & ~key));
  }
  // Triangle: three pairs covering a common 3-set.
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (popcount(pairs[i] & pairs[j]) != 1) continue;
      Mask third = pairs[i] ^ pairs[j];
      if (std::find(pairs.begin(), pairs.end(), third) != pairs.end())
        return true;
    }
  return false;
}

template <typename SubsetCheck>
bool dicesAll(const SplitSystem& sys, int k, SubsetCheck check) {
  if (sys.groundSize() < k) return true;
  bool ok = true;
  std::vector<Mask> keys;
  forEachSubsetMask(sys.ground().full(), k, [&](Mask subset) {
    if (ok && !check(sys, subset, keys)) ok = false;
  });
  return ok;
}

}  // namespace

bool dices4(const SplitSystem& sys) { return dicesAll(sys, 4, subsetDices4); }
bool dices5(const SplitSystem& sys) { return dicesAll(sys, 5, subsetDices5); }
bool dices6(const SplitSystem& sys) { return dicesAll(sys, 6, subsetDices6); }

std::optional<DiceFailure> dicingFailure(const SplitSystem& sys) {
  std::optional<DiceFailure> failure;
  std::vector<Mask> keys;
  for (int k : {4, 5, 6}) {
    if (sys.groundSize() < k) continue;
    forEachSubsetMask(sys.ground().full(), k, [&](Mask subset) {
      if (failure) return;
      bool ok = k == 4   ? subsetDices4(sys, subset, keys)
                : k == 5 ? subsetDices5(sys, subset, keys)
                         : subsetDices6(sys, subset, keys);
      if (!ok) failure = DiceFailure{k, subset};
    });
    if (failure) break;
  }
  return failure;
}

bool isInjectiveDicing(const SplitSystem& sys) {
  return dices4(sys) && dices5(sys) && dices6(sys);
}

RootedInjectivityResult isRootedInjective(const SplitSystem& sys, int root) {
  if (root < 0 || root >= sys.groundSize())
    throw std::invalid_argument("root outside ground set");
  Mask rest = sys.ground().full() & ~(Mask{1} << root);
  std::unordered_map<PhiMap, Mask, PhiMapHash> seen;
  RootedInjectivityResult result{true, std::nullopt};
  forEachSubsetMask(rest, 2, [&](Mask pair) {
    if (!result.injective) return;
    Mask triple = pair | (Mask{1} << root);
    auto [it, inserted] = seen.emplace(tripleMedian(sys, triple), triple);
    if (!inserted) {
      result.injective = false;
      result.collision = CollisionWitness{it->second, triple};
    }
  });
  return result;
}

bool isSurjective(const SplitSystem& sys, std::size_t vertexBudget) {
  BunemanGraph graph = BunemanGraph::build(sys, vertexBudget);
  std::vector<bool> covered(graph.vertexCount(), false);
  for (int x = 0; x < sys.groundSize(); ++x) covered[graph.leafVertex(x)] = true;
  forEachSubsetMask(sys.ground().full(), 3, [&](Mask triple) {
    int id = graph.indexOf(tripleMedian(sys, triple));
    if (id >= 0) covered[id] = true;
  });
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool isBijective(const SplitSystem& sys, std::size_t vertexBudget) {
  return isInjectiveDicing(sys) && isSurjective(sys, vertexBudget);
}

TwoSplitGraph::TwoSplitGraph(int n, std::vector<Mask> adjacency)
    : n_(n), adj_(std::move(adjacency)) {
  if (static_cast<int>(adj_.size()) != n_)
    throw std::invalid_argument("adjacency size mismatch");
  for (int x = 0; x < n_; ++x) {
    if (hasBit(adj_[x], x))
      throw std::invalid_argument("self loop in 2-split graph");
    for (int y : bitsOf(adj_[x]))
      if (!hasBit(adj_[y], x))
        throw std::invalid_argument("asymmetric 2-split adjacency");
  }
}

TwoSplitGraph TwoSplitGraph::fromSystem(const SplitSystem& sys) {
  int n = sys.groundSize();
  std::vector<Mask> adj(n, 0);
  for (const Split& s : sys.splits()) {
    if (s.isTrivial()) continue;
    if (s.size() != 2)
      throw std::invalid_argument(
          "2-split graph requires all non-trivial splits to have size 2");
    auto pair = bitsOf(s.smallPart().part);
    adj[pair[0]] |= Mask{1} << pair[1];
    adj[pair[1]] |= Mask{1} << pair[0];
  }
  return TwoSplitGraph(n, std::move(adj));
}

int TwoSplitGraph::maxDegree() const {
  int best = 0;
  for (int x = 0; x < n_; ++x) best = std::max(best, degree(x));
  return best;
}

int TwoSplitGraph::edgeCount() const {
  int total = 0;
  for (int x = 0; x < n_; ++x) total += degree(x);
  return total / 2;
}

bool TwoSplitGraph::hasTriangle() const {
  for (int x = 0; x < n_; ++x)
    for (int y : bitsOf(adj_[x] & ~fullMask(x + 1)))
      if ((adj_[x] & adj_[y]) != 0) return true;
  return false;
}

std::vector<std::pair<int, int>> TwoSplitGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y : bitsOf(adj_[x]))
      if (y > x) out.emplace_back(x, y);
  return out;
}

SplitSystem TwoSplitGraph::toSystem() const {
  std::vector<Split> splits;
  for (auto [x, y] : edges())
    splits.push_back(Split::fromMask((Mask{1} << x) | (Mask{1} << y), n_));
  return SplitSystem(GroundSet(n_), splits);
}

DiceTriple dicesViaGraph(const TwoSplitGraph& g) {
  int n = g.vertexCount();
  Mask full = fullMask(n);
  DiceTriple verdict{true, true, true};

  if (n >= 4)
    forEachSubsetMask(full, 4, [&](Mask subset) {
      if (!verdict.four) return;
      bool ok = false;
      for (int x : bitsOf(subset))
        if (popcount(g.adjacency(x) & subset) >= 2) {
          ok = true;
          break;
        }
      if (!ok) verdict.four = false;
    });

  if (n >= 5)
    forEachSubsetMask(full, 5, [&](Mask subset) {
      if (!verdict.five) return;
      int edges = 0;
      for (int x : bitsOf(subset)) edges += popcount(g.adjacency(x) & subset);
      if (edges / 2 < 5) verdict.five = false;
    });

  if (n >= 6)
    forEachSubsetMask(full, 6, [&](Mask subset) {
      if (!verdict.six) return;
      bool triangle = false;
      for (int x : bitsOf(subset)) {
        for (int y : bitsOf(g.adjacency(x) & subset)) {
          if (y <= x) continue;
          if ((g.adjacency(x) & g.adjacency(y) & subset) != 0) {
            triangle = true;
            break;
          }
        }
        if (triangle) break;
      }
      if (!triangle) verdict.six = false;
    });

  return verdict;
}

int dimensionViaGraph(const TwoSplitGraph& g) {
  int deg = g.maxDegree();
  if (g.hasTriangle()) return std::max(deg, 3);
  return std::max(deg, 1);
}

}  // namespace splitsys
