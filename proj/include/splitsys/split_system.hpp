#pragma once

#include <optional>
#include <vector>

#include "splitsys/ground_set.hpp"
#include "splitsys/split.hpp"

namespace splitsys {

// Incompatibility graph of a split system: vertex i = i-th split in canonical
// order, edge iff the two splits are incompatible. Adjacency rows are packed
// bit words so clique search stays branch-free in the inner loop.
class IncompatibilityGraph {
 public:
  IncompatibilityGraph(int vertexCount);

  int vertexCount() const { return n_; }
  bool adjacent(int i, int j) const {
    return (rows_[i][j >> 6] >> (j & 63)) & 1u;
  }
  void addEdge(int i, int j);
  const std::vector<std::uint64_t>& row(int i) const { return rows_[i]; }
  int wordCount() const { return words_; }
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_;
  int words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Exact maximum clique size, branch and bound with a greedy colouring bound.
// If `witness` is non-null it receives one maximum clique.
int maxCliqueSize(const IncompatibilityGraph& g,
                  std::vector<int>* witness = nullptr);

// A set of splits on a ground set. Always contains all trivial splits,
// deduplicated, stored sorted in canonical order (size, then mask).
// Immutable after construction; all operations are pure.
class SplitSystem {
 public:
  SplitSystem(GroundSet ground, const std::vector<Split>& splits);

  const GroundSet& ground() const { return ground_; }
  int groundSize() const { return ground_.size(); }
  const std::vector<Split>& splits() const { return splits_; }
  int splitCount() const { return static_cast<int>(splits_.size()); }
  const Split& split(int i) const { return splits_.at(i); }
  bool contains(const Split& s) const;
  // Index of a split in canonical order, -1 if absent.
  int indexOf(const Split& s) const;
  int nontrivialCount() const;

  // Restriction to the elements of `subset` (|subset| >= 3): splits are
  // intersected with the subset, degenerate images dropped, duplicates
  // merged, ground labels preserved.
  SplitSystem restrictTo(Mask subset) const;

  IncompatibilityGraph incompatibilityGraph() const;

  // Max size of a pairwise-incompatible subset; 1 for compatible systems
  // (the Buneman graph is then a tree).
  int dimension() const;

  bool operator==(const SplitSystem& other) const {
    return ground_ == other.ground_ && splits_ == other.splits_;
  }

 private:
  GroundSet ground_;
  std::vector<Split> splits_;
};

// Convenience: split from an element subset of the given system's ground set.
Split makeSplit(Mask part, const GroundSet& ground);

}  // namespace splitsys
