#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "splitsys/split_system.hpp"

namespace splitsys {

// A circular ordering x_1,...,x_n of the ground set (element indices).
struct CircularOrdering {
  std::vector<int> order;
  static CircularOrdering natural(int n);
};

// Exactly the n trivial splits.
SplitSystem trivialSystem(int n);

// Trivials plus all C(n,2) 2-splits; with an anchor a, the 2-splits {a,x}
// are omitted (that variant needs n >= 5 to stay injective).
SplitSystem smallSplitsSystem(int n, std::optional<int> excludeAnchor = {});

// All interval-versus-rest splits of a circular ordering; the result has
// exactly C(n,2) splits (trivials included in that count).
SplitSystem maximalCircular(const CircularOrdering& order);
SplitSystem maximalCircular(int n);  // natural ordering

// Ground set {1,...,n-1} plus a root labelled "r" (last index). Two nested
// families of prefix/suffix interval splits whose Buneman graph is a
// half-grid: dimension 2 and rooted-injective relative to the root.
SplitSystem halfGrid(int n);
inline int halfGridRoot(int n) { return n - 1; }

// The 25-split system on {1..8} (17 non-trivial + 8 trivial) witnessing that
// an injective system of dimension 3 exists on 8 elements.
SplitSystem witnessId8();

// 5-leaf caterpillar tree: two compatible non-trivial splits 15|234, 24|135.
SplitSystem exampleTree5();

// Injective 2-dimensional extension of the caterpillar by three more
// 2-splits: 12|345, 34|125, 35|124.
SplitSystem exampleNetwork5();

// 2-splits {x,y} for all x in {1,2,3}, y in {4,5,6}: the K_{3,3} pair system.
// Rooted-injective for every root but not injective (no 6-dicing).
SplitSystem bipartitePairs6();

// The four consecutive-pair 2-splits 12, 23, 34, 45 on {1..5}; fails
// 5-dicing yet separates all median pairs sharing exactly one element.
SplitSystem consecutivePairs5();

// Trivials plus all 2-splits {x,y} with x,y non-consecutive on the circle:
// injective with dimension n-3, the upper-bound witness for ID2(n). n >= 5.
SplitSystem nonconsecutivePairsSystem(int n);

// Trivials always included; each non-trivial canonical split joins
// independently with probability `inclusionProb` under SplitMix64, splits
// drawn in ascending canonical-mask order. Reproducible by seed; 3<=n<=16.
SplitSystem randomSystem(int n, std::uint64_t seed, double inclusionProb);

// The SplitMix64 step, exposed so test corpora can document their streams.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace splitsys
