#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitsys/split_system.hpp"

namespace splitsys {

enum class Quantity { ID, ID2, IDr };
enum class SearchMethod { Exhaustive, WitnessMonotonicity, GraphSearch };

std::string quantityName(Quantity q);
std::string methodName(SearchMethod m);

struct SearchReport {
  int n = 0;
  Quantity quantity = Quantity::ID;
  int lower = 0;
  int upper = 0;  // value is exact iff lower == upper
  std::optional<SplitSystem> witness;
  SearchMethod method = SearchMethod::Exhaustive;
  std::uint64_t nodesExplored = 0;
  double elapsedSeconds = 0.0;

  bool exact() const { return lower == upper; }
  int value() const { return upper; }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1ull << 40;

// Minimum dimension of an injective split system on n elements.
// n <= 5: exhaustive over all split systems. n == 6: witness of dimension 3
// plus a pruned branch-and-bound certifying that no system whose
// incompatibility graph is triangle-free (dimension <= 2) dices. n in {7,8}:
// witness plus monotonicity from the certified n = 6 value.
SearchReport idSearch(int n, std::uint64_t nodeBudget = kDefaultNodeBudget,
                      int threads = 1);

// Same quantity restricted to systems whose non-trivial splits have size 2.
// Exhaustive over all graphs on n vertices for n <= 7; bound-only with the
// non-consecutive pair witness beyond that or when the budget is too small.
SearchReport id2Search(int n, std::uint64_t nodeBudget = kDefaultNodeBudget,
                       int threads = 1);

// Rooted variant: always 2 for n >= 4. Upper bound by verifying the
// half-grid witness, lower bound by the counting certificate (a compatible
// system has at most 2n-3 splits, hence at most n-2 internal tree vertices,
// fewer than the C(n-1,2) distinct medians required).
SearchReport idrSearch(int n);

struct ScanResult {
  int n = 0;
  std::uint64_t examined = 0;
  std::vector<SplitSystem> found;
};

// Bijective split systems: exhaustive for n in {3,4}, seeded sample for
// n = 5 (inclusion probability cycles over a fixed grid). Hits are returned,
// never suppressed.
ScanResult scanBijective(int n, int samples = 10000, std::uint64_t seed = 1);

}  // namespace splitsys
