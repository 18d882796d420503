#include "splitsys/families.hpp"

#include <stdexcept>
#include <string>

namespace splitsys {

namespace {

Split splitOf(std::initializer_list<int> oneBased, int n) {
  Mask m = 0;
  for (int x : oneBased) m |= Mask{1} << (x - 1);
  return Split::fromMask(m, n);
}

void requireGround(int n, int minimum, const char* what) {
  if (n < minimum)
    throw std::invalid_argument(std::string(what) + " needs n >= " +
                                std::to_string(minimum));
  if (n > 64) throw std::invalid_argument("ground set capped at 64 elements");
}

}  // namespace

CircularOrdering CircularOrdering::natural(int n) {
  CircularOrdering c;
  c.order.resize(n);
  for (int i = 0; i < n; ++i) c.order[i] = i;
  return c;
}

SplitSystem trivialSystem(int n) {
  requireGround(n, 3, "trivial system");
  return SplitSystem(GroundSet(n), {});
}

SplitSystem smallSplitsSystem(int n, std::optional<int> excludeAnchor) {
  requireGround(n, excludeAnchor ? 5 : 4, "small-splits system");
  if (excludeAnchor && (*excludeAnchor < 0 || *excludeAnchor >= n))
    throw std::invalid_argument("anchor outside ground set");
  std::vector<Split> splits;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (excludeAnchor && (x == *excludeAnchor || y == *excludeAnchor))
        continue;
      splits.push_back(Split::fromMask((Mask{1} << x) | (Mask{1} << y), n));
    }
  return SplitSystem(GroundSet(n), splits);
}

SplitSystem maximalCircular(const CircularOrdering& ordering) {
  int n = static_cast<int>(ordering.order.size());
  requireGround(n, 3, "maximal circular system");
  std::vector<Split> splits;
  for (int i = 0; i < n; ++i)
    for (int len = 1; len < n; ++len) {
      Mask interval = 0;
      for (int k = 0; k < len; ++k)
        interval |= Mask{1} << ordering.order[(i + k) % n];
      splits.push_back(Split::fromMask(interval, n));
    }
  SplitSystem sys(GroundSet(n), splits);
  if (sys.splitCount() != n * (n - 1) / 2)
    throw std::logic_error("maximal circular system size is not C(n,2)");
  return sys;
}

SplitSystem maximalCircular(int n) {
  return maximalCircular(CircularOrdering::natural(n));
}

SplitSystem halfGrid(int n) {
  requireGround(n, 4, "half-grid system");
  std::vector<std::string> labels;
  for (int i = 1; i <= n - 1; ++i) labels.push_back(std::to_string(i));
  labels.push_back("r");
  GroundSet ground{std::move(labels)};

  // Suffix intervals {k,...,n-1} and prefix intervals {1,...,k}; the root
  // always sits on the complement side.
  std::vector<Split> splits;
  for (int i = 0; i <= n - 3; ++i) {
    Mask suffix = 0;
    for (int x = n - 1 - i; x <= n - 1; ++x) suffix |= Mask{1} << (x - 1);
    splits.push_back(Split::fromMask(suffix, n));
    Mask prefix = 0;
    for (int x = 1; x <= n - 1 - i; ++x) prefix |= Mask{1} << (x - 1);
    splits.push_back(Split::fromMask(prefix, n));
  }
  return SplitSystem(std::move(ground), splits);
}

SplitSystem witnessId8() {
  const int n = 8;
  std::vector<Split> splits = {
      splitOf({1, 2, 3, 4}, n), splitOf({1, 3, 5, 7}, n),
      splitOf({1, 2, 3}, n),    splitOf({2, 4, 6}, n),
      splitOf({4, 7, 8}, n),    splitOf({1, 5, 6}, n),
      splitOf({1, 2}, n),       splitOf({3, 4}, n),
      splitOf({5, 6}, n),       splitOf({7, 8}, n),
      splitOf({2, 6}, n),       splitOf({3, 5}, n),
      splitOf({1, 7}, n),       splitOf({4, 8}, n),
      splitOf({6, 8}, n),       splitOf({5, 7}, n),
      splitOf({2, 3}, n),
  };
  return SplitSystem(GroundSet(n), splits);
}

SplitSystem exampleTree5() {
  const int n = 5;
  return SplitSystem(GroundSet(n), {splitOf({1, 5}, n), splitOf({2, 4}, n)});
}

SplitSystem exampleNetwork5() {
  const int n = 5;
  return SplitSystem(GroundSet(n),
                     {splitOf({1, 5}, n), splitOf({2, 4}, n),
                      splitOf({1, 2}, n), splitOf({3, 4}, n),
                      splitOf({3, 5}, n)});
}

SplitSystem bipartitePairs6() {
  const int n = 6;
  std::vector<Split> splits;
  for (int x = 1; x <= 3; ++x)
    for (int y = 4; y <= 6; ++y) splits.push_back(splitOf({x, y}, n));
  return SplitSystem(GroundSet(n), splits);
}

SplitSystem consecutivePairs5() {
  const int n = 5;
  return SplitSystem(GroundSet(n),
                     {splitOf({1, 2}, n), splitOf({2, 3}, n),
                      splitOf({3, 4}, n), splitOf({4, 5}, n)});
}

SplitSystem nonconsecutivePairsSystem(int n) {
  requireGround(n, 5, "non-consecutive pair system");
  std::vector<Split> splits;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool consecutive = (y == x + 1) || (x == 0 && y == n - 1);
      if (consecutive) continue;
      splits.push_back(Split::fromMask((Mask{1} << x) | (Mask{1} << y), n));
    }
  return SplitSystem(GroundSet(n), splits);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

SplitSystem randomSystem(int n, std::uint64_t seed, double inclusionProb) {
  requireGround(n, 3, "random system");
  if (n > 16) throw std::invalid_argument("random systems capped at n = 16");
  std::uint64_t state = seed;
  std::vector<Split> splits;
  Mask full = fullMask(n);
  // Canonical non-trivial masks in ascending order: bit 0 clear (element 0
  // sits on the complement side), both sides of size >= 2.
  for (Mask m = 2; m < full; m += 2) {
    int p = popcount(m);
    if (p < 2 || n - p < 2) continue;
    double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    if (u < inclusionProb) splits.push_back(Split::fromMask(m, n));
  }
  return SplitSystem(GroundSet(n), splits);
}

}  // namespace splitsys
