#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace splitsys {

// Element subsets of a ground set (n <= 64) are stored as one machine word,
// bit i = element with ground index i.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask fullMask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline bool hasBit(Mask m, int i) { return (m >> i) & Mask{1}; }

inline int lowestBit(Mask m) { return std::countr_zero(m); }

inline std::vector<int> bitsOf(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    int i = lowestBit(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

// Visits every k-subset of the set bits of `universe` as a mask, in
// lexicographic order of the chosen element indices.
template <typename F>
void forEachSubsetMask(Mask universe, int k, F&& visit) {
  std::vector<int> elems = bitsOf(universe);
  int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(Mask{0});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << elems[i];
    visit(m);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace splitsys
