#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "splitsys/split_system.hpp"

namespace splitsys {

// A choice of one part per split, one bit per split in the system's canonical
// order: bit i set = canonical part of split i, clear = complement part.
// Buneman vertices, leaf maps and triple medians are all PhiMaps.
class PhiMap {
 public:
  explicit PhiMap(int splitCount)
      : count_(splitCount), words_((splitCount + 63) / 64, 0) {
    if (words_.empty()) words_.push_back(0);
  }

  int splitCount() const { return count_; }
  bool picksCanonical(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool canonical) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (canonical)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  int hammingDistance(const PhiMap& other) const {
    int d = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      d += std::popcount(words_[w] ^ other.words_[w]);
    return d;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const PhiMap& other) const {
    return count_ == other.count_ && words_ == other.words_;
  }
  bool operator<(const PhiMap& other) const { return words_ < other.words_; }

  std::string toHex() const;

 private:
  int count_;
  std::vector<std::uint64_t> words_;
};

struct PhiMapHash {
  std::size_t operator()(const PhiMap& p) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : p.words()) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// The part of split i chosen by phi, as an element mask.
inline Mask chosenPart(const SplitSystem& sys, const PhiMap& phi, int i) {
  const Split& s = sys.split(i);
  return phi.picksCanonical(i) ? s.canonicalPart() : s.complementPart();
}

// phi_x: assigns to every split the part containing x.
PhiMap leafMap(const SplitSystem& sys, int x);

// Median of a 3-element subset by the direct formula: each split gets the
// part holding at least two of the three elements. Equals the graph median
// of the three leaves; no graph construction needed.
PhiMap tripleMedian(const SplitSystem& sys, Mask triple);

// Majority map of three PhiMaps (per-bit two-out-of-three).
PhiMap majorityMap(const PhiMap& a, const PhiMap& b, const PhiMap& c);

// True iff all chosen parts pairwise intersect.
bool pairwiseIntersecting(const SplitSystem& sys, const PhiMap& phi);

}  // namespace splitsys
