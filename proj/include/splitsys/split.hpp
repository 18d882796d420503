#pragma once

#include <compare>
#include <cstdint>

#include "splitsys/bits.hpp"

namespace splitsys {

// A bipartition A|B of the ground set. Canonical representative is the side
// NOT containing element index 0, so A|B and B|A compare equal structurally
// and compatibility is four mask intersections.
class Split {
 public:
  // Canonicalizes `part`; throws std::invalid_argument if part or its
  // complement is empty.
  static Split fromMask(Mask part, int groundSize);

  Mask canonicalPart() const { return mask_; }
  Mask complementPart() const { return fullMask(n_) & ~mask_; }
  int groundSize() const { return n_; }

  int size() const {
    int p = popcount(mask_);
    return p < n_ - p ? p : n_ - p;
  }
  bool isTrivial() const { return size() == 1; }

  struct SmallPart {
    Mask part;
    bool ambiguous;  // both sides have equal size
  };
  // Strictly smaller side; for balanced splits returns the canonical side
  // tagged ambiguous.
  SmallPart smallPart() const;

  // Side containing element x; throws std::invalid_argument if x is outside
  // the ground set.
  Mask partContaining(int x) const;

  bool separates(int x, int y) const {
    return hasBit(mask_, x) != hasBit(mask_, y);
  }

  // Compatible iff equal or one of the four part intersections is empty.
  bool compatibleWith(const Split& other) const;
  bool incompatibleWith(const Split& other) const {
    return !compatibleWith(other);
  }

  bool operator==(const Split& other) const {
    return n_ == other.n_ && mask_ == other.mask_;
  }
  // Order: by size, then canonical mask. This is the canonical split order
  // used everywhere (system storage, PhiMap bit indexing, text output).
  std::strong_ordering operator<=>(const Split& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return mask_ <=> other.mask_;
  }

 private:
  Split(Mask mask, int n) : mask_(mask), n_(n) {}
  Mask mask_;
  int n_;
};

}  // namespace splitsys
