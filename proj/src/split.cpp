#include "splitsys/split.hpp"

#include <stdexcept>

namespace splitsys {

Split Split::fromMask(Mask part, int groundSize) {
  if (groundSize < 2 || groundSize > 64)
    throw std::invalid_argument("split ground size out of range");
  Mask full = fullMask(groundSize);
  part &= full;
  if (part == 0 || part == full)
    throw std::invalid_argument("degenerate split: one side is empty");
  // Canonical side excludes element 0.
  if (hasBit(part, 0)) part = full & ~part;
  return Split(part, groundSize);
}

Split::SmallPart Split::smallPart() const {
  int a = popcount(mask_);
  int b = n_ - a;
  if (a < b) return {mask_, false};
  if (b < a) return {complementPart(), false};
  return {mask_, true};
}

Mask Split::partContaining(int x) const {
  if (x < 0 || x >= n_)
    throw std::invalid_argument("element outside ground set");
  return hasBit(mask_, x) ? mask_ : complementPart();
}

bool Split::compatibleWith(const Split& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("splits on different ground sets");
  if (mask_ == other.mask_) return true;
  Mask a = mask_, b = complementPart();
  Mask c = other.mask_, d = other.complementPart();
  return (a & c) == 0 || (a & d) == 0 || (b & c) == 0 || (b & d) == 0;
}

}  // namespace splitsys
