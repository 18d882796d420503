#include "splitsys/phi_map.hpp"

#include <stdexcept>

namespace splitsys {

std::string PhiMap::toHex() const {
  int nibbles = (count_ + 3) / 4;
  if (nibbles == 0) nibbles = 1;
  std::string out = "0x";
  for (int i = nibbles - 1; i >= 0; --i) {
    unsigned v = static_cast<unsigned>((words_[(i * 4) >> 6] >> ((i * 4) & 63)) & 0xf);
    out += "0123456789abcdef"[v];
  }
  return out;
}

PhiMap leafMap(const SplitSystem& sys, int x) {
  if (x < 0 || x >= sys.groundSize())
    throw std::invalid_argument("element outside ground set");
  PhiMap phi(sys.splitCount());
  for (int i = 0; i < sys.splitCount(); ++i)
    phi.set(i, hasBit(sys.split(i).canonicalPart(), x));
  return phi;
}

PhiMap tripleMedian(const SplitSystem& sys, Mask triple) {
  triple &= sys.ground().full();
  if (popcount(triple) != 3)
    throw std::invalid_argument("median formula needs exactly 3 elements");
  PhiMap phi(sys.splitCount());
  for (int i = 0; i < sys.splitCount(); ++i)
    phi.set(i, popcount(sys.split(i).canonicalPart() & triple) >= 2);
  return phi;
}

PhiMap majorityMap(const PhiMap& a, const PhiMap& b, const PhiMap& c) {
  PhiMap out(a.splitCount());
  for (int i = 0; i < a.splitCount(); ++i) {
    int votes = a.picksCanonical(i) + b.picksCanonical(i) + c.picksCanonical(i);
    out.set(i, votes >= 2);
  }
  return out;
}

bool pairwiseIntersecting(const SplitSystem& sys, const PhiMap& phi) {
  int m = sys.splitCount();
  for (int i = 0; i < m; ++i) {
    Mask a = chosenPart(sys, phi, i);
    for (int j = i + 1; j < m; ++j)
      if ((a & chosenPart(sys, phi, j)) == 0) return false;
  }
  return true;
}

}  // namespace splitsys
