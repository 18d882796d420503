#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "splitsys/bits.hpp"

namespace splitsys {

// The labelled ground set X. Elements are addressed by 0-based index
// internally; labels are the external names (default "1".."n").
// Capped at 64 elements so subsets fit one machine word.
class GroundSet {
 public:
  explicit GroundSet(int n);
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return fullMask(size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label, -1 if unknown.
  int indexOf(std::string_view label) const;

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace splitsys
