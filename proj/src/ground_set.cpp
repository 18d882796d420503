#include "splitsys/ground_set.hpp"

#include <stdexcept>

namespace splitsys {

namespace {

std::vector<std::string> numericLabels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

GroundSet::GroundSet(int n) : GroundSet(numericLabels(n)) {}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("ground set must be nonempty");
  if (labels_.size() > 64)
    throw std::invalid_argument("ground set capped at 64 elements");
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty())
      throw std::invalid_argument("empty ground set label");
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted)
      throw std::invalid_argument("duplicate ground set label: " + labels_[i]);
  }
}

int GroundSet::indexOf(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? -1 : it->second;
}

}  // namespace splitsys
