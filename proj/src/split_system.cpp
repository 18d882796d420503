#include "splitsys/split_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitsys {

IncompatibilityGraph::IncompatibilityGraph(int vertexCount)
    : n_(vertexCount), words_((vertexCount + 63) / 64),
      rows_(vertexCount, std::vector<std::uint64_t>(words_ == 0 ? 1 : words_, 0)) {
  if (words_ == 0) words_ = 1;
}

void IncompatibilityGraph::addEdge(int i, int j) {
  rows_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
  rows_[j][i >> 6] |= std::uint64_t{1} << (i & 63);
}

std::vector<std::pair<int, int>> IncompatibilityGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

// Tomita-style branch and bound. `cand` rows, greedy colouring upper bound.
class CliqueSolver {
 public:
  explicit CliqueSolver(const IncompatibilityGraph& g)
      : g_(g), words_(g.wordCount()) {}

  int solve(std::vector<int>* witness) {
    std::vector<std::uint64_t> cand(words_, 0);
    for (int i = 0; i < g_.vertexCount(); ++i)
      cand[i >> 6] |= std::uint64_t{1} << (i & 63);
    best_ = 0;
    expand(cand, 0);
    if (witness) *witness = bestClique_;
    return best_;
  }

 private:
  void expand(std::vector<std::uint64_t> cand, int depth) {
    std::vector<int> order;
    std::vector<int> colour;
    colourSort(cand, order, colour);
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
      if (depth + colour[k] <= best_) return;  // bound
      int v = order[k];
      stack_.push_back(v);
      if (depth + 1 > best_) {
        best_ = depth + 1;
        bestClique_ = stack_;
      }
      std::vector<std::uint64_t> next(words_);
      bool any = false;
      for (int w = 0; w < words_; ++w) {
        next[w] = cand[w] & g_.row(v)[w];
        any |= next[w] != 0;
      }
      if (any) expand(next, depth + 1);
      stack_.pop_back();
      cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  // Greedy colouring of the candidate set; vertices emitted in nondecreasing
  // colour order so the bound tightens from the back.
  void colourSort(const std::vector<std::uint64_t>& cand,
                  std::vector<int>& order, std::vector<int>& colour) {
    std::vector<std::uint64_t> uncoloured = cand;
    int c = 0;
    while (true) {
      bool any = false;
      for (int w = 0; w < words_; ++w) any |= uncoloured[w] != 0;
      if (!any) break;
      ++c;
      std::vector<std::uint64_t> avail = uncoloured;
      while (true) {
        int v = -1;
        for (int w = 0; w < words_ && v < 0; ++w)
          if (avail[w] != 0) v = (w << 6) + std::countr_zero(avail[w]);
        if (v < 0) break;
        order.push_back(v);
        colour.push_back(c);
        uncoloured[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        for (int w = 0; w < words_; ++w) avail[w] &= ~g_.row(v)[w];
        avail[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      }
    }
  }

  const IncompatibilityGraph& g_;
  int words_;
  int best_ = 0;
  std::vector<int> stack_;
  std::vector<int> bestClique_;
};

}  // namespace

int maxCliqueSize(const IncompatibilityGraph& g, std::vector<int>* witness) {
  if (g.vertexCount() == 0) {
    if (witness) witness->clear();
    return 0;
  }
  return CliqueSolver(g).solve(witness);
}

SplitSystem::SplitSystem(GroundSet ground, const std::vector<Split>& splits)
    : ground_(std::move(ground)) {
  int n = ground_.size();
  if (n < 3)
    throw std::invalid_argument("split systems need a ground set of size >= 3");
  splits_.reserve(splits.size() + n);
  for (const Split& s : splits) {
    if (s.groundSize() != n)
      throw std::invalid_argument("split ground size does not match system");
    splits_.push_back(s);
  }
  for (int x = 0; x < n; ++x)
    splits_.push_back(Split::fromMask(Mask{1} << x, n));
  std::sort(splits_.begin(), splits_.end());
  splits_.erase(std::unique(splits_.begin(), splits_.end()), splits_.end());
}

bool SplitSystem::contains(const Split& s) const { return indexOf(s) >= 0; }

int SplitSystem::indexOf(const Split& s) const {
  auto it = std::lower_bound(splits_.begin(), splits_.end(), s);
  if (it != splits_.end() && *it == s)
    return static_cast<int>(it - splits_.begin());
  return -1;
}

int SplitSystem::nontrivialCount() const {
  int c = 0;
  for (const Split& s : splits_)
    if (!s.isTrivial()) ++c;
  return c;
}

SplitSystem SplitSystem::restrictTo(Mask subset) const {
  subset &= ground_.full();
  int k = popcount(subset);
  if (k < 3)
    throw std::invalid_argument("restriction needs at least 3 elements");

  std::vector<int> keep = bitsOf(subset);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  std::vector<int> newIndex(ground_.size(), -1);
  for (int i = 0; i < k; ++i) {
    labels.push_back(ground_.label(keep[i]));
    newIndex[keep[i]] = i;
  }

  std::vector<Split> restricted;
  for (const Split& s : splits_) {
    Mask a = s.canonicalPart() & subset;
    Mask b = s.complementPart() & subset;
    if (a == 0 || b == 0) continue;  // degenerate image, dropped
    Mask compact = 0;
    for (int x : bitsOf(a)) compact |= Mask{1} << newIndex[x];
    restricted.push_back(Split::fromMask(compact, k));
  }
  return SplitSystem(GroundSet(std::move(labels)), restricted);
}

IncompatibilityGraph SplitSystem::incompatibilityGraph() const {
  int m = splitCount();
  IncompatibilityGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (splits_[i].incompatibleWith(splits_[j])) g.addEdge(i, j);
  return g;
}

int SplitSystem::dimension() const {
  int clique = maxCliqueSize(incompatibilityGraph());
  return clique < 1 ? 1 : clique;
}

Split makeSplit(Mask part, const GroundSet& ground) {
  return Split::fromMask(part, ground.size());
}

}  // namespace splitsys
