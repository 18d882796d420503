#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitsys/phi_map.hpp"
#include "splitsys/split_system.hpp"

namespace splitsys {

// The Buneman graph of a split system: vertices are all PhiMaps whose chosen
// parts pairwise intersect, edges join maps differing on exactly one split.
// Immutable after build; read operations are pure and thread-safe except for
// the lazily memoized distance matrix (guarded internally).
class BunemanGraph {
 public:
  static constexpr std::size_t kDefaultVertexBudget = 100000;

  // Enumerates vertices by backtracking over splits in canonical order
  // (least balanced first), pruning on the first empty pairwise
  // intersection. Throws ResourceLimitError beyond vertexBudget.
  static BunemanGraph build(SplitSystem sys,
                            std::size_t vertexBudget = kDefaultVertexBudget);

  const SplitSystem& system() const { return sys_; }
  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  std::size_t edgeCount() const { return edges_.size(); }
  const PhiMap& vertex(int id) const { return vertices_[id]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int id) const { return adjacency_[id]; }
  int degree(int id) const { return static_cast<int>(adjacency_[id].size()); }

  // Vertex id of the leaf map phi_x.
  int leafVertex(int x) const { return leafIndex_.at(x); }
  bool isLeafVertex(int id) const;
  int internalCount() const;

  // Vertex id of a PhiMap, -1 if absent.
  int indexOf(const PhiMap& phi) const;

  // For edge (u,v), the unique split index the endpoints differ on.
  int edgeSplit(int u, int v) const;

  int distance(int u, int v) const;

  // Unique vertex on shortest paths between each pair; throws
  // std::logic_error if the median is not unique (construction bug: every
  // Buneman graph is a median graph).
  int medianVertex(int u, int v, int w) const;

  // S3: every vertex triple has exactly one median.
  bool medianGraphCheck() const;

  // S4: graph distance equals the number of splits the PhiMaps differ on,
  // for all vertex pairs.
  bool partialCubeCheck() const;

  // Dimension of the largest hypercube subgraph; cross-oracle for
  // SplitSystem::dimension().
  int largestCubeDimension() const;

  struct SplitCut {
    std::vector<int> componentOf;  // vertex id -> component id
    int componentCount;
  };
  // Components left after removing every edge crossing the given split (S2:
  // exactly two, one per part).
  SplitCut removeSplitEdges(int splitIndex) const;

 private:
  explicit BunemanGraph(SplitSystem sys) : sys_(std::move(sys)) {}
  void finalize();
  const std::vector<std::vector<std::uint16_t>>& distanceMatrix() const;
  std::vector<std::uint16_t> bfsFrom(int source) const;

  SplitSystem sys_;
  std::vector<PhiMap> vertices_;
  std::unordered_map<PhiMap, int, PhiMapHash> index_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> leafIndex_;
  mutable std::optional<std::vector<std::vector<std::uint16_t>>> dist_;
};

}  // namespace splitsys
