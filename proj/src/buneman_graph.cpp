#include "splitsys/buneman_graph.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <stdexcept>

#include "splitsys/errors.hpp"

namespace splitsys {

namespace {
constexpr std::uint16_t kUnreached = 0xffff;
constexpr int kDistanceMatrixCap = 4000;
std::mutex gDistMutex;
}  // namespace

BunemanGraph BunemanGraph::build(SplitSystem sys, std::size_t vertexBudget) {
  BunemanGraph g(std::move(sys));
  int m = g.sys_.splitCount();
  std::vector<Mask> canonical(m), complement(m);
  for (int i = 0; i < m; ++i) {
    canonical[i] = g.sys_.split(i).canonicalPart();
    complement[i] = g.sys_.split(i).complementPart();
  }

  // Depth-first over splits; canonical order already puts the least
  // balanced splits first, so intersection violations surface early.
  std::vector<Mask> chosen(m);
  PhiMap current(m);
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == m) {
      if (g.vertices_.size() >= vertexBudget)
        throw ResourceLimitError("Buneman vertex budget exceeded (" +
                                 std::to_string(vertexBudget) + ")");
      g.vertices_.push_back(current);
      return;
    }
    for (int side = 0; side < 2; ++side) {
      Mask part = side == 0 ? canonical[i] : complement[i];
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = (chosen[j] & part) != 0;
      if (!ok) continue;
      chosen[i] = part;
      current.set(i, side == 0);
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  g.finalize();
  return g;
}

void BunemanGraph::finalize() {
  int v = vertexCount();
  int m = sys_.splitCount();
  index_.reserve(v * 2);
  for (int id = 0; id < v; ++id) index_.emplace(vertices_[id], id);

  adjacency_.assign(v, {});
  for (int id = 0; id < v; ++id) {
    PhiMap probe = vertices_[id];
    for (int i = 0; i < m; ++i) {
      probe.flip(i);
      auto it = index_.find(probe);
      if (it != index_.end() && it->second > id) {
        edges_.emplace_back(id, it->second);
        adjacency_[id].push_back(it->second);
        adjacency_[it->second].push_back(id);
      }
      probe.flip(i);
    }
  }

  leafIndex_.resize(sys_.groundSize());
  for (int x = 0; x < sys_.groundSize(); ++x) {
    auto it = index_.find(leafMap(sys_, x));
    if (it == index_.end())
      throw std::logic_error("leaf map missing from Buneman vertex set");
    leafIndex_[x] = it->second;
  }
}

bool BunemanGraph::isLeafVertex(int id) const {
  for (int x : leafIndex_)
    if (x == id) return true;
  return false;
}

int BunemanGraph::internalCount() const {
  return vertexCount() - static_cast<int>(leafIndex_.size());
}

int BunemanGraph::indexOf(const PhiMap& phi) const {
  auto it = index_.find(phi);
  return it == index_.end() ? -1 : it->second;
}

int BunemanGraph::edgeSplit(int u, int v) const {
  const auto& a = vertices_[u].words();
  const auto& b = vertices_[v].words();
  int diff = -1;
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t x = a[w] ^ b[w];
    if (x == 0) continue;
    if (diff >= 0 || (x & (x - 1)) != 0)
      throw std::invalid_argument("vertices differ on more than one split");
    diff = static_cast<int>(w) * 64 + std::countr_zero(x);
  }
  if (diff < 0) throw std::invalid_argument("identical vertices have no edge");
  return diff;
}

std::vector<std::uint16_t> BunemanGraph::bfsFrom(int source) const {
  std::vector<std::uint16_t> dist(vertexCount(), kUnreached);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int w : adjacency_[u]) {
      if (dist[w] != kUnreached) continue;
      dist[w] = static_cast<std::uint16_t>(dist[u] + 1);
      queue.push(w);
    }
  }
  return dist;
}

const std::vector<std::vector<std::uint16_t>>& BunemanGraph::distanceMatrix() const {
  std::lock_guard<std::mutex> lock(gDistMutex);
  if (!dist_) {
    if (vertexCount() > kDistanceMatrixCap)
      throw ResourceLimitError("distance matrix capped at " +
                               std::to_string(kDistanceMatrixCap) + " vertices");
    std::vector<std::vector<std::uint16_t>> d;
    d.reserve(vertexCount());
    for (int v = 0; v < vertexCount(); ++v) d.push_back(bfsFrom(v));
    dist_ = std::move(d);
  }
  return *dist_;
}

int BunemanGraph::distance(int u, int v) const {
  if (dist_) return (*dist_)[u][v];
  if (vertexCount() <= kDistanceMatrixCap) return distanceMatrix()[u][v];
  return bfsFrom(u)[v];
}

int BunemanGraph::medianVertex(int u, int v, int w) const {
  std::vector<std::uint16_t> du = bfsFrom(u), dv = bfsFrom(v), dw = bfsFrom(w);
  int found = -1;
  for (int x = 0; x < vertexCount(); ++x) {
    bool between = du[x] + dv[x] == du[v] && dv[x] + dw[x] == dv[w] &&
                   du[x] + dw[x] == du[w];
    if (!between) continue;
    if (found >= 0)
      throw std::logic_error("median not unique; Buneman construction bug");
    found = x;
  }
  if (found < 0)
    throw std::logic_error("no median vertex; Buneman construction bug");
  return found;
}

bool BunemanGraph::partialCubeCheck() const {
  const auto& d = distanceMatrix();
  for (int i = 0; i < vertexCount(); ++i)
    for (int j = i + 1; j < vertexCount(); ++j)
      if (d[i][j] != vertices_[i].hammingDistance(vertices_[j])) return false;
  return true;
}

bool BunemanGraph::medianGraphCheck() const {
  int v = vertexCount();
  if (!partialCubeCheck()) {
    // Distances disagree with the hypercube embedding; fall back to a direct
    // triple scan. Only reachable for broken constructions, so size is small.
    const auto& d = distanceMatrix();
    for (int a = 0; a < v; ++a)
      for (int b = a; b < v; ++b)
        for (int c = b; c < v; ++c) {
          int medians = 0;
          for (int x = 0; x < v; ++x)
            if (d[a][x] + d[x][b] == d[a][b] && d[b][x] + d[x][c] == d[b][c] &&
                d[a][x] + d[x][c] == d[a][c])
              ++medians;
          if (medians != 1) return false;
        }
    return true;
  }

  // Graph distance is Hamming distance, so the unique candidate median of a
  // triple is the per-bit majority map; the triple has a (unique) median in
  // the graph iff that map is a vertex.
  if (vertices_.empty()) return true;
  if (vertices_[0].words().size() == 1) {
    std::vector<std::uint64_t> keys(v);
    for (int i = 0; i < v; ++i) keys[i] = vertices_[i].words()[0];
    std::vector<std::uint64_t> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) {
        std::uint64_t ab_and = keys[a] & keys[b];
        std::uint64_t ab_or = keys[a] | keys[b];
        for (int c = b + 1; c < v; ++c) {
          std::uint64_t maj = ab_and | (ab_or & keys[c]);
          if (!std::binary_search(sorted.begin(), sorted.end(), maj))
            return false;
        }
      }
    return true;
  }
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c)
        if (indexOf(majorityMap(vertices_[a], vertices_[b], vertices_[c])) < 0)
          return false;
  return true;
}

int BunemanGraph::largestCubeDimension() const {
  int best = 0;
  std::vector<int> bestDirs;
  int bestBase = -1;
  for (int v = 0; v < vertexCount(); ++v) {
    std::vector<int> dirs;
    for (int w : adjacency_[v]) dirs.push_back(edgeSplit(v, w));
    std::sort(dirs.begin(), dirs.end());
    int k = static_cast<int>(dirs.size());
    if (k <= best && k <= 1) continue;

    // Cube corners at v are cliques of the square graph on incident edge
    // directions (two directions joined iff the fourth square corner exists).
    IncompatibilityGraph squares(k);
    PhiMap probe = vertices_[v];
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        probe.flip(dirs[i]);
        probe.flip(dirs[j]);
        if (indexOf(probe) >= 0) squares.addEdge(i, j);
        probe.flip(dirs[i]);
        probe.flip(dirs[j]);
      }
    std::vector<int> clique;
    int size = maxCliqueSize(squares, &clique);
    if (k >= 1 && size < 1) size = 1;  // a lone edge is a 1-cube
    if (size > best) {
      best = size;
      bestBase = v;
      bestDirs.clear();
      for (int i : clique) bestDirs.push_back(dirs[i]);
      if (bestDirs.empty() && k >= 1) bestDirs.push_back(dirs[0]);
    }
  }

  // Verify the winning cube corner-by-corner rather than trusting the
  // square-clique argument.
  if (best >= 1) {
    PhiMap corner = vertices_[bestBase];
    for (Mask subset = 0; subset < (Mask{1} << bestDirs.size()); ++subset) {
      PhiMap probe = corner;
      for (std::size_t i = 0; i < bestDirs.size(); ++i)
        if (hasBit(subset, static_cast<int>(i))) probe.flip(bestDirs[i]);
      if (indexOf(probe) < 0)
        throw std::logic_error("cube verification failed; construction bug");
    }
  }
  return best;
}

BunemanGraph::SplitCut BunemanGraph::removeSplitEdges(int splitIndex) const {
  SplitCut cut;
  cut.componentOf.assign(vertexCount(), -1);
  cut.componentCount = 0;
  for (int start = 0; start < vertexCount(); ++start) {
    if (cut.componentOf[start] >= 0) continue;
    int comp = cut.componentCount++;
    std::queue<int> queue;
    cut.componentOf[start] = comp;
    queue.push(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : adjacency_[u]) {
        if (cut.componentOf[w] >= 0) continue;
        if (edgeSplit(u, w) == splitIndex) continue;
        cut.componentOf[w] = comp;
        queue.push(w);
      }
    }
  }
  return cut;
}

}  // namespace splitsys
