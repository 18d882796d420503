#include "splitsys/dot_export.hpp"

#include <map>
#include <sstream>

#include "splitsys/text_format.hpp"

namespace splitsys {

std::string toDot(const BunemanGraph& graph, bool labelMedians) {
  const SplitSystem& sys = graph.system();

  std::map<int, std::vector<Mask>> medianTriples;
  if (labelMedians) {
    forEachSubsetMask(sys.ground().full(), 3, [&](Mask triple) {
      int id = graph.indexOf(tripleMedian(sys, triple));
      if (id >= 0) medianTriples[id].push_back(triple);
    });
  }

  std::vector<int> leafOf(graph.vertexCount(), -1);
  for (int x = 0; x < sys.groundSize(); ++x) leafOf[graph.leafVertex(x)] = x;

  std::ostringstream out;
  out << "graph buneman {\n";
  out << "  node [shape=circle];\n";
  for (int id = 0; id < graph.vertexCount(); ++id) {
    std::string label = leafOf[id] >= 0 ? sys.ground().label(leafOf[id])
                                        : graph.vertex(id).toHex();
    if (labelMedians) {
      auto it = medianTriples.find(id);
      if (it != medianTriples.end()) {
        for (Mask triple : it->second)
          label += "\\n" + subsetToText(triple, sys.ground());
      }
    }
    out << "  v" << id << " [label=\"" << label << "\"";
    if (leafOf[id] >= 0) out << " shape=plaintext";
    out << "];\n";
  }
  for (auto [u, v] : graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace splitsys
