#pragma once

#include <string>

#include "splitsys/buneman_graph.hpp"

namespace splitsys {

// Graphviz DOT rendering of a Buneman graph. Leaves carry their ground-set
// label, internal vertices their PhiMap bit-vector in hex. With
// `labelMedians`, every median vertex additionally lists the 3-subsets that
// map to it.
std::string toDot(const BunemanGraph& graph, bool labelMedians = false);

}  // namespace splitsys
