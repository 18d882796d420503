#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitsys/buneman_graph.hpp"
#include "splitsys/dot_export.hpp"
#include "splitsys/errors.hpp"
#include "splitsys/families.hpp"
#include "splitsys/injectivity.hpp"
#include "splitsys/search.hpp"
#include "splitsys/text_format.hpp"

namespace py = pybind11;
using namespace splitsys;

namespace {

std::vector<std::string> maskLabels(Mask m, const GroundSet& g) {
  std::vector<std::string> out;
  for (int x : bitsOf(m)) out.push_back(g.label(x));
  return out;
}

Mask maskFromLabels(const SplitSystem& sys, const std::vector<std::string>& labels) {
  Mask m = 0;
  for (const auto& l : labels) {
    int idx = sys.ground().indexOf(l);
    if (idx < 0) throw std::invalid_argument("unknown label: " + l);
    m |= Mask{1} << idx;
  }
  return m;
}

py::dict reportDict(const SearchReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["quantity"] = quantityName(r.quantity);
  if (r.exact())
    d["value"] = r.value();
  else
    d["value"] = py::make_tuple(r.lower, r.upper);
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["exact"] = r.exact();
  d["method"] = methodName(r.method);
  d["nodes_explored"] = r.nodesExplored;
  d["elapsed_seconds"] = r.elapsedSeconds;
  if (r.witness) d["witness"] = toText(*r.witness);
  return d;
}

}  // namespace

PYBIND11_MODULE(_splitsys, m) {
  m.doc() = "split systems, Buneman graphs and injectivity dimensions";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
  py::register_exception<ParseError>(m, "FormatError");

  py::class_<SplitSystem>(m, "SplitSystem")
      .def_static("from_text", [](const std::string& text) { return parseSystem(text); })
      .def("to_text", [](const SplitSystem& s) { return toText(s); })
      .def_property_readonly("ground_labels",
                             [](const SplitSystem& s) { return s.ground().labels(); })
      .def_property_readonly("n", &SplitSystem::groundSize)
      .def("split_count", &SplitSystem::splitCount)
      .def("nontrivial_count", &SplitSystem::nontrivialCount)
      .def("dimension", &SplitSystem::dimension)
      .def("restrict",
           [](const SplitSystem& s, const std::vector<std::string>& labels) {
             return s.restrictTo(maskFromLabels(s, labels));
           })
      .def("splits",
           [](const SplitSystem& s) {
             std::vector<std::string> out;
             for (const Split& sp : s.splits())
               out.push_back(splitToText(sp, s.ground()));
             return out;
           })
      .def("__eq__", [](const SplitSystem& a, const SplitSystem& b) { return a == b; })
      .def("__repr__", [](const SplitSystem& s) {
        return "<SplitSystem n=" + std::to_string(s.groundSize()) + " splits=" +
               std::to_string(s.splitCount()) + ">";
      });

  // generators
  m.def("trivial_system", &trivialSystem, py::arg("n"));
  m.def(
      "small_splits_system",
      [](int n, std::optional<int> anchor) { return smallSplitsSystem(n, anchor); },
      py::arg("n"), py::arg("exclude_anchor") = std::nullopt);
  m.def("maximal_circular", py::overload_cast<int>(&maximalCircular), py::arg("n"));
  m.def("half_grid", &halfGrid, py::arg("n"));
  m.def("half_grid_root", &halfGridRoot, py::arg("n"));
  m.def("witness_id8", &witnessId8);
  m.def("example_tree5", &exampleTree5);
  m.def("example_network5", &exampleNetwork5);
  m.def("bipartite_pairs6", &bipartitePairs6);
  m.def("consecutive_pairs5", &consecutivePairs5);
  m.def("nonconsecutive_pairs_system", &nonconsecutivePairsSystem, py::arg("n"));
  m.def("random_system", &randomSystem, py::arg("n"), py::arg("seed"),
        py::arg("inclusion_prob"));

  // predicates
  m.def(
      "is_injective",
      [](const SplitSystem& s, const std::string& method) {
        if (method == "dicing") return isInjectiveDicing(s);
        if (method == "bruteforce") return isInjectiveBruteforce(s).injective;
        throw std::invalid_argument("method must be 'dicing' or 'bruteforce'");
      },
      py::arg("system"), py::arg("method") = "dicing");
  m.def("injectivity_collision", [](const SplitSystem& s) -> py::object {
    auto r = isInjectiveBruteforce(s);
    if (!r.collision) return py::none();
    return py::make_tuple(maskLabels(r.collision->first, s.ground()),
                          maskLabels(r.collision->second, s.ground()));
  });
  m.def("dices", [](const SplitSystem& s) {
    return py::make_tuple(dices4(s), dices5(s), dices6(s));
  });
  m.def(
      "is_rooted_injective",
      [](const SplitSystem& s, const std::string& root) {
        int idx = s.ground().indexOf(root);
        if (idx < 0) throw std::invalid_argument("unknown root label: " + root);
        return isRootedInjective(s, idx).injective;
      },
      py::arg("system"), py::arg("root"));
  m.def("is_surjective", &isSurjective, py::arg("system"),
        py::arg("vertex_budget") = BunemanGraph::kDefaultVertexBudget);
  m.def("is_bijective", &isBijective, py::arg("system"),
        py::arg("vertex_budget") = BunemanGraph::kDefaultVertexBudget);

  // medians
  m.def(
      "median",
      [](const SplitSystem& s, const std::vector<std::string>& triple) {
        Mask t = maskFromLabels(s, triple);
        PhiMap phi = tripleMedian(s, t);
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (int i = 0; i < s.splitCount(); ++i)
          out.emplace_back(splitToText(s.split(i), s.ground()),
                           maskLabels(chosenPart(s, phi, i), s.ground()));
        return out;
      },
      py::arg("system"), py::arg("triple"));

  // Buneman graph summary + DOT
  m.def(
      "buneman_summary",
      [](const SplitSystem& s, std::size_t budget) {
        BunemanGraph g = BunemanGraph::build(s, budget);
        py::dict d;
        d["vertices"] = g.vertexCount();
        d["edges"] = g.edgeCount();
        d["internal"] = g.internalCount();
        d["leaves"] = s.groundSize();
        d["largest_cube"] = g.largestCubeDimension();
        d["median_graph"] = g.medianGraphCheck();
        d["partial_cube"] = g.partialCubeCheck();
        return d;
      },
      py::arg("system"), py::arg("vertex_budget") = BunemanGraph::kDefaultVertexBudget);
  m.def(
      "buneman_dot",
      [](const SplitSystem& s, bool labelMedians, std::size_t budget) {
        return toDot(BunemanGraph::build(s, budget), labelMedians);
      },
      py::arg("system"), py::arg("label_medians") = false,
      py::arg("vertex_budget") = BunemanGraph::kDefaultVertexBudget);

  // searches
  m.def(
      "id_search",
      [](int n, std::uint64_t budget, int threads) {
        return reportDict(idSearch(n, budget, threads));
      },
      py::arg("n"), py::arg("node_budget") = kDefaultNodeBudget,
      py::arg("threads") = 1);
  m.def(
      "id2_search",
      [](int n, std::uint64_t budget, int threads) {
        return reportDict(id2Search(n, budget, threads));
      },
      py::arg("n"), py::arg("node_budget") = kDefaultNodeBudget,
      py::arg("threads") = 1);
  m.def(
      "idr_search", [](int n) { return reportDict(idrSearch(n)); }, py::arg("n"));
  m.def(
      "scan_bijective",
      [](int n, int samples, std::uint64_t seed) {
        ScanResult r = scanBijective(n, samples, seed);
        std::vector<std::string> found;
        for (const SplitSystem& sys : r.found) found.push_back(toText(sys));
        py::dict d;
        d["n"] = r.n;
        d["examined"] = r.examined;
        d["found"] = found;
        return d;
      },
      py::arg("n"), py::arg("samples") = 10000, py::arg("seed") = 1);
}
