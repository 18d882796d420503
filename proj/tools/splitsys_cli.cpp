// splitsys: split systems, Buneman graphs, medians, injectivity and
// dimension searches from the command line.
//
// Exit codes: 0 success / predicate true, 1 predicate false, 2 usage or
// input error, 3 resource budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitsys/buneman_graph.hpp"
#include "splitsys/dot_export.hpp"
#include "splitsys/errors.hpp"
#include "splitsys/families.hpp"
#include "splitsys/injectivity.hpp"
#include "splitsys/report_json.hpp"
#include "splitsys/search.hpp"
#include "splitsys/text_format.hpp"

namespace {

using json = nlohmann::json;
using namespace splitsys;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string readInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SplitSystem loadSystem(const std::string& path) {
  return parseSystem(readInput(path));
}

int requireElement(const SplitSystem& sys, const std::string& label) {
  int idx = sys.ground().indexOf(label);
  if (idx < 0) throw ParseError(0, "label '" + label + "' not in ground set");
  return idx;
}

std::vector<std::string> subsetLabels(Mask subset, const GroundSet& ground) {
  std::vector<std::string> out;
  for (int x : bitsOf(subset)) out.push_back(ground.label(x));
  return out;
}

struct GenOptions {
  std::string family;
  int n = 5;
  std::string anchor;
  std::uint64_t seed = 1;
  double prob = 0.3;
};

SplitSystem generate(const GenOptions& opt) {
  const std::string& f = opt.family;
  if (f == "trivial") return trivialSystem(opt.n);
  if (f == "small-splits") {
    std::optional<int> anchor;
    if (!opt.anchor.empty()) {
      GroundSet g(opt.n);
      int idx = g.indexOf(opt.anchor);
      if (idx < 0) throw ParseError(0, "anchor '" + opt.anchor + "' not in 1.." +
                                           std::to_string(opt.n));
      anchor = idx;
    }
    return smallSplitsSystem(opt.n, anchor);
  }
  if (f == "max-circular") return maximalCircular(opt.n);
  if (f == "half-grid") return halfGrid(opt.n);
  if (f == "id8-witness") return witnessId8();
  if (f == "tree5") return exampleTree5();
  if (f == "network5") return exampleNetwork5();
  if (f == "k33-pairs") return bipartitePairs6();
  if (f == "path-pairs") return consecutivePairs5();
  if (f == "nonconsec-pairs") return nonconsecutivePairsSystem(opt.n);
  if (f == "random") return randomSystem(opt.n, opt.seed, opt.prob);
  throw ParseError(0, "unknown family: " + f);
}

int runCheck(const std::string& predicate, const std::string& file,
             const std::string& method, const std::string& rootLabel,
             std::size_t budget, bool asJson) {
  SplitSystem sys = loadSystem(file);
  json out;
  out["predicate"] = predicate;
  bool verdict = false;

  if (predicate == "injective") {
    out["method"] = method;
    if (method == "bruteforce") {
      InjectivityResult r = isInjectiveBruteforce(sys);
      verdict = r.injective;
      if (r.collision) {
        out["witness"] = {{"type", "collision"},
                          {"first", subsetLabels(r.collision->first, sys.ground())},
                          {"second", subsetLabels(r.collision->second, sys.ground())}};
      }
    } else if (method == "dicing") {
      verdict = isInjectiveDicing(sys);
      if (!verdict) {
        // report the failing subset, plus the median collision it implies
        if (auto fail = dicingFailure(sys))
          out["witness"] = {{"type", "dice-failure"},
                            {"k", fail->k},
                            {"subset", subsetLabels(fail->subset, sys.ground())}};
        if (auto r = isInjectiveBruteforce(sys); r.collision)
          out["collision"] = {
              {"first", subsetLabels(r.collision->first, sys.ground())},
              {"second", subsetLabels(r.collision->second, sys.ground())}};
      }
    } else {
      throw ParseError(0, "unknown method: " + method);
    }
  } else if (predicate == "rooted-injective") {
    if (rootLabel.empty()) throw ParseError(0, "--root is required");
    int root = requireElement(sys, rootLabel);
    out["root"] = rootLabel;
    RootedInjectivityResult r = isRootedInjective(sys, root);
    verdict = r.injective;
    if (r.collision)
      out["witness"] = {{"type", "collision"},
                        {"first", subsetLabels(r.collision->first, sys.ground())},
                        {"second", subsetLabels(r.collision->second, sys.ground())}};
  } else if (predicate == "dice4") {
    verdict = dices4(sys);
  } else if (predicate == "dice5") {
    verdict = dices5(sys);
  } else if (predicate == "dice6") {
    verdict = dices6(sys);
  } else if (predicate == "surjective") {
    verdict = isSurjective(sys, budget);
  } else if (predicate == "bijective") {
    verdict = isBijective(sys, budget);
  } else {
    throw ParseError(0, "unknown predicate: " + predicate);
  }

  out["result"] = verdict;
  if (asJson) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (verdict ? predicate : "not " + predicate) << "\n";
    if (!verdict && out.contains("witness") &&
        out["witness"]["type"] == "collision")
      std::cout << "collision: " << out["witness"]["first"].dump() << " "
                << out["witness"]["second"].dump() << "\n";
    if (!verdict && out.contains("collision"))
      std::cout << "collision: " << out["collision"]["first"].dump() << " "
                << out["collision"]["second"].dump() << "\n";
    if (!verdict && out.contains("witness") &&
        out["witness"]["type"] == "dice-failure")
      std::cout << "fails " << out["witness"]["k"].get<int>()
                << "-dicing on subset " << out["witness"]["subset"].dump()
                << "\n";
  }
  return verdict ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split systems, Buneman graphs and injectivity dimensions"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "machine-readable output on every verb");

  // gen
  GenOptions gen;
  auto* genCmd = app.add_subcommand("gen", "generate a named split-system family");
  genCmd->fallthrough();
  genCmd->add_option("family", gen.family,
                     "trivial|small-splits|max-circular|half-grid|id8-witness|"
                     "tree5|network5|k33-pairs|path-pairs|nonconsec-pairs|random")
      ->required();
  genCmd->add_option("--n", gen.n, "ground set size");
  genCmd->add_option("--anchor", gen.anchor, "small-splits: omit pairs through this element");
  genCmd->add_option("--seed", gen.seed, "random: PRNG seed");
  genCmd->add_option("--p", gen.prob, "random: inclusion probability");

  // check
  std::string checkPredicate, checkFile, checkMethod = "dicing", checkRoot;
  std::size_t checkBudget = BunemanGraph::kDefaultVertexBudget;
  auto* checkCmd = app.add_subcommand("check", "evaluate a predicate (exit 0 true, 1 false)");
  checkCmd->fallthrough();
  checkCmd->add_option("predicate", checkPredicate,
                       "injective|rooted-injective|dice4|dice5|dice6|surjective|bijective")
      ->required();
  checkCmd->add_option("file", checkFile, "split-system file ('-' for stdin)")->required();
  checkCmd->add_option("--method", checkMethod, "injective: dicing|bruteforce");
  checkCmd->add_option("--root", checkRoot, "rooted-injective: root label");
  checkCmd->add_option("--budget", checkBudget, "Buneman vertex budget");

  // median
  std::string medianFile, medianTriple;
  auto* medianCmd = app.add_subcommand("median", "median of a 3-subset by the direct formula");
  medianCmd->fallthrough();
  medianCmd->add_option("file", medianFile)->required();
  medianCmd->add_option("--triple", medianTriple, "comma-separated labels x,y,z")->required();

  // dim
  std::string dimFile;
  auto* dimCmd = app.add_subcommand("dim", "dimension of a split system");
  dimCmd->fallthrough();
  dimCmd->add_option("file", dimFile)->required();

  // buneman
  std::string bunemanFile, dotPath;
  std::size_t bunemanBudget = BunemanGraph::kDefaultVertexBudget;
  bool labelMedians = false;
  auto* bunemanCmd = app.add_subcommand("buneman", "build the Buneman graph");
  bunemanCmd->fallthrough();
  bunemanCmd->add_option("file", bunemanFile)->required();
  bunemanCmd->add_option("--dot", dotPath, "write DOT to this path ('-' for stdout)");
  bunemanCmd->add_option("--budget", bunemanBudget, "vertex budget");
  bunemanCmd->add_flag("--label-medians", labelMedians,
                       "label median vertices with their 3-subsets");

  // search
  std::string searchQuantity;
  int searchN = 6;
  std::uint64_t searchBudget = kDefaultNodeBudget;
  int searchThreads = 1;
  auto* searchCmd = app.add_subcommand("search", "exact dimension searches");
  searchCmd->fallthrough();
  searchCmd->add_option("quantity", searchQuantity, "id|id2|idr")->required();
  searchCmd->add_option("--n", searchN, "ground set size")->required();
  searchCmd->add_option("--budget", searchBudget, "node budget");
  searchCmd->add_option("--threads", searchThreads, "worker threads");

  // scan
  std::string scanWhat;
  int scanN = 4, scanSamples = 10000;
  std::uint64_t scanSeed = 1;
  auto* scanCmd = app.add_subcommand("scan", "scan for bijective split systems");
  scanCmd->fallthrough();
  scanCmd->add_option("what", scanWhat, "bijective")->required();
  scanCmd->add_option("--n", scanN, "ground set size (3..5)")->required();
  scanCmd->add_option("--samples", scanSamples, "sample count for n=5");
  scanCmd->add_option("--seed", scanSeed, "sample seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (genCmd->parsed()) {
      std::cout << toText(generate(gen));
      return kExitTrue;
    }

    if (checkCmd->parsed())
      return runCheck(checkPredicate, checkFile, checkMethod, checkRoot,
                      checkBudget, asJson);

    if (medianCmd->parsed()) {
      SplitSystem sys = loadSystem(medianFile);
      std::vector<std::string> labels;
      {
        std::stringstream ss{medianTriple};
        std::string item;
        while (std::getline(ss, item, ',')) labels.push_back(item);
      }
      if (labels.size() != 3) throw ParseError(0, "--triple needs exactly 3 labels");
      Mask triple = 0;
      for (const std::string& l : labels)
        triple |= Mask{1} << requireElement(sys, l);
      if (popcount(triple) != 3) throw ParseError(0, "triple labels must be distinct");
      PhiMap phi = tripleMedian(sys, triple);
      if (asJson) {
        json out;
        out["triple"] = subsetLabels(triple, sys.ground());
        out["phi_hex"] = phi.toHex();
        json assignments = json::array();
        for (int i = 0; i < sys.splitCount(); ++i)
          assignments.push_back(
              {{"split", splitToText(sys.split(i), sys.ground())},
               {"part", subsetToText(chosenPart(sys, phi, i), sys.ground())}});
        out["assignments"] = assignments;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "phi: " << phi.toHex() << "\n";
        for (int i = 0; i < sys.splitCount(); ++i)
          std::cout << splitToText(sys.split(i), sys.ground()) << " -> "
                    << subsetToText(chosenPart(sys, phi, i), sys.ground())
                    << "\n";
      }
      return kExitTrue;
    }

    if (dimCmd->parsed()) {
      SplitSystem sys = loadSystem(dimFile);
      int dim = sys.dimension();
      if (asJson)
        std::cout << json{{"dimension", dim},
                          {"splits", sys.splitCount()},
                          {"ground", sys.groundSize()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << dim << "\n";
      return kExitTrue;
    }

    if (bunemanCmd->parsed()) {
      SplitSystem sys = loadSystem(bunemanFile);
      BunemanGraph graph = BunemanGraph::build(sys, bunemanBudget);
      if (!dotPath.empty()) {
        std::string dot = toDot(graph, labelMedians);
        if (dotPath == "-") {
          std::cout << dot;
        } else {
          std::ofstream out(dotPath);
          if (!out) throw ParseError(0, "cannot write " + dotPath);
          out << dot;
        }
      }
      json summary{{"vertices", graph.vertexCount()},
                   {"edges", graph.edgeCount()},
                   {"leaves", sys.groundSize()},
                   {"internal", graph.internalCount()},
                   {"largest_cube", graph.largestCubeDimension()}};
      if (asJson)
        std::cout << summary.dump(2) << "\n";
      else if (dotPath != "-")
        std::cout << "vertices: " << graph.vertexCount()
                  << "  edges: " << graph.edgeCount()
                  << "  internal: " << graph.internalCount()
                  << "  largest cube: " << graph.largestCubeDimension() << "\n";
      return kExitTrue;
    }

    if (searchCmd->parsed()) {
      SearchReport report;
      if (searchQuantity == "id")
        report = idSearch(searchN, searchBudget, searchThreads);
      else if (searchQuantity == "id2")
        report = id2Search(searchN, searchBudget, searchThreads);
      else if (searchQuantity == "idr")
        report = idrSearch(searchN);
      else
        throw ParseError(0, "unknown search quantity: " + searchQuantity);
      if (asJson) {
        std::cout << toJson(report).dump(2) << "\n";
      } else {
        std::cout << quantityName(report.quantity) << "(" << report.n << ") = ";
        if (report.exact())
          std::cout << report.value();
        else
          std::cout << "[" << report.lower << ", " << report.upper << "]";
        std::cout << "  (method=" << methodName(report.method)
                  << ", nodes=" << report.nodesExplored
                  << ", elapsed=" << report.elapsedSeconds << "s)\n";
      }
      return kExitTrue;
    }

    if (scanCmd->parsed()) {
      if (scanWhat != "bijective")
        throw ParseError(0, "unknown scan: " + scanWhat);
      ScanResult result = scanBijective(scanN, scanSamples, scanSeed);
      if (asJson) {
        json found = json::array();
        for (const SplitSystem& sys : result.found) found.push_back(toText(sys));
        std::cout << json{{"n", result.n},
                          {"examined", result.examined},
                          {"found", found}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "examined " << result.examined << " systems, found "
                  << result.found.size() << " bijective\n";
        for (const SplitSystem& sys : result.found) std::cout << toText(sys) << "\n";
      }
      return kExitTrue;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
