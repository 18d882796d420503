#include "splitsys/text_format.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "splitsys/errors.hpp"

namespace splitsys {

namespace {

std::string joinLabels(Mask subset, const GroundSet& ground) {
  std::string out;
  for (int x : bitsOf(subset)) {
    if (!out.empty()) out += ',';
    out += ground.label(x);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> splitList(std::string_view s) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string_view item =
        comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
    items.emplace_back(trim(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace

std::string subsetToText(Mask subset, const GroundSet& ground) {
  return "{" + joinLabels(subset, ground) + "}";
}

std::string splitToText(const Split& s, const GroundSet& ground) {
  Mask a = s.canonicalPart();
  Mask b = s.complementPart();
  // Smaller side first; on balance the side with the first element leads.
  if (popcount(a) < popcount(b) ||
      (popcount(a) == popcount(b) && hasBit(b, 0)))
    return joinLabels(a, ground) + "|" + joinLabels(b, ground);
  return joinLabels(b, ground) + "|" + joinLabels(a, ground);
}

std::string toText(const SplitSystem& sys) {
  std::ostringstream out;
  out << "ground: ";
  for (int i = 0; i < sys.groundSize(); ++i) {
    if (i) out << ',';
    out << sys.ground().label(i);
  }
  out << '\n';
  for (const Split& s : sys.splits())
    out << splitToText(s, sys.ground()) << '\n';
  return out.str();
}

SplitSystem parseSystem(std::string_view text) {
  std::optional<GroundSet> ground;
  bool impliedTrivial = false;
  std::vector<Split> splits;
  std::vector<bool> trivialSeen;

  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = eol == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineNo;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!ground) {
      if (line.substr(0, 7) != "ground:")
        throw ParseError(lineNo, "expected a 'ground:' header first");
      std::vector<std::string> labels = splitList(trim(line.substr(7)));
      if (labels.empty() || (labels.size() == 1 && labels[0].empty()))
        throw ParseError(lineNo, "ground set has no labels");
      for (const std::string& l : labels)
        if (l.empty()) throw ParseError(lineNo, "empty label in ground set");
      if (labels.size() < 3)
        throw ParseError(lineNo, "ground set needs at least 3 elements");
      if (labels.size() > 64)
        throw ParseError(lineNo, "ground set capped at 64 elements");
      try {
        ground.emplace(labels);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineNo, e.what());
      }
      trivialSeen.assign(ground->size(), false);
      continue;
    }

    if (line == "implied-trivial") {
      impliedTrivial = true;
      continue;
    }

    std::size_t bar = line.find('|');
    if (bar == std::string_view::npos)
      throw ParseError(lineNo, "split line has no '|'");
    auto readSide = [&](std::string_view side) {
      Mask m = 0;
      if (trim(side).empty())
        throw ParseError(lineNo, "split has an empty side");
      for (const std::string& label : splitList(side)) {
        if (label.empty())
          throw ParseError(lineNo, "empty element in split side");
        int idx = ground->indexOf(label);
        if (idx < 0)
          throw ParseError(lineNo, "unknown label '" + label + "'");
        if (hasBit(m, idx))
          throw ParseError(lineNo, "element '" + label + "' repeated");
        m |= Mask{1} << idx;
      }
      return m;
    };
    Mask left = readSide(line.substr(0, bar));
    Mask right = readSide(line.substr(bar + 1));
    if ((left & right) != 0) {
      int shared = lowestBit(left & right);
      throw ParseError(lineNo, "element '" + ground->label(shared) +
                                   "' appears on both sides");
    }
    if ((left | right) != ground->full()) {
      int missing = lowestBit(ground->full() & ~(left | right));
      throw ParseError(lineNo, "element '" + ground->label(missing) +
                                   "' missing from the split");
    }
    Split s = Split::fromMask(left, ground->size());
    if (s.isTrivial()) {
      Mask small = s.smallPart().part;
      trivialSeen[lowestBit(small)] = true;
    }
    splits.push_back(s);
  }

  if (!ground) throw ParseError(0, "no 'ground:' header found");
  if (!impliedTrivial) {
    for (int x = 0; x < ground->size(); ++x)
      if (!trivialSeen[x]) {
        Split missing = Split::fromMask(Mask{1} << x, ground->size());
        throw ParseError(0, "missing trivial split " +
                                splitToText(missing, *ground) +
                                " (add it or an 'implied-trivial' header)");
      }
  }
  return SplitSystem(*ground, splits);
}

}  // namespace splitsys
