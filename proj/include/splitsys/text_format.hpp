#pragma once

#include <string>
#include <string_view>

#include "splitsys/split_system.hpp"

namespace splitsys {

// Split-system text format:
//
//   # optional comments anywhere
//   ground: 1,2,3,4,5
//   implied-trivial        <- optional; trivial splits may then be omitted
//   1,5|2,3,4
//   1|2,3,4,5
//   ...
//
// Output always lists every split (trivials included), sorted canonically,
// smaller side first. parse(print(sys)) == sys for every system.

std::string toText(const SplitSystem& sys);

// One split as `A|B` with labels of `ground`.
std::string splitToText(const Split& s, const GroundSet& ground);

// Throws ParseError (with line number) on malformed input; without the
// implied-trivial header, every trivial split must be listed explicitly and
// the error names the first missing one.
SplitSystem parseSystem(std::string_view text);

// Element mask rendered as `{a,b,c}` using ground labels.
std::string subsetToText(Mask subset, const GroundSet& ground);

}  // namespace splitsys
