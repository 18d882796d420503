#pragma once

#include <json.hpp>

#include "splitsys/search.hpp"

namespace splitsys {

// SearchReport serialized with exactly the report's fields; `value` is an
// integer when exact, otherwise {"lower": .., "upper": ..}.
nlohmann::json toJson(const SearchReport& report);

}  // namespace splitsys
