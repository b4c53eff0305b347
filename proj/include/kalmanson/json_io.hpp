#pragma once

#include "kalmanson/geometry.hpp"
#include "kalmanson/split.hpp"

#include <json.hpp>

namespace kalmanson {

/// {"n": n, "splits": [[canonical block members], ...]}, 1-based, sorted.
nlohmann::json to_json(const SplitSystem& ss);

/// Accepts either block of each split. Throws std::invalid_argument on a
/// malformed document, bad elements, or duplicate splits.
SplitSystem split_system_from_json(const nlohmann::json& j);

/// {"ordering": [...], "alpha": ["p/q", ...], "weights": {"12|345": "p/q"}}.
nlohmann::json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CircularOrdering& ord);
nlohmann::json to_json(const Split& s);

}  // namespace kalmanson
