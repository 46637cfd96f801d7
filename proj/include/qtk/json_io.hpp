#pragma once

#include "qtk/schur.hpp"

#include <json.hpp>

namespace qtk {

/// [[deg_q, deg_t, "coefficient"], ...] in lexicographic (deg_q, deg_t) order.
[[nodiscard]] nlohmann::json to_json(const QTPoly& p);
[[nodiscard]] QTPoly qtpoly_from_json(const nlohmann::json& j);

/// {"degree": n, "terms": [{"lambda": [...], "coeff": [...]}, ...]}; degree is null
/// for the zero expansion.
[[nodiscard]] nlohmann::json to_json(const SchurExpansion& f);
[[nodiscard]] SchurExpansion schur_from_json(const nlohmann::json& j);

/// Same layout with "basis": "hall-littlewood-t".
[[nodiscard]] nlohmann::json to_json(const HLExpansion& f);
[[nodiscard]] HLExpansion hl_from_json(const nlohmann::json& j);

} // namespace qtk
