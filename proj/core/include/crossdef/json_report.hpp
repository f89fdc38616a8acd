#pragma once

#include <nlohmann/json.hpp>

#include "crossdef/action.hpp"
#include "crossdef/cohomology.hpp"
#include "crossdef/deform.hpp"

namespace crossdef {

using json = nlohmann::ordered_json;

/// (group, action, cocycle) description:
/// {
///   "name": "...",
///   "group": [2, 2],
///   "variables": ["x", "y", "z"],
///   "elements": ["1", "a", "b", "c"],
///   "characters": {"x": [0, 2, 2, 0], ...},   // exponents k of i^k
///   "cocycle": [[0, ...], ...]                // exponents k of i^k
/// }
json group_data_to_json(const GroupData& data);
GroupData group_data_from_json(const json& j);

json to_json(const CrossedElement& e, const GroupData& data);
CrossedElement crossed_from_json(const json& j, const GroupData& data);
json to_json(const TElement& e, const GroupData& data);

json to_json(const Cochain& c, const GroupData& data);
json to_json(const HHClassRow& row, const GroupData& data);
json to_json(const ModuleAlgebraReport& report);
json to_json(const CenterRelationReport& report, const GroupData& data);
json hat_poly_to_json(const HatPoly& p);

}  // namespace crossdef
