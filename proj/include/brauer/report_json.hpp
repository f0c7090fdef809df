#pragma once

#include <json.hpp>

#include "brauer/bounds.hpp"
#include "brauer/cmfield.hpp"
#include "brauer/idealsearch.hpp"

namespace brauer {

// JSON views of the report types. Rationals are serialized as exact "a/b"
// strings; doubles are display-only companions.
nlohmann::json invariants_to_json(const CMFieldInvariants& inv);
CMFieldInvariants invariants_from_json(const nlohmann::json& j);

nlohmann::json enclosure_to_json(const Enclosure& e);
nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json search_result_to_json(const SearchResult& result);

}  // namespace brauer
