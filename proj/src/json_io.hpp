#pragma once

#include <json.hpp>

#include "engine.hpp"

namespace wtrop {

// Stable JSON schema, versioned via a top-level "schema": 1 field. Key order
// is alphabetical (nlohmann default), so equal results serialize to equal
// bytes regardless of worker count.

nlohmann::json to_json(LatticePoint p);
nlohmann::json to_json(const Cell& cell);
nlohmann::json to_json(const SurfaceDivisorSpec& spec);
nlohmann::json to_json(const Marking& mk);
nlohmann::json to_json(const Classification& cls);
nlohmann::json to_json(const WeightedCount& wc);
nlohmann::json to_json(const Subdivision& sub);
nlohmann::json to_json(const SubdivisionRecord& rec);
nlohmann::json to_json(const InvariantResult& res);
nlohmann::json to_json(const InvarianceReport& report);

LatticePoint point_from_json(const nlohmann::json& j);
Cell cell_from_json(const nlohmann::json& j);
SurfaceDivisorSpec spec_from_json(const nlohmann::json& j);
Subdivision subdivision_from_json(const nlohmann::json& j);
InvariantResult result_from_json(const nlohmann::json& j);

std::string result_to_string(const InvariantResult& res, bool pretty = true);

}  // namespace wtrop
