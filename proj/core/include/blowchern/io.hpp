#pragma once

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "blowchern/geometry.hpp"

namespace blowchern {

/// {"ambient_dim": n, "center": {"type": "linear", "dim": m} |
///  {"type": "ci", "degrees": [...]}, "label": "..."}
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
/// Parses and validates; syntax errors report the byte offset.
Scenario parse_scenario(std::string_view text);

/// {"variables": [{"name", "degree"}], "rules": [{"var", "power", "replacement"}],
///  "dim": n | null, "fundamental": "h^2" | null, "fundamental_degree": "4"}
nlohmann::json ring_to_json(const RingPresentation& ring);
RingPtr ring_from_json(const nlohmann::json& j);

/// {"rank": r, "chern": ["1", "2*h", ...]}
nlohmann::json bundle_to_json(const BundleClass& b);
BundleClass bundle_from_json(const nlohmann::json& j, const RingPtr& ring);

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace blowchern
