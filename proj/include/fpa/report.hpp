#pragma once

#include "fpa/equiv.hpp"
#include "fpa/ncgb.hpp"
#include "fpa/presentation.hpp"

#include <json.hpp>

namespace fpa {

/// JSON fragments for the machine-readable reports. All counts are emitted
/// as decimal strings to keep exactness.
nlohmann::json to_json(const HilbertVector& hv);
nlohmann::json to_json(const EquivalenceReport& rep);
nlohmann::json presentation_json(const Presentation& p);
nlohmann::json rules_json(const RewriteSystem& rs, const std::vector<std::string>& names);

} // namespace fpa
