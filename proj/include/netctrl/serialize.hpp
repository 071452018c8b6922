#pragma once

#include "netctrl/control.hpp"
#include "netctrl/verify.hpp"

#include <json.hpp>

#include <string>

namespace netctrl {

using Json = nlohmann::ordered_json;

/// Field names match ControllabilityReport; vertex labels are 1-based.
Json report_to_json(const ControllabilityReport& r);
ControllabilityReport report_from_json(const Json& j);

/// One "key: value" line per report field, then one line per check.
std::string report_to_text(const ControllabilityReport& r);

Json violation_to_json(const Violation& v);
Violation violation_from_json(const Json& j);

Json outcome_to_json(const SweepOutcome& o);
SweepOutcome outcome_from_json(const Json& j);

}  // namespace netctrl
