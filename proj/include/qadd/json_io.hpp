#pragma once

#include <string_view>

#include "json.hpp"
#include "qadd/funceq.hpp"
#include "qadd/report.hpp"

namespace qadd {

// JSON shapes used by the CLI and the golden tests. Object keys serialize
// alphabetically (the library's default), so dumps are deterministic.

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const ConsistencyReport& report);
nlohmann::json to_json(const CertifySummary& summary);

std::string_view trivial_match_name(TrivialMatch match);  // "zero" / "q-integer" / "none"

}  // namespace qadd
