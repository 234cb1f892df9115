#pragma once

#include <nlohmann/json.hpp>

#include "opprank/characters.hpp"
#include "opprank/exactlinalg.hpp"
#include "opprank/jantzen.hpp"
#include "opprank/pipeline.hpp"

namespace opprank {

inline constexpr const char* kReportSchema = "opprank/1";

// Big integers are written as decimal strings; object keys are sorted, so
// dumps are byte-stable.
nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const TypeSet& s);
nlohmann::json to_json(const FormalCharacter& x);
nlohmann::json to_json(const Resolution& r);
nlohmann::json to_json(const EigenPowerCheck& c);
nlohmann::json to_json(const VerifyReport& r);

FormalCharacter character_from_json(const RootSystemSpec& system, const nlohmann::json& j);

}  // namespace opprank
