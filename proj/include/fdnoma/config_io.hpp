#pragma once

#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "fdnoma/scenarios.hpp"

namespace fdnoma {

using Json = nlohmann::ordered_json;

// Each config is one JSON object. Missing fields keep their defaults, an
// optional "scenario" key must name the matching scenario, and any other
// unknown key is a ValidationError naming its path. The result is validated.
UldlConfig uldl_config_from_json(const Json& j);
CoopConfig coop_config_from_json(const Json& j);
CognitiveConfig cognitive_config_from_json(const Json& j);
ScbfConfig scbf_config_from_json(const Json& j);

Json to_json(const UldlConfig& cfg);
Json to_json(const CoopConfig& cfg);
Json to_json(const CognitiveConfig& cfg);
Json to_json(const ScbfConfig& cfg);

/// Parses a file; I/O and syntax problems are ValidationErrors naming the path.
Json read_json_file(const std::filesystem::path& path);

}  // namespace fdnoma
