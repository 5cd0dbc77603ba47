#pragma once

#include <string>

#include <json.hpp>

#include "dualkern/types.hpp"

namespace dualkern {

using json = nlohmann::ordered_json;

/// Parses a numeric JSON entry or an "re+imi" string such as "1.5-2i".
Cx complex_from_json(const json& j);

/// Real values render as numbers, complex ones as "re+imi" strings.
json complex_to_json(const Cx& z);

json coords_to_json(const std::vector<Cx>& coords);
std::vector<Cx> coords_from_json(const json& j);

}  // namespace dualkern
