#pragma once

#include "trident/json_io.hpp"

namespace trident {

/// Published constants (triples, models, point lists, parameter lists),
/// compiled in from data/records.json.
const json& records();

}  // namespace trident
