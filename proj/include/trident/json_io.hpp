#pragma once

#include <json.hpp>

#include "trident/curve.hpp"
#include "trident/descent.hpp"
#include "trident/triples.hpp"

namespace trident {

using json = nlohmann::json;

/// Rationals travel as "num/den" strings; plain integers are accepted on
/// input.
json to_json(const Rat& q);
Rat rat_from_json(const json& j);

/// [x, y] for affine points, the string "O" for infinity.
json to_json(const PointQ& P);
PointQ point_from_json(const json& j);
std::vector<PointQ> points_from_json(const json& j);

/// {"a1","a2","a3","a4","a6"}; input also accepts {"A","B"} for
/// y^2 = x^3 + A x^2 + B x.
json to_json(const CurveQ& E);
CurveQ curve_from_json(const json& j);

json to_json(const DiophTriple& T);
json to_json(const IndependenceCertificate& cert);
IndependenceCertificate certificate_from_json(const json& j);

}  // namespace trident
