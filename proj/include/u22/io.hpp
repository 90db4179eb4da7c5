#pragma once

#include "json.hpp"
#include "u22/catalog.hpp"
#include "u22/families.hpp"
#include "u22/germ.hpp"
#include "u22/moduli.hpp"

namespace u22 {

using json = nlohmann::json;

// Rationals travel as decimal-free strings: "p" or "p/q".
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const ModuliPoint& p);
ModuliPoint point_from_json(const json& j);

json to_json(const CurveDescription& d);
CurveDescription description_from_json(const json& j);

json to_json(const Germ& g);
Germ germ_from_json(const json& j);

json to_json(const GermInvariants& inv);

json to_json(const CurvePresentation& pres);
CurvePresentation presentation_from_json(const json& j);

json to_json(const ExtractionResult& res);

}  // namespace u22
