#pragma once

#include "borderlim/groebner.hpp"
#include "borderlim/laurent.hpp"
#include "borderlim/lnm.hpp"
#include "borderlim/polymap.hpp"
#include "borderlim/strength.hpp"

#include <json.hpp>

namespace borderlim {

using json = nlohmann::ordered_json;

// Schemas (all exact, round-trip safe):
//   space        {"tuple": [[2],[2]], "level": N, "slot_names": [...]?}
//   point        {"space": <space>, "slots": ["<poly>", ...]}
//   laurent      {"space": <space>, "coeffs": {"<exponent>": ["<poly>", ...]}}
//   map          {"source": [[..]], "target": [[..]], "slot_names": [...]?,
//                 "formula": ["<poly in slot symbols>", ...], "level": N?}
//             or {"source": [[..]], "target": [[..]], "level": N,
//                 "components": ["<poly in coordinate vars>", ...]}
//   constraints  {"constraints": [...], "evaluation": [...]}
//   certificate  {"s": int, "degree": d, "splitting": [e...], "level": N,
//                 "factors": [<laurent>, ...]}
//   ideal        {"order": "...", "generators": [...]}

json space_to_json(const CoordSpace& space);
CoordSpace space_from_json(const json& j);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json laurent_to_json(const LaurentPoint& y);
LaurentPoint laurent_from_json(const json& j);

struct ParsedMap {
    std::optional<SlotMap> slot_map;   // present for the formula variant
    std::optional<PolyMap> poly_map;   // present when a level is known
    std::optional<int> level;
};
ParsedMap map_from_json(const json& j);

json constraint_system_to_json(const ConstraintSystem& sys);

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json ideal_to_json(const Ideal& ideal);

} // namespace borderlim
