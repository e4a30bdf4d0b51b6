#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bicomb/dynamics.hpp"
#include "bicomb/isometry.hpp"
#include "bicomb/measure.hpp"
#include "bicomb/point.hpp"
#include "bicomb/space.hpp"

namespace bicomb {

using json = nlohmann::json;

// All readers throw ParseError on malformed documents.

// {"kind":"euclidean","dim":n} | {"kind":"star-seq","window":[lo,hi]} |
// {"kind":"tree","legs":k,"lengths":[...]}, optional "isometries":{name: iso}.
Space space_from_json(const json& j);
json space_to_json(const Space& space);

// euclidean: [x, y, ...] or {"coords":[...]}
// star-seq:  {"entries":[[index,"p/q"], ...]}
// tree:      {"leg":i,"r":r}
Point point_from_json(const Space& space, const json& j);
json point_to_json(const Point& p);

// {"kind":"shift","power":m} | {"kind":"rotation","turns":"1/3"} |
// {"kind":"rotation","angle":radians} | {"kind":"translation","vector":[...]} |
// {"kind":"leg-permutation","perm":[...]} | {"kind":"identity"} |
// {"kind":"composition","parts":[...]} | "registered-name"
Isometry isometry_from_json(const Space& space, const json& j);
json isometry_to_json(const Isometry& iso);

// {"space":..., "atoms":[{"point":..., "mass":"p/q"}, ...]}; "space" may be
// omitted when a space is supplied separately.
AtomicMeasure measure_from_json(const json& j);
AtomicMeasure measure_from_json(const Space& space, const json& j);
json measure_to_json(const AtomicMeasure& mu);

// {"kind":"ball","center":p,"radius":r} | {"kind":"points","points":[...],"tol":t}
TargetSet target_from_json(const Space& space, const json& j);
json target_to_json(const TargetSet& target);

Rational rational_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace bicomb
