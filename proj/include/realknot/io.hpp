#pragma once

#include <json.hpp>
#include <string>

#include "realknot/curves.hpp"
#include "realknot/diagram.hpp"
#include "realknot/lift.hpp"
#include "realknot/links.hpp"
#include "realknot/viro.hpp"

namespace realknot {

using Json = nlohmann::ordered_json;

// Rationals are strings "a/b" or "a"; integers are accepted on input.
Rat rat_from_json(const Json& j);
Json to_json(const Rat& r);
Poly poly_from_json(const Json& j);
Json to_json(const Poly& p);

// {"dim": 3, "coords": [[...], ...]}
RationalCurveMap curve_from_json(const Json& j);
Json to_json(const RationalCurveMap& c);
ProjPoint point_from_json(const Json& j);
Json to_json(const ProjPoint& p);
// curve fields plus "u" and "p"
LiftSpec lift_spec_from_json(const Json& j);
// {"q": [q0, q1, q2, q3]}
ChordData chords_from_json(const Json& j);

Json to_json(const AlgReal& a);
Json to_json(const AlgExpr& a);
Json to_json(const NodeRecord& n);
Json to_json(const ValidationReport& r);
Json to_json(const ViroReport& r);

// Events: ["X", id, "o"|"u"], ["P", id, "hi-before"|"hi-after", {"i": .., "i_rc": .., "at": [segment, tau]}],
// ["B"]. Components under "x" (one component or a list) or "components";
// "class", "solitary" [[region, sign]], "signs" {"id": sign}, optional "c",
// "c_lambda" and "geometry" (one vertex list [[x, y, w], ...] per component).
VirtualDiagram diagram_from_json(const Json& j);
Json to_json(const VirtualDiagram& d);
Move move_from_json(const Json& j);
Json to_json(const Move& m);

Json to_json(const BraidWord& w);
Json to_json(const FeasibilityReport& r);

Json read_json_file(const std::string& path);

}  // namespace realknot
