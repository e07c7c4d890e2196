#include "realknot/io.hpp"

#include <fstream>

#include "realknot/errors.hpp"

namespace realknot {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

HighSide side_from(const std::string& s) {
    if (s == "hi-before" || s == "before") return HighSide::Before;
    if (s == "hi-after" || s == "after") return HighSide::After;
    throw InvalidInput("pole side must be hi-before or hi-after, got " + s);
}

Event event_from_json(const Json& e) {
    if (!e.is_array() || e.empty() || !e[0].is_string()) throw InvalidInput("event must be an array tagged X, P or B");
    std::string tag = e[0];
    if (tag == "B") return Event::boundary(e.size() > 1 ? e[1].get<int>() : 0);
    if (e.size() < 3) throw InvalidInput("event " + e.dump() + " is incomplete");
    int id = e[1].get<int>();
    if (tag == "X") {
        std::string r = e[2];
        if (r != "o" && r != "u") throw InvalidInput("crossing role must be o or u");
        return Event::crossing(id, r == "o" ? Role::Over : Role::Under);
    }
    if (tag == "P") {
        Event ev = Event::pole(id, side_from(e[2]));
        if (e.size() > 3) {
            const Json& extra = e[3];
            if (extra.contains("i")) ev.index = rat_from_json(extra["i"]);
            if (extra.contains("i_rc")) ev.index_rc = rat_from_json(extra["i_rc"]);
            if (extra.contains("at")) ev.at = PolylineLocation{extra["at"][0].get<int>(), rat_from_json(extra["at"][1])};
        }
        return ev;
    }
    throw InvalidInput("unknown event tag " + tag);
}

Json event_to_json(const Event& e) {
    switch (e.kind) {
        case EventKind::Boundary: return Json::array({"B"});
        case EventKind::Crossing: return Json::array({"X", e.id, e.role == Role::Over ? "o" : "u"});
        case EventKind::Pole: {
            Json out = Json::array({"P", e.id, e.side == HighSide::Before ? "hi-before" : "hi-after"});
            Json extra = Json::object();
            if (e.index) extra["i"] = to_json(*e.index);
            if (e.index_rc) extra["i_rc"] = to_json(*e.index_rc);
            if (e.at) extra["at"] = Json::array({e.at->segment, to_json(e.at->tau)});
            if (!extra.empty()) out.push_back(extra);
            return out;
        }
    }
    return {};
}

std::vector<Event> component_from_json(const Json& c) {
    std::vector<Event> out;
    for (const auto& e : c) out.push_back(event_from_json(e));
    return out;
}

}  // namespace

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw InvalidInput("rational must be a string or an integer: " + j.dump());
}

Json to_json(const Rat& r) { return to_string(r); }

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("polynomial must be a coefficient array");
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(rat_from_json(x));
    return Poly(c);
}

Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

RationalCurveMap curve_from_json(const Json& j) {
    int dim = need(j, "dim").get<int>();
    if (dim != 2 && dim != 3) throw InvalidInput("dim must be 2 or 3");
    const Json& cs = need(j, "coords");
    if (!cs.is_array() || static_cast<int>(cs.size()) != dim + 1)
        throw InvalidInput("a curve in P^" + std::to_string(dim) + " needs " + std::to_string(dim + 1) + " coordinates");
    std::vector<Poly> c;
    for (const auto& p : cs) c.push_back(poly_from_json(p));
    return RationalCurveMap(dim, c);
}

Json to_json(const RationalCurveMap& c) {
    Json cs = Json::array();
    for (const auto& p : c.coords) cs.push_back(to_json(p));
    return Json{{"dim", c.ambient_dim}, {"coords", cs}};
}

ProjPoint point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw InvalidInput("a point of P^3 needs 4 coordinates");
    std::array<Rat, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = rat_from_json(j[i]);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0) throw InvalidInput("the zero vector is not a point");
    return ProjPoint(c);
}

Json to_json(const ProjPoint& p) {
    Json out = Json::array();
    for (const auto& c : p.canonical().coords) out.push_back(to_json(c));
    return out;
}

LiftSpec lift_spec_from_json(const Json& j) {
    const Json& base = j.contains("base") ? j.at("base") : j;
    return {curve_from_json(base), poly_from_json(need(j, "u")), poly_from_json(need(j, "p"))};
}

ChordData chords_from_json(const Json& j) {
    const Json& q = need(j, "q");
    if (!q.is_array() || q.size() != 4) throw InvalidInput("chord data needs four quadratics");
    ChordData ch;
    for (int i = 0; i < 4; ++i) ch.q[i] = poly_from_json(q[i]);
    return ch;
}

Json to_json(const AlgReal& a) {
    if (a.is_rational()) return to_json(a.rational());
    return Json{{"poly", to_json(a.defining())}, {"interval", Json::array({to_json(a.lo()), to_json(a.hi())})},
                {"approx", a.approx()}};
}

Json to_json(const AlgExpr& a) {
    if (auto r = a.exact()) return to_json(*r);
    return to_json(a.to_algreal());
}

Json to_json(const NodeRecord& n) {
    static const char* kinds[] = {"hyperbolic", "elliptic", "complex-pair"};
    Json out{{"kind", kinds[static_cast<int>(n.kind)]}};
    if (n.kind == NodeKind::ComplexPairMember) {
        out["family_size"] = n.family_size;
        return out;
    }
    out["e1"] = to_json(n.pair.e1);
    out["e2"] = to_json(n.pair.e2);
    if (n.at_infinity) out["at_infinity"] = true;
    Json img = Json::array();
    for (const auto& c : n.image) img.push_back(to_json(c));
    out["image"] = img;
    out["transverse"] = n.transverse;
    if (n.sign) out["sign"] = *n.sign;
    return out;
}

Json to_json(const ValidationReport& r) {
    return Json{{"degree", r.degree},         {"smooth", r.smooth()},
                {"primitive", r.primitive},   {"nondegenerate", r.nondegenerate},
                {"immersed", r.immersed},     {"injective", r.injective},
                {"immersion_failures", r.immersion_failures}, {"messages", r.messages}};
}

Json to_json(const ViroReport& r) {
    Json nodes = Json::array();
    for (const auto& [n, s] : r.node_signs) {
        Json x = to_json(n);
        x["sign"] = s;
        nodes.push_back(x);
    }
    Json out{{"w", r.w}, {"projection_point", to_json(r.projection_point)}, {"nodes", nodes}};
    if (r.c) out["c"] = *r.c;
    if (r.lambda) out["lambda"] = to_json(*r.lambda);
    if (r.w_lambda) out["w_lambda"] = to_json(*r.w_lambda);
    return out;
}

VirtualDiagram diagram_from_json(const Json& j) {
    VirtualDiagram d;
    if (j.contains("components")) {
        for (const auto& c : j["components"]) d.components.push_back(component_from_json(c));
    } else if (j.contains("x")) {
        const Json& x = j["x"];
        bool single = x.is_array() && !x.empty() && x[0].is_array() && !x[0].empty() && x[0][0].is_string();
        if (single || x.empty()) {
            d.components.push_back(component_from_json(x));
        } else {
            for (const auto& c : x) d.components.push_back(component_from_json(c));
        }
    } else {
        throw InvalidInput("diagram needs \"x\" or \"components\"");
    }
    if (j.contains("class")) {
        if (j["class"].is_number()) d.comp_class = {j["class"].get<int>()};
        else d.comp_class = j["class"].get<std::vector<int>>();
    } else {
        d.comp_class.assign(d.components.size(), 0);
    }
    if (j.contains("solitary"))
        for (const auto& s : j["solitary"]) d.solitary.push_back({s[0].get<std::string>(), s[1].get<int>()});
    if (j.contains("signs"))
        for (const auto& [k, v] : j["signs"].items()) d.crossing_sign[std::stoi(k)] = v.get<int>();
    if (j.contains("c")) d.c = j["c"].get<int>();
    if (j.contains("c_lambda")) d.c_lambda = j["c_lambda"].get<int>();
    if (j.contains("geometry")) {
        for (const auto& poly : j["geometry"]) {
            Polyline pl;
            for (const auto& v : poly) {
                if (v.size() != 3 && v.size() != 2) throw InvalidInput("vertices are [x, y] or [x, y, w]");
                pl.vertices.push_back({rat_from_json(v[0]), rat_from_json(v[1]), v.size() == 3 ? rat_from_json(v[2]) : Rat(1)});
            }
            d.geometry.push_back(pl);
        }
    }
    d.validate();
    return d;
}

Json to_json(const VirtualDiagram& d) {
    Json comps = Json::array();
    for (const auto& c : d.components) {
        Json cj = Json::array();
        for (const auto& e : c) cj.push_back(event_to_json(e));
        comps.push_back(cj);
    }
    Json sol = Json::array();
    for (const auto& s : d.solitary) sol.push_back(Json::array({s.region, s.sign}));
    Json signs = Json::object();
    for (const auto& [id, s] : d.crossing_sign) signs[std::to_string(id)] = s;
    Json out{{"components", comps}, {"class", d.comp_class}, {"solitary", sol}, {"signs", signs}};
    if (d.c) out["c"] = *d.c;
    if (d.c_lambda) out["c_lambda"] = *d.c_lambda;
    if (!d.geometry.empty()) {
        Json g = Json::array();
        for (const auto& pl : d.geometry) {
            Json vs = Json::array();
            for (const auto& v : pl.vertices) vs.push_back(Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}));
            g.push_back(vs);
        }
        out["geometry"] = g;
    }
    return out;
}

Move move_from_json(const Json& j) {
    static const std::map<std::string, MoveKind> kinds = {
        {"PoleMove", MoveKind::PoleMove}, {"PoleAnnihilation", MoveKind::PoleAnnihilation},
        {"PoleCreation", MoveKind::PoleCreation}, {"R1", MoveKind::R1}, {"R1Inverse", MoveKind::R1Inverse},
        {"R2", MoveKind::R2}, {"R2Inverse", MoveKind::R2Inverse}, {"R3", MoveKind::R3}};
    std::string k = need(j, "kind");
    auto it = kinds.find(k);
    if (it == kinds.end()) throw InvalidInput("unknown move kind " + k);
    Move m;
    m.kind = it->second;
    m.pole = j.value("pole", 0);
    m.direction = j.value("direction", 1);
    if (j.contains("crossings")) m.crossings = j["crossings"].get<std::vector<int>>();
    m.component = j.value("component", 0);
    m.position = j.value("position", 0);
    m.component2 = j.value("component2", 0);
    m.position2 = j.value("position2", 0);
    m.solitary = j.value("solitary", 0);
    m.role = j.value("role", std::string("o")) == "u" ? Role::Under : Role::Over;
    m.with_solitary = j.value("with_solitary", false);
    m.solitary2 = j.value("solitary2", 0);
    m.sign = j.value("sign", 1);
    m.reversed = j.value("reversed", false);
    m.side = side_from(j.value("side", std::string("hi-after")));
    if (j.contains("index")) m.index = rat_from_json(j["index"]);
    if (j.contains("index_rc")) m.index_rc = rat_from_json(j["index_rc"]);
    return m;
}

Json to_json(const Move& m) {
    Json out{{"kind", to_string(m.kind)}};
    switch (m.kind) {
        case MoveKind::PoleMove:
            out["pole"] = m.pole;
            out["direction"] = m.direction;
            break;
        case MoveKind::PoleAnnihilation:
            out["pole"] = m.pole;
            break;
        case MoveKind::PoleCreation:
            out["component"] = m.component;
            out["position"] = m.position;
            out["side"] = m.side == HighSide::Before ? "hi-before" : "hi-after";
            if (m.index) out["index"] = to_json(*m.index);
            if (m.index_rc) out["index_rc"] = to_json(*m.index_rc);
            break;
        case MoveKind::R1:
        case MoveKind::R2:
        case MoveKind::R3:
            out["crossings"] = m.crossings;
            if (m.kind == MoveKind::R2) out["with_solitary"] = m.with_solitary;
            break;
        case MoveKind::R1Inverse:
            out["solitary"] = m.solitary;
            out["component"] = m.component;
            out["position"] = m.position;
            out["role"] = m.role == Role::Over ? "o" : "u";
            break;
        case MoveKind::R2Inverse:
            out["component"] = m.component;
            out["position"] = m.position;
            out["component2"] = m.component2;
            out["position2"] = m.position2;
            out["role"] = m.role == Role::Over ? "o" : "u";
            out["sign"] = m.sign;
            out["reversed"] = m.reversed;
            out["with_solitary"] = m.with_solitary;
            if (m.with_solitary) {
                out["solitary"] = m.solitary;
                out["solitary2"] = m.solitary2;
            }
            break;
    }
    return out;
}

Json to_json(const BraidWord& w) {
    Json letters = Json::array();
    for (const auto& l : w.letters) letters.push_back(Json::array({l.generator, l.exponent}));
    return Json{{"strands", w.strands},
                {"closure", w.closure == Closure::Sphere ? "sphere" : "projective"},
                {"letters", letters},
                {"word", w.str()}};
}

Json to_json(const FeasibilityReport& r) {
    Json bd = Json::array();
    for (const auto& [a, b] : r.bidegrees) bd.push_back(Json::array({a, b}));
    return Json{{"d", r.d},           {"g", r.g},           {"l", r.l}, {"verdict", to_string(r.verdict)},
                {"reasons", r.reasons}, {"iota_bound", r.iota_bound}, {"bidegrees", bd}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

}  // namespace realknot
