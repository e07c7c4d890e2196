// Acceptance run: one PASS/FAIL line per criterion. The exit status is 0 when
// every outcome matches the expected column (criterion 1 is a known failure,
// see README).
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "realknot/errors.hpp"
#include "realknot/io.hpp"
#include "realknot/lift.hpp"
#include "realknot/links.hpp"
#include "realknot/viro.hpp"

using namespace realknot;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

RationalCurveMap plane(std::vector<Poly> c) { return RationalCurveMap(2, std::move(c)); }
RationalCurveMap space(std::vector<Poly> c) { return RationalCurveMap(3, std::move(c)); }

std::string data_path(const std::string& name) { return std::string(REALKNOT_DATA_DIR) + "/" + name; }

// ---------------------------------------------------------------- 1

Outcome quintic_writhe() {
    auto q = curve_from_json(read_json_file(data_path("quintic_monomial.json")));
    int w = viro_w(q, std::nullopt, 1).w;
    int m = viro_w(q.mirrored(0), std::nullopt, 1).w;
    auto h = curve_from_json(read_json_file(data_path("quintic41.json")));
    int wh = viro_w(h, std::nullopt, 1).w;
    int mh = viro_w(h.mirrored(0), std::nullopt, 1).w;
    std::ostringstream s;
    s << "(t^5:t s^4:t^4 s:s^5) w=" << w << " mirror=" << m << "; real class (4,1) quintic w=" << wh
      << " mirror=" << mh;
    return {(w == 6 || w == -6) && m == -w, s.str()};
}

// ---------------------------------------------------------------- 2

// lifts of a rational quartic with three real nodes, resolved to smooth sextics
std::vector<RationalCurveMap> lifted_sextics() {
    auto quartic = plane({Poly{1, 0, -5, 0, 1}, Poly{0, 1, 0, -2}, Poly{2, 0, 1}});
    std::vector<LiftSpec> specs = {
        {quartic, Poly{1, 2, 0, -1, 0, 3, 1}, Poly{-3, 0, 1}},
        {quartic, Poly{-2, 1, 1, 0, 2, -1, 1}, Poly{2, 1, 1}},
        {quartic, Poly{3, 0, -1, 2, 1, 0, -1}, Poly{-5, 1, 1}},
    };
    std::vector<RationalCurveMap> out;
    for (size_t i = 0; i < specs.size(); ++i) {
        auto K = lift(specs[i]);
        out.push_back(resolve_node(K, lift_node(K), i % 2 ? -1 : 1));
    }
    return out;
}

Outcome projection_invariance() {
    std::vector<RationalCurveMap> curves = {curve_from_json(read_json_file(data_path("quintic_monomial.json"))),
                                            curve_from_json(read_json_file(data_path("quintic41.json")))};
    for (auto& c : lifted_sextics()) curves.push_back(std::move(c));
    std::ostringstream s;
    bool ok = true;
    for (const auto& c : curves) {
        std::vector<ProjPoint> pts;
        for (uint64_t seed = 1; pts.size() < 8 && seed < 40; ++seed) {
            ProjPoint p = find_generic_projection(c, seed).canonical();
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        std::set<int> ws;
        for (const auto& p : pts) ws.insert(viro_w(c, p).w);
        bool same = pts.size() == 8 && ws.size() == 1;
        ok = ok && same;
        s << "deg " << c.degree() << ": w=";
        for (int w : ws) s << w << " ";
        s << "over " << pts.size() << " points; ";
    }
    return {ok, s.str()};
}

// ---------------------------------------------------------------- 3

Outcome genus_formula() {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(-4, 4);
    int done = 0, bad = 0;
    std::ostringstream s;
    while (done < 20) {
        int d = 3 + done % 4;
        std::vector<Poly> c(4);
        for (auto& p : c) {
            std::vector<Rat> v(d + 1);
            for (auto& x : v) x = dist(rng);
            p = Poly(v);
        }
        if (c[0].degree() < d) c[0] += Poly::monomial(1, d);
        auto curve = space(c);
        if (!validate(curve).smooth() || curve.degree() != d) continue;
        Projection pr = project(curve, find_generic_projection(curve, done + 1));
        int total = analyze_nodes(pr.curve).total();
        if (total != (d - 1) * (d - 2) / 2) {
            ++bad;
            s << "deg " << d << " gave " << total << "; ";
        }
        ++done;
    }
    s << done << " curves, " << bad << " mismatches";
    return {bad == 0, s.str()};
}

// ---------------------------------------------------------------- 4

std::vector<LiftSpec> oracle_specs() {
    auto conic = plane({Poly{0, 0, 1}, Poly::x(), Poly::constant(1)});
    auto cubic = plane({Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly::constant(1)});
    auto acnode = plane({Poly{1, 0, 1}, Poly{0, 1, 0, 1}, Poly::constant(1)});
    auto quartic = plane({Poly{1, 0, -5, 0, 1}, Poly{0, 1, 0, -2}, Poly{2, 0, 1}});
    return {
        {conic, Poly{1, 2, 0, -1, 3}, Poly{-1, 0, 1}},
        {conic, Poly{2, -1, 1, 0, 1}, Poly{1, 0, 1}},
        {conic, Poly{-3, 1, 0, 2, -1}, Poly{-2, 1, 1}},
        {cubic, Poly{1, 1, 2, -1, 0, 1}, Poly{-4, 0, 1}},
        {cubic, Poly{2, 1, 0, 0, -1, 1}, Poly{1, 1, 1}},
        {cubic, Poly{-1, 3, 1, 0, 2, 1}, Poly{-3, -1, 1}},
        {acnode, Poly{1, -1, 0, 2, 0, 1}, Poly{-3, 1, 2}},
        {acnode, Poly{2, 0, 1, -1, 1, 1}, Poly{2, 0, 1}},
        {quartic, Poly{1, 2, 0, -1, 0, 3, 1}, Poly{-3, 0, 1}},
        {quartic, Poly{-2, 1, 1, 0, 2, -1, 1}, Poly{2, 1, 1}},
    };
}

Outcome oracle_equivalence() {
    int agree = 0, total = 0;
    std::ostringstream s;
    for (const auto& spec : oracle_specs()) {
        try {
            auto K = lift(spec);
            NodeRecord n = lift_node(K);
            VirtualDiagram d = lift_diagram(spec);
            for (int c : {-1, 1}) {
                ++total;
                int wc = viro_w(resolve_node(K, n, c)).w, wd = viro_w_from_diagram(d, c);
                if (wc == wd) ++agree;
                else s << "spec " << total / 2 << " c=" << c << ": curve " << wc << " diagram " << wd << "; ";
            }
        } catch (const Error& e) {
            s << "spec failed: " << e.what() << "; ";
            total += 2;
        }
    }
    s << agree << "/" << total << " agree";
    return {agree == total && total == 20, s.str()};
}

// ---------------------------------------------------------------- 5

bool coordinate_vertex(const NodeRecord& n) {
    int nonzero = 0;
    for (const auto& x : n.image)
        if (x.sign() != 0) ++nonzero;
    return nonzero == 1;
}

Outcome censuses() {
    std::vector<Rat> t;
    for (int i = 1; i <= 8; ++i) t.push_back(i);
    auto L = trinodal_L(t);
    NodeAnalysis a = analyze_nodes(L);
    ChordData ch{{Poly{-1, 0, 1}, Poly{-4, 1, 1}, Poly{-9, -2, 1}, Poly{-2, 3, 1}}};
    auto Q = quadrinodal_from_chords(ch);
    NodeAnalysis b = analyze_nodes(Q);
    int at_vertices = 0;
    for (const auto& n : b.nodes)
        if (coordinate_vertex(n)) ++at_vertices;
    std::ostringstream s;
    s << "trinodal: degree " << L.degree() << ", " << a.total() << " double points; quadrinodal: degree "
      << Q.degree() << ", " << b.total() << " double points, " << at_vertices << " at coordinate vertices";
    return {L.degree() == 6 && a.total() == 3 && b.total() == 4 && at_vertices == 4, s.str()};
}

// ---------------------------------------------------------------- 6

Outcome torus_dictionary() {
    int classes = 0, bad = 0;
    std::ostringstream s;
    for (int a = 2; a <= 8; ++a)
        for (int b = 0; b + 1 < a; ++b) {
            auto h = HyperboloidalClass::make(a, b);
            auto [p, q] = hyperboloidal_to_torus(h);
            ++classes;
            int cover = component_count(torus_braid(p, q, true));
            int proj = component_count(torus_braid(p, q, false));
            if (cover != std::gcd(a + b, a - b) || proj != std::gcd(a, b)) {
                ++bad;
                s << h.str() << " gives " << cover << "/" << proj << "; ";
            }
        }
    bool ids = hyperboloidal_to_torus(HyperboloidalClass::make(4, 1)) == std::pair{5, 3} &&
               hyperboloidal_to_torus(HyperboloidalClass::make(3, 1)) == std::pair{4, 2} &&
               hyperboloidal_to_torus(HyperboloidalClass::make(5, 3)) == std::pair{8, 2};
    s << classes << " classes, " << bad << " count mismatches, identifications " << (ids ? "hold" : "fail");
    return {bad == 0 && ids, s.str()};
}

// ---------------------------------------------------------------- 7

Outcome feasibility_table() {
    bool ok = true;
    std::ostringstream s;
    for (auto [d, g] : {std::pair{4, 2}, {5, 3}, {5, 4}})
        for (int l = 1; l <= g + 1; ++l)
            if (feasibility(d, g, l).verdict != FeasibilityVerdict::Infeasible) {
                ok = false;
                s << "(" << d << "," << g << "," << l << ") not infeasible; ";
            }
    for (int l = 1; l <= 11; ++l)
        if (feasibility(6, 10, l).verdict != FeasibilityVerdict::PlanarForced) {
            ok = false;
            s << "(6,10," << l << ") not planar-forced; ";
        }
    int harnack = 0;
    for (int d = 1; d <= 10; ++d)
        for (int g = 0; g <= (d - 1) * (d - 2) / 2; ++g) {
            ++harnack;
            if (feasibility(d, g, g + 2).verdict != FeasibilityVerdict::Infeasible) {
                ok = false;
                s << "(" << d << "," << g << ", l=g+2) not infeasible; ";
            }
        }
    s << "fixed rows checked, " << harnack << " (d,g) pairs with l=g+2";
    return {ok, s.str()};
}

// ---------------------------------------------------------------- 8

Event O(int id) { return Event::crossing(id, Role::Over); }
Event U(int id) { return Event::crossing(id, Role::Under); }
Event P(int id, HighSide side, Rat index) {
    Event e = Event::pole(id, side);
    e.index = index;
    e.index_rc = index;
    return e;
}

VirtualDiagram one(std::vector<Event> ev, int cls, std::map<int, int> signs) {
    VirtualDiagram d;
    d.components = {std::move(ev)};
    d.comp_class = {cls};
    d.crossing_sign = std::move(signs);
    return d;
}

Outcome move_invariance() {
    std::vector<VirtualDiagram> starts = {
        one({O(1), U(2), O(3), U(1), O(2), U(3)}, 0, {{1, 1}, {2, 1}, {3, 1}}),
        one({O(1), P(1, HighSide::After, Rat(1, 2)), U(2), O(3), U(1), P(2, HighSide::Before, Rat(-1, 2)), O(2),
             U(3)},
            0, {{1, 1}, {2, -1}, {3, 1}}),
        one({P(1, HighSide::Before, Rat(0)), P(2, HighSide::After, Rat(0))}, 0, {}),
        closure_diagram(torus_braid(5, 3, false)),
    };
    std::mt19937_64 rng(8);
    int applied = 0, writhe_bad = 0, round_bad = 0;
    while (applied < 200) {
        VirtualDiagram d = starts[applied % starts.size()];
        int w0 = viro_w_from_diagram(d, 1);
        for (int step = 0; step < 25 && applied < 200; ++step) {
            auto ms = applicable_moves(d);
            if (ms.empty()) break;
            const Move& m = ms[rng() % ms.size()];
            VirtualDiagram next = apply_move(d, m);
            if (viro_w_from_diagram(next, 1) != w0) ++writhe_bad;
            if (canonical_form(apply_move(next, inverse_move(d, m))) != canonical_form(d)) ++round_bad;
            d = std::move(next);
            ++applied;
        }
    }
    std::ostringstream s;
    s << applied << " moves, " << writhe_bad << " writhe changes, " << round_bad << " failed round trips";
    return {writhe_bad == 0 && round_bad == 0, s.str()};
}

// ---------------------------------------------------------------- 9

// Height sign of the lift just after (+1) or before (-1) a special point:
// over branches are above the reference plane, under branches below it, and
// at a pole the height is +infinity on its high side.
int height_sign(const Event& e, int where) {
    if (e.kind == EventKind::Crossing) return e.role == Role::Over ? 1 : -1;
    bool high_here = (e.side == HighSide::After) == (where > 0);
    return high_here ? 1 : -1;
}

// Builds D+ directly: one point on every arc whose ends have opposite
// height signs, then conjugate pairs up to degree 6. Returns false when more
// than six real points are forced; otherwise replays the walk and checks that
// the height sign flips exactly at the chosen points.
bool construct_positive_divisor(const VirtualDiagram& d) {
    const auto& comp = d.components[0];
    int n = static_cast<int>(comp.size());
    std::vector<int> points(n, 0);  // D+ points on the arc after event i
    int forced = 0;
    for (int i = 0; i < n; ++i) {
        int a = height_sign(comp[i], +1), b = height_sign(comp[(i + 1) % n], -1);
        if (a != b) {
            points[i] = 1;
            ++forced;
        }
    }
    if (forced > 6 || (6 - forced) % 2 != 0) return false;
    for (int i = 0; i < n; ++i) {
        int sign = height_sign(comp[i], +1);
        if (points[i] % 2) sign = -sign;
        if (sign != height_sign(comp[(i + 1) % n], -1)) return false;
    }
    return true;
}

Outcome odd_arc_bound() {
    Json words = read_json_file(data_path("g0_quartic_words.json"))["words"];
    int samples = 0, mismatch = 0, rejected = 0, over_bound = 0;
    for (const auto& entry : words) {
        std::vector<int> word = entry["word"].get<std::vector<int>>();
        for (int roles = 0; roles < 8; ++roles)
            for (int g1 = 0; g1 < 6; ++g1)
                for (int g2 = g1; g2 < 6; ++g2)
                    for (int sides = 0; sides < 4; ++sides) {
                        std::vector<Event> ev;
                        std::set<int> seen;
                        for (int k = 0; k < 6; ++k) {
                            int id = word[k];
                            bool first = seen.insert(id).second;
                            bool over = ((roles >> (id - 1)) & 1) ? first : !first;
                            ev.push_back(over ? O(id) : U(id));
                            if (k == g1) ev.push_back(P(1, sides & 1 ? HighSide::After : HighSide::Before, 0));
                            if (k == g2) ev.push_back(P(2, sides & 2 ? HighSide::After : HighSide::Before, 0));
                        }
                        VirtualDiagram d = one(ev, 0, {{1, 1}, {2, -1}, {3, 1}});
                        ++samples;
                        int odd = odd_arc_count(d);
                        bool verdict = realizable_g0(d).ok;
                        if (odd > 6) ++over_bound;
                        if (!verdict) ++rejected;
                        if (verdict != (odd <= 6) || verdict != construct_positive_divisor(d)) ++mismatch;
                    }
    }
    std::ostringstream s;
    s << samples << " reconstructed diagrams, " << over_bound << " with more than 6 odd arcs, " << rejected
      << " rejected, " << mismatch << " disagreements with the bound or the divisor construction";
    return {mismatch == 0 && over_bound > 0 && rejected == over_bound, s.str()};
}

// ---------------------------------------------------------------- 10

Outcome d5g1_links() {
    Json cases = read_json_file(data_path("d5g1_links.json"))["cases"];
    std::set<std::pair<std::string, std::pair<int, int>>> reached;
    int bad = 0;
    std::ostringstream s;
    for (const auto& cs : cases) {
        VirtualDiagram d = diagram_from_json(cs["diagram"]);
        DiagramWrithe r = diagram_writhe(d, *d.c, d.c_lambda);
        auto want = cs["expected"].get<std::vector<int>>();
        if (!r.w_lambda || r.w != want[0] || *r.w_lambda != want[1]) {
            ++bad;
            s << cs["name"].get<std::string>() << " gave w=" << r.w.get_str() << "; ";
            continue;
        }
        reached.insert({cs["link"].get<std::string>(), {std::abs(want[0]), std::abs(want[1])}});
    }
    std::set<std::pair<std::string, std::pair<int, int>>> targets = {
        {"L1", {1, 1}}, {"L2", {1, 3}}, {"L3", {3, 5}}};
    bool all = std::includes(reached.begin(), reached.end(), targets.begin(), targets.end());
    s << cases.size() << " diagrams, " << bad << " mismatches, targets (1,1) (1,3) (3,5) "
      << (all ? "reached" : "missing");
    return {bad == 0 && all, s.str()};
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
    bool expected;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "quintic writhe", 30, quintic_writhe, false},
        {2, "projection invariance", 180, projection_invariance, true},
        {3, "node-count genus formula", 120, genus_formula, true},
        {4, "diagram/curve oracle", 300, oracle_equivalence, true},
        {5, "trinodal and quadrinodal censuses", 60, censuses, true},
        {6, "torus dictionary", 10, torus_dictionary, true},
        {7, "feasibility table", 1, feasibility_table, true},
        {8, "move invariance", 60, move_invariance, true},
        {9, "odd-arc bound", 10, odd_arc_bound, true},
        {10, "degree-5 genus-1 targets", 10, d5g1_links, true},
    };
    bool as_expected = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = o.pass && secs <= c.budget_seconds;
        std::cout << "criterion " << c.number << " (" << c.name << "): " << (pass ? "PASS" : "FAIL") << "  "
                  << o.detail << "  [" << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
        if (pass != c.expected) as_expected = false;
    }
    return as_expected ? 0 : 1;
}
