#include "realknot/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "realknot/errors.hpp"

namespace realknot {

Event Event::crossing(int id, Role r) {
    Event e;
    e.kind = EventKind::Crossing;
    e.id = id;
    e.role = r;
    return e;
}

Event Event::pole(int id, HighSide s) {
    Event e;
    e.kind = EventKind::Pole;
    e.id = id;
    e.side = s;
    return e;
}

Event Event::boundary(int id) {
    Event e;
    e.kind = EventKind::Boundary;
    e.id = id;
    return e;
}

// ---------------------------------------------------------------- structure

std::vector<int> VirtualDiagram::crossing_ids() const {
    std::set<int> ids;
    for (const auto& comp : components)
        for (const auto& e : comp)
            if (e.kind == EventKind::Crossing) ids.insert(e.id);
    return {ids.begin(), ids.end()};
}

int VirtualDiagram::pole_count() const {
    int n = 0;
    for (const auto& comp : components)
        for (const auto& e : comp)
            if (e.kind == EventKind::Pole) ++n;
    return n;
}

std::array<std::pair<int, int>, 2> VirtualDiagram::occurrences(int id) const {
    std::array<std::pair<int, int>, 2> out{};
    int k = 0;
    for (int c = 0; c < static_cast<int>(components.size()); ++c)
        for (int i = 0; i < static_cast<int>(components[c].size()); ++i) {
            const Event& e = components[c][i];
            if (e.kind == EventKind::Crossing && e.id == id) {
                if (k == 2) throw InvalidInput("crossing " + std::to_string(id) + " occurs more than twice");
                out[k++] = {c, i};
            }
        }
    if (k != 2) throw InvalidInput("crossing " + std::to_string(id) + " does not occur twice");
    return out;
}

bool VirtualDiagram::crossing_same_component(int id) const {
    auto occ = occurrences(id);
    return occ[0].first == occ[1].first;
}

void VirtualDiagram::validate() const {
    int n = static_cast<int>(components.size());
    if (static_cast<int>(comp_class.size()) != n) throw InvalidInput("one class per component required");
    for (int c : comp_class)
        if (c != 0 && c != 1) throw InvalidInput("component class must be 0 or 1");
    std::map<int, std::vector<Role>> roles;
    std::set<int> poles;
    bool has_boundary = false;
    for (const auto& comp : components)
        for (const auto& e : comp) {
            if (e.kind == EventKind::Crossing) roles[e.id].push_back(e.role);
            if (e.kind == EventKind::Pole && !poles.insert(e.id).second)
                throw InvalidInput("pole id " + std::to_string(e.id) + " repeated");
            if (e.kind == EventKind::Boundary) has_boundary = true;
        }
    for (const auto& [id, r] : roles)
        if (r.size() != 2 || r[0] == r[1])
            throw InvalidInput("crossing " + std::to_string(id) + " needs one over and one under occurrence");
    if (!poles.empty() && poles.size() != 2) throw InvalidInput("a diagram has exactly 0 or 2 poles");
    for (const auto& [id, s] : crossing_sign) {
        if (!roles.count(id)) throw InvalidInput("sign for unknown crossing " + std::to_string(id));
        if (s != 1 && s != -1) throw InvalidInput("crossing signs are +1 or -1");
    }
    for (const auto& s : solitary)
        if (s.sign != 1 && s.sign != -1) throw InvalidInput("solitary signs are +1 or -1");
    if (!geometry.empty() && static_cast<int>(geometry.size()) != n)
        throw InvalidInput("geometry needs one polyline per component");
    if (has_boundary)
        for (int c = 0; c < n; ++c) {
            int b = 0;
            for (const auto& e : components[c])
                if (e.kind == EventKind::Boundary) ++b;
            if (b % 2 != comp_class[c])
                throw InvalidInput("boundary passes of component " + std::to_string(c) + " contradict its class");
        }
    // mod 2 intersection numbers in RP^2
    std::vector<std::vector<int>> meet(n, std::vector<int>(n));
    for (const auto& [id, r] : roles) {
        auto occ = occurrences(id);
        if (occ[0].first != occ[1].first) {
            ++meet[occ[0].first][occ[1].first];
            ++meet[occ[1].first][occ[0].first];
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (meet[a][b] % 2 != comp_class[a] * comp_class[b])
                throw InvalidInput("components " + std::to_string(a) + " and " + std::to_string(b) +
                                   " meet a number of times inconsistent with their classes");
}

// ---------------------------------------------------------------- arcs

namespace {

int tag_after(const Event& e) {
    if (e.kind == EventKind::Crossing) return e.role == Role::Over ? 1 : -1;
    return e.side == HighSide::After ? 1 : -1;
}

int tag_before(const Event& e) {
    if (e.kind == EventKind::Crossing) return e.role == Role::Over ? 1 : -1;
    return e.side == HighSide::Before ? 1 : -1;
}

}  // namespace

std::vector<Arc> arcs(const VirtualDiagram& d) {
    std::vector<Arc> out;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
        const auto& comp = d.components[c];
        std::vector<int> s;
        for (int i = 0; i < static_cast<int>(comp.size()); ++i)
            if (comp[i].special()) s.push_back(i);
        if (s.empty()) {
            Arc a;
            a.component = c;
            out.push_back(a);
            continue;
        }
        for (size_t k = 0; k < s.size(); ++k) {
            Arc a;
            a.component = c;
            a.start = s[k];
            a.end = s[(k + 1) % s.size()];
            a.start_tag = tag_after(comp[a.start]);
            a.end_tag = tag_before(comp[a.end]);
            out.push_back(a);
        }
    }
    return out;
}

int odd_arc_count(const VirtualDiagram& d) {
    int n = 0;
    for (const auto& a : arcs(d))
        if (a.odd()) ++n;
    return n;
}

Verdict realizable_g0(const VirtualDiagram& d) {
    int n = odd_arc_count(d);
    Verdict v;
    v.ok = n <= 6;
    v.reason = std::to_string(n) + (v.ok ? " odd arcs, within the bound 6" : " odd arcs, more than 6");
    return v;
}

std::vector<int> default_attribution(const VirtualDiagram& d) {
    std::vector<int> out;
    std::vector<std::pair<int, int>> poles;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
        for (const auto& e : d.components[c])
            if (e.kind == EventKind::Pole) poles.push_back({e.id, c});
    std::sort(poles.begin(), poles.end());
    for (int k = 0; k < 2; ++k) out.push_back(k < static_cast<int>(poles.size()) ? poles[k].second : -1);
    for (int id : d.crossing_ids()) {
        auto occ = d.occurrences(id);
        out.push_back(occ[0].first);
        out.push_back(occ[1].first);
    }
    return out;
}

Verdict realizable_g1(const VirtualDiagram& d, const std::vector<int>& component_of) {
    auto ids = d.crossing_ids();
    if (ids.size() != 2) throw InvalidInput("the genus-1 criterion needs exactly two crossings");
    if (!d.solitary.empty()) throw InvalidInput("the genus-1 criterion assumes all nodes hyperbolic");
    if (component_of.size() != 6) throw InvalidInput("six special points must be attributed");
    int real_poles = d.pole_count();
    for (int k = 0; k < 2; ++k)
        if ((component_of[k] >= 0) != (real_poles == 2))
            throw InvalidInput("pole attribution disagrees with the poles of the diagram");
    for (int k = 2; k < 6; ++k)
        if (component_of[k] < 0) throw InvalidInput("crossing branches of a hyperbolic node are real");
    for (size_t k = 0; k < ids.size(); ++k) {
        auto occ = d.occurrences(ids[k]);
        bool same_diag = occ[0].first == occ[1].first;
        bool same_attr = component_of[2 + 2 * k] == component_of[3 + 2 * k];
        if (same_diag != same_attr) throw InvalidInput("crossing attribution disagrees with the diagram");
    }
    Verdict v;
    bool all_real = std::all_of(component_of.begin(), component_of.end(), [](int c) { return c >= 0; });
    if (all_real && std::all_of(component_of.begin(), component_of.end(), [&](int c) { return c == component_of[0]; })) {
        v.reason = "all six special points lie on one component of the normalization";
        return v;
    }
    if (all_real)
        for (int k = 0; k < 2; ++k)
            if (component_of[2 + 2 * k] != component_of[3 + 2 * k]) {
                v.reason = "all special points are real and a node joins distinct components";
                return v;
            }
    v.ok = true;
    v.reason = all_real ? "special points spread over both components" : "poles are not real";
    return v;
}

// ---------------------------------------------------------------- geometry

namespace {

std::array<Rat, 3> vertex_after(const VirtualDiagram& d, int comp, int i) {
    const auto& v = d.geometry.at(comp).vertices;
    int n = static_cast<int>(v.size());
    if (i + 1 < n) return v[i + 1];
    if (d.comp_class[comp] == 1) return {-v[0][0], -v[0][1], -v[0][2]};
    return v[0];
}

Rat cross2(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) { return ax * by - ay * bx; }

}  // namespace

std::array<Rat, 2> location_point(const VirtualDiagram& d, int comp, const PolylineLocation& loc) {
    if (d.geometry.empty()) throw MissingSignData("diagram has no geometry");
    const auto& v = d.geometry.at(comp).vertices;
    if (loc.segment < 0 || loc.segment >= static_cast<int>(v.size())) throw InvalidInput("segment out of range");
    if (loc.tau <= 0 || loc.tau >= 1) throw InvalidInput("location must be interior to a segment");
    auto a = v[loc.segment];
    auto b = vertex_after(d, comp, loc.segment);
    std::array<Rat, 3> m;
    for (int k = 0; k < 3; ++k) m[k] = (1 - loc.tau) * a[k] + loc.tau * b[k];
    if (m[2] == 0) throw InvalidInput("location lies on the line at infinity of the chart");
    return {m[0] / m[2], m[1] / m[2]};
}

Rat polyline_index(const VirtualDiagram& d, int comp, const std::array<Rat, 2>& u, int skip_segment) {
    if (d.geometry.empty()) throw MissingSignData("diagram has no geometry");
    const auto& v = d.geometry.at(comp).vertices;
    int n = static_cast<int>(v.size());
    if (n < 2) throw InvalidInput("polyline needs at least two vertices");
    auto V = [&](const std::array<Rat, 3>& m) -> std::array<Rat, 2> {
        return {m[0] - u[0] * m[2], m[1] - u[1] * m[2]};
    };
    std::vector<std::array<Rat, 2>> vv;
    for (const auto& m : v) {
        auto w = V(m);
        if (w[0] == 0 && w[1] == 0) throw InvalidInput("point coincides with a polyline vertex");
        vv.push_back(w);
    }
    static const int dirs[][2] = {{3, 7}, {5, -2}, {1, 11}, {-7, 4}, {13, 3}, {2, -9}, {17, 5}, {-4, 15}};
    for (const auto& r : dirs) {
        bool ok = true;
        for (const auto& w : vv)
            if (cross2(r[0], r[1], w[0], w[1]) == 0) ok = false;
        if (!ok) continue;
        int passes = 0;
        for (int i = 0; i < n; ++i) {
            if (i == skip_segment) continue;
            auto a = vv[i];
            auto b = V(vertex_after(d, comp, i));
            int sa = sgn(cross2(r[0], r[1], a[0], a[1]));
            int sb = sgn(cross2(r[0], r[1], b[0], b[1]));
            if (sa == sb) continue;
            int w = sgn(cross2(a[0], a[1], b[0], b[1]));
            if (w == 0) throw InvalidInput("point lies on another segment (a crossing or a second component)");
            passes += w;
        }
        Rat half(passes, 2);
        half.canonicalize();
        return half;
    }
    throw InternalInconsistency("no admissible reference direction");
}

std::optional<Rat> pole_index(const VirtualDiagram& d, int comp, int event) {
    const Event& e = d.components.at(comp).at(event);
    if (e.kind != EventKind::Pole) throw InvalidInput("not a pole event");
    if (e.index) return e.index;
    if (!e.at || d.geometry.empty()) return std::nullopt;
    auto u = location_point(d, comp, *e.at);
    Rat ind = polyline_index(d, comp, u, e.at->segment);
    return e.side == HighSide::Before ? ind : Rat(-ind);
}

std::optional<Rat> pole_index_rc(const VirtualDiagram& d, int comp, int event) {
    const Event& e = d.components.at(comp).at(event);
    if (e.kind != EventKind::Pole) throw InvalidInput("not a pole event");
    if (e.index_rc) return e.index_rc;
    if (!e.at || d.geometry.empty()) return std::nullopt;
    auto u = location_point(d, comp, *e.at);
    Rat ind = 0;
    for (int n = 0; n < static_cast<int>(d.components.size()); ++n)
        ind += polyline_index(d, n, u, n == comp ? e.at->segment : -1);
    return e.side == HighSide::Before ? ind : Rat(-ind);
}

// ---------------------------------------------------------------- moves

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::PoleMove: return "PoleMove";
        case MoveKind::PoleAnnihilation: return "PoleAnnihilation";
        case MoveKind::PoleCreation: return "PoleCreation";
        case MoveKind::R1: return "R1";
        case MoveKind::R1Inverse: return "R1Inverse";
        case MoveKind::R2: return "R2";
        case MoveKind::R2Inverse: return "R2Inverse";
        case MoveKind::R3: return "R3";
    }
    return "?";
}

namespace {

using Pos = std::pair<int, int>;

// pole indices become annotations and geometry is dropped: moves are combinatorial
VirtualDiagram detach_geometry(const VirtualDiagram& d) {
    VirtualDiagram out = d;
    for (int c = 0; c < static_cast<int>(out.components.size()); ++c)
        for (int i = 0; i < static_cast<int>(out.components[c].size()); ++i) {
            Event& e = out.components[c][i];
            if (e.kind != EventKind::Pole) continue;
            if (!e.index) e.index = pole_index(d, c, i);
            if (!e.index_rc) e.index_rc = pole_index_rc(d, c, i);
            e.at.reset();
        }
    out.geometry.clear();
    return out;
}

Pos find_pole(const VirtualDiagram& d, int id) {
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
        for (int i = 0; i < static_cast<int>(d.components[c].size()); ++i)
            if (d.components[c][i].kind == EventKind::Pole && d.components[c][i].id == id) return {c, i};
    throw MoveNotApplicable("no pole with id " + std::to_string(id));
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

bool adjacent(const VirtualDiagram& d, Pos a, Pos b) {
    if (a.first != b.first) return false;
    int n = static_cast<int>(d.components[a.first].size());
    if (n < 2) return false;
    return wrap(a.second + 1, n) == b.second || wrap(b.second + 1, n) == a.second;
}

// first of two adjacent positions in traversal order
Pos first_of(const VirtualDiagram& d, Pos a, Pos b) {
    int n = static_cast<int>(d.components[a.first].size());
    return wrap(a.second + 1, n) == b.second ? a : b;
}

int next_id(const VirtualDiagram& d) {
    auto ids = d.crossing_ids();
    return ids.empty() ? 1 : ids.back() + 1;
}

Role other(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

void erase_positions(VirtualDiagram& d, std::vector<Pos> pos) {
    std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    for (const auto& p : pos) d.components[p.first].erase(d.components[p.first].begin() + p.second);
}

// position after deleting the given indices of the same component
int shifted(int p, int comp, const std::vector<Pos>& removed) {
    int s = p;
    for (const auto& r : removed)
        if (r.first == comp && r.second < p) --s;
    return s;
}

// insertion position that recreates an adjacent pair starting at `first`
int reinsertion_position(const VirtualDiagram& d, Pos first, const std::vector<Pos>& removed) {
    int n = static_cast<int>(d.components[first.first].size());
    if (first.second == n - 1) {  // pair wraps around the end
        int removed_here = 0;
        for (const auto& r : removed)
            if (r.first == first.first) ++removed_here;
        return n - removed_here;
    }
    return shifted(first.second, first.first, removed);
}

struct R2Site {
    Pos a1, b1, a2, b2;  // strand 1 holds a1, b1 adjacent; strand 2 holds a2, b2
};

std::optional<R2Site> r2_site(const VirtualDiagram& d, int a, int b) {
    if (a == b) return std::nullopt;
    auto oa = d.occurrences(a), ob = d.occurrences(b);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            Pos a1 = oa[x], b1 = ob[y], a2 = oa[1 - x], b2 = ob[1 - y];
            if (!adjacent(d, a1, b1) || !adjacent(d, a2, b2)) continue;
            const Event& ea = d.components[a1.first][a1.second];
            const Event& eb = d.components[b1.first][b1.second];
            if (ea.role != eb.role) continue;
            return R2Site{a1, b1, a2, b2};
        }
    return std::nullopt;
}

struct R3Site {
    std::array<std::pair<Pos, Pos>, 3> pairs;
};

std::optional<R3Site> r3_site(const VirtualDiagram& d, int a, int b, int c) {
    if (a == b || b == c || a == c) return std::nullopt;
    auto oa = d.occurrences(a), ob = d.occurrences(b), oc = d.occurrences(c);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                // pairs (a, b), (b, c), (c, a) using occurrences a[i]-b[j], b[1-j]-c[k], c[1-k]-a[1-i]
                std::pair<Pos, Pos> p1{oa[i], ob[j]}, p2{ob[1 - j], oc[k]}, p3{oc[1 - k], oa[1 - i]};
                if (!adjacent(d, p1.first, p1.second) || !adjacent(d, p2.first, p2.second) ||
                    !adjacent(d, p3.first, p3.second))
                    continue;
                int overs = 0, unders = 0, mixed = 0;
                for (const auto& p : {p1, p2, p3}) {
                    Role r1 = d.components[p.first.first][p.first.second].role;
                    Role r2 = d.components[p.second.first][p.second.second].role;
                    if (r1 != r2) ++mixed;
                    else if (r1 == Role::Over) ++overs;
                    else ++unders;
                }
                if (overs == 1 && unders == 1 && mixed == 1) return R3Site{{p1, p2, p3}};
            }
    return std::nullopt;
}

void insert_at(VirtualDiagram& d, int comp, int pos, std::vector<Event> ev) {
    auto& c = d.components.at(comp);
    if (pos < 0 || pos > static_cast<int>(c.size())) throw MoveNotApplicable("insertion position out of range");
    c.insert(c.begin() + pos, ev.begin(), ev.end());
}

}  // namespace

VirtualDiagram apply_move(const VirtualDiagram& din, const Move& m) {
    VirtualDiagram d = detach_geometry(din);
    switch (m.kind) {
        case MoveKind::PoleMove: {
            Pos p = find_pole(d, m.pole);
            auto& comp = d.components[p.first];
            int n = static_cast<int>(comp.size());
            if (n < 2 || (m.direction != 1 && m.direction != -1)) throw MoveNotApplicable("no neighbour to pass");
            int q = wrap(p.second + m.direction, n);
            if (comp[q].kind != EventKind::Crossing) throw MoveNotApplicable("pole is not adjacent to a crossing");
            int id = comp[q].id;
            Event& pole = comp[p.second];
            auto it = d.crossing_sign.find(id);
            if ((pole.index || pole.index_rc) && it == d.crossing_sign.end())
                throw MissingSignData("pole move across a crossing of unknown sign");
            if (it != d.crossing_sign.end()) {
                int s = it->second;
                if (pole.index && d.crossing_same_component(id)) *pole.index += s;
                if (pole.index_rc) *pole.index_rc += s;
                it->second = -s;
            }
            std::swap(comp[p.second], comp[q]);
            for (auto& c : d.components)
                for (auto& e : c)
                    if (e.kind == EventKind::Crossing && e.id == id) e.role = other(e.role);
            return d;
        }
        case MoveKind::PoleAnnihilation: {
            Pos p = find_pole(d, m.pole);
            auto& comp = d.components[p.first];
            int n = static_cast<int>(comp.size());
            if (n < 2) throw MoveNotApplicable("single pole on its component");
            int q = wrap(p.second + m.direction, n);
            if (comp[q].kind != EventKind::Pole) throw MoveNotApplicable("poles are not adjacent");
            const Event& a = comp[p.second];
            const Event& b = comp[q];
            if (a.side == b.side) throw MoveNotApplicable("poles do not face each other");
            if (a.index && b.index && *a.index + *b.index != 0)
                throw MoveNotApplicable("pole indices do not cancel");
            if (a.index_rc && b.index_rc && *a.index_rc + *b.index_rc != 0)
                throw MoveNotApplicable("pole indices do not cancel");
            erase_positions(d, {p, {p.first, q}});
            return d;
        }
        case MoveKind::PoleCreation: {
            if (d.pole_count() != 0) throw MoveNotApplicable("diagram already has poles");
            Event a = Event::pole(1, m.side);
            Event b = Event::pole(2, m.side == HighSide::After ? HighSide::Before : HighSide::After);
            a.index = m.index;
            a.index_rc = m.index_rc;
            if (m.index) b.index = -*m.index;
            if (m.index_rc) b.index_rc = -*m.index_rc;
            insert_at(d, m.component, m.position, {a, b});
            return d;
        }
        case MoveKind::R1: {
            if (m.crossings.size() != 1) throw MoveNotApplicable("R1 needs one crossing");
            int id = m.crossings[0];
            auto occ = d.occurrences(id);
            if (!adjacent(d, occ[0], occ[1])) throw MoveNotApplicable("crossing is not a kink");
            auto it = d.crossing_sign.find(id);
            if (it == d.crossing_sign.end()) throw MissingSignData("kink of unknown sign");
            d.solitary.push_back({"k" + std::to_string(id), it->second});
            d.crossing_sign.erase(it);
            erase_positions(d, {occ[0], occ[1]});
            return d;
        }
        case MoveKind::R1Inverse: {
            if (m.solitary < 0 || m.solitary >= static_cast<int>(d.solitary.size()))
                throw MoveNotApplicable("no such solitary node");
            int s = d.solitary[m.solitary].sign;
            d.solitary.erase(d.solitary.begin() + m.solitary);
            int id = next_id(d);
            insert_at(d, m.component, m.position, {Event::crossing(id, m.role), Event::crossing(id, other(m.role))});
            d.crossing_sign[id] = s;
            return d;
        }
        case MoveKind::R2: {
            if (m.crossings.size() != 2) throw MoveNotApplicable("R2 needs two crossings");
            int a = m.crossings[0], b = m.crossings[1];
            auto site = r2_site(d, a, b);
            if (!site) throw MoveNotApplicable("crossings do not bound a bigon");
            auto sa = d.crossing_sign.find(a), sb = d.crossing_sign.find(b);
            bool ka = sa != d.crossing_sign.end(), kb = sb != d.crossing_sign.end();
            if (ka != kb || (ka && sa->second != -sb->second))
                throw MoveNotApplicable("bigon crossings must have opposite signs");
            if (m.with_solitary) {
                if (!ka) throw MissingSignData("bigon of unknown signs");
                if (!d.crossing_same_component(a) || !d.crossing_same_component(b))
                    throw MoveNotApplicable("solitary pair needs branches of one component");
                d.solitary.push_back({"b" + std::to_string(a), sa->second});
                d.solitary.push_back({"b" + std::to_string(b), sb->second});
            }
            d.crossing_sign.erase(a);
            d.crossing_sign.erase(b);
            erase_positions(d, {site->a1, site->b1, site->a2, site->b2});
            return d;
        }
        case MoveKind::R2Inverse: {
            if (m.component == m.component2 && m.position == m.position2)
                throw MoveNotApplicable("bigon strands must be inserted at different places");
            int s = m.sign;
            if (m.with_solitary) {
                int i = m.solitary, j = m.solitary2;
                int ns = static_cast<int>(d.solitary.size());
                if (i == j || i < 0 || j < 0 || i >= ns || j >= ns) throw MoveNotApplicable("no such solitary pair");
                if (d.solitary[i].sign != -d.solitary[j].sign)
                    throw MoveNotApplicable("solitary pair must have opposite signs");
                if (m.component != m.component2) throw MoveNotApplicable("solitary pair needs one component");
                s = d.solitary[i].sign;
                d.solitary.erase(d.solitary.begin() + std::max(i, j));
                d.solitary.erase(d.solitary.begin() + std::min(i, j));
            }
            if (s != 1 && s != -1) throw MoveNotApplicable("sign must be +1 or -1");
            int a = next_id(d), b = a + 1;
            std::vector<Event> s1{Event::crossing(a, m.role), Event::crossing(b, m.role)};
            std::vector<Event> s2{Event::crossing(a, other(m.role)), Event::crossing(b, other(m.role))};
            if (m.reversed) std::swap(s2[0], s2[1]);
            bool second_first = m.component == m.component2 && m.position2 > m.position;
            if (second_first) {
                insert_at(d, m.component2, m.position2, s2);
                insert_at(d, m.component, m.position, s1);
            } else {
                insert_at(d, m.component, m.position, s1);
                insert_at(d, m.component2, m.position2, s2);
            }
            d.crossing_sign[a] = s;
            d.crossing_sign[b] = -s;
            return d;
        }
        case MoveKind::R3: {
            if (m.crossings.size() != 3) throw MoveNotApplicable("R3 needs three crossings");
            auto site = r3_site(d, m.crossings[0], m.crossings[1], m.crossings[2]);
            if (!site) throw MoveNotApplicable("crossings do not bound a triangle");
            for (const auto& [p, q] : site->pairs)
                std::swap(d.components[p.first][p.second], d.components[q.first][q.second]);
            return d;
        }
    }
    throw MoveNotApplicable("unknown move");
}

Move inverse_move(const VirtualDiagram& din, const Move& m) {
    VirtualDiagram d = detach_geometry(din);
    Move inv;
    switch (m.kind) {
        case MoveKind::PoleMove:
            inv = m;
            inv.direction = -m.direction;
            return inv;
        case MoveKind::PoleAnnihilation: {
            Pos p = find_pole(d, m.pole);
            int n = static_cast<int>(d.components[p.first].size());
            Pos q{p.first, wrap(p.second + m.direction, n)};
            Pos first = first_of(d, p, q);
            const Event& e = d.components[first.first][first.second];
            inv.kind = MoveKind::PoleCreation;
            inv.component = first.first;
            inv.position = reinsertion_position(d, first, {p, q});
            inv.side = e.side;
            inv.index = e.index;
            inv.index_rc = e.index_rc;
            return inv;
        }
        case MoveKind::PoleCreation:
            inv.kind = MoveKind::PoleAnnihilation;
            inv.pole = 1;
            inv.direction = 1;
            return inv;
        case MoveKind::R1: {
            auto occ = d.occurrences(m.crossings.at(0));
            Pos first = first_of(d, occ[0], occ[1]);
            inv.kind = MoveKind::R1Inverse;
            inv.solitary = static_cast<int>(d.solitary.size());
            inv.component = first.first;
            inv.position = reinsertion_position(d, first, {occ[0], occ[1]});
            inv.role = d.components[first.first][first.second].role;
            return inv;
        }
        case MoveKind::R1Inverse:
            inv.kind = MoveKind::R1;
            inv.crossings = {next_id(d)};
            return inv;
        case MoveKind::R2: {
            int a = m.crossings.at(0), b = m.crossings.at(1);
            auto site = r2_site(d, a, b);
            if (!site) throw MoveNotApplicable("crossings do not bound a bigon");
            std::vector<Pos> removed{site->a1, site->b1, site->a2, site->b2};
            Pos f1 = first_of(d, site->a1, site->b1);
            Pos f2 = first_of(d, site->a2, site->b2);
            const Event& e1 = d.components[f1.first][f1.second];
            const Event& e2 = d.components[f2.first][f2.second];
            inv.kind = MoveKind::R2Inverse;
            inv.component = f1.first;
            inv.position = reinsertion_position(d, f1, removed);
            inv.component2 = f2.first;
            inv.position2 = reinsertion_position(d, f2, removed);
            inv.role = e1.role;
            inv.reversed = e1.id != e2.id;
            auto it = d.crossing_sign.find(e1.id);
            inv.sign = it != d.crossing_sign.end() ? it->second : 1;
            inv.with_solitary = m.with_solitary;
            if (m.with_solitary) {
                int ns = static_cast<int>(d.solitary.size());
                inv.solitary = e1.id == a ? ns : ns + 1;
                inv.solitary2 = e1.id == a ? ns + 1 : ns;
            }
            // the same-component case inserts the later strand first; positions
            // computed on the reduced diagram already account for both strands
            if (inv.component == inv.component2 && inv.position == inv.position2)
                throw MoveNotApplicable("degenerate bigon");
            return inv;
        }
        case MoveKind::R2Inverse: {
            int a = next_id(d);
            inv.kind = MoveKind::R2;
            inv.crossings = {a, a + 1};
            inv.with_solitary = m.with_solitary;
            return inv;
        }
        case MoveKind::R3:
            return m;
    }
    throw MoveNotApplicable("unknown move");
}

std::vector<Move> applicable_moves(const VirtualDiagram& din) {
    VirtualDiagram d = detach_geometry(din);
    std::vector<Move> out;
    auto try_add = [&](const Move& m) {
        try {
            apply_move(d, m);
            inverse_move(d, m);
            out.push_back(m);
        } catch (const Error&) {
        }
    };
    auto ids = d.crossing_ids();
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
        for (const auto& e : d.components[c])
            if (e.kind == EventKind::Pole) {
                for (int dir : {1, -1}) {
                    Move m;
                    m.kind = MoveKind::PoleMove;
                    m.pole = e.id;
                    m.direction = dir;
                    try_add(m);
                    m.kind = MoveKind::PoleAnnihilation;
                    try_add(m);
                }
            }
    if (d.pole_count() == 0)
        for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
            Move m;
            m.kind = MoveKind::PoleCreation;
            m.component = c;
            m.position = 0;
            m.side = HighSide::After;
            m.index = Rat(1, 2);
            m.index_rc = Rat(1, 2);
            try_add(m);
        }
    for (int id : ids) {
        Move m;
        m.kind = MoveKind::R1;
        m.crossings = {id};
        try_add(m);
    }
    for (int s = 0; s < static_cast<int>(d.solitary.size()); ++s) {
        Move m;
        m.kind = MoveKind::R1Inverse;
        m.solitary = s;
        m.component = 0;
        m.position = 0;
        try_add(m);
    }
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j) {
            Move m;
            m.kind = MoveKind::R2;
            m.crossings = {ids[i], ids[j]};
            try_add(m);
            m.with_solitary = true;
            try_add(m);
            for (size_t k = j + 1; k < ids.size(); ++k) {
                Move r;
                r.kind = MoveKind::R3;
                r.crossings = {ids[i], ids[j], ids[k]};
                try_add(r);
            }
        }
    int nc = static_cast<int>(d.components.size());
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = c1; c2 < nc; ++c2) {
            Move m;
            m.kind = MoveKind::R2Inverse;
            m.component = c1;
            m.component2 = c2;
            m.position = 0;
            int n2 = static_cast<int>(d.components[c2].size());
            m.position2 = c1 == c2 ? std::max(1, n2 / 2) : n2 / 2;
            if (c1 == c2 && n2 == 0) continue;
            for (bool rev : {false, true}) {
                m.reversed = rev;
                try_add(m);
            }
        }
    for (int i = 0; i < static_cast<int>(d.solitary.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(d.solitary.size()); ++j) {
            Move m;
            m.kind = MoveKind::R2Inverse;
            m.with_solitary = true;
            m.solitary = i;
            m.solitary2 = j;
            m.component = m.component2 = 0;
            m.position = 0;
            m.position2 = static_cast<int>(d.components[0].size()) > 0 ? 1 : 0;
            try_add(m);
        }
    return out;
}

// ---------------------------------------------------------------- canonical form

namespace {

std::string encode(const VirtualDiagram& d, const std::vector<int>& order, const std::vector<int>& rot) {
    std::map<int, int> xl, pl;
    std::ostringstream os;
    for (size_t k = 0; k < order.size(); ++k) {
        int c = order[k];
        const auto& comp = d.components[c];
        int n = static_cast<int>(comp.size());
        os << "[" << d.comp_class[c] << ":";
        for (int i = 0; i < n; ++i) {
            const Event& e = comp[(i + rot[k]) % n];
            if (e.kind == EventKind::Crossing) {
                if (!xl.count(e.id)) xl[e.id] = static_cast<int>(xl.size()) + 1;
                os << "X" << xl[e.id] << (e.role == Role::Over ? "o" : "u");
            } else if (e.kind == EventKind::Pole) {
                if (!pl.count(e.id)) pl[e.id] = static_cast<int>(pl.size()) + 1;
                os << "P" << pl[e.id] << (e.side == HighSide::Before ? "b" : "a");
                if (e.index) os << "{" << to_string(*e.index) << "}";
                if (e.index_rc) os << "{" << to_string(*e.index_rc) << "}";
            } else {
                os << "B";
            }
            os << ",";
        }
        os << "]";
    }
    std::vector<std::pair<int, int>> signs;
    for (const auto& [id, s] : d.crossing_sign)
        if (xl.count(id)) signs.push_back({xl[id], s});
    std::sort(signs.begin(), signs.end());
    os << "S";
    for (const auto& [l, s] : signs) os << l << (s > 0 ? "+" : "-");
    std::vector<int> sol;
    for (const auto& s : d.solitary) sol.push_back(s.sign);
    std::sort(sol.begin(), sol.end());
    os << "E";
    for (int s : sol) os << (s > 0 ? "+" : "-");
    os << "c" << (d.c ? std::to_string(*d.c) : "?") << "l" << (d.c_lambda ? std::to_string(*d.c_lambda) : "?");
    return os.str();
}

VirtualDiagram reversed_diagram(const VirtualDiagram& d) {
    VirtualDiagram r = d;
    for (auto& comp : r.components) {
        std::reverse(comp.begin(), comp.end());
        for (auto& e : comp)
            if (e.kind == EventKind::Pole) e.side = e.side == HighSide::Before ? HighSide::After : HighSide::Before;
    }
    return r;
}

}  // namespace

std::string canonical_form(const VirtualDiagram& din) {
    VirtualDiagram base = detach_geometry(din);
    std::string best;
    bool have = false;
    for (int rev = 0; rev < 2; ++rev) {
        VirtualDiagram d = rev ? reversed_diagram(base) : base;
        int nc = static_cast<int>(d.components.size());
        std::vector<int> order(nc);
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<int> rot(nc, 0);
            std::function<void(int)> rec = [&](int k) {
                if (k == nc) {
                    std::string s = encode(d, order, rot);
                    if (!have || s < best) {
                        best = s;
                        have = true;
                    }
                    return;
                }
                int n = std::max<int>(1, static_cast<int>(d.components[order[k]].size()));
                for (int r = 0; r < n; ++r) {
                    rot[k] = r;
                    rec(k + 1);
                }
            };
            rec(0);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return best;
}

// ---------------------------------------------------------------- double cover

std::string GaussCode::str() const {
    std::ostringstream os;
    for (size_t c = 0; c < components.size(); ++c) {
        if (c) os << " | ";
        for (size_t i = 0; i < components[c].size(); ++i) {
            const auto& e = components[c][i];
            if (i) os << " ";
            os << (e.role == Role::Over ? "O" : "U") << e.crossing;
            if (e.sign) os << (e.sign > 0 ? "+" : "-");
        }
    }
    return os.str();
}

GaussCode double_cover_code(const VirtualDiagram& d) {
    GaussCode out;
    bool has_boundary = false;
    for (const auto& comp : d.components)
        for (const auto& e : comp)
            if (e.kind == EventKind::Boundary) has_boundary = true;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
        const auto& comp = d.components[c];
        auto pass = [&](int sheet, std::vector<GaussEntry>& v) {
            for (const auto& e : comp) {
                if (e.kind == EventKind::Boundary) {
                    sheet ^= 1;
                    continue;
                }
                if (e.kind != EventKind::Crossing) continue;
                GaussEntry g;
                g.crossing = 2 * e.id + sheet;
                // the covering involution reverses heights
                g.role = sheet == 0 ? e.role : other(e.role);
                auto it = d.crossing_sign.find(e.id);
                g.sign = it != d.crossing_sign.end() ? it->second : 0;
                v.push_back(g);
            }
            // without boundary events a class-1 component crosses the boundary at its start
            if (!has_boundary && d.comp_class[c] == 1) sheet ^= 1;
            return sheet;
        };
        if (d.comp_class[c] == 1) {
            std::vector<GaussEntry> v;
            int s = pass(0, v);
            pass(s, v);
            out.components.push_back(v);
        } else {
            for (int s0 : {0, 1}) {
                std::vector<GaussEntry> v;
                pass(s0, v);
                out.components.push_back(v);
            }
        }
    }
    return out;
}

}  // namespace realknot
