#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realknot/exact.hpp"

namespace realknot {

enum class EventKind { Crossing, Pole, Boundary };
enum class Role { Over, Under };
enum class HighSide { Before, After };

// Pole location on a component polyline: point (1 - tau) v[segment] + tau v[segment + 1].
struct PolylineLocation {
    int segment = 0;
    Rat tau;
};

struct Event {
    EventKind kind = EventKind::Crossing;
    int id = 0;
    Role role = Role::Over;             // crossings
    HighSide side = HighSide::Before;   // poles: side on which the height tends to +infinity
    std::optional<Rat> index;           // i_M at a pole
    std::optional<Rat> index_rc;        // i_RC at a pole (type I curves)
    std::optional<PolylineLocation> at;

    static Event crossing(int id, Role r);
    static Event pole(int id, HighSide s);
    static Event boundary(int id = 0);
    bool special() const { return kind != EventKind::Boundary; }
};

// Homogeneous vertices (x, y, w) of a closed polygon in the affine chart (x/w, y/w).
// A class-1 component closes from the last vertex to -v[0].
struct Polyline {
    std::vector<std::array<Rat, 3>> vertices;
};

struct Solitary {
    std::string region;
    int sign = 1;
};

// Virtual nodal diagram: components are traversed in their given
// orientation; crossing signs are taken with respect to it.
struct VirtualDiagram {
    std::vector<std::vector<Event>> components;
    std::vector<int> comp_class;
    std::vector<Solitary> solitary;
    std::map<int, int> crossing_sign;
    std::optional<int> c, c_lambda;
    std::vector<Polyline> geometry;  // empty or one per component

    std::vector<int> crossing_ids() const;
    int pole_count() const;
    bool crossing_same_component(int id) const;
    // component and event index of both occurrences of a crossing
    std::array<std::pair<int, int>, 2> occurrences(int id) const;
    // throws InvalidInput when the invariants fail
    void validate() const;
};

struct Arc {
    int component = 0;
    int start = -1;  // event index, -1 for a closed arc without events
    int end = -1;
    int start_tag = 0;  // +1 / -1, 0 when untagged
    int end_tag = 0;
    bool odd() const { return start_tag != 0 && start_tag != end_tag; }
};

std::vector<Arc> arcs(const VirtualDiagram& d);
int odd_arc_count(const VirtualDiagram& d);

struct Verdict {
    bool ok = false;
    std::string reason;
};

Verdict realizable_g0(const VirtualDiagram& d);
// component_of lists the normalization component of pole 1, pole 2, then both
// branches of each crossing in ascending id order; -1 marks a non-real point.
Verdict realizable_g1(const VirtualDiagram& d, const std::vector<int>& component_of);
// attribution read off the diagram (diagram components = normalization components)
std::vector<int> default_attribution(const VirtualDiagram& d);

enum class MoveKind { PoleMove, PoleAnnihilation, PoleCreation, R1, R1Inverse, R2, R2Inverse, R3 };
std::string to_string(MoveKind k);

struct Move {
    MoveKind kind = MoveKind::R1;
    // PoleMove: pole id and direction (+1 swaps with the next event, -1 with the previous)
    int pole = 0;
    int direction = 1;
    // R1, R2, R3: crossing ids
    std::vector<int> crossings;
    // insertion sites (component, event index before which to insert)
    int component = 0, position = 0;
    int component2 = 0, position2 = 0;
    // R1Inverse: solitary entry to remove and role of the first inserted occurrence
    int solitary = 0;
    Role role = Role::Over;
    // R2: replace the crossings by two solitary nodes; R2Inverse: remove the
    // solitary pair (solitary, solitary2) instead of creating from nothing
    bool with_solitary = false;
    int solitary2 = 0;
    // R2Inverse: sign of the first new crossing, order of the second strand
    int sign = 1;
    bool reversed = false;
    // PoleCreation: side of the first pole and its indices (the second gets the negatives)
    HighSide side = HighSide::After;
    std::optional<Rat> index, index_rc;
};

// Throws MoveNotApplicable when the site does not match the move pattern.
VirtualDiagram apply_move(const VirtualDiagram& d, const Move& m);
// A move undoing m on d (d is the diagram before m).
Move inverse_move(const VirtualDiagram& d, const Move& m);
// All sites where the move kind applies (inverse kinds get sample sites).
std::vector<Move> applicable_moves(const VirtualDiagram& d);

// Canonical string invariant under rotations, global reversal, component
// permutations and relabeling of crossings and poles.
std::string canonical_form(const VirtualDiagram& d);

struct GaussEntry {
    int crossing = 0;
    Role role = Role::Over;
    int sign = 0;  // 0 when unknown
};

struct GaussCode {
    std::vector<std::vector<GaussEntry>> components;
    std::string str() const;
};

// Signed Gauss code of the preimage under the double covering S^3 -> RP^3.
// Crossing k of the diagram lifts to 2k (sheet 0) and 2k + 1 (sheet 1);
// the sheet changes at every boundary event.
GaussCode double_cover_code(const VirtualDiagram& d);

// Winding index of component comp around the affine point u in units where a
// small loop around u counts 1; a point on the component gets the average
// of both sides. skip_segment excludes the segment carrying u.
Rat polyline_index(const VirtualDiagram& d, int comp, const std::array<Rat, 2>& u, int skip_segment = -1);
// affine point of a pole location
std::array<Rat, 2> location_point(const VirtualDiagram& d, int comp, const PolylineLocation& loc);

// i_M and i_RC of a pole event from its annotation or the geometry;
// nullopt when neither is available.
std::optional<Rat> pole_index(const VirtualDiagram& d, int comp, int event);
std::optional<Rat> pole_index_rc(const VirtualDiagram& d, int comp, int event);

}  // namespace realknot
