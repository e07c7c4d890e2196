#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "realknot/curves.hpp"
#include "realknot/diagram.hpp"

namespace realknot {

// Planar base of degree delta, height numerator u of degree delta + 2 and the
// pole quadratic p; the lift is (x p : y p : z p : u).
struct LiftSpec {
    RationalCurveMap base;
    Poly u;
    Poly p;
};

struct ChordData {
    std::array<Poly, 4> q;
};

// Throws InvalidInput on spec violations and LiftSingular when the lift has
// singularities other than the node at (0:0:0:1).
RationalCurveMap lift(const LiftSpec& spec);
// the double point of a lift at (0:0:0:1)
NodeRecord lift_node(const RationalCurveMap& lifted, uint64_t seed = 1);

// Virtual diagram of the lift seen from (0:0:0:1): one component traversed
// with the parameter, crossing and solitary signs, pole sides and exact i_M.
VirtualDiagram lift_diagram(const LiftSpec& spec, uint64_t seed = 1);

struct ResolutionReport {
    RationalCurveMap curve;
    Rat epsilon;
    std::array<Rat, 3> direction{};
    int sign = 0;
};

// Perturbs the first three coordinates (in a frame where the node is
// (0:0:0:1)) by eps V with V constant; the sign of eps is chosen from the
// first-order term of the node sign polynomial and checked a posteriori.
ResolutionReport resolve_node_report(const RationalCurveMap& curve, const NodeRecord& node, int sign,
                                     uint64_t seed = 1);
RationalCurveMap resolve_node(const RationalCurveMap& curve, const NodeRecord& node, int sign, uint64_t seed = 1);

RationalCurveMap trinodal_L(const std::vector<Rat>& t);
RationalCurveMap quadrinodal_from_chords(const ChordData& ch);

}  // namespace realknot
