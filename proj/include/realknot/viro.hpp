#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "realknot/curves.hpp"
#include "realknot/diagram.hpp"

namespace realknot {

struct ViroReport {
    int w = 0;
    std::vector<std::pair<NodeRecord, int>> node_signs;
    ProjPoint projection_point;
    std::vector<std::vector<Rat>> chart;  // projection matrix, p goes to (0:0:0:1)
    std::optional<int> c;
    std::optional<Rat> lambda;
    std::optional<Rat> w_lambda;
};

struct OrientationData {
    std::vector<int> signs;  // +1 keeps the traversal orientation, -1 reverses it
};

// sign(det[v_over, v_under]) in the chart (x, y)
int hyperbolic_sign(const std::array<AlgReal, 2>& v_over, const std::array<AlgReal, 2>& v_under);
int hyperbolic_sign(const std::array<Rat, 2>& v_over, const std::array<Rat, 2>& v_under);

// S(s, t) = det[X(s), X'(s), X(t), X'(t)] / (s - t)^4 in e1 = s + t, e2 = s t.
// Its sign at a node pair of any projection is the sign of that node.
BiPoly node_sign_polynomial(const RationalCurveMap& space_curve);
// first-order term of S for X + eps V with V constant (as polynomials of formal degree d)
BiPoly node_sign_variation(const RationalCurveMap& space_curve, const std::array<Rat, 4>& v);

// Sign of a real node of the projection from p, via S on the node system chart.
int node_sign(const RationalCurveMap& space_curve, const NodeRecord& node);

// Independent floating-point checks of the same sign: the direct crossing
// determinant (hyperbolic) and sign Im(conj(v1) v2) at the branch with Im h > 0 (elliptic).
int direct_hyperbolic_sign(const RationalCurveMap& space_curve, const Projection& pr, const NodeRecord& node);
int elliptic_sign(const RationalCurveMap& space_curve, const ProjPoint& p, const NodeRecord& node);
int direct_elliptic_sign(const RationalCurveMap& space_curve, const Projection& pr, const NodeRecord& node);

// global constant of the elliptic sign, fixed by the cusp calibration family
constexpr int kEllipticCalibration = 1;

ViroReport viro_w(const RationalCurveMap& space_curve, std::optional<ProjPoint> p = std::nullopt,
                  uint64_t seed = 1);

// i_M at an interior point of a component polyline
Rat index_i_M(const VirtualDiagram& d, int component, const PolylineLocation& loc);

struct DiagramWrithe {
    Rat w;
    std::optional<Rat> w_lambda;
};

// w = sum sigma + 2 sum i_M + c and, when complex-orientation data is present,
// w_lambda = sum sigma_lambda + 2 sum i_RC + c_lambda.
DiagramWrithe diagram_writhe(const VirtualDiagram& d, int c, std::optional<int> c_lambda = std::nullopt);
int viro_w_from_diagram(const VirtualDiagram& d, int c);
// sum over ordered pairs of distinct components of lk = sum of the signs of
// their mutual crossings
Rat linking_lambda(const VirtualDiagram& d, const OrientationData& o);

}  // namespace realknot
