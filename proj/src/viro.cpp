#include "realknot/viro.hpp"

#include <cmath>
#include <complex>

#include "realknot/errors.hpp"

namespace realknot {

namespace {

using cplx = std::complex<double>;

Poly wronskian(const Poly& a, const Poly& b) { return a * b.derivative() - b * a.derivative(); }

// Laplace expansion of det[X(s), X'(s), X(t), X'(t)] along the first two columns
STPoly four_point_det(const std::vector<Poly>& x, const std::vector<Poly>* v) {
    STPoly D;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int k = -1, l = -1;
            for (int r = 0; r < 4; ++r)
                if (r != i && r != j) (k < 0 ? k : l) = r;
            Rat sign = (i + j + 1) % 2 == 0 ? 1 : -1;
            if (!v) {
                D += sign * STPoly::outer(wronskian(x[i], x[j]), wronskian(x[k], x[l]));
            } else {
                Poly Nij = x[j].derivative() * (*v)[i] - x[i].derivative() * (*v)[j];
                Poly Nkl = x[l].derivative() * (*v)[k] - x[k].derivative() * (*v)[l];
                D += sign * STPoly::outer(Nij, wronskian(x[k], x[l]));
                D += sign * STPoly::outer(wronskian(x[i], x[j]), Nkl);
            }
        }
    return D;
}

BiPoly reduce_fourth(STPoly D) {
    for (int k = 0; k < 4; ++k) D = D.div_s_minus_t();
    return D.to_e1e2();
}

cplx ceval(const Poly& p, cplx t) {
    cplx r = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + to_double(*it);
    return r;
}

// chart coordinates (x, y, z, h) of the curve after the projection matrix
std::vector<Poly> projected_coordinates(const RationalCurveMap& chart_curve, const std::vector<std::vector<Rat>>& A) {
    std::vector<Poly> y(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (A[i][j] != 0) y[i] += chart_curve.coords[j] * A[i][j];
    return y;
}

struct Branch {
    cplx x, y, h, dx, dy;
};

Branch branch_at(const std::vector<Poly>& y, cplx t) {
    cplx X = ceval(y[0], t), Y = ceval(y[1], t), Z = ceval(y[2], t), H = ceval(y[3], t);
    cplx dX = ceval(y[0].derivative(), t), dY = ceval(y[1].derivative(), t), dZ = ceval(y[2].derivative(), t);
    Branch b;
    b.x = X / Z;
    b.y = Y / Z;
    b.h = H / Z;
    b.dx = (dX * Z - X * dZ) / (Z * Z);
    b.dy = (dY * Z - Y * dZ) / (Z * Z);
    return b;
}

int double_sign(double v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    throw DegenerateCrossing("numerical sign check hit zero");
}

}  // namespace

int hyperbolic_sign(const std::array<Rat, 2>& o, const std::array<Rat, 2>& u) {
    int s = sgn(o[0] * u[1] - o[1] * u[0]);
    if (s == 0) throw DegenerateCrossing("tangent vectors are parallel");
    return s;
}

int hyperbolic_sign(const std::array<AlgReal, 2>& o, const std::array<AlgReal, 2>& u) {
    std::array<AlgReal, 4> v{o[0], o[1], u[0], u[1]};
    bool exact = true;
    for (const auto& a : v) exact = exact && a.is_rational();
    if (exact)
        return hyperbolic_sign(std::array<Rat, 2>{v[0].rational(), v[1].rational()},
                               std::array<Rat, 2>{v[2].rational(), v[3].rational()});
    Rat w(1, 1 << 10);
    for (int it = 0; it < 40; ++it) {
        int s = (v[0].interval() * v[3].interval() - v[1].interval() * v[2].interval()).sign();
        if (s != 0) return s;
        for (auto& a : v) a.refine_in_place(w);
        w /= 1 << 10;
    }
    throw DegenerateCrossing("tangent vectors are parallel");
}

BiPoly node_sign_polynomial(const RationalCurveMap& c) {
    if (c.coords.size() != 4) throw InvalidInput("node signs need a space curve");
    return reduce_fourth(four_point_det(c.coords, nullptr));
}

BiPoly node_sign_variation(const RationalCurveMap& c, const std::array<Rat, 4>& v) {
    if (c.coords.size() != 4) throw InvalidInput("node signs need a space curve");
    std::vector<Poly> vp;
    for (const auto& a : v) vp.push_back(Poly::constant(a));
    return reduce_fourth(four_point_det(c.coords, &vp));
}

int node_sign(const RationalCurveMap& space_curve, const NodeRecord& node) {
    if (node.kind == NodeKind::ComplexPairMember) return 0;
    if (!node.system) throw InvalidInput("node record without a node system");
    const NodeSystem& sys = *node.system;
    BiPoly S = node_sign_polynomial(apply_chart(space_curve, sys.chart));
    Poly val = S.subst_mod(sys.phi, sys.r);
    int s = node.chart_e1.sign_of(val);
    if (s == 0) throw DegenerateCrossing("node sign polynomial vanishes at a node (tangent branches)");
    return s;
}

int direct_hyperbolic_sign(const RationalCurveMap& space_curve, const Projection& pr, const NodeRecord& node) {
    if (node.kind != NodeKind::Hyperbolic) throw InvalidInput("direct_hyperbolic_sign needs a hyperbolic node");
    const NodeSystem& sys = *node.system;
    auto y = projected_coordinates(apply_chart(space_curve, sys.chart), pr.matrix);
    auto [a, b] = chart_parameters(node);
    Rat w(1, Int(1) << 60);
    Branch A = branch_at(y, to_double(refine(a, w).interval().mid()));
    Branch B = branch_at(y, to_double(refine(b, w).interval().mid()));
    const Branch& over = A.h.real() > B.h.real() ? A : B;
    const Branch& under = A.h.real() > B.h.real() ? B : A;
    return double_sign(over.dx.real() * under.dy.real() - over.dy.real() * under.dx.real());
}

int direct_elliptic_sign(const RationalCurveMap& space_curve, const Projection& pr, const NodeRecord& node) {
    if (node.kind != NodeKind::Elliptic) throw InvalidInput("direct_elliptic_sign needs an elliptic node");
    const NodeSystem& sys = *node.system;
    auto y = projected_coordinates(apply_chart(space_curve, sys.chart), pr.matrix);
    Rat w(1, Int(1) << 60);
    AlgReal al = refine(node.chart_e1, w);
    double e1 = to_double(al.interval().mid());
    double e2 = to_double(AlgExpr(al, sys.phi).enclose(w).mid());
    double disc = 4 * e2 - e1 * e1;
    if (disc <= 0) throw InternalInconsistency("elliptic node with real parameters");
    cplx t0(e1 / 2, std::sqrt(disc) / 2);
    Branch b = branch_at(y, t0);
    if (b.h.imag() == 0) throw InternalInconsistency("conjugate branch point with real height");
    if (b.h.imag() < 0) b = branch_at(y, std::conj(t0));
    return kEllipticCalibration * double_sign((std::conj(b.dx) * b.dy).imag());
}

int elliptic_sign(const RationalCurveMap& space_curve, const ProjPoint& p, const NodeRecord& node) {
    if (node.kind != NodeKind::Elliptic) throw InvalidInput("elliptic_sign needs an elliptic node");
    (void)p;
    return node_sign(space_curve, node);
}

ViroReport viro_w(const RationalCurveMap& space_curve, std::optional<ProjPoint> p, uint64_t seed) {
    if (space_curve.coords.size() != 4) throw InvalidInput("viro_w needs a space curve");
    ViroReport rep;
    if (p) {
        std::string why;
        if (!is_generic_projection(space_curve, *p, &why)) throw GenericityFailure("projection point not generic: " + why);
        rep.projection_point = *p;
    } else {
        rep.projection_point = find_generic_projection(space_curve, seed);
    }
    Projection pr = project(space_curve, rep.projection_point);
    rep.chart = pr.matrix;
    NodeAnalysis a = analyze_nodes(pr.curve);
    for (const auto& n : a.nodes) {
        if (n.kind == NodeKind::ComplexPairMember) continue;
        int s = node_sign(space_curve, n);
        NodeRecord r = n;
        r.sign = s;
        rep.node_signs.push_back({r, s});
        rep.w += s;
    }
    // a rational curve has one real component and its parameter orientation is complex
    rep.lambda = Rat(0);
    rep.w_lambda = Rat(rep.w);
    return rep;
}

Rat index_i_M(const VirtualDiagram& d, int component, const PolylineLocation& loc) {
    auto u = location_point(d, component, loc);
    return polyline_index(d, component, u, loc.segment);
}

DiagramWrithe diagram_writhe(const VirtualDiagram& d, int c, std::optional<int> c_lambda) {
    d.validate();
    if (c < -1 || c > 1) throw InvalidInput("c must be -1, 0 or +1");
    DiagramWrithe out;
    Rat w = 0, wl = 0;
    bool lambda_ok = true;
    for (int id : d.crossing_ids()) {
        auto it = d.crossing_sign.find(id);
        if (it == d.crossing_sign.end()) throw MissingSignData("crossing " + std::to_string(id) + " has no sign");
        if (d.crossing_same_component(id)) w += it->second;
        wl += it->second;
    }
    for (const auto& s : d.solitary) {
        w += s.sign;
        wl += s.sign;
    }
    for (int k = 0; k < static_cast<int>(d.components.size()); ++k)
        for (int i = 0; i < static_cast<int>(d.components[k].size()); ++i) {
            if (d.components[k][i].kind != EventKind::Pole) continue;
            auto im = pole_index(d, k, i);
            if (!im) throw MissingSignData("pole " + std::to_string(d.components[k][i].id) + " has no index");
            w += 2 * *im;
            auto irc = pole_index_rc(d, k, i);
            if (irc) wl += 2 * *irc;
            else lambda_ok = false;
        }
    w += c;
    std::optional<int> cl = c_lambda ? c_lambda : d.c_lambda;
    if (!cl) lambda_ok = false;
    out.w = w;
    if (lambda_ok) out.w_lambda = wl + *cl;
    return out;
}

int viro_w_from_diagram(const VirtualDiagram& d, int c) {
    Rat w = diagram_writhe(d, c).w;
    if (w.get_den() != 1) throw InternalInconsistency("diagram writhe is not an integer: " + to_string(w));
    return static_cast<int>(w.get_num().get_si());
}

Rat linking_lambda(const VirtualDiagram& d, const OrientationData& o) {
    int n = static_cast<int>(d.components.size());
    if (n < 2) throw InvalidInput("linking needs at least two components");
    if (!o.signs.empty() && static_cast<int>(o.signs.size()) != n)
        throw InvalidInput("one orientation sign per component required");
    Rat lam = 0;
    for (int id : d.crossing_ids()) {
        auto occ = d.occurrences(id);
        if (occ[0].first == occ[1].first) continue;
        auto it = d.crossing_sign.find(id);
        if (it == d.crossing_sign.end()) throw MissingSignData("crossing " + std::to_string(id) + " has no sign");
        int f = o.signs.empty() ? 1 : o.signs[occ[0].first] * o.signs[occ[1].first];
        lam += it->second * f;
    }
    return lam;
}

}  // namespace realknot
