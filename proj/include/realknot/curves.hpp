#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "realknot/exact.hpp"

namespace realknot {

// Map from the parameter line to P^2 or P^3; coordinate i is coords[i](t),
// homogenized to the common degree.
struct RationalCurveMap {
    int ambient_dim = 3;
    std::vector<Poly> coords;

    RationalCurveMap() = default;
    RationalCurveMap(int dim, std::vector<Poly> c) : ambient_dim(dim), coords(std::move(c)) {}
    int degree() const;
    // coordinates of the image of t = infinity (coefficients of t^degree)
    std::vector<Rat> point_at_infinity() const;
    std::vector<Rat> eval(const Rat& t) const;
    // X(1/u) u^d, the curve seen from the other parameter chart
    RationalCurveMap reversed() const;
    RationalCurveMap mirrored(int coord = 0) const;
};

struct ProjPoint {
    std::array<Rat, 4> coords{};
    ProjPoint() = default;
    explicit ProjPoint(std::array<Rat, 4> c) : coords(std::move(c)) {}
    // first nonzero coordinate scaled to 1
    ProjPoint canonical() const;
    bool operator==(const ProjPoint& o) const;
};

// Orientation-preserving Moebius change t = (a tau + b) / (c tau + d), ad - bc > 0.
struct Mobius {
    Rat a = 1, b = 0, c = 0, d = 1;
    Rat det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

RationalCurveMap apply_chart(const RationalCurveMap& curve, const Mobius& m);

// Dense polynomial in two parameters: c[i] is the coefficient of s^i as a polynomial in t.
class STPoly {
public:
    STPoly() = default;
    explicit STPoly(std::vector<Poly> c);
    static STPoly outer(const Poly& fs, const Poly& gt);  // f(s) g(t)
    const std::vector<Poly>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    STPoly swapped() const;
    // exact quotient by (s - t)
    STPoly div_s_minus_t() const;
    // symmetric input rewritten in e1 = s + t (x) and e2 = s t (y)
    BiPoly to_e1e2() const;
    Rat eval(const Rat& s, const Rat& t) const;

    STPoly& operator+=(const STPoly& o);
    STPoly& operator-=(const STPoly& o);
    friend STPoly operator+(STPoly a, const STPoly& b) { return a += b; }
    friend STPoly operator-(STPoly a, const STPoly& b) { return a -= b; }
    friend STPoly operator*(const STPoly& a, const STPoly& b);
    friend STPoly operator*(const Rat& a, STPoly b);

private:
    void trim();
    std::vector<Poly> c_;
};

// m_ij(s,t) = X_i(s) X_j(t) - X_j(s) X_i(t)
STPoly coordinate_minor(const RationalCurveMap& c, int i, int j);
// X_i(s) X_j(t) + X_j(s) X_i(t)
STPoly coordinate_sym(const RationalCurveMap& c, int i, int j);

enum class NodeKind { Hyperbolic, Elliptic, ComplexPairMember };
std::string to_string(NodeKind k);

// Solution of the node system in one working chart: node pairs are
// {sigma, tau} with sigma + tau = x a root of r and sigma tau = phi(x).
struct NodeSystem {
    RationalCurveMap curve;     // input curve
    Mobius chart;
    RationalCurveMap chart_curve;  // curve composed with the chart
    Poly r;
    Poly phi;
    // Res_x(r, t^2 - x t + phi): its roots are all node parameters in the chart
    Poly param_poly;
    std::vector<AlgReal> param_roots;  // real roots of param_poly
};

struct NodeRecord {
    AlgPair pair;  // original parameter coordinates; unused for ComplexPairMember
    NodeKind kind = NodeKind::Hyperbolic;
    std::vector<AlgExpr> image;  // projective point, first nonzero entry 1
    std::optional<int> sign;
    bool transverse = true;
    // one parameter of the pair is t = infinity: then pair holds the
    // reversed parameters u = 1/t (one of which is 0)
    bool at_infinity = false;
    // chart data (real nodes)
    AlgReal chart_e1;
    std::shared_ptr<const NodeSystem> system;
    int family_size = 0;  // ComplexPairMember: number of conjugate pairs in the family

    Poly chart_e2_poly() const { return system ? system->phi : Poly(); }
    int multiplicity() const { return kind == NodeKind::ComplexPairMember ? 2 : 1; }
};

struct NodeAnalysis {
    std::shared_ptr<const NodeSystem> system;
    std::vector<NodeRecord> nodes;
    int complex_nodes = 0;   // count of non-real pairs (each conjugate family counts 2)
    int total() const;       // over the complex numbers
    bool triple_point = false;
    bool tangential = false;
    bool cusp = false;
    bool multiple_cover = false;
};

// Solves for all double points; never throws on non-nodal input (flags instead).
NodeAnalysis analyze_nodes(const RationalCurveMap& curve, uint64_t seed = 1);
// Checked version: NonNodalError on triple points, tacnodes and cusps of planar curves.
std::vector<NodeRecord> nodes(const RationalCurveMap& curve, uint64_t seed = 1);

// The two parameters of a hyperbolic node in chart coordinates, ascending.
std::pair<AlgReal, AlgReal> chart_parameters(const NodeRecord& n);

struct ValidationReport {
    int degree = 0;
    bool primitive = true;
    bool nondegenerate = true;
    bool immersed = true;
    bool injective = true;
    std::vector<std::string> immersion_failures;
    std::vector<std::string> messages;
    bool smooth() const { return primitive && nondegenerate && immersed && injective; }
};

ValidationReport validate(const RationalCurveMap& curve);
// gcd of X_i X_j' - X_j X_i' (affine part only)
Poly wronskian_gcd(const RationalCurveMap& curve);
bool immersed(const RationalCurveMap& curve);

struct Projection {
    RationalCurveMap curve;                // planar, primitive
    std::vector<std::vector<Rat>> matrix;  // 4x4, det > 0, maps p to (0:0:0:1)
    bool node_projection = false;
    bool smooth_point_projection = false;
    int degree_drop = 0;
};

// Throws ProjectionError when p is a smooth point of the curve unless
// allow_smooth_point is set (the degree then drops by one).
Projection project(const RationalCurveMap& curve, const ProjPoint& p, bool allow_smooth_point = false);
bool on_curve(const RationalCurveMap& curve, const ProjPoint& p);
bool is_generic_projection(const RationalCurveMap& curve, const ProjPoint& p,
                           std::string* reason = nullptr);

// Seeded grid of rational points of growing height.
ProjPoint grid_point(uint64_t seed, int index);
// First generic grid point, trying at most budget points.
ProjPoint find_generic_projection(const RationalCurveMap& curve, uint64_t seed, int budget = 40);
uint64_t default_seed();

}  // namespace realknot
