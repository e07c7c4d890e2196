#include "realknot/lift.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "realknot/errors.hpp"
#include "realknot/viro.hpp"

namespace realknot {

namespace {

// p of formal degree deg under t = (a tau + b) / (c tau + d), homogenized
Poly homog_compose(const Poly& p, int deg, const Mobius& m) {
    Poly num{m.b, m.a}, den{m.d, m.c}, out;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) out += pow(num, k) * pow(den, deg - k) * p.coeff(k);
    return out;
}

BiPoly st_to_bipoly(const STPoly& a) { return BiPoly(a.swapped().coeffs()); }

BiPoly dx(const BiPoly& b) {
    std::vector<Poly> c;
    for (const auto& p : b.coeffs()) c.push_back(p.derivative());
    return BiPoly(c);
}

Poly x_lead_in_y(const BiPoly& b, int dxdeg) {
    std::vector<Rat> v;
    for (const auto& p : b.coeffs()) v.push_back(p.coeff(dxdeg));
    return Poly(v);
}

std::string pair_str(const AlgPair& p) { return "{e1 = " + p.e1.str() + ", e2 = " + p.e2.str() + "}"; }

RationalCurveMap framed(const RationalCurveMap& base, const std::vector<std::vector<Rat>>& F) {
    std::vector<Poly> y(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (F[i][j] != 0) y[i] += base.coords[j] * F[i][j];
    return RationalCurveMap(2, y);
}

// Twice the winding index (line passes) of the base around each real pole, in
// the (x/z, y/z) chart; index 0 is the smaller root of p.
std::optional<std::array<int, 2>> pole_passes(const RationalCurveMap& base, const Poly& p, std::mt19937_64& rng) {
    int delta = base.degree();
    BiPoly F = st_to_bipoly(coordinate_minor(base, 0, 2).div_s_minus_t());
    BiPoly G = st_to_bipoly(coordinate_minor(base, 1, 2).div_s_minus_t());
    BiPoly W = F * dx(G) - G * dx(F);
    Poly dp = p.derivative();
    int small_sign = -sgn(p.lead());
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int attempt = 0; attempt < 40; ++attempt) {
        int al = attempt == 0 ? 0 : dist(rng), be = attempt == 0 ? 1 : dist(rng);
        if (al == 0 && be == 0) continue;
        BiPoly R = Rat(be) * F - Rat(al) * G;
        if (R.is_zero() || R.degree_x() != delta - 1) continue;
        if (gcd(x_lead_in_y(R, delta - 1), p).degree() > 0) continue;
        ShapeSolution sol;
        if (shape_solve(R, BiPoly::from_y(p), {}, sol) != ShapeStatus::Ok) continue;
        std::array<int, 2> n{0, 0};
        bool ok = true;
        if (sol.r.degree() > 0) {
            Poly wv = W.subst_mod(sol.phi, sol.r);
            Poly pv = BiPoly::from_y(dp).subst_mod(sol.phi, sol.r);
            for (const auto& t : real_roots(sol.r)) {
                int sw = t.sign_of(wv), sp = t.sign_of(pv);
                if (sw == 0 || sp == 0) {
                    ok = false;
                    break;
                }
                n[sp == small_sign ? 0 : 1] += sw;
            }
        }
        if (ok) return n;
    }
    return std::nullopt;
}

std::vector<std::vector<Rat>> random_frame(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    for (;;) {
        std::vector<std::vector<Rat>> F(3, std::vector<Rat>(3));
        for (auto& row : F)
            for (auto& x : row) x = dist(rng);
        if (determinant(F) > 0) return F;
    }
}

std::vector<std::vector<Rat>> identity(int n) {
    std::vector<std::vector<Rat>> F(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) F[i][i] = 1;
    return F;
}

}  // namespace

RationalCurveMap lift(const LiftSpec& spec) {
    if (spec.base.coords.size() != 3) throw InvalidInput("lift base must be a planar curve");
    int delta = spec.base.degree();
    if (delta < 1) throw InvalidInput("lift base must have positive degree");
    Poly g;
    for (const auto& c : spec.base.coords) g = gcd(g, c);
    if (g.degree() > 0) throw InvalidInput("lift base coordinates share a factor");
    if (spec.p.degree() != 2) throw InvalidInput("p must be quadratic");
    if (discriminant(spec.p) == 0) throw InvalidInput("p must have distinct roots");
    if (spec.u.degree() != delta + 2) throw InvalidInput("u must have degree deg(base) + 2");
    if (gcd(spec.u, spec.p).degree() > 0) throw InvalidInput("u and p share a root");
    std::vector<Poly> c;
    for (const auto& x : spec.base.coords) c.push_back(x * spec.p);
    c.push_back(spec.u);
    RationalCurveMap K(3, c);
    if (!immersed(K)) throw LiftSingular("lift has a cusp");
    NodeAnalysis a = analyze_nodes(K);
    if (a.multiple_cover) throw LiftSingular("lift is not birational onto its image");
    if (a.cusp || a.triple_point || a.tangential) throw LiftSingular("lift has a non-nodal singularity");
    Rat e1 = -spec.p.coeff(1) / spec.p.coeff(2), e2 = spec.p.coeff(0) / spec.p.coeff(2);
    for (const auto& n : a.nodes) {
        if (n.kind == NodeKind::ComplexPairMember) throw LiftSingular("lift has non-real double points");
        auto x1 = n.pair.e1.exact(), x2 = n.pair.e2.exact();
        if (n.at_infinity || !x1 || !x2 || *x1 != e1 || *x2 != e2)
            throw LiftSingular("extra double point at " + pair_str(n.pair));
    }
    if (a.total() != 1) throw LiftSingular("lift does not have exactly one double point");
    return K;
}

NodeRecord lift_node(const RationalCurveMap& lifted, uint64_t seed) {
    NodeAnalysis a = analyze_nodes(lifted, seed);
    for (const auto& n : a.nodes) {
        if (n.kind == NodeKind::ComplexPairMember || n.image.size() != 4) continue;
        bool at_p = true;
        for (int i = 0; i < 4 && at_p; ++i) {
            auto v = n.image[i].exact();
            at_p = v && *v == (i == 3 ? 1 : 0);
        }
        if (at_p) return n;
    }
    throw LiftSingular("no double point at (0:0:0:1)");
}

VirtualDiagram lift_diagram(const LiftSpec& spec, uint64_t seed) {
    lift(spec);
    int delta = spec.base.degree();
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 31);
    std::uniform_int_distribution<int> md(-4, 4);
    for (int attempt = 0; attempt < 40; ++attempt) {
        Mobius m;
        auto F = identity(3);
        if (attempt > 0) {
            do m = Mobius{md(rng), md(rng), md(rng), md(rng)};
            while (m.det() <= 0);
            if (attempt % 2 == 0) F = random_frame(rng);
        }
        std::vector<Poly> bc;
        for (const auto& x : spec.base.coords) bc.push_back(homog_compose(x, delta, m));
        RationalCurveMap base = framed(RationalCurveMap(2, bc), F);
        Poly p = homog_compose(spec.p, 2, m), u = homog_compose(spec.u, delta + 2, m);
        if (p.degree() != 2 || base.degree() != delta) continue;
        NodeAnalysis a = analyze_nodes(base, seed);
        if (a.multiple_cover || a.cusp || a.triple_point || a.tangential)
            throw NonNodalError("lift base is not a nodal curve");
        if (!a.system || !a.system->chart.is_identity()) continue;
        const Poly& z = base.coords[2];
        if (gcd(z, p).degree() > 0) continue;
        std::vector<Poly> lc;
        for (const auto& x : base.coords) lc.push_back(x * p);
        lc.push_back(u);
        RationalCurveMap L(3, lc);

        const NodeSystem& sys = *a.system;
        if (gcd(sys.param_poly, p).degree() > 0) throw LiftSingular("a pole is also a parameter of a base node");
        Poly q32 = coordinate_minor(L, 3, 2).div_s_minus_t().to_e1e2().subst_mod(sys.phi, sys.r);
        Poly s22 = coordinate_sym(L, 2, 2).to_e1e2().subst_mod(sys.phi, sys.r);
        Poly ta = base.coords[0].derivative() * z - base.coords[0] * z.derivative();
        Poly tb = base.coords[1].derivative() * z - base.coords[1] * z.derivative();
        Poly tq = (STPoly::outer(ta, tb) - STPoly::outer(tb, ta)).div_s_minus_t().to_e1e2().subst_mod(sys.phi, sys.r);

        struct Ev {
            AlgReal at;
            Event e;
        };
        std::vector<Ev> evs;
        VirtualDiagram d;
        bool degenerate = false;
        int next_crossing = 1, next_solitary = 1;
        for (const auto& n : a.nodes) {
            if (n.kind == NodeKind::ComplexPairMember) continue;
            int sigma = node_sign(L, n);
            if (n.kind == NodeKind::Elliptic) {
                d.solitary.push_back({"e" + std::to_string(next_solitary++), sigma});
                continue;
            }
            int sq = n.chart_e1.sign_of(q32), ss = n.chart_e1.sign_of(s22), st = n.chart_e1.sign_of(tq);
            if (sq == 0 || ss == 0 || st == 0) {
                degenerate = true;
                break;
            }
            bool big_over = sq * ss > 0;
            int direct = big_over ? st : -st;
            if (direct != sigma) throw InternalInconsistency("crossing sign disagrees with the over/under determinant");
            auto [small, big] = chart_parameters(n);
            int id = next_crossing++;
            evs.push_back({small, Event::crossing(id, big_over ? Role::Under : Role::Over)});
            evs.push_back({big, Event::crossing(id, big_over ? Role::Over : Role::Under)});
            d.crossing_sign[id] = sigma;
        }
        if (degenerate) continue;
        auto poles = real_roots(p);
        if (!poles.empty()) {
            auto passes = pole_passes(base, p, rng);
            if (!passes) continue;
            Poly side_poly = u * z * p.derivative();
            for (int k = 0; k < 2; ++k) {
                int s = poles[k].sign_of(side_poly);
                if (s == 0) throw InternalInconsistency("pole side undetermined");
                Event e = Event::pole(k + 1, s < 0 ? HighSide::Before : HighSide::After);
                Rat ind((*passes)[k], 2);
                ind.canonicalize();
                e.index = s < 0 ? ind : Rat(-ind);
                e.index_rc = e.index;
                evs.push_back({poles[k], e});
            }
        }
        std::sort(evs.begin(), evs.end(), [](const Ev& x, const Ev& y) { return compare(x.at, y.at) < 0; });
        for (size_t i = 0; i + 1 < evs.size(); ++i)
            if (compare(evs[i].at, evs[i + 1].at) == 0) throw LiftSingular("pole coincides with a node parameter");
        d.components.emplace_back();
        for (auto& e : evs) d.components[0].push_back(e.e);
        d.comp_class = {delta % 2};
        d.validate();
        return d;
    }
    throw GenericityFailure("no admissible chart for the lift diagram");
}

ResolutionReport resolve_node_report(const RationalCurveMap& curve, const NodeRecord& node, int sign, uint64_t seed) {
    if (sign != 1 && sign != -1) throw InvalidInput("resolution sign must be +1 or -1");
    if (curve.coords.size() != 4) throw InvalidInput("resolve_node needs a space curve");
    if (node.kind == NodeKind::ComplexPairMember) throw InvalidInput("node is not real");
    if (!node.transverse) throw InvalidInput("node branches are tangent");
    if (node.at_infinity) throw ResolutionFailure("node through parameter infinity; reparametrize first");
    auto e1 = node.pair.e1.exact(), e2 = node.pair.e2.exact();
    if (!e1 || !e2) throw ResolutionFailure("node parameters are not rational");
    std::array<Rat, 4> q;
    for (int i = 0; i < 4; ++i) {
        auto v = node.image.at(i).exact();
        if (!v) throw ResolutionFailure("node image is not rational");
        q[i] = *v;
    }
    int k = -1;
    for (int i = 3; i >= 0 && k < 0; --i)
        if (q[i] != 0) k = i;
    std::vector<std::vector<Rat>> M(4, std::vector<Rat>(4));
    int col = 0;
    for (int i = 0; i < 4; ++i)
        if (i != k) M[i][col++] = 1;
    for (int i = 0; i < 4; ++i) M[i][3] = q[i];
    if (determinant(M) < 0)
        for (int i = 0; i < 4; ++i) M[i][3] = -M[i][3];
    auto T = inverse(M);
    auto apply = [](const std::vector<std::vector<Rat>>& A, const std::vector<Poly>& x) {
        std::vector<Poly> y(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (A[i][j] != 0) y[i] += x[j] * A[i][j];
        return y;
    };
    RationalCurveMap X(3, apply(T, curve.coords));
    Poly pq{*e2, -*e1, 1};
    for (int i = 0; i < 3; ++i)
        if (!(X.coords[i] % pq).is_zero()) throw InternalInconsistency("node frame does not vanish at the node");
    static const int dirs[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, -1, 1}, {2, 1, -1}, {1, 2, 3}, {-3, 1, 2}};
    for (const auto& v : dirs) {
        Rat d1 = node_sign_variation(X, {v[0], v[1], v[2], 0}).eval(*e1, *e2);
        if (d1 == 0) continue;
        int eps_sign = sign * sgn(d1);
        Rat eps(eps_sign, 64);
        for (int h = 0; h <= 20; ++h, eps /= 2) {
            RationalCurveMap Xe = X;
            for (int i = 0; i < 3; ++i) Xe.coords[i] += Poly::constant(eps * v[i]);
            if (Xe.degree() != curve.degree() || !validate(Xe).smooth()) continue;
            // a posteriori: the crossing created next to the former node has the requested sign
            ProjPoint p0;
            try {
                p0 = find_generic_projection(Xe, seed, 20);
            } catch (const GenericityFailure&) {
                continue;
            }
            NodeAnalysis an = analyze_nodes(project(Xe, p0).curve);
            double best = 1e300, second = 1e300;
            int best_sign = 0;
            double E1 = to_double(*e1), E2 = to_double(*e2);
            for (const auto& n : an.nodes) {
                if (n.kind == NodeKind::ComplexPairMember) continue;
                double a1 = n.at_infinity ? 1e150 : n.pair.e1.approx(), a2 = n.at_infinity ? 1e150 : n.pair.e2.approx();
                double dist = std::hypot(a1 - E1, a2 - E2);
                if (dist < best) {
                    second = best;
                    best = dist;
                    best_sign = node_sign(Xe, n);
                } else if (dist < second) {
                    second = dist;
                }
            }
            if (best_sign != sign || !(best * 16 < second)) continue;
            ResolutionReport rep;
            rep.curve = RationalCurveMap(3, apply(M, Xe.coords));
            rep.epsilon = eps;
            rep.direction = {v[0], v[1], v[2]};
            rep.sign = sign;
            return rep;
        }
    }
    throw ResolutionFailure("no admissible perturbation within the epsilon budget");
}

RationalCurveMap resolve_node(const RationalCurveMap& curve, const NodeRecord& node, int sign, uint64_t seed) {
    return resolve_node_report(curve, node, sign, seed).curve;
}

RationalCurveMap trinodal_L(const std::vector<Rat>& t) {
    if (t.size() != 8) throw InvalidInput("trinodal_L needs eight parameters");
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (!(t[i] < t[i + 1])) throw InvalidInput("trinodal_L parameters must increase strictly");
    std::vector<Poly> p;
    for (const auto& x : t) p.push_back(Poly{-x, 1});
    auto P = [&](int i) { return p[i - 1]; };
    return RationalCurveMap(3, {P(1) * P(3) * P(5) * P(6) * P(7) * P(8), P(1) * P(2) * P(3) * P(4) * P(5) * P(7),
                                P(2) * P(4) * pow(P(6), 3) * P(8), P(1) * P(2) * P(4) * P(5) * P(6) * P(8)});
}

RationalCurveMap quadrinodal_from_chords(const ChordData& ch) {
    for (int i = 0; i < 4; ++i) {
        if (ch.q[i].degree() != 2) throw DegenerateInput("chord quadratics must have degree 2");
        if (discriminant(ch.q[i]) == 0) throw DegenerateInput("chord quadratic with a double root");
        for (int j = i + 1; j < 4; ++j)
            if (gcd(ch.q[i], ch.q[j]).degree() > 0) throw DegenerateInput("chord quadratics share a root");
    }
    const auto& q = ch.q;
    return RationalCurveMap(3, {q[1] * q[2] * q[3], q[0] * q[2] * q[3], q[0] * q[1] * q[3], q[0] * q[1] * q[2]});
}

}  // namespace realknot
