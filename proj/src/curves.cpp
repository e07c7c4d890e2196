#include "realknot/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "realknot/errors.hpp"

namespace realknot {

// ---------------------------------------------------------------- basic curve data

int RationalCurveMap::degree() const {
    int d = 0;
    for (const auto& c : coords) d = std::max(d, c.degree());
    return d;
}

std::vector<Rat> RationalCurveMap::point_at_infinity() const {
    int d = degree();
    std::vector<Rat> v;
    for (const auto& c : coords) v.push_back(c.coeff(d));
    return v;
}

std::vector<Rat> RationalCurveMap::eval(const Rat& t) const {
    std::vector<Rat> v;
    for (const auto& c : coords) v.push_back(c.eval(t));
    return v;
}

RationalCurveMap RationalCurveMap::reversed() const {
    int d = degree();
    RationalCurveMap r = *this;
    for (auto& c : r.coords) c = c.reverse(d);
    return r;
}

RationalCurveMap RationalCurveMap::mirrored(int coord) const {
    RationalCurveMap r = *this;
    r.coords.at(coord) = -r.coords.at(coord);
    return r;
}

ProjPoint ProjPoint::canonical() const {
    ProjPoint p = *this;
    for (const auto& c : coords) {
        if (c != 0) {
            Rat f = c;
            for (auto& x : p.coords) x /= f;
            return p;
        }
    }
    throw InvalidInput("projective point with all coordinates zero");
}

bool ProjPoint::operator==(const ProjPoint& o) const { return canonical().coords == o.canonical().coords; }

RationalCurveMap apply_chart(const RationalCurveMap& curve, const Mobius& m) {
    if (m.is_identity()) return curve;
    if (m.det() == 0) throw InvalidInput("singular parameter chart");
    int d = curve.degree();
    Poly num{m.b, m.a}, den{m.d, m.c};
    std::vector<Poly> np(d + 1), dp(d + 1);
    np[0] = dp[0] = Poly::constant(1);
    for (int k = 1; k <= d; ++k) {
        np[k] = np[k - 1] * num;
        dp[k] = dp[k - 1] * den;
    }
    RationalCurveMap out = curve;
    for (auto& c : out.coords) {
        Poly r;
        for (int k = 0; k <= c.degree(); ++k)
            if (c.coeff(k) != 0) r += np[k] * dp[d - k] * c.coeff(k);
        c = r;
    }
    return out;
}

// ---------------------------------------------------------------- STPoly

STPoly::STPoly(std::vector<Poly> c) : c_(std::move(c)) { trim(); }

void STPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

STPoly STPoly::outer(const Poly& fs, const Poly& gt) {
    std::vector<Poly> c;
    for (const auto& a : fs.coeffs()) c.push_back(gt * a);
    return STPoly(std::move(c));
}

STPoly STPoly::swapped() const {
    int dt = -1;
    for (const auto& p : c_) dt = std::max(dt, p.degree());
    std::vector<Poly> out;
    for (int j = 0; j <= dt; ++j) {
        std::vector<Rat> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].coeff(j);
        out.emplace_back(std::move(v));
    }
    return STPoly(std::move(out));
}

STPoly STPoly::div_s_minus_t() const {
    if (c_.empty()) return {};
    size_t n = c_.size() - 1;
    if (n == 0) throw InternalInconsistency("STPoly not divisible by s - t");
    std::vector<Poly> q(n);
    Poly t = Poly::x();
    q[n - 1] = c_[n];
    for (size_t k = n - 1; k >= 1; --k) q[k - 1] = c_[k] + t * q[k];
    if (!(c_[0] + t * q[0]).is_zero()) throw InternalInconsistency("STPoly not divisible by s - t");
    return STPoly(std::move(q));
}

BiPoly STPoly::to_e1e2() const {
    int ds = static_cast<int>(c_.size()) - 1;
    if (ds < 0) return {};
    int dt = -1;
    for (const auto& p : c_) dt = std::max(dt, p.degree());
    int n = std::max(ds, dt);
    std::vector<std::vector<Rat>> a(n + 1, std::vector<Rat>(n + 1));
    for (int i = 0; i <= ds; ++i)
        for (int j = 0; j <= c_[i].degree(); ++j) a[i][j] = c_[i].coeff(j);
    std::vector<std::vector<Rat>> out(n + 1, std::vector<Rat>(n + 1));  // out[e1 power][e2 power]
    // binomial table
    std::vector<std::vector<Int>> binom(n + 1, std::vector<Int>(n + 1));
    for (int k = 0; k <= n; ++k) {
        binom[k][0] = 1;
        for (int l = 1; l <= k; ++l) binom[k][l] = binom[k - 1][l - 1] + (l < k ? binom[k - 1][l] : Int(0));
    }
    for (int i = n; i >= 0; --i) {
        for (int j = i; j >= 0; --j) {
            if (a[i][j] == 0) continue;
            Rat c = a[i][j];
            int k = i - j;
            out[k][j] += c;
            // subtract c (s+t)^k (st)^j
            for (int l = 0; l <= k; ++l) a[l + j][k - l + j] -= c * Rat(binom[k][l]);
        }
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (a[i][j] != 0) throw InternalInconsistency("STPoly::to_e1e2 on non-symmetric input");
    std::vector<Poly> ys;
    for (int e2 = 0; e2 <= n; ++e2) {
        std::vector<Rat> v(n + 1);
        for (int e1 = 0; e1 <= n; ++e1) v[e1] = out[e1][e2];
        ys.emplace_back(std::move(v));
    }
    return BiPoly(std::move(ys));
}

Rat STPoly::eval(const Rat& s, const Rat& t) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + it->eval(t);
    return r;
}

STPoly& STPoly::operator+=(const STPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

STPoly& STPoly::operator-=(const STPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

STPoly operator*(const STPoly& a, const STPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return STPoly(std::move(r));
}

STPoly operator*(const Rat& a, STPoly b) {
    for (auto& p : b.c_) p *= a;
    b.trim();
    return b;
}

STPoly coordinate_minor(const RationalCurveMap& c, int i, int j) {
    return STPoly::outer(c.coords[i], c.coords[j]) - STPoly::outer(c.coords[j], c.coords[i]);
}

STPoly coordinate_sym(const RationalCurveMap& c, int i, int j) {
    return STPoly::outer(c.coords[i], c.coords[j]) + STPoly::outer(c.coords[j], c.coords[i]);
}

std::string to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Hyperbolic: return "hyperbolic";
        case NodeKind::Elliptic: return "elliptic";
        case NodeKind::ComplexPairMember: return "complex-pair";
    }
    return "?";
}

// ---------------------------------------------------------------- node solving

namespace {

// gcd over pairs of c_i X_j - c_j X_i for a fixed point c
Poly preimage_gcd(const RationalCurveMap& x, const std::vector<Rat>& c) {
    Poly g;
    int n = static_cast<int>(x.coords.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g = gcd(g, x.coords[j] * c[i] - x.coords[i] * c[j]);
    return g;
}

// true when the point at parameter infinity has no second preimage
bool infinity_is_simple(const RationalCurveMap& x) {
    Poly g = preimage_gcd(x, x.point_at_infinity());
    return g.is_zero() ? false : g.degree() == 0;
}

bool birational(const RationalCurveMap& x) {
    int n = static_cast<int>(x.coords.size());
    std::vector<STPoly> q;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) q.push_back(coordinate_minor(x, i, j));
    // for a generic s0 the only t with X(t) ~ X(s0) is t = s0
    for (int s0 : {3, -7, 11, 17}) {
        Poly g;
        for (const auto& m : q) {
            // evaluate at s = s0 as a polynomial in t
            Poly acc;
            const auto& c = m.coeffs();
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * Rat(s0) + *it;
            g = gcd(g, acc);
        }
        if (g.is_zero()) continue;
        if (g.degree() <= 1) return true;
    }
    return false;
}

Poly compute_param_poly(const Poly& r, const Poly& phi) {
    int n = r.degree();
    if (n <= 0) return Poly::constant(1);
    int formal = std::max(1, phi.degree());
    std::vector<Rat> xs, ys;
    for (long i = 0; static_cast<int>(xs.size()) < 2 * n + 1; ++i) {
        Rat t(i % 2 ? -(i + 1) / 2 : i / 2);
        Poly h = phi + Poly{Rat(t * t), Rat(-t)};
        if (h.degree() != formal) continue;
        xs.push_back(t);
        ys.push_back(resultant(r, h));
    }
    return interpolate(xs, ys);
}

Mobius chart_for_attempt(int attempt, std::mt19937_64& rng) {
    if (attempt == 0) return {};
    if (attempt == 1) return {0, -1, 1, 0};  // t = -1/tau
    std::uniform_int_distribution<int> dist(-4, 4);
    for (;;) {
        Mobius m{dist(rng), dist(rng), dist(rng), dist(rng)};
        if (m.det() > 0 && m.c != 0) return m;
    }
}

}  // namespace

int NodeAnalysis::total() const {
    int n = 0;
    for (const auto& r : nodes)
        if (r.kind != NodeKind::ComplexPairMember) ++n;
    return n + complex_nodes;
}

NodeAnalysis analyze_nodes(const RationalCurveMap& curve, uint64_t seed) {
    NodeAnalysis out;
    int d = curve.degree();
    int n = static_cast<int>(curve.coords.size());
    auto sys = std::make_shared<NodeSystem>();
    sys->curve = curve;
    if (d <= 1) {
        sys->chart_curve = curve;
        sys->r = Poly::constant(1);
        sys->param_poly = Poly::constant(1);
        out.system = sys;
        return out;
    }
    if (!birational(curve)) {
        out.multiple_cover = true;
        out.system = sys;
        return out;
    }
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    std::uniform_int_distribution<int> coef(-7, 7);
    ShapeSolution sol;
    bool solved = false;
    int common_factor_hits = 0;
    for (int attempt = 0; attempt < 24 && !solved; ++attempt) {
        Mobius m = chart_for_attempt(attempt, rng);
        RationalCurveMap xc = apply_chart(curve, m);
        if (xc.degree() != d || !infinity_is_simple(xc)) continue;
        std::vector<BiPoly> q;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                STPoly mij = coordinate_minor(xc, i, j);
                if (mij.is_zero()) continue;
                q.push_back(mij.div_s_minus_t().to_e1e2());
            }
        auto combo = [&]() {
            BiPoly f;
            for (const auto& p : q) {
                int c = coef(rng);
                if (c != 0) f += Rat(c) * p;
            }
            return f;
        };
        BiPoly F = combo(), G = combo(), F2 = combo(), G2 = combo();
        auto good = [&](const BiPoly& b) {
            return b.degree_y() == d - 1 && b.coeff(d - 1).degree() == 0;
        };
        if (!good(F) || !good(G) || !good(F2) || !good(G2)) continue;
        Poly pre = resultant_y(F2, G2);
        if (pre.is_zero()) {
            ++common_factor_hits;
            continue;
        }
        ShapeStatus st = shape_solve(F, G, q, sol, pre);
        if (st == ShapeStatus::CommonFactor) {
            ++common_factor_hits;
            continue;
        }
        if (st != ShapeStatus::Ok) continue;
        sys->chart = m;
        sys->chart_curve = xc;
        solved = true;
    }
    if (!solved) {
        if (common_factor_hits > 0) {
            out.multiple_cover = true;
            out.system = sys;
            return out;
        }
        throw InternalInconsistency("node system: no admissible working chart found");
    }
    sys->r = sol.r;
    sys->phi = sol.phi;
    const Poly& r = sys->r;
    const Poly& phi = sys->phi;
    const Mobius& m = sys->chart;
    if (r.degree() > 0) {
        sys->param_poly = compute_param_poly(r, phi);
        sys->param_roots = real_roots(sys->param_poly);
        Poly pp = sys->param_poly;
        if (gcd(pp, pp.derivative()).degree() > 0) out.triple_point = true;
    } else {
        sys->param_poly = Poly::constant(1);
    }

    // tangency test: T(s,t) = det[Y(s), Y'(s), Y'(t)] on a planar image
    Poly tang;
    if (r.degree() > 0) {
        RationalCurveMap y = sys->chart_curve;
        if (n == 4) {
            std::mt19937_64 prng(seed + 99);
            std::uniform_int_distribution<int> pd(-5, 5);
            std::vector<Poly> yc(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 4; ++j) yc[i] += y.coords[j] * Rat(pd(prng));
            y = RationalCurveMap(2, yc);
        }
        std::vector<Poly> Y = y.coords, Yd;
        for (auto& p : Y) Yd.push_back(p.derivative());
        STPoly T;
        int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        for (auto& c : cyc) {
            T += STPoly::outer(Y[c[0]] * Yd[c[1]], Yd[c[2]]);
            T -= STPoly::outer(Y[c[0]] * Yd[c[2]], Yd[c[1]]);
        }
        BiPoly Ts = (T * T.swapped()).to_e1e2();
        tang = Ts.subst_mod(phi, r);
        if (tang.is_zero() || gcd(r, tang).degree() > 0) out.tangential = true;
    }

    Poly x = Poly::x();
    Poly disc = (x * x - Rat(4) * phi) % r;
    Poly D = (phi * (m.c * m.c) + x * (m.c * m.d) + Poly::constant(m.d * m.d)) % r;
    Poly N1 = (phi * (2 * m.a * m.c) + x * (m.a * m.d + m.b * m.c) + Poly::constant(2 * m.b * m.d)) % r;
    Poly N2 = (phi * (m.a * m.a) + x * (m.a * m.b) + Poly::constant(m.b * m.b)) % r;
    std::vector<std::vector<Poly>> symv(n, std::vector<Poly>(n));
    std::vector<std::vector<bool>> have(n, std::vector<bool>(n, false));
    auto sym = [&](int i, int j) -> const Poly& {
        if (i > j) std::swap(i, j);
        if (!have[i][j]) {
            symv[i][j] = coordinate_sym(sys->chart_curve, i, j).to_e1e2().subst_mod(phi, r);
            have[i][j] = true;
        }
        return symv[i][j];
    };

    std::vector<AlgReal> roots = r.degree() > 0 ? real_roots(r) : std::vector<AlgReal>{};
    out.complex_nodes = std::max(0, r.degree() - static_cast<int>(roots.size()));
    for (const auto& alpha : roots) {
        NodeRecord rec;
        rec.system = sys;
        rec.chart_e1 = alpha;
        int ds = alpha.sign_of(disc);
        if (ds == 0) {
            out.cusp = true;
            continue;
        }
        rec.kind = ds > 0 ? NodeKind::Hyperbolic : NodeKind::Elliptic;
        if (alpha.sign_of(D) != 0) {
            rec.pair = make_alg_pair(AlgExpr(alpha, N1, D), AlgExpr(alpha, N2, D));
        } else {
            rec.at_infinity = true;
            Poly rn1 = (phi * (2 * m.c * m.a) + x * (m.c * m.b + m.d * m.a) + Poly::constant(2 * m.d * m.b)) % r;
            rec.pair = make_alg_pair(AlgExpr(alpha, rn1, N2), AlgExpr(alpha, Poly(), N2));
        }
        int j = -1;
        for (int k = 0; k < n && j < 0; ++k)
            if (alpha.sign_of(sym(k, k)) != 0) j = k;
        if (j < 0) throw InternalInconsistency("node image vanishes");
        std::vector<Poly> P(n);
        for (int i = 0; i < n; ++i) P[i] = sym(i, j);
        int k0 = -1;
        for (int i = 0; i < n && k0 < 0; ++i)
            if (alpha.sign_of(P[i]) != 0) k0 = i;
        for (int i = 0; i < n; ++i) rec.image.emplace_back(alpha, P[i], P[k0]);
        if (!tang.is_zero()) rec.transverse = alpha.sign_of(tang) != 0;
        else rec.transverse = false;
        out.nodes.push_back(std::move(rec));
    }
    for (int k = 0; k < out.complex_nodes / 2; ++k) {
        NodeRecord rec;
        rec.kind = NodeKind::ComplexPairMember;
        rec.system = sys;
        rec.family_size = out.complex_nodes / 2;
        out.nodes.push_back(std::move(rec));
    }
    out.system = sys;
    return out;
}

std::vector<NodeRecord> nodes(const RationalCurveMap& curve, uint64_t seed) {
    NodeAnalysis a = analyze_nodes(curve, seed);
    if (a.multiple_cover) throw NonNodalError("curve is not birational onto its image");
    if (curve.ambient_dim == 2 || curve.coords.size() == 3) {
        auto name = [&](const NodeRecord& n) {
            return n.kind == NodeKind::ComplexPairMember ? std::string("complex pair")
                                                         : "{e1 = " + n.pair.e1.str() + ", e2 = " + n.pair.e2.str() + "}";
        };
        if (a.cusp) throw NonNodalError("cusp: parameter pair with zero discriminant");
        if (a.triple_point) throw NonNodalError("triple point: a parameter occurs in two pairs");
        for (const auto& n : a.nodes)
            if (n.kind != NodeKind::ComplexPairMember && !n.transverse)
                throw NonNodalError("tacnode at pair " + name(n));
        if (a.tangential) throw NonNodalError("tacnode at a non-real pair");
        int d = curve.degree();
        if (a.total() != (d - 1) * (d - 2) / 2)
            throw NonNodalError("double point count differs from (d-1)(d-2)/2");
    }
    return a.nodes;
}

std::pair<AlgReal, AlgReal> chart_parameters(const NodeRecord& n) {
    if (n.kind != NodeKind::Hyperbolic || !n.system) throw InvalidInput("chart_parameters needs a hyperbolic node");
    const NodeSystem& sys = *n.system;
    const AlgReal& alpha = n.chart_e1;
    Poly x = Poly::x();
    AlgExpr disc(alpha, (x * x - Rat(4) * sys.phi) % sys.r);
    AlgExpr e1(alpha, x);
    std::vector<AlgReal> roots = sys.param_roots;
    Rat w(1, 16);
    for (;;) {
        Interval ie = e1.enclose(w), id = disc.enclose(w);
        if (id.lo < 0) id.lo = 0;
        Interval sq = isqrt(id, 40);
        Interval s = (ie - sq) * Interval::point(Rat(1, 2));
        Interval t = (ie + sq) * Interval::point(Rat(1, 2));
        int hs = 0, ht = 0;
        size_t is = 0, it = 0;
        for (size_t k = 0; k < roots.size(); ++k) {
            if (!roots[k].interval().disjoint(s)) {
                ++hs;
                is = k;
            }
            if (!roots[k].interval().disjoint(t)) {
                ++ht;
                it = k;
            }
        }
        if (hs == 1 && ht == 1 && is != it) return {roots[is], roots[it]};
        if (hs == 0 || ht == 0) throw InternalInconsistency("node parameters not among parameter roots");
        w /= 4;
        for (auto& r : roots) r.refine_in_place(w);
    }
}

// ---------------------------------------------------------------- validation

Poly wronskian_gcd(const RationalCurveMap& c) {
    Poly g;
    int n = static_cast<int>(c.coords.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g = gcd(g, c.coords[i] * c.coords[j].derivative() - c.coords[j] * c.coords[i].derivative());
    return g;
}

namespace {

bool immersed_at_zero(const RationalCurveMap& c) {
    int n = static_cast<int>(c.coords.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c.coords[i].coeff(0) * c.coords[j].coeff(1) - c.coords[j].coeff(0) * c.coords[i].coeff(1) != 0)
                return true;
    return false;
}

std::vector<std::vector<Rat>> coefficient_matrix(const RationalCurveMap& c) {
    int d = c.degree();
    std::vector<std::vector<Rat>> m;
    for (const auto& p : c.coords) {
        std::vector<Rat> row(d + 1);
        for (int k = 0; k <= d; ++k) row[k] = p.coeff(k);
        m.push_back(row);
    }
    return m;
}

}  // namespace

bool immersed(const RationalCurveMap& c) {
    Poly g = wronskian_gcd(c);
    if (g.is_zero() || g.degree() > 0) return false;
    return immersed_at_zero(c.reversed());
}

ValidationReport validate(const RationalCurveMap& curve) {
    ValidationReport rep;
    rep.degree = curve.degree();
    size_t want = curve.ambient_dim == 2 ? 3 : 4;
    if (curve.coords.size() != want) {
        rep.primitive = false;
        rep.messages.push_back("coordinate count does not match ambient dimension");
        return rep;
    }
    Poly g;
    for (const auto& c : curve.coords) g = gcd(g, c);
    if (g.is_zero()) {
        rep.primitive = false;
        rep.nondegenerate = false;
        rep.messages.push_back("all coordinates vanish");
        return rep;
    }
    if (g.degree() > 0) {
        rep.primitive = false;
        rep.messages.push_back("coordinates share the factor " + g.str());
    }
    if (rank(coefficient_matrix(curve)) < 2) {
        rep.nondegenerate = false;
        rep.messages.push_back("all coordinates are proportional: the image is a point");
        return rep;
    }
    Poly w = wronskian_gcd(curve);
    if (w.degree() > 0) {
        rep.immersed = false;
        for (const auto& r : real_roots(w)) rep.immersion_failures.push_back("t = " + r.str());
        int nonreal = squarefree(w).degree() - static_cast<int>(real_roots(w).size());
        if (nonreal > 0) rep.immersion_failures.push_back(std::to_string(nonreal) + " non-real parameters");
    }
    if (!immersed_at_zero(curve.reversed())) {
        rep.immersed = false;
        rep.immersion_failures.push_back("t = infinity");
    }
    if (!rep.immersed) rep.messages.push_back("derivative matrix drops rank");
    if (!rep.primitive) return rep;
    NodeAnalysis a = analyze_nodes(curve);
    if (a.multiple_cover) {
        rep.nondegenerate = false;
        rep.injective = false;
        rep.messages.push_back("map is not birational onto its image (multiple cover)");
    } else if (a.total() > 0) {
        rep.injective = false;
        rep.messages.push_back(std::to_string(a.total()) + " double points");
    }
    return rep;
}

// ---------------------------------------------------------------- projection

namespace {

Poly positive_content_normalize(std::vector<Poly>& coords) {
    Poly g;
    for (const auto& c : coords) g = gcd(g, c);
    if (g.is_zero()) throw ProjectionError("projection collapses the curve");
    for (auto& c : coords) c = c / g;
    // positive scalar to coprime integer coefficients
    Int den = 1, num = 0;
    for (const auto& c : coords)
        for (const auto& a : c.coeffs()) den = lcm(den, Int(a.get_den()));
    for (const auto& c : coords)
        for (const auto& a : c.coeffs()) num = gcd(num, Int(a.get_num() * (den / a.get_den())));
    Rat f(den, num);
    f.canonicalize();
    for (auto& c : coords) c *= f;
    return g;
}

int preimage_count(const RationalCurveMap& curve, const ProjPoint& p) {
    std::vector<Rat> pc(p.coords.begin(), p.coords.end());
    Poly h = preimage_gcd(curve, pc);
    int count = 0;
    if (h.is_zero()) return 1 << 20;
    if (h.degree() > 0) count += squarefree(h).degree();
    // parameter infinity
    auto inf = curve.point_at_infinity();
    bool prop = true;
    for (int i = 0; i < 4 && prop; ++i)
        for (int j = i + 1; j < 4 && prop; ++j)
            if (inf[i] * pc[j] != inf[j] * pc[i]) prop = false;
    if (prop) ++count;
    return count;
}

}  // namespace

bool on_curve(const RationalCurveMap& curve, const ProjPoint& p) { return preimage_count(curve, p) > 0; }

Projection project(const RationalCurveMap& curve, const ProjPoint& p, bool allow_smooth_point) {
    if (curve.coords.size() != 4) throw InvalidInput("project expects a space curve");
    int k = -1;
    for (int i = 3; i >= 0 && k < 0; --i)
        if (p.coords[i] != 0) k = i;
    if (k < 0) throw InvalidInput("projection point is zero");
    // columns: standard vectors e_i (i != k), then p
    std::vector<std::vector<Rat>> M(4, std::vector<Rat>(4));
    int col = 0;
    for (int i = 0; i < 4; ++i)
        if (i != k) M[i][col++] = 1;
    for (int i = 0; i < 4; ++i) M[i][3] = p.coords[i];
    if (determinant(M) < 0)
        for (int i = 0; i < 4; ++i) M[i][3] = -M[i][3];
    Projection out;
    out.matrix = inverse(M);
    int cnt = preimage_count(curve, p);
    if (cnt == 1 && !allow_smooth_point)
        throw ProjectionError("projection point lies on the curve at a smooth point");
    out.smooth_point_projection = cnt == 1;
    if (cnt > 2) throw ProjectionError("projection point is a singular point of higher multiplicity");
    out.node_projection = cnt == 2;
    std::vector<Poly> y(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            if (out.matrix[i][j] != 0) y[i] += curve.coords[j] * out.matrix[i][j];
    positive_content_normalize(y);
    out.curve = RationalCurveMap(2, y);
    out.degree_drop = curve.degree() - out.curve.degree();
    return out;
}

bool is_generic_projection(const RationalCurveMap& curve, const ProjPoint& p, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (curve.coords.size() != 4) return fail("not a space curve");
    if (on_curve(curve, p)) return fail("point lies on the curve");
    Projection pr = project(curve, p);
    int d = curve.degree();
    if (pr.curve.degree() != d) return fail("degree drops under projection");
    if (rank(coefficient_matrix(pr.curve)) < 3) return fail("image is a line");
    if (!immersed(pr.curve)) return fail("projection has a cusp");
    NodeAnalysis a = analyze_nodes(pr.curve);
    if (a.multiple_cover) return fail("projection is a multiple cover");
    if (a.cusp) return fail("projection has a cusp");
    if (a.triple_point) return fail("projection has a triple point or colliding node parameters");
    if (a.tangential) return fail("projection has tangential branches");
    if (a.total() != (d - 1) * (d - 2) / 2) return fail("double point count mismatch");
    if (reason) reason->clear();
    return true;
}

ProjPoint grid_point(uint64_t seed, int index) {
    std::mt19937_64 rng(seed * 0x2545F4914F6CDD1DULL + static_cast<uint64_t>(index) * 7919 + 1);
    int h = 2 + index / 4;
    std::uniform_int_distribution<int> dist(-h, h);
    for (;;) {
        std::array<Rat, 4> c;
        bool nz = false;
        for (auto& x : c) {
            x = dist(rng);
            if (x != 0) nz = true;
        }
        if (nz) return ProjPoint(c);
    }
}

ProjPoint find_generic_projection(const RationalCurveMap& curve, uint64_t seed, int budget) {
    for (int i = 0; i < budget; ++i) {
        ProjPoint p = grid_point(seed, i);
        if (is_generic_projection(curve, p)) return p;
    }
    throw GenericityFailure("no generic projection point within the retry budget");
}

uint64_t default_seed() {
    const char* s = std::getenv("REALKNOT_SEED");
    if (s && *s) {
        try {
            return std::stoull(s);
        } catch (...) {
        }
    }
    return 1;
}

}  // namespace realknot
