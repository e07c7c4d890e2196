#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "realknot/curves.hpp"
#include "realknot/errors.hpp"

using namespace realknot;

namespace {

RationalCurveMap planar(std::vector<Poly> c) { return RationalCurveMap(2, std::move(c)); }
RationalCurveMap space(std::vector<Poly> c) { return RationalCurveMap(3, std::move(c)); }

// (t^5 : t s^4 : t^4 s : s^5) in the affine chart s = 1
RationalCurveMap quintic41() {
    return space({Poly::monomial(1, 5), Poly::monomial(1, 1), Poly::monomial(1, 4), Poly::constant(1)});
}

RationalCurveMap random_space_curve(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<Poly> c(4);
    for (auto& p : c) {
        std::vector<Rat> v(d + 1);
        for (auto& x : v) x = dist(rng);
        p = Poly(v);
    }
    if (c[0].degree() < d) c[0] += Poly::monomial(1, d);
    return space(c);
}

}  // namespace

TEST_CASE("nodal cubic: one hyperbolic node at the origin") {
    auto c = planar({Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly{1}});
    auto ns = nodes(c);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].kind == NodeKind::Hyperbolic);
    CHECK(ns[0].pair.e1.exact().value() == 0);
    CHECK(ns[0].pair.e2.exact().value() == -1);
    CHECK(ns[0].image[0].exact().value() == 0);
    CHECK(ns[0].image[1].exact().value() == 0);
    CHECK(ns[0].image[2].exact().value() == 1);
    auto [s, t] = chart_parameters(ns[0]);
    CHECK(s.rational() == -1);
    CHECK(t.rational() == 1);
}

TEST_CASE("acnodal cubic: one elliptic node") {
    auto c = planar({Poly{1, 0, 1}, Poly{0, 1, 0, 1}, Poly{1}});
    auto ns = nodes(c);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].kind == NodeKind::Elliptic);
    CHECK(ns[0].pair.e1.exact().value() == 0);
    CHECK(ns[0].pair.e2.exact().value() == 1);
    CHECK(ns[0].pair.discriminant_sign == -1);
    CHECK(ns[0].image[2].exact().value() == 1);
}

TEST_CASE("smooth conic has no nodes") {
    CHECK(nodes(planar({Poly::monomial(1, 2), Poly::x(), Poly{1}})).empty());
}

TEST_CASE("node with a parameter at infinity") {
    // same nodal cubic reparameterized by t -> 1/(t - 1): node parameters 0 and infinity... use t -> (t+1)/t
    auto c = planar({Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly{1}});
    RationalCurveMap moved = apply_chart(c, Mobius{1, 1, 0, 1});  // t = tau + 1, node at {-2, 0}
    RationalCurveMap rev = moved.reversed();                       // node at {-1/2, infinity}
    auto ns = nodes(rev);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].kind == NodeKind::Hyperbolic);
}

TEST_CASE("validate") {
    auto q = validate(quintic41());
    CHECK(q.smooth());
    CHECK(q.degree == 5);
    auto bad = validate(planar({Poly::monomial(1, 2), Poly::monomial(1, 2), Poly{1}}));
    CHECK(!bad.smooth());
    auto cusp = validate(planar({Poly::monomial(1, 2), Poly::monomial(1, 3), Poly{1}}));
    CHECK(!cusp.immersed);
    REQUIRE(!cusp.immersion_failures.empty());
    CHECK(cusp.immersion_failures[0] == "t = 0");
    auto nonprim = validate(planar({Poly{0, 1}, Poly{0, 0, 1}, Poly{0, 2}}));
    CHECK(!nonprim.primitive);
}

TEST_CASE("projection") {
    auto pl = space({Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly{1}, Poly()});
    auto a = project(pl, ProjPoint({0, 0, 0, 1}));
    CHECK(a.curve.coords == std::vector<Poly>{Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly{1}});
    // (1:0:0:0) is the image of t = infinity, so the degree drops to 4
    CHECK_THROWS_AS(project(quintic41(), ProjPoint({1, 0, 0, 0})), ProjectionError);
    auto b = project(quintic41(), ProjPoint({1, 0, 0, 0}), true);
    CHECK(b.curve.coords == std::vector<Poly>{Poly::x(), Poly::monomial(1, 4), Poly{1}});
    CHECK(b.curve.degree() == 4);
    CHECK(b.smooth_point_projection);
    CHECK(determinant(b.matrix) > 0);
    CHECK_THROWS_AS(project(quintic41(), ProjPoint({0, 0, 0, 1})), ProjectionError);
}

TEST_CASE("generic projection checks") {
    auto q = quintic41();
    CHECK(!is_generic_projection(space({Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly{1}, Poly()}),
                                 ProjPoint({1, 2, 3, 0})));
    std::string why;
    // a point on the tangent line at t = 0 gives a cusp
    CHECK(!is_generic_projection(q, ProjPoint({0, 1, 0, 1}), &why));
    CHECK(!why.empty());
    ProjPoint p = find_generic_projection(q, 7, 10);
    CHECK(is_generic_projection(q, p));
}

TEST_CASE("genus formula for generic projections of random space curves") {
    std::mt19937_64 rng(31);
    for (int d = 3; d <= 6; ++d) {
        for (int k = 0; k < 2; ++k) {
            auto c = random_space_curve(rng, d);
            if (!validate(c).smooth()) continue;
            ProjPoint p = find_generic_projection(c, 3 + k);
            auto pr = project(c, p);
            auto ns = nodes(pr.curve);
            int total = 0;
            for (const auto& n : ns) total += n.kind == NodeKind::ComplexPairMember ? 2 : 1;
            CHECK(total == (d - 1) * (d - 2) / 2);
        }
    }
}

TEST_CASE("symmetric reduction") {
    // s^2 t + s t^2 = e1 e2
    STPoly p(std::vector<Poly>{Poly(), Poly::monomial(1, 2), Poly::monomial(1, 1)});
    BiPoly b = p.to_e1e2();
    CHECK(b.coeff(1) == Poly::x());
    CHECK(b.degree_y() == 1);
}
