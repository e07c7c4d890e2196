#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "realknot/errors.hpp"
#include "realknot/exact.hpp"

using namespace realknot;

namespace {

Poly random_poly(std::mt19937_64& rng, int deg, int height) {
    std::uniform_int_distribution<int> d(-height, height);
    std::vector<Rat> c(deg + 1);
    for (auto& x : c) x = d(rng);
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
}

}  // namespace

TEST_CASE("rational serialization round trip") {
    CHECK(to_string(Rat(3, 6)) == "1/2");
    CHECK(to_string(Rat(-4)) == "-4");
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("0.25") == Rat(1, 4));
    CHECK_THROWS_AS(parse_rat("1/0"), InvalidInput);
}

TEST_CASE("resultant oracle values") {
    // standard Sylvester convention: res(t-1, t-2) = (1) - (2) = -1
    CHECK(resultant(Poly{-1, 1}, Poly{-2, 1}) == -1);
    CHECK(resultant(Poly{-1, 0, 1}, Poly{-1, 1}) == 0);
    // prod over (a-b), a in {i,-i}, b in {sqrt2,-sqrt2}: (i^2-2)((-i)^2-2) = 9
    CHECK(resultant(Poly{1, 0, 1}, Poly{-2, 0, 1}) == 9);
    CHECK(discriminant(Poly{-2, 0, 1}) == 8);
    CHECK_THROWS_AS(resultant(Poly(), Poly{1, 1}), ZeroPolynomial);
}

TEST_CASE("resultant matches the Sylvester determinant") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 30; ++k) {
        int m = 1 + k % 4, n = 1 + (k / 4) % 4;
        Poly f = random_poly(rng, m, 5), g = random_poly(rng, n, 5);
        std::vector<std::vector<Rat>> s(m + n, std::vector<Rat>(m + n));
        for (int i = 0; i < n; ++i)
            for (int d = 0; d <= m; ++d) s[i][i + m - d] = f.coeff(d);
        for (int i = 0; i < m; ++i)
            for (int d = 0; d <= n; ++d) s[n + i][i + n - d] = g.coeff(d);
        CHECK(resultant(f, g) == determinant(s));
    }
}

TEST_CASE("resultant vanishes iff gcd is nonconstant") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 60; ++k) {
        Poly f = random_poly(rng, 1 + k % 5, 3), g = random_poly(rng, 1 + k % 3, 3);
        if (k % 2 == 0) {
            Poly common = random_poly(rng, 1, 3);
            f *= common;
            g *= common;
        }
        CHECK((resultant(f, g) == 0) == (gcd(f, g).degree() > 0));
    }
}

TEST_CASE("real roots of small polynomials") {
    auto r = real_roots(Poly{-2, 0, 1});
    REQUIRE(r.size() == 2);
    CHECK(r[0].lo() >= -2);
    CHECK(r[0].hi() <= -1);
    CHECK(r[1].lo() >= 1);
    CHECK(r[1].hi() <= 2);
    CHECK(real_roots(Poly{1, 0, 1}).empty());

    Poly f = Poly{-1, 1} * Poly{-1, 1} * Poly{3, 1};
    auto m = real_roots_with_multiplicity(f);
    REQUIRE(m.size() == 2);
    CHECK(m[0].value.is_rational());
    CHECK(m[0].value.rational() == -3);
    CHECK(m[0].multiplicity == 1);
    CHECK(m[1].value.rational() == 1);
    CHECK(m[1].multiplicity == 2);
    CHECK_THROWS_AS(real_roots(Poly()), ZeroPolynomial);
}

TEST_CASE("rational roots snap to exact values") {
    Poly f = Poly{-2, 3} * Poly{5, 7} * Poly{-2, 0, 1};
    auto r = real_roots(f);
    REQUIRE(r.size() == 4);
    CHECK(r[1].is_rational());
    CHECK(r[1].rational() == Rat(-5, 7));
    CHECK(r[2].is_rational());
    CHECK(r[2].rational() == Rat(2, 3));
    CHECK(!r[0].is_rational());
}

TEST_CASE("refine") {
    AlgReal s(Poly{-2, 0, 1}, 1, 2);
    AlgReal t = refine(s, Rat(1, 100));
    CHECK(t.hi() - t.lo() <= Rat(1, 100));
    CHECK(t.lo() >= Rat(141, 100));
    CHECK(t.hi() <= Rat(142, 100));
    AlgReal u = refine(s, 1);
    CHECK(u.lo() >= 1);
    CHECK(u.hi() <= 2);
    AlgReal q = refine(AlgReal(Rat(3, 4)), Rat(1, 1000));
    CHECK(q.is_rational());
    CHECK(q.rational() == Rat(3, 4));
}

TEST_CASE("Sturm count agrees with real_roots on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 100; ++k) {
        int deg = 1 + static_cast<int>(rng() % 12);
        Poly f = random_poly(rng, deg, 20);
        auto roots = real_roots(f);
        CHECK(static_cast<int>(roots.size()) == count_real_roots(f));
        Poly g = squarefree(f);
        for (size_t i = 0; i < roots.size(); ++i) {
            if (!roots[i].is_rational())
                CHECK(sgn(g.eval(roots[i].lo())) * sgn(g.eval(roots[i].hi())) < 0);
            else
                CHECK(g.eval(roots[i].rational()) == 0);
            if (i + 1 < roots.size()) CHECK(roots[i].hi() <= roots[i + 1].lo());
        }
    }
}

TEST_CASE("sign of a polynomial at an algebraic number") {
    AlgReal s(Poly{-2, 0, 1}, 1, 2);
    CHECK(s.sign_of(Poly{-2, 0, 1}) == 0);
    CHECK(s.sign_of(Poly{-1, 1}) == 1);
    CHECK(s.sign_of(Poly{Rat(-141421356, 100000000), 1}) == 1);
    CHECK(s.sign_of(Poly{Rat(-141421357, 100000000), 1}) == -1);
    // common factor inside a larger defining polynomial
    Poly f = Poly{-2, 0, 1} * Poly{-3, 0, 1};
    auto r = real_roots(f);
    REQUIRE(r.size() == 4);
    CHECK(r[2].sign_of(Poly{-2, 0, 1}) == 0);
    CHECK(r[3].sign_of(Poly{-2, 0, 1}) == 1);
    CHECK(compare(r[2], AlgReal(Poly{-2, 0, 1}, 1, 2)) == 0);
    CHECK(compare(r[2], r[3]) == -1);
}

TEST_CASE("interval sqrt encloses") {
    Interval i = isqrt(Interval(2, 2), 20);
    CHECK(i.lo * i.lo <= 2);
    CHECK(i.hi * i.hi >= 2);
    CHECK(i.width() <= Rat(1, 1 << 19));
}

TEST_CASE("squarefree factorization") {
    Poly a{-1, 1}, b{2, 1}, c{1, 0, 1};
    auto parts = squarefree_factorization(a * b * b * c * c * c);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == a);
    CHECK(parts[1] == b);
    CHECK(parts[2] == c);
}

TEST_CASE("bivariate resultant and shape solve") {
    // F = y^2 - x, G = y - x + 2 : common zeros (1,-1), (4,2)
    BiPoly F(std::vector<Poly>{Poly{0, -1}, Poly(), Poly{1}});
    BiPoly G(std::vector<Poly>{Poly{2, -1}, Poly{1}});
    Poly r = resultant_y(F, G);
    CHECK(r.monic() == Poly::from_roots({1, 4}));
    ShapeSolution sol;
    REQUIRE(shape_solve(F, G, {}, sol) == ShapeStatus::Ok);
    CHECK(sol.r == Poly::from_roots({1, 4}));
    CHECK(sol.phi == Poly{-2, 1});

    // F = y^2 - x, G = y^2 + y - 2x: zeros (0,0), (1,1); the first subresultant path
    BiPoly G2(std::vector<Poly>{Poly{0, -2}, Poly{1}, Poly{1}});
    REQUIRE(shape_solve(F, G2, {}, sol) == ShapeStatus::Ok);
    CHECK(sol.r == Poly::from_roots({0, 1}));
    CHECK(sol.phi.eval(0) == 0);
    CHECK(sol.phi.eval(1) == 1);

    // extra equation x - 1 removes the origin
    BiPoly E(std::vector<Poly>{Poly{-1, 1}});
    REQUIRE(shape_solve(F, G2, {E}, sol) == ShapeStatus::Ok);
    CHECK(sol.r == Poly::from_roots({1}));

    // two zeros above x = 1
    BiPoly F3(std::vector<Poly>{Poly{-1}, Poly(), Poly{1}});
    CHECK(shape_solve(F3, BiPoly(std::vector<Poly>{Poly{-2, 1}, Poly(), Poly{1}}), {}, sol) ==
          ShapeStatus::Collision);
}

TEST_CASE("subresultant matches Euclid remainder direction") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        Poly f = random_poly(rng, 3, 4), g = random_poly(rng, 2, 4);
        BiPoly F = BiPoly::from_y(f), G = BiPoly::from_y(g);
        auto [a, b] = subresultant1_y(F, G);
        // constant in x: S1 is proportional to the Euclid degree-1 remainder when it exists
        Poly rem = f % g;
        if (rem.degree() == 1) {
            CHECK(a.coeff(0) * rem.coeff(0) == b.coeff(0) * rem.coeff(1));
        }
    }
}

TEST_CASE("algebraic expressions") {
    AlgReal s(Poly{-2, 0, 1}, 1, 2);
    AlgExpr e(s, Poly{1, 1}, Poly{0, 1});  // (1 + a)/a = 1 + 1/sqrt2
    CHECK(e.sign() == 1);
    AlgReal v = e.to_algreal();
    CHECK(v.sign_of(Poly{Rat(-1707, 1000), 1}) == 1);
    CHECK(v.sign_of(Poly{Rat(-1708, 1000), 1}) == -1);
    AlgExpr q(s, Poly{-2, 0, 1} + Poly{3});  // a^2 - 2 + 3 = 3
    CHECK(q.exact().value() == 3);
    AlgPair p = make_alg_pair(AlgExpr(s, Poly{0, 2}), AlgExpr(s, Poly{3}));  // e1 = 2 sqrt2, e2 = 3
    CHECK(p.discriminant_sign == -1);
    CHECK_THROWS_AS(make_alg_pair(AlgExpr(s, Poly{0, 2}), AlgExpr(s, Poly{2})), NonNodalError);
}

TEST_CASE("interpolation and linear algebra") {
    Poly p{3, -1, 0, 2};
    std::vector<Rat> xs{0, 1, 2, 3}, ys;
    for (auto& x : xs) ys.push_back(p.eval(x));
    CHECK(interpolate(xs, ys) == p);
    std::vector<std::vector<Rat>> m{{2, 1}, {1, 1}};
    CHECK(determinant(m) == 1);
    auto inv = inverse(m);
    CHECK(inv[0][0] == 1);
    CHECK(inv[0][1] == -1);
    CHECK(rank({{1, 2}, {2, 4}}) == 1);
}
