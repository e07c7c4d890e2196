#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "realknot/errors.hpp"
#include "realknot/lift.hpp"
#include "realknot/viro.hpp"

using namespace realknot;

namespace {

RationalCurveMap plane(std::vector<Poly> c) { return RationalCurveMap(2, std::move(c)); }

std::vector<LiftSpec> sample_specs() {
    auto conic = plane({Poly{0, 0, 1}, Poly::x(), Poly::constant(1)});
    auto cubic = plane({Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly::constant(1)});
    auto acnode = plane({Poly{1, 0, 1}, Poly{0, 1, 0, 1}, Poly::constant(1)});
    return {
        {conic, Poly{1, 2, 0, -1, 3}, Poly{-1, 0, 1}},
        {conic, Poly{2, -1, 1, 0, 1}, Poly{1, 0, 1}},
        {conic, Poly{-3, 1, 0, 2, -1}, Poly{-2, 1, 1}},
        {cubic, Poly{1, 1, 2, -1, 0, 1}, Poly{-4, 0, 1}},
        {cubic, Poly{2, 1, 0, 0, -1, 1}, Poly{1, 1, 1}},
        {acnode, Poly{1, -1, 0, 2, 0, 1}, Poly{-3, 1, 2}},
    };
}

}  // namespace

TEST_CASE("lift has exactly one double point at (0:0:0:1)") {
    for (const auto& s : sample_specs()) {
        auto K = lift(s);
        NodeRecord n = lift_node(K);
        CHECK(n.kind != NodeKind::ComplexPairMember);
        CHECK(n.pair.e1.exact() == -s.p.coeff(1) / s.p.coeff(2));
    }
}

TEST_CASE("lift rejects malformed specs") {
    auto conic = plane({Poly{0, 0, 1}, Poly::x(), Poly::constant(1)});
    CHECK_THROWS_AS(lift({conic, Poly{1, 0, 1}, Poly{-1, 0, 1}}), InvalidInput);
    CHECK_THROWS_AS(lift({conic, Poly{1, 2, 0, 0, 1}, Poly{1, 2, 1}}), InvalidInput);
    CHECK_THROWS_AS(lift({conic, Poly{-1, 0, 0, 0, 1}, Poly{-1, 0, 1}}), InvalidInput);
}

TEST_CASE("lift diagram: poles, classes and integrality") {
    for (const auto& s : sample_specs()) {
        VirtualDiagram d = lift_diagram(s);
        REQUIRE(d.components.size() == 1);
        CHECK(d.comp_class[0] == s.base.degree() % 2);
        int real_poles = count_real_roots(s.p);
        CHECK(d.pole_count() == real_poles);
        for (int c : {-1, 1}) CHECK_NOTHROW(viro_w_from_diagram(d, c));
    }
}

TEST_CASE("diagram writhe of a lift equals the writhe of its resolutions") {
    for (const auto& s : sample_specs()) {
        auto K = lift(s);
        NodeRecord n = lift_node(K);
        VirtualDiagram d = lift_diagram(s);
        for (int c : {-1, 1}) {
            auto r = resolve_node_report(K, n, c);
            CAPTURE(c);
            CAPTURE(to_string(r.epsilon));
            CHECK(viro_w(r.curve, std::nullopt, 5).w == viro_w_from_diagram(d, c));
        }
    }
}

TEST_CASE("resolution signs differ by two") {
    auto s = sample_specs()[0];
    auto K = lift(s);
    NodeRecord n = lift_node(K);
    int wp = viro_w(resolve_node(K, n, 1)).w, wm = viro_w(resolve_node(K, n, -1)).w;
    CHECK(wp - wm == 2);
}

TEST_CASE("trinodal and quadrinodal constructions") {
    std::vector<Rat> t{-4, -3, -2, -1, 1, 2, 3, 4};
    auto L = trinodal_L(t);
    CHECK(L.degree() == 6);
    CHECK_THROWS_AS(trinodal_L({1, 2, 3}), InvalidInput);
    ChordData ch{{Poly{-1, 0, 1}, Poly{-4, 0, 1}, Poly{-9, 0, 1}, Poly{-16, 0, 1}}};
    auto Q = quadrinodal_from_chords(ch);
    CHECK(Q.degree() == 6);
    ChordData bad{{Poly{-1, 0, 1}, Poly{-1, 0, 1}, Poly{-9, 0, 1}, Poly{-16, 0, 1}}};
    CHECK_THROWS_AS(quadrinodal_from_chords(bad), DegenerateInput);
}

TEST_CASE("random lifts: diagram writhe matches resolutions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-3, 3);
    auto cubic = plane({Poly{-1, 0, 1}, Poly{0, -1, 0, 1}, Poly::constant(1)});
    auto quartic = plane({Poly{1, 0, -5, 0, 1}, Poly{0, 1, 0, -2}, Poly{2, 0, 1}});
    int checked = 0;
    for (int trial = 0; trial < 16; ++trial) {
        const auto& base = trial % 2 ? quartic : cubic;
        int d = base.degree();
        std::vector<Rat> uc(d + 3), pc(3);
        for (auto& x : uc) x = dist(rng);
        uc.back() = 1;
        for (auto& x : pc) x = dist(rng);
        pc.back() = trial % 3 == 0 ? -1 : 1;
        LiftSpec s{base, Poly(uc), Poly(pc)};
        RationalCurveMap K;
        VirtualDiagram dg;
        try {
            K = lift(s);
            dg = lift_diagram(s, trial + 1);
        } catch (const LiftSingular&) {
            continue;
        } catch (const InvalidInput&) {
            continue;
        }
        NodeRecord n = lift_node(K);
        for (int c : {-1, 1}) {
            CAPTURE(trial);
            CAPTURE(c);
            CHECK(viro_w(resolve_node(K, n, c)).w == viro_w_from_diagram(dg, c));
        }
        ++checked;
    }
    CHECK(checked >= 6);
}
