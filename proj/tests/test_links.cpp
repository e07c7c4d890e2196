#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "realknot/errors.hpp"
#include "realknot/links.hpp"
#include "realknot/viro.hpp"

using namespace realknot;

TEST_CASE("torus braid words") {
    CHECK(torus_braid(3, 2, true).str() == "s1 s2 s1 s2");
    CHECK(torus_braid(5, 3, false).str() == "s1 s3 s2 s4 s1 s3");
    CHECK(torus_braid(2, 2, false).str() == "s1");
    CHECK(torus_braid(3, -2, true).str() == "s1^-1 s2^-1 s1^-1 s2^-1");
    CHECK_THROWS_AS(torus_braid(5, 2, false), InvalidInput);
}

TEST_CASE("component counts") {
    CHECK(component_count(torus_braid(4, 2, true)) == 2);
    CHECK(component_count(torus_braid(5, 3, true)) == 1);
    CHECK(component_count(torus_braid(5, 3, false)) == 1);
    CHECK(component_count(torus_braid(3, 5, false)) == 1);
    CHECK(component_count(torus_braid(2, 2, false)) == 2);
    for (int p = 1; p <= 12; ++p)
        for (int q = 1; q <= p; ++q) CHECK(component_count(torus_braid(p, q, true)) == std::gcd(p, q));
}

TEST_CASE("projective closure diagrams double cover to the sphere closure") {
    for (int p = 1; p <= 9; ++p)
        for (int q = p % 2; q <= p + 2; q += 2) {
            auto w = torus_braid(p, q, false);
            VirtualDiagram d = closure_diagram(w);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(static_cast<int>(d.components.size()) == component_count(w));
            CHECK(static_cast<int>(double_cover_code(d).components.size()) ==
                  component_count(torus_braid(p, q, true)));
        }
}

TEST_CASE("projective torus knots of small degree") {
    VirtualDiagram k5 = closure_diagram(torus_braid(4, 2, false));
    REQUIRE(k5.components.size() == 1);
    CHECK(k5.comp_class[0] == 0);
    CHECK(viro_w_from_diagram(k5, 0) == 3);
    VirtualDiagram k3 = closure_diagram(torus_braid(5, 3, false));
    REQUIRE(k3.components.size() == 1);
    CHECK(k3.comp_class[0] == 1);
    CHECK(viro_w_from_diagram(k3, 0) == 6);
    VirtualDiagram line = closure_diagram(torus_braid(1, 1, false));
    CHECK(line.comp_class[0] == 1);
}

TEST_CASE("hyperboloidal dictionary") {
    CHECK(hyperboloidal_to_torus(HyperboloidalClass::make(4, 1)) == std::pair{5, 3});
    CHECK(hyperboloidal_to_torus(HyperboloidalClass::make(3, 1)) == std::pair{4, 2});
    CHECK(hyperboloidal_to_torus(HyperboloidalClass::make(5, 3)) == std::pair{8, 2});
    CHECK_THROWS_AS(HyperboloidalClass::make(2, 1), InvalidInput);
    for (int a = 2; a <= 8; ++a)
        for (int b = 0; b + 1 < a; ++b) {
            auto [p, q] = hyperboloidal_to_torus(HyperboloidalClass::make(a, b));
            CHECK((p - q) % 2 == 0);
            CHECK(component_count(torus_braid(p, q, false)) == std::gcd(a, b));
        }
}

TEST_CASE("planar hyperboloidal links") {
    CHECK(is_planar_hyperboloidal(1, 1, 1));
    CHECK(is_planar_hyperboloidal(1, 2, 1));
    CHECK_FALSE(is_planar_hyperboloidal(2, 2, 1));
    CHECK_FALSE(is_planar_hyperboloidal(1, 4, 1));
    CHECK_THROWS_AS(is_planar_hyperboloidal(1, 4, 2), InvalidInput);
}

TEST_CASE("feasibility table") {
    CHECK(feasibility(4, 2, 1).verdict == FeasibilityVerdict::Infeasible);
    CHECK(feasibility(5, 3, 1).verdict == FeasibilityVerdict::Infeasible);
    CHECK(feasibility(5, 4, 1).verdict == FeasibilityVerdict::Infeasible);
    CHECK(feasibility(6, 10, 1).verdict == FeasibilityVerdict::PlanarForced);
    CHECK(feasibility(3, 1, 2).verdict == FeasibilityVerdict::PlanarForced);
    CHECK(feasibility(4, 1, 1).verdict == FeasibilityVerdict::QuadricForced);
    CHECK(feasibility(5, 0, 1).verdict == FeasibilityVerdict::Unconstrained);
    CHECK(feasibility(5, 1, 1).verdict == FeasibilityVerdict::Unconstrained);
    CHECK(feasibility(5, 2, 1).bidegrees == std::vector<std::pair<int, int>>{{3, 2}});
    for (int d = 1; d <= 8; ++d)
        for (int g = 0; g <= (d - 1) * (d - 2) / 2; ++g) {
            CHECK(feasibility(d, g, g + 2).verdict == FeasibilityVerdict::Infeasible);
            CHECK(feasibility(d, g, g + 1).iota_bound == std::max(0, 2 * g - 1 - 2 * d));
        }
}
