#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realknot/errors.hpp"
#include "realknot/io.hpp"
#include "realknot/viro.hpp"

using namespace realknot;

namespace {

std::string data_path(const std::string& name) { return std::string(REALKNOT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("rationals and polynomials round trip") {
    CHECK(rat_from_json(Json("-3/6")) == Rat(-1, 2));
    CHECK(rat_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(rat_from_json(Json(0.5)), InvalidInput);
    Poly p{1, Rat(-2, 3), 0, 5};
    CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("curves and points round trip") {
    auto c = curve_from_json(read_json_file(data_path("quintic41.json")));
    CHECK(c.degree() == 5);
    auto back = curve_from_json(to_json(c));
    CHECK(back.coords == c.coords);
    CHECK_THROWS_AS(curve_from_json(Json{{"dim", 3}, {"coords", Json::array({Json::array({1})})}}), InvalidInput);
    CHECK_THROWS_AS(point_from_json(Json::array({0, 0, 0, 0})), InvalidInput);
    CHECK(point_from_json(to_json(ProjPoint({2, 4, 0, 6}))) == ProjPoint({1, 2, 0, 3}));
}

TEST_CASE("diagrams round trip through JSON") {
    VirtualDiagram d = diagram_from_json(read_json_file(data_path("trefoil_poles.json")));
    CHECK(d.components.size() == 1);
    CHECK(d.comp_class == std::vector<int>{0});
    VirtualDiagram back = diagram_from_json(to_json(d));
    CHECK(canonical_form(back) == canonical_form(d));
    CHECK(viro_w_from_diagram(back, 1) == viro_w_from_diagram(d, 1));
    for (const auto& cs : read_json_file(data_path("d5g1_links.json"))["cases"]) {
        VirtualDiagram x = diagram_from_json(cs["diagram"]);
        VirtualDiagram y = diagram_from_json(to_json(x));
        CHECK(diagram_writhe(y, *y.c, y.c_lambda).w_lambda == diagram_writhe(x, *x.c, x.c_lambda).w_lambda);
    }
}

TEST_CASE("malformed diagrams are rejected") {
    CHECK_THROWS_AS(diagram_from_json(Json{{"y", 1}}), InvalidInput);
    CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"x": [["Q", 1, "o"]]})")), InvalidInput);
    CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"x": [["P", 1, "sideways"]]})")), InvalidInput);
}

TEST_CASE("moves round trip through JSON") {
    VirtualDiagram d = diagram_from_json(read_json_file(data_path("trefoil_poles.json")));
    for (const auto& m : applicable_moves(d)) {
        Move back = move_from_json(to_json(m));
        CHECK(canonical_form(apply_move(d, back)) == canonical_form(apply_move(d, m)));
    }
}
