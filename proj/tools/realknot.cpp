#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "realknot/diagram.hpp"
#include "realknot/errors.hpp"
#include "realknot/io.hpp"
#include "realknot/lift.hpp"
#include "realknot/links.hpp"
#include "realknot/render.hpp"
#include "realknot/viro.hpp"

using namespace realknot;

namespace {

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void fail(const std::string& kind, const std::string& message, int code) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
    std::exit(code);
}

std::optional<ProjPoint> parse_point(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::vector<Rat> c;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) c.push_back(parse_rat(part));
    if (c.size() != 4) throw InvalidInput("--projection needs four comma-separated rationals");
    return point_from_json(Json::array({to_json(c[0]), to_json(c[1]), to_json(c[2]), to_json(c[3])}));
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

// nodes of a space curve itself (for resolve): the k-th real one
NodeRecord pick_node(const RationalCurveMap& c, int index, uint64_t seed) {
    std::vector<NodeRecord> real;
    for (const auto& n : analyze_nodes(c, seed).nodes)
        if (n.kind != NodeKind::ComplexPairMember) real.push_back(n);
    if (index < 0 || index >= static_cast<int>(real.size()))
        throw InvalidInput("curve has " + std::to_string(real.size()) + " real double points");
    return real[index];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real algebraic knots: node analysis, encomplexed writhe, diagrams and torus links"};
    app.require_subcommand(1);
    app.fallthrough();
    uint64_t seed = default_seed();
    app.add_option("--seed", seed, "seed for projection points (falls back to REALKNOT_SEED)");

    std::string curve_path, diagram_path, spec_path, chords_path, projection, out_path, move_spec, format;
    int sign = 1, c = 0, node_index = 0;
    std::optional<int> c_lambda;
    bool projective = false, allow_on_curve = false, as_diagram = false, list_moves = false;
    std::vector<std::string> ts;
    int p = 0, q = 0, d = 0, g = 0, l = 0;

    auto* check = app.add_subcommand("check", "validate a curve");
    check->add_option("--curve", curve_path)->required();

    auto* nodes_cmd = app.add_subcommand("nodes", "double points of a curve");
    nodes_cmd->add_option("--curve", curve_path)->required();

    auto* project_cmd = app.add_subcommand("project", "project a space curve from a point");
    project_cmd->add_option("--curve", curve_path)->required();
    project_cmd->add_option("--point", projection, "x,y,z,u")->required();
    project_cmd->add_flag("--allow-on-curve", allow_on_curve, "allow projecting from a smooth point of the curve");

    auto* w_cmd = app.add_subcommand("w", "encomplexed writhe of a space curve");
    w_cmd->add_option("--curve", curve_path)->required();
    w_cmd->add_option("--projection", projection, "x,y,z,u");

    auto* lift_cmd = app.add_subcommand("lift", "lift a planar curve to a space curve with one node");
    lift_cmd->add_option("--spec", spec_path)->required();
    lift_cmd->add_flag("--diagram", as_diagram, "print the virtual diagram seen from the node");

    auto* resolve_cmd = app.add_subcommand("resolve", "perturb a double point of a space curve");
    resolve_cmd->add_option("--curve", curve_path, "space curve");
    resolve_cmd->add_option("--spec", spec_path, "lift spec; resolves the node at (0:0:0:1)");
    resolve_cmd->add_option("--node", node_index, "index among the real double points of --curve");
    resolve_cmd->add_option("--sign", sign, "+1 or -1")->required();

    auto* tri_cmd = app.add_subcommand("trinodal", "the trinodal sextic from eight increasing parameters");
    tri_cmd->add_option("t", ts)->expected(8)->required();

    auto* quad_cmd = app.add_subcommand("quadrinodal", "the quadrinodal sextic from chord data");
    quad_cmd->add_option("--chords", chords_path)->required();

    auto* torus_cmd = app.add_subcommand("torus", "torus braid word");
    torus_cmd->add_option("p", p)->required();
    torus_cmd->add_option("q", q)->required();
    torus_cmd->add_flag("--projective", projective);
    torus_cmd->add_option("--format", format, "text (default) or json");

    auto* feas_cmd = app.add_subcommand("feasible", "degree/genus feasibility");
    feas_cmd->add_option("d", d)->required();
    feas_cmd->add_option("g", g)->required();
    feas_cmd->add_option("l", l)->required();

    auto* dw_cmd = app.add_subcommand("diagram-w", "writhe of a virtual diagram");
    dw_cmd->add_option("--diagram", diagram_path)->required();
    dw_cmd->add_option("--c", c, "resolution sign -1, 0 or +1");
    dw_cmd->add_option("--c-lambda", c_lambda);

    auto* odd_cmd = app.add_subcommand("odd-arcs", "arcs and odd arcs of a virtual diagram");
    odd_cmd->add_option("--diagram", diagram_path)->required();

    auto* move_cmd = app.add_subcommand("move", "apply a move to a virtual diagram");
    move_cmd->add_option("--diagram", diagram_path)->required();
    move_cmd->add_option("--move", move_spec, "move as JSON text or a path");
    move_cmd->add_flag("--list", list_moves, "list applicable moves");

    auto* render_cmd = app.add_subcommand("render", "SVG picture of a diagram or a curve");
    render_cmd->add_option("--diagram", diagram_path);
    render_cmd->add_option("--curve", curve_path);
    render_cmd->add_option("--projection", projection, "x,y,z,u");
    render_cmd->add_option("--out", out_path, "SVG path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("UsageError", e.what(), 2);
    }

    try {
        if (*check) {
            print(to_json(validate(curve_from_json(read_json_file(curve_path)))));
        } else if (*nodes_cmd) {
            auto curve = curve_from_json(read_json_file(curve_path));
            NodeAnalysis a = analyze_nodes(curve, seed);
            Json ns = Json::array();
            for (const auto& n : a.nodes) ns.push_back(to_json(n));
            print(Json{{"degree", curve.degree()}, {"total", a.total()}, {"complex_nodes", a.complex_nodes},
                       {"tangential", a.tangential}, {"cusp", a.cusp}, {"triple_point", a.triple_point},
                       {"nodes", ns}});
        } else if (*project_cmd) {
            auto curve = curve_from_json(read_json_file(curve_path));
            Projection pr = project(curve, *parse_point(projection), allow_on_curve);
            print(Json{{"curve", to_json(pr.curve)}, {"degree", pr.curve.degree()}, {"degree_drop", pr.degree_drop},
                       {"node_projection", pr.node_projection}});
        } else if (*w_cmd) {
            auto curve = curve_from_json(read_json_file(curve_path));
            print(to_json(viro_w(curve, parse_point(projection), seed)));
        } else if (*lift_cmd) {
            LiftSpec s = lift_spec_from_json(read_json_file(spec_path));
            if (as_diagram) print(to_json(lift_diagram(s, seed)));
            else print(to_json(lift(s)));
        } else if (*resolve_cmd) {
            RationalCurveMap curve;
            NodeRecord node;
            if (!spec_path.empty()) {
                curve = lift(lift_spec_from_json(read_json_file(spec_path)));
                node = lift_node(curve, seed);
            } else if (!curve_path.empty()) {
                curve = curve_from_json(read_json_file(curve_path));
                node = pick_node(curve, node_index, seed);
            } else {
                fail("UsageError", "resolve needs --curve or --spec", 2);
            }
            ResolutionReport r = resolve_node_report(curve, node, sign, seed);
            ViroReport v = viro_w(r.curve, std::nullopt, seed);
            print(Json{{"curve", to_json(r.curve)},
                       {"epsilon", to_json(r.epsilon)},
                       {"direction", Json::array({to_json(r.direction[0]), to_json(r.direction[1]),
                                                  to_json(r.direction[2])})},
                       {"sign", r.sign},
                       {"w", v.w}});
        } else if (*tri_cmd) {
            std::vector<Rat> t;
            for (const auto& x : ts) t.push_back(parse_rat(x));
            print(to_json(trinodal_L(t)));
        } else if (*quad_cmd) {
            print(to_json(quadrinodal_from_chords(chords_from_json(read_json_file(chords_path)))));
        } else if (*torus_cmd) {
            BraidWord w = torus_braid(p, q, !projective);
            if (format == "json") {
                Json j = to_json(w);
                j["components"] = component_count(w);
                print(j);
            } else if (format.empty() || format == "text") {
                std::cout << w.str() << "\n";
            } else {
                fail("UsageError", "--format must be text or json", 2);
            }
        } else if (*feas_cmd) {
            print(to_json(feasibility(d, g, l)));
        } else if (*dw_cmd) {
            VirtualDiagram dg = diagram_from_json(read_json_file(diagram_path));
            DiagramWrithe r = diagram_writhe(dg, c, c_lambda);
            Json j{{"w", to_json(r.w)}};
            if (r.w_lambda) j["w_lambda"] = to_json(*r.w_lambda);
            if (dg.components.size() > 1) j["lambda"] = to_json(linking_lambda(dg, {}));
            print(j);
        } else if (*odd_cmd) {
            VirtualDiagram dg = diagram_from_json(read_json_file(diagram_path));
            Verdict v = realizable_g0(dg);
            print(Json{{"arcs", arcs(dg).size()}, {"odd_arcs", odd_arc_count(dg)}, {"realizable_g0", v.ok},
                       {"reason", v.reason}});
        } else if (*move_cmd) {
            VirtualDiagram dg = diagram_from_json(read_json_file(diagram_path));
            if (list_moves) {
                Json ms = Json::array();
                for (const auto& m : applicable_moves(dg)) ms.push_back(to_json(m));
                print(ms);
            } else {
                if (move_spec.empty()) fail("UsageError", "move needs --move or --list", 2);
                Json mj;
                std::string trimmed = move_spec.substr(move_spec.find_first_not_of(" \t"));
                if (!trimmed.empty() && trimmed[0] == '{') mj = Json::parse(trimmed);
                else mj = read_json_file(move_spec);
                print(to_json(apply_move(dg, move_from_json(mj))));
            }
        } else if (*render_cmd) {
            std::string svg;
            if (!diagram_path.empty()) svg = render_diagram_svg(diagram_from_json(read_json_file(diagram_path)));
            else if (!curve_path.empty())
                svg = render_curve_svg(curve_from_json(read_json_file(curve_path)), parse_point(projection), seed);
            else fail("UsageError", "render needs --diagram or --curve", 2);
            write_text(out_path, svg);
        }
    } catch (const Error& e) {
        fail(e.kind(), e.what(), 1);
    } catch (const nlohmann::json::exception& e) {
        fail("InvalidInput", e.what(), 1);
    }
    return 0;
}
