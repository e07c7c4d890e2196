#include "realknot/render.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "realknot/errors.hpp"
#include "realknot/viro.hpp"

namespace realknot {

namespace {

constexpr double kSize = 400, kCenter = 200, kRadius = 180;

struct Pt {
    double x = 0, y = 0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// homogeneous (x, y, w) to the disk model: the unit sphere point with w >= 0, seen from above
Pt disk(double x, double y, double w) {
    double n = std::sqrt(x * x + y * y + w * w);
    if (w < 0) n = -n;
    if (n == 0) return {kCenter, kCenter};
    return {kCenter + kRadius * x / n, kCenter - kRadius * y / n};
}

class Svg {
public:
    Svg() {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
             << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
             << "<circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"" << kRadius
             << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    }
    void path(const std::vector<Pt>& pts, const std::string& color = "#000") {
        if (pts.size() < 2) return;
        out_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << num(pts[i].x) << "," << num(pts[i].y);
        out_ << "\"/>\n";
    }
    void dot(Pt p, bool filled, const std::string& label = "") {
        out_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\" fill=\"" << (filled ? "#000" : "#fff")
             << "\" stroke=\"#000\"/>\n";
        if (!label.empty())
            out_ << "<text x=\"" << num(p.x + 5) << "\" y=\"" << num(p.y - 5) << "\" font-size=\"10\">" << label
                 << "</text>\n";
    }
    void mark(Pt a, Pt b, const std::string& color) {
        out_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
             << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
    void gap(Pt c) {
        out_ << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"5\" fill=\"#fff\"/>\n";
    }
    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    std::ostringstream out_;
};

std::string sign_label(int s) { return s > 0 ? "+" : "-"; }

struct HPoint {
    double x, y, w;
};

// split a sampled homogeneous path where it wraps through the boundary circle
void draw_wrapped(Svg& svg, const std::vector<HPoint>& hp, const std::string& color = "#000") {
    std::vector<Pt> run;
    double prev_w = 0;
    for (size_t i = 0; i < hp.size(); ++i) {
        const auto& h = hp[i];
        if (i > 0 && ((prev_w > 0 && h.w < 0) || (prev_w < 0 && h.w > 0))) {
            svg.path(run, color);
            run.clear();
        }
        run.push_back(disk(h.x, h.y, h.w));
        if (h.w != 0) prev_w = h.w;
    }
    svg.path(run, color);
}

std::string gauss_diagram(const VirtualDiagram& d) {
    Svg svg;
    int n = static_cast<int>(d.components.size());
    std::map<int, std::vector<Pt>> ends;
    for (int k = 0; k < n; ++k) {
        double cx = kCenter + (n > 1 ? 90 * std::cos(2 * M_PI * k / n) : 0);
        double cy = kCenter + (n > 1 ? 90 * std::sin(2 * M_PI * k / n) : 0);
        double r = n > 1 ? 60 : 120;
        std::vector<Pt> circle;
        for (int i = 0; i <= 96; ++i)
            circle.push_back({cx + r * std::cos(2 * M_PI * i / 96), cy + r * std::sin(2 * M_PI * i / 96)});
        svg.path(circle, d.comp_class.at(k) ? "#06c" : "#000");
        const auto& ev = d.components[k];
        int m = static_cast<int>(ev.size());
        for (int i = 0; i < m; ++i) {
            double a = 2 * M_PI * (i + 0.5) / std::max(m, 1);
            Pt p{cx + r * std::cos(a), cy + r * std::sin(a)};
            if (ev[i].kind == EventKind::Crossing) {
                ends[ev[i].id].push_back(p);
                svg.dot(p, ev[i].role == Role::Over);
            } else if (ev[i].kind == EventKind::Pole) {
                Pt q{cx + (r + 8) * std::cos(a), cy + (r + 8) * std::sin(a)};
                svg.mark(p, q, "#c00");
            } else {
                svg.dot(p, false, "B");
            }
        }
    }
    for (const auto& [id, pts] : ends) {
        auto it = d.crossing_sign.find(id);
        svg.path(pts, it == d.crossing_sign.end() ? "#888" : (it->second > 0 ? "#080" : "#808"));
    }
    double y = kSize - 10;
    for (const auto& s : d.solitary) {
        svg.dot({12, y}, true, s.region + " " + sign_label(s.sign));
        y -= 14;
    }
    return svg.finish();
}

HPoint lerp(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b, double s) {
    return {(1 - s) * to_double(a[0]) + s * to_double(b[0]), (1 - s) * to_double(a[1]) + s * to_double(b[1]),
            (1 - s) * to_double(a[2]) + s * to_double(b[2])};
}

struct Hit {
    int segment;
    double s;
    int hit;
};

// Proper intersections of the affine polyline edges, matched in traversal
// order to the crossing events; the under strand gets a gap.
void draw_gaps(Svg& svg, const VirtualDiagram& d) {
    struct Seg {
        int comp, index;
        double ax, ay, bx, by;
    };
    std::vector<Seg> segs;
    for (size_t k = 0; k < d.geometry.size(); ++k) {
        const auto& v = d.geometry[k].vertices;
        for (size_t i = 0; i + 1 < v.size() || (!d.comp_class[k] && i < v.size()); ++i) {
            const auto& a = v[i];
            const auto& b = v[(i + 1) % v.size()];
            if (sgn(a[2]) * sgn(b[2]) <= 0) continue;
            segs.push_back({static_cast<int>(k), static_cast<int>(i), to_double(a[0] / a[2]), to_double(a[1] / a[2]),
                            to_double(b[0] / b[2]), to_double(b[1] / b[2])});
        }
    }
    std::vector<std::vector<Hit>> hits(d.geometry.size());
    std::vector<Pt> where;
    std::vector<std::pair<const Seg*, const Seg*>> pairs;
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg &p = segs[i], &q = segs[j];
            double rx = p.bx - p.ax, ry = p.by - p.ay, sx = q.bx - q.ax, sy = q.by - q.ay;
            double den = rx * sy - ry * sx;
            if (den == 0) continue;
            double t = ((q.ax - p.ax) * sy - (q.ay - p.ay) * sx) / den;
            double u = ((q.ax - p.ax) * ry - (q.ay - p.ay) * rx) / den;
            if (t <= 1e-9 || t >= 1 - 1e-9 || u <= 1e-9 || u >= 1 - 1e-9) continue;
            int id = static_cast<int>(where.size());
            where.push_back({p.ax + t * rx, p.ay + t * ry});
            pairs.push_back({&p, &q});
            hits[p.comp].push_back({p.index, t, id});
            hits[q.comp].push_back({q.index, u, id});
        }
    std::vector<int> over_comp(where.size(), -1), over_seg(where.size(), -1);
    for (size_t k = 0; k < hits.size(); ++k) {
        auto& h = hits[k];
        std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) {
            return a.segment != b.segment ? a.segment < b.segment : a.s < b.s;
        });
        std::vector<const Event*> xs;
        for (const auto& e : d.components[k])
            if (e.kind == EventKind::Crossing) xs.push_back(&e);
        if (xs.size() != h.size()) return;
        for (size_t j = 0; j < h.size(); ++j)
            if (xs[j]->role == Role::Over) {
                over_comp[h[j].hit] = static_cast<int>(k);
                over_seg[h[j].hit] = h[j].segment;
            }
    }
    for (size_t id = 0; id < where.size(); ++id) {
        const Seg* over = pairs[id].first->comp == over_comp[id] && pairs[id].first->index == over_seg[id]
                              ? pairs[id].first
                              : pairs[id].second;
        Pt c = disk(where[id].x, where[id].y, 1);
        svg.gap(c);
        Pt a = disk(over->ax, over->ay, 1), b = disk(over->bx, over->by, 1);
        double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0) continue;
        double ux = (b.x - a.x) / len * 6, uy = (b.y - a.y) / len * 6;
        svg.mark({c.x - ux, c.y - uy}, {c.x + ux, c.y + uy}, d.comp_class[over->comp] ? "#06c" : "#000");
    }
}

std::string geometric_diagram(const VirtualDiagram& d) {
    Svg svg;
    for (size_t k = 0; k < d.geometry.size(); ++k) {
        auto v = d.geometry[k].vertices;
        if (v.empty()) continue;
        auto first = v.front();
        if (d.comp_class.at(k)) first = {-first[0], -first[1], -first[2]};
        v.push_back(first);
        std::vector<HPoint> hp;
        for (size_t i = 0; i + 1 < v.size(); ++i)
            for (int s = 0; s < 24; ++s) hp.push_back(lerp(v[i], v[i + 1], s / 24.0));
        hp.push_back(lerp(v.back(), v.back(), 0));
        draw_wrapped(svg, hp, d.comp_class[k] ? "#06c" : "#000");
        for (const auto& e : d.components[k]) {
            if (e.kind != EventKind::Pole || !e.at) continue;
            auto u = location_point(d, static_cast<int>(k), *e.at);
            Pt p = disk(to_double(u[0]), to_double(u[1]), 1);
            svg.mark({p.x - 5, p.y - 5}, {p.x + 5, p.y + 5}, "#c00");
            svg.mark({p.x - 5, p.y + 5}, {p.x + 5, p.y - 5}, "#c00");
        }
    }
    draw_gaps(svg, d);
    double y = kSize - 10;
    for (const auto& s : d.solitary) {
        svg.dot({12, y}, true, s.region + " " + sign_label(s.sign));
        y -= 14;
    }
    return svg.finish();
}

}  // namespace

std::string render_diagram_svg(const VirtualDiagram& d) {
    d.validate();
    if (d.components.empty()) return Svg().finish();
    if (!d.geometry.empty()) return geometric_diagram(d);
    return gauss_diagram(d);
}

std::string render_curve_svg(const RationalCurveMap& curve, std::optional<ProjPoint> p, uint64_t seed, int samples) {
    if (samples < 8) throw InvalidInput("need at least 8 samples");
    RationalCurveMap planar = curve;
    const RationalCurveMap* space = nullptr;
    if (curve.ambient_dim == 3) {
        ProjPoint c = p ? *p : find_generic_projection(curve, seed);
        planar = project(curve, c).curve;
        space = &curve;
    }
    int d = planar.degree();
    auto eval_h = [&](double c, double s) {
        double v[3];
        for (int i = 0; i < 3; ++i) {
            double acc = 0;
            const auto& co = planar.coords[i].coeffs();
            for (int k = 0; k < static_cast<int>(co.size()); ++k)
                acc += to_double(co[k]) * std::pow(s, k) * std::pow(c, d - k);
            v[i] = acc;
        }
        return HPoint{v[0], v[1], v[2]};
    };
    std::vector<HPoint> hp;
    for (int i = 0; i <= samples; ++i) {
        double th = M_PI * i / samples;
        hp.push_back(eval_h(std::cos(th), std::sin(th)));
    }
    // the parameter circle closes up after a half turn up to the sign (-1)^d
    Svg svg;
    draw_wrapped(svg, hp);
    NodeAnalysis a = analyze_nodes(planar, seed);
    for (const auto& n : a.nodes) {
        if (n.kind == NodeKind::ComplexPairMember) continue;
        Pt q = disk(n.image[0].approx(), n.image[1].approx(), n.image[2].approx());
        std::string label = space ? sign_label(node_sign(*space, n)) : "";
        svg.dot(q, n.kind == NodeKind::Hyperbolic, label);
    }
    return svg.finish();
}

}  // namespace realknot
