#include "realknot/links.hpp"

#include <numeric>

#include "realknot/errors.hpp"

namespace realknot {

void BraidWord::validate() const {
    if (strands < 1) throw InvalidInput("a braid needs at least one strand");
    for (const auto& l : letters) {
        if (l.generator < 1 || l.generator >= strands)
            throw InvalidInput("generator s" + std::to_string(l.generator) + " out of range");
        if (l.exponent != 1 && l.exponent != -1) throw InvalidInput("braid exponents must be +1 or -1");
    }
}

std::string BraidWord::str() const {
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty()) out += ' ';
        out += "s" + std::to_string(l.generator);
        if (l.exponent < 0) out += "^-1";
    }
    return out;
}

BraidWord torus_braid(int p, int q, bool sphere) {
    if (p < 1) throw InvalidInput("torus braid needs p >= 1");
    int e = q < 0 ? -1 : 1, n = std::abs(q);
    if (!sphere && (p - n) % 2 != 0) throw InvalidInput("projective torus links need p = q mod 2");
    BraidWord w;
    w.strands = p;
    w.closure = sphere ? Closure::Sphere : Closure::Projective;
    std::vector<BraidLetter> alpha, beta;
    for (int i = 1; i < p; i += 2) alpha.push_back({i, e});
    for (int i = 2; i < p; i += 2) beta.push_back({i, e});
    auto append = [&](const std::vector<BraidLetter>& x) { w.letters.insert(w.letters.end(), x.begin(), x.end()); };
    int full = sphere ? n : n / 2;
    for (int k = 0; k < full; ++k) {
        append(alpha);
        append(beta);
    }
    if (!sphere && n % 2 == 1) append(alpha);
    return w;
}

std::vector<int> braid_permutation(const BraidWord& w) {
    w.validate();
    // at[pos] = starting position of the strand now at pos
    std::vector<int> at(w.strands + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& l : w.letters) std::swap(at[l.generator], at[l.generator + 1]);
    std::vector<int> end(w.strands + 1);
    for (int pos = 1; pos <= w.strands; ++pos) end[at[pos]] = pos;
    return {end.begin() + 1, end.end()};
}

namespace {

int next_strand(const BraidWord& w, int end_pos) {
    return w.closure == Closure::Sphere ? end_pos : w.strands + 1 - end_pos;
}

}  // namespace

int component_count(const BraidWord& w) {
    auto pi = braid_permutation(w);
    std::vector<bool> seen(w.strands + 1, false);
    int n = 0;
    for (int s = 1; s <= w.strands; ++s) {
        if (seen[s]) continue;
        ++n;
        for (int x = s; !seen[x]; x = next_strand(w, pi[x - 1])) seen[x] = true;
    }
    return n;
}

VirtualDiagram closure_diagram(const BraidWord& w) {
    auto pi = braid_permutation(w);
    // events met by each strand, indexed by starting position
    std::vector<std::vector<Event>> strand_events(w.strands + 1);
    std::vector<int> at(w.strands + 1);
    std::iota(at.begin(), at.end(), 0);
    VirtualDiagram d;
    for (size_t k = 0; k < w.letters.size(); ++k) {
        const auto& l = w.letters[k];
        int id = static_cast<int>(k) + 1;
        int rising = at[l.generator], falling = at[l.generator + 1];
        bool rising_over = l.exponent > 0;
        strand_events[rising].push_back(Event::crossing(id, rising_over ? Role::Over : Role::Under));
        strand_events[falling].push_back(Event::crossing(id, rising_over ? Role::Under : Role::Over));
        d.crossing_sign[id] = l.exponent;
        std::swap(at[l.generator], at[l.generator + 1]);
    }
    std::vector<bool> seen(w.strands + 1, false);
    for (int s = 1; s <= w.strands; ++s) {
        if (seen[s]) continue;
        std::vector<Event> comp;
        int boundary = 0;
        for (int x = s; !seen[x]; x = next_strand(w, pi[x - 1])) {
            seen[x] = true;
            comp.insert(comp.end(), strand_events[x].begin(), strand_events[x].end());
            if (w.closure == Closure::Projective) {
                comp.push_back(Event::boundary());
                ++boundary;
            }
        }
        d.components.push_back(comp);
        d.comp_class.push_back(boundary % 2);
    }
    d.validate();
    return d;
}

HyperboloidalClass HyperboloidalClass::make(int a, int b, int k) {
    if (b < 0 || k < 0) throw InvalidInput("hyperboloidal class needs b >= 0 and k >= 0");
    if (a <= b + 1) throw InvalidInput("h_{a,b} needs a > b + 1");
    return {a, b, k};
}

int HyperboloidalClass::j() const { return std::gcd(a, b); }

std::pair<int, int> HyperboloidalClass::pq() const { return {a / j(), b / j()}; }

std::string HyperboloidalClass::str() const {
    std::string s = "h_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    if (k > 0) s += " + <" + std::to_string(k) + ">";
    return s;
}

std::pair<int, int> hyperboloidal_to_torus(const HyperboloidalClass& h) { return {h.a + h.b, h.a - h.b}; }

bool is_planar_hyperboloidal(int j, int p, int q) {
    if (j < 1) throw InvalidInput("j must be positive");
    if (q < 0 || p < q) throw InvalidInput("need p >= q >= 0");
    if (std::gcd(p, q) != 1) throw InvalidInput("p and q must be coprime");
    return p == q || (p == q + 1 && j == 1);
}

std::string to_string(FeasibilityVerdict v) {
    switch (v) {
        case FeasibilityVerdict::PlanarForced: return "Planar-forced";
        case FeasibilityVerdict::QuadricForced: return "Quadric-forced";
        case FeasibilityVerdict::Infeasible: return "Infeasible";
        case FeasibilityVerdict::Unconstrained: return "Unconstrained";
    }
    return "";
}

FeasibilityReport feasibility(int d, int g, int l) {
    if (d < 1 || g < 0 || l < 1) throw InvalidInput("need d >= 1, g >= 0, l >= 1");
    FeasibilityReport r;
    r.d = d;
    r.g = g;
    r.l = l;
    r.iota_bound = std::max(0, 2 * g - 1 - 2 * d);
    int planar_genus = (d - 1) * (d - 2) / 2;
    bool infeasible = false;
    if (l > g + 1) {
        r.reasons.push_back("Harnack: l = " + std::to_string(l) + " > g + 1 = " + std::to_string(g + 1));
        infeasible = true;
    }
    if (g > planar_genus) {
        r.reasons.push_back("genus bound: g > (d-1)(d-2)/2 = " + std::to_string(planar_genus));
        infeasible = true;
    }
    if (infeasible) {
        r.verdict = FeasibilityVerdict::Infeasible;
        return r;
    }
    if (g == planar_genus) {
        r.reasons.push_back("g = (d-1)(d-2)/2: the curve lies in a plane");
        r.verdict = FeasibilityVerdict::PlanarForced;
        return r;
    }
    bool quadric = false;
    if (2 * d - g + r.iota_bound < 9) {
        r.reasons.push_back("2d - g + iota_max = " + std::to_string(2 * d - g + r.iota_bound) +
                            " < 9: the curve lies on a quadric");
        quadric = true;
    }
    if (d <= 6 && g > 2 * d - 9) {
        r.reasons.push_back("d <= 6 and g > 2d - 9 = " + std::to_string(2 * d - 9) + ": the curve lies on a quadric");
        quadric = true;
    }
    if (!quadric) {
        r.verdict = FeasibilityVerdict::Unconstrained;
        return r;
    }
    // smooth irreducible curves on a quadric (cones give the same genera)
    for (int b = 0; 2 * b <= d; ++b) {
        int a = d - b;
        if (b == 0 && a != 1) continue;
        if ((a - 1) * (b - 1) == g) r.bidegrees.push_back({a, b});
    }
    if (r.bidegrees.empty()) {
        r.reasons.push_back("no bidegree (a, b) with a + b = d and (a-1)(b-1) = g");
        r.verdict = FeasibilityVerdict::Infeasible;
    } else {
        r.verdict = FeasibilityVerdict::QuadricForced;
    }
    return r;
}

}  // namespace realknot
