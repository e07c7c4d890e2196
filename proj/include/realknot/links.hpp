#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realknot/diagram.hpp"

namespace realknot {

enum class Closure { Sphere, Projective };

struct BraidLetter {
    int generator = 1;  // sigma_i, 1 <= i < strands
    int exponent = 1;   // +1 or -1
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;
    Closure closure = Closure::Sphere;

    void validate() const;
    // "s1 s3 s2^-1"
    std::string str() const;
};

// Sphere: (alpha beta)^|q|; projective: the first half of that word.
// alpha = s1 s3 ..., beta = s2 s4 ..., all with exponent sign(q).
BraidWord torus_braid(int p, int q, bool sphere);

// 1-based end position of the strand starting at each position
std::vector<int> braid_permutation(const BraidWord& w);
int component_count(const BraidWord& w);

// Diagram of the closure. Letter k becomes crossing k + 1 with sign equal to
// its exponent; the strand moving from position i to i + 1 is over for
// positive letters. The projective closure glues top position i to bottom
// position strands + 1 - i through the boundary of the disk (a Boundary event).
VirtualDiagram closure_diagram(const BraidWord& w);

struct HyperboloidalClass {
    int a = 0, b = 0, k = 0;

    // enforces a > b + 1 >= 1 and k >= 0
    static HyperboloidalClass make(int a, int b, int k = 0);
    int j() const;
    std::pair<int, int> pq() const;  // (a / j, b / j)
    std::string str() const;
};

// h_{a,b} = projective torus link (a + b, a - b)
std::pair<int, int> hyperboloidal_to_torus(const HyperboloidalClass& h);

// p >= q >= 0 coprime, j >= 1: planar iff p == q, or p == q + 1 and j == 1
bool is_planar_hyperboloidal(int j, int p, int q);

enum class FeasibilityVerdict { PlanarForced, QuadricForced, Infeasible, Unconstrained };
std::string to_string(FeasibilityVerdict v);

struct FeasibilityReport {
    int d = 0, g = 0, l = 0;
    FeasibilityVerdict verdict = FeasibilityVerdict::Unconstrained;
    std::vector<std::string> reasons;
    int iota_bound = 0;  // max{0, 2g - 1 - 2d}
    std::vector<std::pair<int, int>> bidegrees;  // admissible (a, b) when the curve sits on a quadric
};

FeasibilityReport feasibility(int d, int g, int l);

}  // namespace realknot
