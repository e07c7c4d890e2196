#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace realknot {

using Rat = mpq_class;
using Int = mpz_class;

std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);
int sgn(const Rat& r);
double to_double(const Rat& r);

// Univariate polynomial over Q, coefficients in ascending degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> c);
    Poly(std::initializer_list<Rat> c);

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, int k);
    static Poly x() { return monomial(1, 1); }
    // prod (t - r_i)
    static Poly from_roots(const std::vector<Rat>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    Rat lead() const;

    Rat eval(const Rat& t) const;
    Poly derivative() const;
    Poly monic() const;
    // Primitive integer polynomial with positive leading coefficient.
    Poly primitive() const;
    Poly compose(const Poly& g) const;
    Poly scale(const Rat& a) const;
    // t -> t + a
    Poly shift(const Rat& a) const;
    // coefficients reversed with respect to formal degree n
    Poly reverse(int n) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& a);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& b) { return a *= b; }
    friend Poly operator*(const Rat& b, Poly a) { return a *= b; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly pow(const Poly& p, int k);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient, throws otherwise
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
// s*a + t*b = g (monic)
void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
// inverse of a modulo m; a and m coprime
Poly invmod(const Poly& a, const Poly& m);
Poly squarefree(const Poly& f);
// Yun: f = lc * prod a_i^i, result[i-1] = a_i
std::vector<Poly> squarefree_factorization(const Poly& f);

// Standard (Sylvester) resultant.
Rat resultant(const Poly& f, const Poly& g);
Rat discriminant(const Poly& f);

std::vector<Poly> sturm_sequence(const Poly& f);
int sign_variations_at(const std::vector<Poly>& seq, const Rat& x);
int sign_variations_at_inf(const std::vector<Poly>& seq, bool positive);
// number of distinct real roots in (a, b]
int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b);
int count_real_roots(const Poly& f);

struct Interval {
    Rat lo, hi;
    Interval() = default;
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static Interval point(const Rat& r) { return {r, r}; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    int sign() const;  // 0 if undetermined (interval straddles or touches 0)
    bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval eval(const Poly& p, const Interval& x);
// enclosure of sqrt(x) for x >= 0, bounds within 2^-bits
Interval isqrt(const Interval& x, int bits);

// A real algebraic number: the unique root of a square-free polynomial
// inside an open interval (lo, hi). lo == hi marks an exact rational.
class AlgReal {
public:
    AlgReal() = default;
    explicit AlgReal(const Rat& r);
    AlgReal(Poly defining, Rat lo, Rat hi);

    const Poly& defining() const { return f_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Interval interval() const { return {lo_, hi_}; }
    bool is_rational() const { return lo_ == hi_; }
    const Rat& rational() const { return lo_; }
    double approx() const;

    AlgReal refined(const Rat& width) const;
    void refine_in_place(const Rat& width);
    void bisect();

    // sign of g at this root, exact
    int sign_of(const Poly& g) const;
    int compare(const Rat& r) const;
    std::string str() const;
    // replace by the exact rational when the root is rational
    void try_snap();

private:
    Poly f_;
    Rat lo_, hi_;
};

AlgReal refine(const AlgReal& x, const Rat& width);
int compare(const AlgReal& a, const AlgReal& b);

struct RealRoot {
    AlgReal value;
    int multiplicity = 1;
};

// Distinct real roots, ascending, with pairwise-disjoint isolating intervals.
std::vector<AlgReal> real_roots(const Poly& f);
std::vector<RealRoot> real_roots_with_multiplicity(const Poly& f);

// Newton interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Dense determinant over Q by Gaussian elimination.
Rat determinant(std::vector<std::vector<Rat>> m);
std::vector<std::vector<Rat>> inverse(std::vector<std::vector<Rat>> m);
int rank(std::vector<std::vector<Rat>> m);

// Polynomial in y whose coefficients are polynomials in x.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Poly> c);
    static BiPoly from_x(const Poly& p);             // p(x)
    static BiPoly from_y(const Poly& p);             // p(y)

    int degree_y() const { return static_cast<int>(c_.size()) - 1; }
    int degree_x() const;
    int total_degree() const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<Poly>& coeffs() const { return c_; }
    Poly coeff(int j) const;
    Poly eval_x(const Rat& x) const;  // polynomial in y
    Poly eval_y(const Rat& y) const;  // polynomial in x
    Rat eval(const Rat& x, const Rat& y) const;
    // value at y = phi(x) reduced modulo m
    Poly subst_mod(const Poly& phi, const Poly& m) const;
    BiPoly swap() const;  // F(y, x)

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rat& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Poly> c_;
};

// Res_y(F, G) as a polynomial in x, using the formal y-degrees.
Poly resultant_y(const BiPoly& f, const BiPoly& g);
// First subresultant coefficients: S1 = a(x) y + b(x).
std::pair<Poly, Poly> subresultant1_y(const BiPoly& f, const BiPoly& g);

// Common zeros of F and G written as y = phi(x) over the roots of r.
struct ShapeSolution {
    Poly r;    // square-free; its roots are the x-coordinates
    Poly phi;  // reduced modulo r
};

enum class ShapeStatus { Ok, CommonFactor, Collision };

// Solves F = G = 0 (and every extra equation). Collision means two common
// zeros share an x-coordinate; the caller should change coordinates. A
// nonzero prefilter is gcd'ed into the resultant before back-substitution.
ShapeStatus shape_solve(const BiPoly& f, const BiPoly& g, const std::vector<BiPoly>& extra,
                        ShapeSolution& out, const Poly& prefilter = Poly());

// Real number num(a)/den(a) where a is a root of a square-free polynomial.
class AlgExpr {
public:
    AlgExpr() = default;
    AlgExpr(AlgReal root, Poly num, Poly den = Poly::constant(1));
    static AlgExpr rational(const Rat& r);

    const AlgReal& root() const { return root_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int sign() const;
    Interval enclose(const Rat& width) const;
    double approx() const;
    std::optional<Rat> exact() const;
    // minimal-ish defining polynomial for the value itself
    AlgReal to_algreal() const;
    std::string str() const;

private:
    AlgReal root_;
    Poly num_, den_;
};

// Unordered parameter pair {s, t} in symmetric coordinates.
struct AlgPair {
    AlgExpr e1;  // s + t
    AlgExpr e2;  // s t
    int discriminant_sign = 0;
};

// e1 and e2 must share the same root; throws on zero discriminant
AlgPair make_alg_pair(AlgExpr e1, AlgExpr e2);

}  // namespace realknot
