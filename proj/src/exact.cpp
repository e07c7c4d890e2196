#include "realknot/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "realknot/errors.hpp"

namespace realknot {

std::string to_string(const Rat& r0) {
    Rat r = r0;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw InvalidInput("empty rational");
    if (t[0] == '+') t.erase(0, 1);
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        // decimal literal
        bool neg = !t.empty() && t[0] == '-';
        std::string ip = t.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
        std::string fp = t.substr(dot + 1);
        Int num(ip.empty() ? "0" : ip + fp, 10);
        Int den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return neg ? Rat(-r) : r;
    }
    Rat r;
    if (r.set_str(t, 10) != 0 || r.get_den() == 0) throw InvalidInput("bad rational: " + s);
    r.canonicalize();
    return r;
}

int sgn(const Rat& r) { return ::sgn(r); }

double to_double(const Rat& r) { return r.get_d(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
Poly::Poly(std::initializer_list<Rat> c) : c_(c) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly p = constant(1);
    for (const auto& r : roots) p *= Poly{Rat(-r), Rat(1)};
    return p;
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rat Poly::lead() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat Poly::eval(const Rat& t) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty()) return {};
    Poly p = *this;
    Rat l = lead();
    for (auto& c : p.c_) c /= l;
    return p;
}

Poly Poly::primitive() const {
    if (c_.empty()) return {};
    Int den = 1;
    for (const auto& c : c_) den = lcm(den, Int(c.get_den()));
    Int g = 0;
    for (const auto& c : c_) g = gcd(g, Int(c.get_num() * (den / c.get_den())));
    Rat f(den, g);
    f.canonicalize();
    if (lead() < 0) f = -f;
    return *this * f;
}

Poly Poly::compose(const Poly& g) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + constant(*it);
    return r;
}

Poly Poly::scale(const Rat& a) const {
    Poly p = *this;
    Rat f = 1;
    for (auto& c : p.c_) {
        c *= f;
        f *= a;
    }
    p.trim();
    return p;
}

Poly Poly::shift(const Rat& a) const { return compose(Poly{a, Rat(1)}); }

Poly Poly::reverse(int n) const {
    std::vector<Rat> v(n + 1);
    for (int i = 0; i <= degree(); ++i) v[n - i] = c_[i];
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& a) {
    if (a == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= a;
    return *this;
}

Poly operator-(Poly a) { return a *= Rat(-1); }

std::string Poly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool one = a == 1;
        if (!one || i == 0) os << to_string(a);
        if (i > 0) {
            if (!one) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly pow(const Poly& p, int k) {
    Poly r = Poly::constant(1), b = p;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    std::vector<Rat> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<Rat> q(da - db + 1);
    Rat lb = b.lead();
    const auto& bc = b.coeffs();
    for (int i = da; i >= db; --i) {
        if (r[i] == 0) continue;
        Rat f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalInconsistency("inexact polynomial division");
    return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        Poly r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b, s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = Poly();
        s = Poly();
        t = Poly();
        return;
    }
    Rat l = r0.lead();
    Rat il = 1 / l;
    g = r0 * il;
    s = s0 * il;
    t = t0 * il;
}

Poly invmod(const Poly& a, const Poly& m) {
    Poly g, s, t;
    xgcd(a % m, m, g, s, t);
    if (g.degree() != 0) throw InternalInconsistency("invmod: not invertible");
    return s % m;
}

Poly squarefree(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree of zero polynomial");
    if (f.degree() <= 0) return Poly::constant(1);
    return (f / gcd(f, f.derivative())).monic();
}

std::vector<Poly> squarefree_factorization(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree factorization of zero polynomial");
    std::vector<Poly> out;
    if (f.degree() <= 0) return out;
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = f / a;
    Poly c = fp / a;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        out.push_back(g.monic());
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

Rat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of zero polynomial");
    Rat acc = 1;
    Poly a = f, b = g;
    for (;;) {
        int m = a.degree(), n = b.degree();
        if (n == 0) {
            Rat r = 1;
            for (int i = 0; i < m; ++i) r *= b.lead();
            return acc * r;
        }
        if (m == 0) {
            Rat r = 1;
            for (int i = 0; i < n; ++i) r *= a.lead();
            return acc * r;
        }
        Poly r = a % b;
        if (r.is_zero()) return 0;
        // res(a,b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
        if ((m * n) % 2) acc = -acc;
        for (int i = 0; i < m - r.degree(); ++i) acc *= b.lead();
        a = std::move(b);
        b = std::move(r);
    }
}

Rat discriminant(const Poly& f) {
    int n = f.degree();
    if (n < 1) throw InvalidInput("discriminant needs degree >= 1");
    Rat r = resultant(f, f.derivative()) / f.lead();
    if ((n * (n - 1) / 2) % 2) r = -r;
    return r;
}

// ---------------------------------------------------------------- Sturm

namespace {

// multiply by a positive rational so the coefficients are coprime integers
Poly positive_normalize(const Poly& p) {
    if (p.is_zero()) return p;
    Poly q = p.primitive();
    if ((q.lead() > 0) != (p.lead() > 0)) q = -q;
    return q;
}

int sign_at_inf(const Poly& p, bool positive) {
    int s = sgn(p.lead());
    if (!positive && p.degree() % 2) s = -s;
    return s;
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// simplest rational in the closed interval [lo, hi]
Rat simplest_between(Rat lo, Rat hi) {
    if (lo > hi) std::swap(lo, hi);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
    if (hi < 0) return -simplest_between(-hi, -lo);
    // continued fraction walk
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rat(fl) == lo) return lo;
    if (Rat(fl + 1) <= hi) return Rat(fl + 1);
    Rat a = lo - fl, b = hi - fl;
    Rat r = simplest_between(1 / b, 1 / a);
    return Rat(fl) + 1 / r;
}

Rat cauchy_bound(const Poly& f) {
    Rat m = 0;
    Rat l = abs(f.lead());
    for (int i = 0; i < f.degree(); ++i) {
        Rat q = abs(f.coeff(i)) / l;
        if (q > m) m = q;
    }
    return m + 1;
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly& f) {
    std::vector<Poly> seq;
    if (f.is_zero()) throw ZeroPolynomial("Sturm sequence of zero polynomial");
    seq.push_back(positive_normalize(f));
    Poly d = positive_normalize(f.derivative());
    if (d.is_zero()) return seq;
    seq.push_back(d);
    for (;;) {
        Poly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(positive_normalize(-r));
    }
    return seq;
}

int sign_variations_at(const std::vector<Poly>& seq, const Rat& x) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(sgn(p.eval(x)));
    return count_variations(s);
}

int sign_variations_at_inf(const std::vector<Poly>& seq, bool positive) {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(sign_at_inf(p, positive));
    return count_variations(s);
}

int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b) {
    return sign_variations_at(seq, a) - sign_variations_at(seq, b);
}

int count_real_roots(const Poly& f) {
    auto seq = sturm_sequence(f);
    return sign_variations_at_inf(seq, false) - sign_variations_at_inf(seq, true);
}

// ---------------------------------------------------------------- Interval

int Interval::sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rat lo = p[0], hi = p[0];
    for (int i = 1; i < 4; ++i) {
        if (p[i] < lo) lo = p[i];
        if (p[i] > hi) hi = p[i];
    }
    return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw InternalInconsistency("interval division by zero");
    return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval eval(const Poly& p, const Interval& x) {
    if (x.lo == x.hi) return Interval::point(p.eval(x.lo));
    // Horner around the midpoint keeps the enclosure tight for narrow x
    Rat m = x.mid();
    Poly q = p.shift(m);
    Interval d(x.lo - m, x.hi - m);
    Interval r = Interval::point(0);
    const auto& c = q.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * d + Interval::point(*it);
    return r;
}

Interval isqrt(const Interval& x, int bits) {
    if (x.lo < 0) throw InternalInconsistency("sqrt of negative interval");
    Int scale = Int(1) << (2 * bits);
    Int one = Int(1) << bits;
    Rat l = x.lo * scale, h = x.hi * scale;
    Int lf, hc;
    mpz_fdiv_q(lf.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
    mpz_cdiv_q(hc.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    Int sl, sh;
    mpz_sqrt(sl.get_mpz_t(), lf.get_mpz_t());
    mpz_sqrt(sh.get_mpz_t(), hc.get_mpz_t());
    if (sh * sh < hc) sh += 1;
    Rat lo(sl, one), hi(sh, one);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

// ---------------------------------------------------------------- AlgReal

AlgReal::AlgReal(const Rat& r) : f_(Poly{Rat(-r), Rat(1)}), lo_(r), hi_(r) {}

AlgReal::AlgReal(Poly defining, Rat lo, Rat hi)
    : f_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ == hi_) f_ = Poly{Rat(-lo_), Rat(1)};
}

double AlgReal::approx() const {
    if (is_rational()) return lo_.get_d();
    AlgReal r = refined(Rat(1, 1) / (Int(1) << 60));
    return r.interval().mid().get_d();
}

void AlgReal::bisect() {
    if (is_rational()) return;
    Rat m = (lo_ + hi_) / 2;
    int sm = sgn(f_.eval(m));
    if (sm == 0) {
        lo_ = hi_ = m;
        f_ = Poly{Rat(-m), Rat(1)};
        return;
    }
    int sl = sgn(f_.eval(lo_));
    if (sl * sm < 0) hi_ = m;
    else lo_ = m;
}

void AlgReal::refine_in_place(const Rat& width) {
    if (width <= 0) throw InvalidInput("refine width must be positive");
    while (!is_rational() && hi_ - lo_ > width) bisect();
    if (is_rational()) return;
    // pull the endpoints onto the grid of multiples of width when possible
    Rat a = lo_ / width, b = hi_ / width;
    Int ca, fb;
    mpz_cdiv_q(ca.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(fb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    Rat ga = Rat(ca) * width, gb = Rat(fb) * width;
    int sl = sgn(f_.eval(lo_));
    for (const Rat& g : {ga, gb}) {
        if (g <= lo_ || g >= hi_) continue;
        int sg = sgn(f_.eval(g));
        if (sg == 0) {
            lo_ = hi_ = g;
            f_ = Poly{Rat(-g), Rat(1)};
            return;
        }
        if (sg == sl) lo_ = g;
        else hi_ = g;
    }
}

AlgReal AlgReal::refined(const Rat& width) const {
    AlgReal r = *this;
    r.refine_in_place(width);
    return r;
}

AlgReal refine(const AlgReal& x, const Rat& width) { return x.refined(width); }

void AlgReal::try_snap() {
    if (is_rational()) return;
    Poly p = f_.primitive();
    Int l = abs(Int(p.lead().get_num()));
    // two rationals with denominators dividing l are at least 1/l^2 apart
    Rat w(1, l * l * 2);
    while (!is_rational() && hi_ - lo_ > w) bisect();
    if (is_rational()) return;
    Rat q = simplest_between(lo_, hi_);
    if (q.get_den() <= l && f_.eval(q) == 0) {
        lo_ = hi_ = q;
        f_ = Poly{Rat(-q), Rat(1)};
    }
}

int AlgReal::sign_of(const Poly& g) const {
    if (g.is_zero()) return 0;
    if (is_rational()) return sgn(g.eval(lo_));
    Poly h = gcd(f_, g);
    if (h.degree() > 0 && sgn(h.eval(lo_)) * sgn(h.eval(hi_)) < 0) return 0;
    AlgReal r = *this;
    for (;;) {
        if (r.is_rational()) return sgn(g.eval(r.lo_));
        int s = eval(g, r.interval()).sign();
        if (s != 0) return s;
        r.bisect();
    }
}

int AlgReal::compare(const Rat& q) const {
    if (is_rational()) return lo_ < q ? -1 : (lo_ == q ? 0 : 1);
    if (q <= lo_) return 1;
    if (q >= hi_) return -1;
    // q inside the isolating interval, so q is not a root
    int sq = sgn(f_.eval(q));
    int sl = sgn(f_.eval(lo_));
    return sq == sl ? 1 : -1;
}

std::string AlgReal::str() const {
    if (is_rational()) return to_string(lo_);
    std::ostringstream os;
    os << "root of " << f_.str("t") << " in (" << to_string(lo_) << ", " << to_string(hi_) << ")";
    return os.str();
}

int compare(const AlgReal& a0, const AlgReal& b0) {
    if (a0.is_rational()) return -b0.compare(a0.rational());
    if (b0.is_rational()) return a0.compare(b0.rational());
    AlgReal a = a0, b = b0;
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    if (a.sign_of(b.defining()) == 0) {
        // a is some root of b's polynomial; b is the only one in its interval
        for (;;) {
            if (a.hi() <= b.lo()) return -1;
            if (b.hi() <= a.lo()) return 1;
            if (a.lo() >= b.lo() && a.hi() <= b.hi()) return 0;
            a.bisect();
            if (a.is_rational()) return -b.compare(a.rational());
        }
    }
    for (;;) {
        if (a.hi() <= b.lo()) return -1;
        if (b.hi() <= a.lo()) return 1;
        a.bisect();
        b.bisect();
        if (a.is_rational()) return -b.compare(a.rational());
        if (b.is_rational()) return a.compare(b.rational());
    }
}

std::vector<AlgReal> real_roots(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("real_roots of zero polynomial");
    std::vector<AlgReal> out;
    if (f.degree() <= 0) return out;
    Poly g = squarefree(f).primitive();
    auto seq = sturm_sequence(g);
    Rat B = cauchy_bound(g);
    struct Job {
        Rat a, b;
        int n;
    };
    std::vector<Job> stack;
    int total = sturm_count(seq, -B, B);
    if (total > 0) stack.push_back({-B, B, total});
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        if (j.n == 1) {
            if (g.eval(j.b) == 0) {
                out.emplace_back(j.b);
            } else {
                AlgReal r(g, j.a, j.b);
                out.push_back(r);
            }
            continue;
        }
        Rat m = (j.a + j.b) / 2;
        int left = sturm_count(seq, j.a, m);
        if (left > 0) stack.push_back({j.a, m, left});
        if (j.n - left > 0) stack.push_back({m, j.b, j.n - left});
    }
    for (auto& r : out) r.try_snap();
    std::sort(out.begin(), out.end(),
              [](const AlgReal& x, const AlgReal& y) { return compare(x, y) < 0; });
    return out;
}

std::vector<RealRoot> real_roots_with_multiplicity(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("real_roots of zero polynomial");
    auto roots = real_roots(f);
    auto parts = squarefree_factorization(f);
    std::vector<RealRoot> out;
    for (auto& r : roots) {
        int mult = 0;
        for (size_t i = 0; i < parts.size(); ++i)
            if (parts[i].degree() > 0 && r.sign_of(parts[i]) == 0) mult = static_cast<int>(i) + 1;
        out.push_back({r, mult});
    }
    return out;
}

// ---------------------------------------------------------------- linear algebra

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    size_t n = xs.size();
    std::vector<Rat> d = ys;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - k]);
    Poly r;
    for (size_t i = n; i-- > 0;) r = r * Poly{Rat(-xs[i]), Rat(1)} + Poly::constant(d[i]);
    return r;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<std::vector<Rat>> inverse(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw InvalidInput("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = m[c][c];
        for (size_t k = 0; k < n; ++k) {
            m[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (size_t k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

int rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<Poly> c) : c_(std::move(c)) { trim(); }

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_x(const Poly& p) { return BiPoly(std::vector<Poly>{p}); }

BiPoly BiPoly::from_y(const Poly& p) {
    std::vector<Poly> c;
    for (const auto& a : p.coeffs()) c.push_back(Poly::constant(a));
    return BiPoly(std::move(c));
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
    return d;
}

Poly BiPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return {};
    return c_[j];
}

Poly BiPoly::eval_x(const Rat& x) const {
    std::vector<Rat> v;
    v.reserve(c_.size());
    for (const auto& p : c_) v.push_back(p.eval(x));
    return Poly(std::move(v));
}

Poly BiPoly::eval_y(const Rat& y) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * y + *it;
    return r;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const { return eval_x(x).eval(y); }

Poly BiPoly::subst_mod(const Poly& phi, const Poly& m) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (r * phi + *it) % m;
    return r;
}

BiPoly BiPoly::swap() const {
    int dx = degree_x();
    std::vector<Poly> out;
    for (int i = 0; i <= dx; ++i) {
        std::vector<Rat> v(c_.size());
        for (size_t j = 0; j < c_.size(); ++j) v[j] = c_[j].coeff(i);
        out.emplace_back(std::move(v));
    }
    return BiPoly(std::move(out));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return BiPoly(std::move(r));
}

BiPoly operator*(const Rat& a, const BiPoly& b) {
    std::vector<Poly> r = b.c_;
    for (auto& p : r) p *= a;
    return BiPoly(std::move(r));
}

namespace {

// Sylvester-type matrix rows for the k-th subresultant of f (deg m), g (deg n)
std::vector<std::vector<Rat>> sylvester_rows(const Poly& f, int m, const Poly& g, int n, int k) {
    int cols = m + n - k;
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < n - k; ++i) {
        std::vector<Rat> row(cols);
        // y^{n-k-1-i} f, columns ordered from y^{cols-1} down to y^0
        int shift = n - k - 1 - i;
        for (int d = 0; d <= m; ++d) row[cols - 1 - (d + shift)] = f.coeff(d);
        rows.push_back(std::move(row));
    }
    for (int i = 0; i < m - k; ++i) {
        std::vector<Rat> row(cols);
        int shift = m - k - 1 - i;
        for (int d = 0; d <= n; ++d) row[cols - 1 - (d + shift)] = g.coeff(d);
        rows.push_back(std::move(row));
    }
    return rows;
}

// evaluation points avoiding zeros of the two leading coefficients
std::vector<Rat> good_points(const Poly& la, const Poly& lb, int count) {
    std::vector<Rat> xs;
    for (long i = 0; static_cast<int>(xs.size()) < count; ++i) {
        long v = (i % 2 == 0) ? i / 2 : -(i + 1) / 2;
        Rat x(v);
        if (la.eval(x) == 0 || lb.eval(x) == 0) continue;
        xs.push_back(x);
    }
    return xs;
}

}  // namespace

Poly resultant_y(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of zero polynomial");
    int m = f.degree_y(), n = g.degree_y();
    if (m == 0 && n == 0) return Poly::constant(1);
    if (m == 0) return pow(f.coeff(0), n);
    if (n == 0) return pow(g.coeff(0), m);
    int bound = n * std::max(f.degree_x(), 0) + m * std::max(g.degree_x(), 0);
    auto xs = good_points(f.coeff(m), g.coeff(n), bound + 1);
    std::vector<Rat> ys;
    ys.reserve(xs.size());
    for (const auto& x : xs) ys.push_back(resultant(f.eval_x(x), g.eval_x(x)));
    return interpolate(xs, ys);
}

std::pair<Poly, Poly> subresultant1_y(const BiPoly& f, const BiPoly& g) {
    int m = f.degree_y(), n = g.degree_y();
    if (m < 1 || n < 1) throw InvalidInput("subresultant needs positive y-degrees");
    if (m == 1 && n == 1) throw InvalidInput("first subresultant undefined for two linear inputs");
    int bound = (n - 1) * std::max(f.degree_x(), 0) + (m - 1) * std::max(g.degree_x(), 0);
    auto xs = good_points(f.coeff(m), g.coeff(n), bound + 1);
    std::vector<Rat> ya, yb;
    for (const auto& x : xs) {
        auto rows = sylvester_rows(f.eval_x(x), m, g.eval_x(x), n, 1);
        int sz = m + n - 2;  // rows; columns are sz + 1
        std::vector<std::vector<Rat>> ma(sz, std::vector<Rat>(sz)), mb = ma;
        for (int r = 0; r < sz; ++r) {
            for (int c = 0; c < sz - 1; ++c) ma[r][c] = mb[r][c] = rows[r][c];
            ma[r][sz - 1] = rows[r][sz - 1];  // column of y^1
            mb[r][sz - 1] = rows[r][sz];      // column of y^0
        }
        ya.push_back(determinant(std::move(ma)));
        yb.push_back(determinant(std::move(mb)));
    }
    return {interpolate(xs, ya), interpolate(xs, yb)};
}

ShapeStatus shape_solve(const BiPoly& f, const BiPoly& g, const std::vector<BiPoly>& extra,
                        ShapeSolution& out, const Poly& prefilter) {
    Poly res = resultant_y(f, g);
    if (res.is_zero()) return ShapeStatus::CommonFactor;
    if (!prefilter.is_zero()) res = gcd(res, prefilter);
    if (res.degree() <= 0) {
        out.r = Poly::constant(1);
        out.phi = Poly();
        return ShapeStatus::Ok;
    }
    Poly r = squarefree(res);
    Poly lc = gcd(f.coeff(f.degree_y()), g.coeff(g.degree_y()));
    if (gcd(r, lc).degree() > 0) return ShapeStatus::Collision;
    Poly phi;
    if (f.degree_y() == 1 || g.degree_y() == 1) {
        const BiPoly& lin = f.degree_y() == 1 ? f : g;
        Poly a = lin.coeff(1), b = lin.coeff(0);
        if (gcd(r, a).degree() > 0) return ShapeStatus::Collision;
        phi = (-b * invmod(a, r)) % r;
    } else {
        auto [a, b] = subresultant1_y(f, g);
        if (gcd(r, a).degree() > 0) return ShapeStatus::Collision;
        phi = (-b * invmod(a, r)) % r;
    }
    for (const auto& e : extra) {
        if (r.degree() <= 0) break;
        Poly v = e.subst_mod(phi, r);
        r = v.is_zero() ? r : gcd(r, v);
    }
    if (r.degree() <= 0) r = Poly::constant(1);
    out.r = r;
    out.phi = r.degree() > 0 ? phi % r : Poly();
    return ShapeStatus::Ok;
}

// ---------------------------------------------------------------- AlgExpr

AlgExpr::AlgExpr(AlgReal root, Poly num, Poly den)
    : root_(std::move(root)), num_(std::move(num)), den_(std::move(den)) {
    const Poly& f = root_.defining();
    if (f.degree() > 0) {
        num_ = num_ % f;
        den_ = den_ % f;
    }
    if (root_.sign_of(den_) == 0) throw InvalidInput("AlgExpr: zero denominator");
}

AlgExpr AlgExpr::rational(const Rat& r) { return AlgExpr(AlgReal(Rat(0)), Poly::constant(r)); }

int AlgExpr::sign() const { return root_.sign_of(num_) * root_.sign_of(den_); }

Interval AlgExpr::enclose(const Rat& width) const {
    AlgReal r = root_;
    for (;;) {
        // the denominator enclosure may straddle zero on wide intervals
        while (!r.is_rational() && eval(den_, r.interval()).contains_zero()) r.bisect();
        Interval iv = eval(num_, r.interval()) / eval(den_, r.interval());
        if (iv.width() <= width || r.is_rational()) return iv;
        r.bisect();
    }
}

double AlgExpr::approx() const { return enclose(Rat(1, 1) / (Int(1) << 50)).mid().get_d(); }

std::optional<Rat> AlgExpr::exact() const {
    if (root_.is_rational()) return num_.eval(root_.rational()) / den_.eval(root_.rational());
    if (num_.degree() <= 0 && den_.degree() <= 0) return num_.coeff(0) / den_.coeff(0);
    AlgReal v = to_algreal();
    if (v.is_rational()) return v.rational();
    return std::nullopt;
}

AlgReal AlgExpr::to_algreal() const {
    if (root_.is_rational()) return AlgReal(num_.eval(root_.rational()) / den_.eval(root_.rational()));
    const Poly& f = root_.defining();
    int deg = f.degree();
    // P(y) = Res_x(f, y den - num) has degree <= deg f
    std::vector<Rat> xs, ys;
    for (long i = 0; static_cast<int>(xs.size()) < deg + 1; ++i) {
        Rat y(i % 2 ? -(i + 1) / 2 : i / 2);
        Poly h = den_ * y - num_;
        if (h.is_zero()) continue;
        int formal = std::max(num_.degree(), den_.degree());
        if (h.degree() != formal) continue;
        xs.push_back(y);
        ys.push_back(resultant(f, h));
    }
    Poly P = interpolate(xs, ys);
    auto roots = real_roots(P);
    Interval enc = enclose(1);
    std::vector<AlgReal> rs = roots;
    for (;;) {
        int hits = 0;
        size_t idx = 0;
        for (size_t i = 0; i < rs.size(); ++i) {
            if (!rs[i].interval().disjoint(enc)) {
                ++hits;
                idx = i;
            }
        }
        if (hits == 1) return rs[idx];
        if (hits == 0) throw InternalInconsistency("AlgExpr::to_algreal lost its root");
        Rat w = enc.width() / 4;
        if (w == 0) w = Rat(1, 1) / (Int(1) << 200);
        enc = enclose(w);
        for (auto& r : rs) r.refine_in_place(w);
    }
}

std::string AlgExpr::str() const {
    auto e = root_.is_rational() ? exact() : std::optional<Rat>();
    if (e) return to_string(*e);
    std::ostringstream os;
    os << "(" << num_.str("a") << ")";
    if (den_ != Poly::constant(1)) os << "/(" << den_.str("a") << ")";
    os << " at a = " << root_.str();
    return os.str();
}

AlgPair make_alg_pair(AlgExpr e1, AlgExpr e2) {
    AlgPair p;
    const AlgReal& a = e1.root();
    Poly n1 = e1.num(), d1 = e1.den(), n2 = e2.num(), d2 = e2.den();
    Poly num = n1 * n1 * d2 - Rat(4) * n2 * d1 * d1;
    Poly den = d1 * d1 * d2;
    int s = a.sign_of(num) * a.sign_of(den);
    if (s == 0) throw NonNodalError("parameter pair with zero discriminant");
    p.e1 = std::move(e1);
    p.e2 = std::move(e2);
    p.discriminant_sign = s;
    return p;
}

}  // namespace realknot
