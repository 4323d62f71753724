#include "quaddec/families.hpp"

#include <algorithm>

#include "quaddec/errors.hpp"

namespace quaddec {

namespace {

Rational half(long num)
{
    return Rational(num, 2);
}

Rational sq(const Rational& x)
{
    return x * x;
}

Rational param(const Params& params, const std::string& name)
{
    auto it = params.find(name);
    if (it == params.end()) {
        throw DomainError("missing family parameter '" + name + "'");
    }
    return it->second;
}

Rational idx(std::size_t n)
{
    return Rational(n);
}

// ---------------------------------------------------------------------------
// Recurrence headers

RecurrenceCoeffs make_rc(const std::string& name, const Params& ps)
{
    using F = RecurrenceCoeffs::Formula;
    const F zero = [](std::size_t) { return Rational(0); };

    if (name == "hermite") {
        return {zero, [](std::size_t k) { return Rational(static_cast<long>(k), 2); }};
    }
    if (name == "generalized_hermite") {
        const Rational mu = param(ps, "mu");
        return {zero, [mu](std::size_t k) {
                    // γₙ₊₁ = ½(n + 1 + μ(1 + (−1)ⁿ)) with k = n + 1
                    return k % 2 == 1 ? (idx(k) + 2 * mu) / 2 : idx(k) / 2;
                }};
    }
    if (name == "laguerre") {
        const Rational al = param(ps, "alpha");
        return {[al](std::size_t n) { return 2 * idx(n) + al + 1; },
                [al](std::size_t k) { return idx(k) * (idx(k) + al); }};
    }
    if (name == "bessel") {
        const Rational al = param(ps, "alpha");
        return {[al](std::size_t n) {
                    if (n == 0) {
                        return -al.inverse();
                    }
                    const Rational m = idx(n - 1);
                    return (1 - al) / ((m + al) * (m + al + 1));
                },
                [al](std::size_t k) {
                    const Rational m = idx(k - 1);
                    return -(m + 1) * (m + 2 * al - 1) /
                           ((2 * m + 2 * al - 1) * sq(m + al) * (2 * m + 2 * al + 1));
                }};
    }
    if (name == "jacobi") {
        const Rational al = param(ps, "alpha");
        const Rational be = param(ps, "beta");
        const Rational s = al + be;
        return {[al, be, s](std::size_t n) {
                    if (n == 0) {
                        return (al - be) / (s + 2);
                    }
                    // The table blocks index the printed closed form by n, not n + 1.
                    const Rational k = idx(n);
                    return (al * al - be * be) / ((2 * k + s + 1) * sq(2 * k + s + 2) * (2 * k + s + 3));
                },
                [al, be, s](std::size_t k) {
                    const Rational m = idx(k - 1);
                    return 4 * (m + 1) * (m + s + 1) * (m + al + 1) * (m + be + 1) /
                           ((2 * m + s + 1) * sq(2 * m + s + 2) * (2 * m + s + 3));
                }};
    }
    if (name == "gegenbauer") {
        const Rational al = param(ps, "alpha");
        return {zero, [al](std::size_t k) {
                    const Rational m = idx(k - 1);
                    return (m + 1) * (m + 2 * al + 1) / ((2 * m + 2 * al + 1) * (2 * m + 2 * al + 3));
                }};
    }
    if (name == "legendre") {
        return {zero, [](std::size_t k) {
                    const Rational m = idx(k);
                    return 4 * sq(sq(m)) / ((2 * m - 1) * sq(2 * m) * (2 * m + 1));
                }};
    }
    if (name == "chebyshev1") {
        return {zero, [](std::size_t k) { return k == 1 ? Rational(1, 2) : Rational(1, 4); }};
    }
    if (name == "chebyshev2") {
        return {zero, [](std::size_t) { return Rational(1, 4); }};
    }
    if (name == "chebyshev3" || name == "chebyshev4") {
        const Rational b0 = name == "chebyshev3" ? Rational(1, 2) : Rational(-1, 2);
        return {[b0](std::size_t n) { return n == 0 ? b0 : Rational(0); },
                [](std::size_t) { return Rational(1, 4); }};
    }
    if (name == "charlier") {
        const Rational al = param(ps, "alpha");
        return {[al](std::size_t n) { return idx(n) + al; }, [al](std::size_t k) { return idx(k) * al; }};
    }
    if (name == "jacobi_symmetric_semiclassical") {
        const Rational al = param(ps, "alpha");
        const Rational be = param(ps, "beta");
        const Rational s = al + be;
        return {zero, [al, be, s](std::size_t k) {
                    if (k % 2 == 1) {
                        const Rational m = idx((k - 1) / 2);
                        return (be + m + 1) * (s + m + 1) / ((s + 2 * m + 1) * (s + 2 * m + 2));
                    }
                    const Rational m = idx((k - 2) / 2);
                    return (m + 1) * (al + m + 1) / ((s + 2 * m + 2) * (s + 2 * m + 3));
                }};
    }
    if (name == "constant") {
        const Rational b = param(ps, "beta");
        const Rational g = param(ps, "gamma");
        return {[b](std::size_t) { return b; }, [g](std::size_t) { return g; }};
    }
    throw DomainError("unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Printed extended-coefficient blocks
//
// Each block returns the ten printed rows: the n = 0 and n + 1 forms of βᴾ
// and βᴿ, and γ, ϱ, ρ at n + 1, all as functions of the table variable n.

struct Point {
    Rational p, q, a;
    Params ps;
    Transcription t;

    Rational om(const Rational& x) const { return x * x + p * x + q; }
    Rational get(const std::string& k) const { return param(ps, k); }
    bool fixed() const { return t == Transcription::corrected; }
};

struct Block {
    std::function<Rational(const Point&)> b0P, b0R;
    std::function<Rational(const Point&, const Rational&)> bP, gP, vP, rP, bR, gR, vR, rR;
};

Block charlier_block()
{
    Block b;
    b.b0P = [](const Point& c) {
        const Rational al = c.get("alpha");
        return c.a * (c.p + 2 * al + 1) - al * al + (c.fixed() ? c.q : Rational(0));
    };
    b.bP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 4 * n * n + 2 * n * (c.p + 4 * al + 4) + c.p * (al + 2) + al * al + 9 * al + 4 +
               (c.fixed() ? c.q : Rational(0));
    };
    b.gP = [](const Point& c, const Rational& n) { return 2 * (n + 1) * (2 * n + 1) * sq(c.get("alpha")); };
    b.vP = [](const Point& c, const Rational& n) { return 4 * n + c.p + 2 * c.get("alpha") + 5; };
    b.rP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 2 * (n + 1) * al * (4 * n + c.p + 2 * al + 3);
    };
    b.b0R = [](const Point& c) {
        const Rational al = c.get("alpha");
        return -c.p * c.p - 3 * c.p * (al + 1) - 3 * al * al - 3 * al - 2 + (c.fixed() ? c.q : Rational(0));
    };
    b.bR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 4 * n * n + 2 * n * (c.p + 4 * al + 6) + c.p * (al + 3) + al * al + 13 * al + 9 +
               (c.fixed() ? c.q : Rational(0));
    };
    b.gR = [](const Point& c, const Rational& n) { return 2 * (n + 1) * (2 * n + 3) * sq(c.get("alpha")); };
    b.vR = [](const Point& c, const Rational& n) { return 4 * n + c.p + 2 * c.get("alpha") + 7; };
    b.rR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return (2 * n + 3) * al * (4 * n + c.p + 2 * al + 5);
    };
    return b;
}

Block generalized_hermite_block()
{
    Block b;
    b.b0P = [](const Point& c) { return half(1) + c.a * c.p + c.q + c.get("mu"); };
    b.bP = [](const Point& c, const Rational& n) { return half(5) + 2 * n + c.q + c.get("mu"); };
    b.gP = [](const Point& c, const Rational& n) {
        return half(1) * (n + 1) * (2 * n + 2 * c.get("mu") + 1);
    };
    b.vP = [](const Point& c, const Rational&) { return c.p; };
    b.rP = [](const Point& c, const Rational& n) { return c.p * (n + 1); };
    b.b0R = [](const Point& c) { return half(3) - c.p * c.p + c.q + c.get("mu"); };
    b.bR = [](const Point& c, const Rational& n) { return half(7) + 2 * n + c.q + c.get("mu"); };
    b.gR = [](const Point& c, const Rational& n) {
        return half(1) * (n + 1) * (2 * n + 2 * c.get("mu") + 3);
    };
    b.vR = [](const Point& c, const Rational&) { return c.p; };
    b.rR = [](const Point& c, const Rational& n) { return half(1) * c.p * (2 * n + 2 * c.get("mu") + 3); };
    return b;
}

Block hermite_block()
{
    Block b;
    b.b0P = [](const Point& c) { return half(1) + c.a * c.p + c.q; };
    b.bP = [](const Point& c, const Rational& n) { return half(1) + 2 * (n + 1) + c.q; };
    b.gP = [](const Point&, const Rational& n) { return half(1) * (n + 1) * (2 * n + 1); };
    b.vP = [](const Point& c, const Rational&) { return c.p; };
    b.rP = [](const Point& c, const Rational& n) { return (n + 1) * c.p; };
    b.b0R = [](const Point& c) { return half(3) - c.p * c.p + c.q; };
    b.bR = [](const Point& c, const Rational& n) { return half(3) + 2 * (n + 1) + c.q; };
    b.gR = [](const Point&, const Rational& n) { return half(1) * (n + 1) * (2 * n + 3); };
    b.vR = [](const Point& c, const Rational&) { return c.p; };
    b.rR = [](const Point& c, const Rational& n) { return (n + half(3)) * c.p; };
    return b;
}

Block laguerre_block()
{
    Block b;
    b.b0P = [](const Point& c) {
        const Rational al = c.get("alpha");
        return -2 + c.q - 3 * al - al * al + c.a * (4 + c.p + 2 * al);
    };
    b.bP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 2 + c.p + c.q + al * (3 + c.p + al) + 4 * (n + 1) * (9 + 6 * n + c.p + 3 * al);
    };
    b.gP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 2 * (n + 1) * (2 * n + 1) * (2 * n + al + 1) * (2 * n + al + 2);
    };
    b.vP = [](const Point& c, const Rational& n) { return 8 * n + c.p + 2 * (c.get("alpha") + 6); };
    b.rP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 2 * (n + 1) * (2 * n + al + 2) * (8 + 8 * n + c.p + 2 * al);
    };
    b.b0R = [](const Point& c) {
        const Rational al = c.get("alpha");
        return -c.p * c.p + c.q - 3 * c.p * (3 + al) - 3 * (6 + 5 * al + al * al);
    };
    b.bR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 14 + c.q + 3 * c.p + al * (al + 9 + c.p) + 4 * (n + 1) * (6 * n + 15 + c.p + 3 * al);
    };
    b.gR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 2 * (1 + n) * (3 + 2 * n) * (2 + 2 * n + al) * (3 + 2 * n + al);
    };
    b.vR = [](const Point& c, const Rational& n) { return 8 * n + c.p + 2 * (8 + c.get("alpha")); };
    b.rR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return (3 + 2 * n) * (3 + 2 * n + al) * (8 * n + c.p + 2 * (6 + al));
    };
    return b;
}

Block bessel_block()
{
    Block b;
    b.b0P = [](const Point& c) {
        const Rational al = c.get("alpha");
        const Rational p = c.p, q = c.q, a = c.a;
        return (-2 + q + 3 * q * al + 2 * q * al * al + a * (1 + 2 * al) * (-2 + p + p * al)) /
               (1 + 3 * al + 2 * al * al);
    };
    b.bP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        const Rational p = c.p, q = c.q;
        const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n;
        const Rational a2 = al * al, a3 = a2 * al, a4 = a3 * al;
        const Rational num = 64 * n4 * q + 64 * n3 * q * (2 * al + 3) +
                             4 * n2 * (-4 * p * (al - 1) + q * (24 * a2 + 72 * al + 49) - 2) +
                             2 * n * (2 * al + 3) * (-4 * p * (al - 1) + q * (8 * a2 + 24 * al + 13) - 2) +
                             p * (-4 * a3 - 8 * a2 + 7 * al + 5) + 4 * q * a4 + 24 * q * a3 + 49 * q * a2 +
                             39 * q * al + 10 * q + 4 * a2 - 18 * al + 2;
        return num / ((2 * n + al + 1) * (2 * n + al + 2) * (4 * n + 2 * al + 1) * (4 * n + 2 * al + 5));
    };
    b.gP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 4 * (n + 1) * (2 * n + 1) * (n + al) * (2 * n + 2 * al - 1) /
               ((4 * n + 2 * al - 1) * sq(4 * n + 2 * al + 1) * (4 * n + 2 * al + 3) *
                sq(4 * n * n + 4 * n * al + 2 * n + al * al + al));
    };
    b.vP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return (2 - 2 * al + c.p * (3 + 4 * n * n + 4 * al + al * al + 4 * n * (2 + al))) /
               ((1 + 2 * n + al) * (3 + 2 * n + al));
    };
    b.rP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        const Rational p = c.p;
        return -(4 * (1 + n) * (n + al) *
                 (2 + 4 * n * n * p + 2 * (-1 + p) * al + p * al * al + 4 * n * p * (1 + al))) /
               ((2 * n + al) * sq(1 + 2 * n + al) * (2 + 2 * n + al) * (1 + 4 * n + 2 * al) *
                (3 + 4 * n + 2 * al));
    };
    b.b0R = [](const Point& c) {
        const Rational al = c.get("alpha");
        const Rational p = c.p, q = c.q;
        const Rational d = 6 + 7 * al + 2 * al * al;
        return (-6 + p * (9 + 6 * al) - p * p * d + q * d) / d;
    };
    b.bR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        const Rational p = c.p, q = c.q;
        const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n;
        const Rational a2 = al * al, a3 = a2 * al, a4 = a3 * al;
        const Rational num = -6 + 126 * q + 64 * n4 * q - 22 * al + 225 * q * al + 4 * a2 + 145 * q * a2 +
                             40 * q * a3 + 4 * q * a4 + 64 * n3 * q * (5 + 2 * al) -
                             p * (-21 + al + 16 * a2 + 4 * a3) +
                             2 * n * (5 + 2 * al) * (-2 - 4 * p * (-1 + al) + q * (45 + 40 * al + 8 * a2)) +
                             4 * n2 * (-2 - 4 * p * (-1 + al) + q * (145 + 120 * al + 24 * a2));
        return num / ((2 + 2 * n + al) * (3 + 2 * n + al) * (3 + 4 * n + 2 * al) * (7 + 4 * n + 2 * al));
    };
    b.gR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 4 * (1 + n) * (3 + 2 * n) * (n + al) * (1 + 2 * n + 2 * al) /
               ((1 + 4 * n + 2 * al) * sq(3 + 4 * n + 2 * al) * (5 + 4 * n + 2 * al) *
                sq(2 + 4 * n * n + 3 * al + al * al + n * (6 + 4 * al)));
    };
    b.vR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return (c.p * (4 * n * n + 4 * n * (al + 3) + al * al + 6 * al + 8) - 2 * al + 2) /
               ((2 * n + al + 2) * (2 * n + al + 4));
    };
    b.rR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return -((3 + 2 * n) * (1 + 2 * n + 2 * al) *
                 (2 - 2 * al + c.p * (3 + 4 * n * n + 4 * al + al * al + 4 * n * (2 + al)))) /
               ((1 + 2 * n + al) * sq(2 + 2 * n + al) * (3 + 2 * n + al) * (3 + 4 * n + 2 * al) *
                (5 + 4 * n + 2 * al));
    };
    return b;
}

Block jacobi_block()
{
    // D(k) = k + 4n + α + β; the blocks lean on D(k)D(k+1)²D(k+2).
    struct J {
        Rational al, be, s, n;
        Rational D(long k) const { return k + 4 * n + s; }
        Rational tri(long k) const { return D(k) * sq(D(k + 1)) * D(k + 2); }
        Rational ab() const { return (al - be) * s; }
    };
    auto j = [](const Point& c, const Rational& n) {
        return J{c.get("alpha"), c.get("beta"), c.get("alpha") + c.get("beta"), n};
    };

    Block b;
    b.b0P = [](const Point& c) {
        const Rational al = c.get("alpha"), be = c.get("beta"), s = al + be, a = c.a;
        return c.om(a) + 4 * (1 + al) * (1 + be) / (sq(2 + s) * (3 + s)) -
               (a + (-al + be) / (2 + s)) * (a + (-al * al + be * be) / ((3 + s) * sq(4 + s) * (5 + s)));
    };
    b.bP = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        const Rational a = c.a;
        return c.om(a) +
               8 * (1 + n) * (2 + 2 * n + x.al) * (2 + 2 * n + x.be) * (2 + 2 * n + x.s) / x.tri(3) +
               4 * (3 + 2 * n) * (3 + 2 * n + x.al) * (3 + 2 * n + x.be) * (3 + 2 * n + x.s) / x.tri(5) -
               (a + c.p + x.ab() / x.tri(5)) * (a + (-x.al * x.al + x.be * x.be) / x.tri(5));
    };
    b.gP = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        return 32 * (1 + n) * (1 + 2 * n) * (1 + 2 * n + x.al) * (2 + 2 * n + x.al) * (1 + 2 * n + x.be) *
               (2 + 2 * n + x.be) * (1 + 2 * n + x.s) * (2 + 2 * n + x.s) /
               (x.D(1) * sq(x.D(2)) * sq(x.D(3)) * sq(x.D(4)) * x.D(5));
    };
    b.vP = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        return c.p + x.ab() / x.tri(5) + x.ab() / x.tri(7);
    };
    b.rP = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        return 8 * (1 + n) * (2 + 2 * n + x.al) * (2 + 2 * n + x.be) * (2 + 2 * n + x.s) *
               ((c.p + x.ab() / x.tri(3) + x.ab() / x.tri(5)) / x.tri(3));
    };
    b.b0R = [](const Point& c) {
        const Rational al = c.get("alpha"), be = c.get("beta"), s = al + be, a = c.a, p = c.p;
        return c.om(a) + 4 * (1 + al) * (1 + be) / (sq(2 + s) * (3 + s)) +
               8 * (2 + al) * (2 + be) * (2 + s) / ((3 + s) * sq(4 + s) * (5 + s)) -
               (p + (al - be) / (2 + s) + (al - be) * s / ((3 + s) * sq(4 + s) * (5 + s))) *
                   (a + p + (al - be) * s / ((5 + s) * sq(6 + s) * (7 + s))) -
               (a + (-al + be) / (2 + s)) * (a + (-al * al + be * be) / ((3 + s) * sq(4 + s) * (5 + s)));
    };
    b.bR = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        const Rational a = c.a;
        return c.om(a) +
               4 * (3 + 2 * n) * (3 + 2 * n + x.al) * (3 + 2 * n + x.be) * (3 + 2 * n + x.s) / x.tri(5) +
               8 * (2 + n) * (4 + 2 * n + x.al) * (4 + 2 * n + x.be) * (4 + 2 * n + x.s) / x.tri(7) -
               (a + c.p + x.ab() / x.tri(7)) * (a + (-x.al * x.al + x.be * x.be) / x.tri(7));
    };
    b.gR = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        return 32 * (1 + n) * (3 + 2 * n) * (2 + 2 * n + x.al) * (3 + 2 * n + x.al) * (2 + 2 * n + x.be) *
               (3 + 2 * n + x.be) * (2 + 2 * n + x.s) * (3 + 2 * n + x.s) /
               (x.D(3) * sq(x.D(4)) * sq(x.D(5)) * sq(x.D(6)) * x.D(7));
    };
    b.vR = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        return c.p + x.ab() / x.tri(7) + x.ab() / x.tri(9);
    };
    b.rR = [j](const Point& c, const Rational& n) {
        const J x = j(c, n);
        return 4 * (2 * n + 3) * (2 * n + x.al + 3) * (2 * n + x.be + 3) * (2 * n + x.s + 3) *
               (c.p + x.ab() / x.tri(5) + x.ab() / x.tri(7)) / x.tri(5);
    };
    return b;
}

Block gegenbauer_block()
{
    Block b;
    b.b0P = [](const Point& c) { return c.a * c.p + c.q + (3 + 2 * c.get("alpha")).inverse(); };
    b.bP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha"), q = c.q;
        return (11 + 8 * n * n * (1 + 2 * q) + 10 * al + 4 * n * (1 + 2 * q) * (5 + 2 * al) +
                q * (21 + 20 * al + 4 * al * al)) /
               (21 + 16 * n * n + 20 * al + 4 * al * al + 8 * n * (5 + 2 * al));
    };
    b.gP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 4 * (1 + n) * (1 + 2 * n) * (1 + n + al) * (1 + 2 * n + 2 * al) /
               (sq(3 + 4 * n + 2 * al) * (5 + 16 * n * n + 12 * al + 4 * al * al + 8 * n * (3 + 2 * al)));
    };
    b.vP = [](const Point& c, const Rational&) { return c.p; };
    b.rP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 4 * c.p * (1 + n) * (1 + n + al) /
               (15 + 16 * n * n + 16 * al + 4 * al * al + 16 * n * (2 + al));
    };
    b.b0R = [](const Point& c) {
        const Rational al = c.get("alpha");
        return (3 - c.p * c.p * (5 + 2 * al) + c.q * (5 + 2 * al)) / (5 + 2 * al);
    };
    b.bR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha"), q = c.q;
        return (23 + 8 * n * n * (1 + 2 * q) + 14 * al + 4 * n * (1 + 2 * q) * (7 + 2 * al) +
                q * (45 + 28 * al + 4 * al * al)) /
               (45 + 16 * n * n + 28 * al + 4 * al * al + 8 * n * (7 + 2 * al));
    };
    b.gR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return 4 * (1 + n) * (3 + 2 * n) * (1 + n + al) * (3 + 2 * n + 2 * al) /
               (sq(5 + 4 * n + 2 * al) * (21 + 16 * n * n + 20 * al + 4 * al * al + 8 * n * (5 + 2 * al)));
    };
    b.vR = [](const Point& c, const Rational&) { return c.p; };
    b.rR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha");
        return c.p * (3 + 2 * n) * (3 + 2 * n + 2 * al) /
               (35 + 16 * n * n + 24 * al + 4 * al * al + 16 * n * (3 + al));
    };
    return b;
}

Block legendre_block()
{
    Block b;
    b.b0P = [](const Point& c) { return Rational(1, 3) + c.a * c.p + c.q; };
    b.bP = [](const Point& c, const Rational& n) {
        const Rational q = c.q;
        return (11 + 21 * q + 20 * n * (1 + 2 * q) + 8 * n * n * (1 + 2 * q)) / (21 + 40 * n + 16 * n * n);
    };
    b.gP = [](const Point&, const Rational& n) {
        return 4 * sq(1 + n) * sq(1 + 2 * n) / (sq(3 + 4 * n) * (5 + 24 * n + 16 * n * n));
    };
    b.vP = [](const Point& c, const Rational&) { return c.p; };
    b.rP = [](const Point& c, const Rational& n) { return c.p * 4 * sq(1 + n) / (15 + 32 * n + 16 * n * n); };
    b.b0R = [](const Point& c) { return Rational(3, 5) - c.p * c.p + c.q; };
    b.bR = [](const Point& c, const Rational& n) {
        const Rational q = c.q;
        return (23 + 45 * q + 28 * n * (1 + 2 * q) + 8 * n * n * (1 + 2 * q)) / (45 + 56 * n + 16 * n * n);
    };
    b.gR = [](const Point&, const Rational& n) {
        return 4 * sq(1 + n) * sq(3 + 2 * n) / (sq(5 + 4 * n) * (21 + 40 * n + 16 * n * n));
    };
    b.vR = [](const Point& c, const Rational&) { return c.p; };
    b.rR = [](const Point& c, const Rational& n) { return c.p * sq(3 + 2 * n) / (35 + 48 * n + 16 * n * n); };
    return b;
}

/// The four Chebyshev tables share every row except β₀ᴾ and β₀ᴿ.
Block chebyshev_block(std::function<Rational(const Point&)> b0P, std::function<Rational(const Point&)> b0R)
{
    Block b;
    b.b0P = std::move(b0P);
    b.b0R = std::move(b0R);
    b.bP = [](const Point& c, const Rational&) { return half(1) + c.q; };
    b.bR = b.bP;
    b.gP = [](const Point&, const Rational&) { return Rational(1, 16); };
    b.gR = b.gP;
    b.vP = [](const Point& c, const Rational&) { return c.p; };
    b.vR = b.vP;
    b.rP = [](const Point& c, const Rational&) { return c.p / 4; };
    b.rR = b.rP;
    return b;
}

Block constant_block()
{
    Block b;
    b.b0P = [](const Point& c) {
        const Rational be = c.get("beta"), g = c.get("gamma");
        return c.q + g - be * be + c.a * (c.p + 2 * be);
    };
    b.bP = [](const Point& c, const Rational&) {
        const Rational be = c.get("beta");
        return c.q + 2 * c.get("gamma") + be * (c.p + be);
    };
    b.gP = [](const Point& c, const Rational&) { return sq(c.get("gamma")); };
    b.vP = [](const Point& c, const Rational&) { return c.p + 2 * c.get("beta"); };
    b.rP = [](const Point& c, const Rational&) { return c.get("gamma") * (c.p + 2 * c.get("beta")); };
    b.b0R = [](const Point& c) {
        const Rational be = c.get("beta");
        return c.q + 2 * c.get("gamma") - 3 * be * (c.p + be) - c.p * c.p;
    };
    b.bR = b.bP;
    b.gR = b.gP;
    b.vR = b.vP;
    b.rR = b.rP;
    return b;
}

Block semiclassical_block()
{
    Block b;
    b.b0P = [](const Point& c) {
        const Rational be = c.get("beta"), s = c.get("alpha") + be;
        return c.a * c.p + c.q + (be + 1) / (s + 2);
    };
    b.bP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha"), be = c.get("beta"), s = al + be, a = c.a, p = c.p;
        return a * a + a * p - a * (a + p) + c.q +
               (n + 1) * (n + al + 1) / ((2 * n + s + 2) * (2 * n + s + 3)) +
               (n + be + 2) * (n + s + 2) / ((2 * n + s + 3) * (2 * n + s + 4));
    };
    b.gP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha"), be = c.get("beta"), s = al + be;
        const Rational den = (2 * n + s + 1) * sq(2 * n + s + 2) * (2 * n + s + 3);
        if (c.fixed()) {
            return (n + 1) * (n + al + 1) * (n + be + 1) * (n + s + 1) / den;
        }
        return (n + 1) * (n + 1) * (n + al + 1) * (n + al + 1) / den;
    };
    b.vP = [](const Point& c, const Rational&) { return c.p; };
    b.rP = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha"), s = al + c.get("beta");
        return c.p * (n + 1) * (n + al + 1) / ((2 * n + s + 2) * (2 * n + s + 3));
    };
    b.b0R = [](const Point& c) {
        const Rational be = c.get("beta"), s = c.get("alpha") + be;
        return (-c.p * c.p * (s + 3) + c.q * (s + 3) + be + 2) / (s + 3);
    };
    b.bR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha"), be = c.get("beta"), s = al + be, q = c.q;
        const Rational den = (2 * n + s + 3) * (2 * n + s + 5);
        return (n * n * (4 * q + 2) + 2 * n * (2 * q + 1) * (s + 4) + al * be + 4 * al + be * be + 5 * be +
                8) /
                   den +
               q * (al * al + 2 * al * (be + 4) + be * be + 8 * be + 15) / den;
    };
    b.gR = [](const Point& c, const Rational& n) {
        const Rational al = c.get("alpha"), be = c.get("beta"), s = al + be;
        return (n + be + 2) * (n + s + 2) * (n + 1) * (n + al + 1) /
               ((2 * n + s + 2) * sq(2 * n + s + 3) * (2 * n + s + 4));
    };
    b.vR = [](const Point& c, const Rational&) { return c.p; };
    b.rR = [](const Point& c, const Rational& n) {
        const Rational be = c.get("beta"), s = c.get("alpha") + be;
        return c.p * (n + be + 2) * (n + s + 2) / ((2 * n + s + 3) * (2 * n + s + 4));
    };
    return b;
}

const std::map<std::string, Block>& blocks()
{
    static const std::map<std::string, Block> table = [] {
        std::map<std::string, Block> m;
        m["charlier"] = charlier_block();
        m["generalized_hermite"] = generalized_hermite_block();
        m["hermite"] = hermite_block();
        m["laguerre"] = laguerre_block();
        m["bessel"] = bessel_block();
        m["jacobi"] = jacobi_block();
        m["gegenbauer"] = gegenbauer_block();
        m["legendre"] = legendre_block();
        m["chebyshev1"] = chebyshev_block([](const Point& c) { return half(1) + c.a * c.p + c.q; },
                                          [](const Point& c) { return Rational(3, 4) - c.p * c.p + c.q; });
        // γ₁ = 1/2 reaches the first row: γ₁ᴾ = γ₁γ₂.
        m["chebyshev1"].gP = [](const Point& c, const Rational& n) {
            return c.fixed() && n.is_zero() ? Rational(1, 8) : Rational(1, 16);
        };
        m["chebyshev2"] = chebyshev_block([](const Point& c) { return Rational(1, 4) + c.a * c.p + c.q; },
                                          [](const Point& c) { return half(1) - c.p * c.p + c.q; });
        m["chebyshev3"] =
            chebyshev_block([](const Point& c) { return c.a * (c.p + half(1)) + c.q + Rational(1, 4); },
                            [](const Point& c) { return half(1) - c.p * (half(1) + c.p) + c.q; });
        m["chebyshev4"] =
            chebyshev_block([](const Point& c) { return c.a * (c.p - half(1)) + c.q + Rational(1, 4); },
                            [](const Point& c) { return half(1) * (-2 * c.p * c.p + c.p + 2 * c.q + 1); });
        m["constant"] = constant_block();
        m["jacobi_symmetric_semiclassical"] = semiclassical_block();
        return m;
    }();
    return table;
}

/// Runs a printed formula, turning a pole into a RegularityError.
template <class F> Rational guarded(const char* stream, std::size_t n, F&& f)
{
    try {
        return f();
    } catch (const DivisionByZero&) {
        throw RegularityError(stream, n, "pole of the printed formula");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Registry

const std::vector<FamilyInfo>& family_catalog()
{
    static const std::vector<FamilyInfo> catalog = {
        {"charlier", "Charlier", {"alpha"}, "beta_n = n+alpha, gamma_{n+1} = (n+1)alpha"},
        {"generalized_hermite",
         "generalized Hermite",
         {"mu"},
         "beta_n = 0, gamma_{n+1} = (n+1+mu(1+(-1)^n))/2"},
        {"hermite", "Hermite", {}, "beta_n = 0, gamma_{n+1} = (n+1)/2"},
        {"laguerre", "Laguerre", {"alpha"}, "beta_n = 2n+alpha+1, gamma_{n+1} = (n+1)(n+alpha+1)"},
        {"bessel",
         "Bessel",
         {"alpha"},
         "beta_0 = -1/alpha, beta_{n+1} = (1-alpha)/((n+alpha)(n+alpha+1)), "
         "gamma_{n+1} = -(n+1)(n+2alpha-1)/((2n+2alpha-1)(n+alpha)^2(2n+2alpha+1))"},
        {"jacobi",
         "Jacobi",
         {"alpha", "beta"},
         "beta_0 = (alpha-beta)/(s+2), beta_n = (alpha^2-beta^2)/((2n+s+1)(2n+s+2)^2(2n+s+3)), "
         "gamma_{n+1} = 4(n+1)(n+s+1)(n+alpha+1)(n+beta+1)/((2n+s+1)(2n+s+2)^2(2n+s+3)), s = alpha+beta"},
        {"gegenbauer",
         "Gegenbauer",
         {"alpha"},
         "beta_n = 0, gamma_{n+1} = (n+1)(n+2alpha+1)/((2n+2alpha+1)(2n+2alpha+3))"},
        {"legendre", "Legendre", {}, "beta_n = 0, gamma_{n+1} = 4(n+1)^4/((2n+1)(2n+2)^2(2n+3))"},
        {"chebyshev1", "Chebyshev, first kind", {}, "beta_n = 0, gamma_1 = 1/2, gamma_{n+2} = 1/4"},
        {"chebyshev2", "Chebyshev, second kind", {}, "beta_n = 0, gamma_{n+1} = 1/4"},
        {"chebyshev3", "Chebyshev, third kind", {}, "beta_0 = 1/2, beta_{n+1} = 0, gamma_{n+1} = 1/4"},
        {"chebyshev4", "Chebyshev, fourth kind", {}, "beta_0 = -1/2, beta_{n+1} = 0, gamma_{n+1} = 1/4"},
        {"jacobi_symmetric_semiclassical",
         "symmetric semi-classical of class one",
         {"alpha", "beta"},
         "beta_n = 0, gamma_{2n+1} = (beta+n+1)(s+n+1)/((s+2n+1)(s+2n+2)), "
         "gamma_{2n+2} = (n+1)(alpha+n+1)/((s+2n+2)(s+2n+3)), s = alpha+beta"},
        {"constant", "constant coefficients", {"beta", "gamma"}, "beta_n = beta, gamma_{n+1} = gamma"},
    };
    return catalog;
}

const FamilyInfo& family_info(const std::string& name)
{
    for (const auto& f : family_catalog()) {
        if (f.name == name) {
            return f;
        }
    }
    throw DomainError("unknown family '" + name + "'");
}

FamilySpec build(const std::string& name, const Params& params)
{
    const auto& info = family_info(name);
    for (const auto& [key, value] : params) {
        if (std::find(info.params.begin(), info.params.end(), key) == info.params.end()) {
            throw DomainError("family '" + name + "' has no parameter '" + key + "'");
        }
    }
    Params used;
    for (const auto& key : info.params) {
        used[key] = param(params, key);
    }
    return {name, used, make_rc(name, used)};
}

void check_regular(const FamilySpec& spec, std::size_t count)
{
    (void)spec.rc.prefix(count);
}

bool has_printed_extended(const std::string& name)
{
    return blocks().count(name) != 0;
}

ExtendedValues printed_extended(const std::string& name, const Params& params, const QuadMap& map,
                                std::size_t n, Transcription t)
{
    auto it = blocks().find(name);
    if (it == blocks().end()) {
        throw DomainError("no printed extended coefficients for '" + name + "'");
    }
    const Block& b = it->second;
    const Point c{map.p, map.q, map.a, params, t};
    const Rational m = idx(n);
    ExtendedValues v;
    v.beta_p = guarded("betaP", n, [&] { return n == 0 ? b.b0P(c) : b.bP(c, idx(n - 1)); });
    v.gamma_p = guarded("gammaP", n + 1, [&] { return b.gP(c, m); });
    v.varrho_p = guarded("varrhoP", n + 1, [&] { return b.vP(c, m); });
    v.rho_p = guarded("rhoP", n + 1, [&] { return b.rP(c, m); });
    v.beta_r = guarded("betaR", n, [&] { return n == 0 ? b.b0R(c) : b.bR(c, idx(n - 1)); });
    v.gamma_r = guarded("gammaR", n + 1, [&] { return b.gR(c, m); });
    v.varrho_r = guarded("varrhoR", n + 1, [&] { return b.vR(c, m); });
    v.rho_r = guarded("rhoR", n + 1, [&] { return b.rR(c, m); });
    return v;
}

std::optional<ComponentRecurrences> printed_component_recurrences(const std::string& name,
                                                                  const Params& params, const QuadMap& map)
{
    if (name == "jacobi_symmetric_semiclassical") {
        const Rational al = param(params, "alpha"), be = param(params, "beta"), s = al + be, q = map.q;
        RecurrenceCoeffs P(
            [=](std::size_t k) {
                if (k == 0) {
                    return 1 + q - (al + 1) / (s + 2);
                }
                const Rational n = idx(k - 1);
                return 1 + q + (n + 1) * (n + al + 1) / (s + 2 * n + 2) -
                       (n + 2) * (n + 2 + al) / (s + 2 * n + 4);
            },
            [=](std::size_t k) {
                const Rational n = idx(k - 1);
                return (n + 1) * (al + n + 1) * (be + n + 1) * (s + n + 1) /
                       ((s + 2 * n + 1) * sq(s + 2 * n + 2) * (s + 2 * n + 3));
            });
        RecurrenceCoeffs R(
            [=](std::size_t k) {
                if (k == 0) {
                    return 1 + q - (al + 1) / (s + 3);
                }
                const Rational n = idx(k - 1);
                return 1 + q + (n + 1) * (al + n + 1) / (s + 2 * n + 3) -
                       (n + 2) * (al + n + 2) / (s + 2 * n + 5);
            },
            [=](std::size_t k) {
                const Rational n = idx(k - 1);
                return (n + 1) * (al + n + 1) * (be + n + 2) * (s + n + 2) /
                       ((s + 2 * n + 2) * sq(s + 2 * n + 3) * (s + 2 * n + 4));
            });
        return ComponentRecurrences{P, R};
    }
    if (name == "constant") {
        const Rational be = param(params, "beta"), g = param(params, "gamma");
        const Rational br = map.q + 2 * g - be * be;
        RecurrenceCoeffs R([br](std::size_t) { return br; }, [g](std::size_t) { return g * g; });
        RecurrenceCoeffs P([br, g](std::size_t n) { return n == 0 ? br - g : br; },
                           [g](std::size_t) { return g * g; });
        return ComponentRecurrences{P, R};
    }
    return std::nullopt;
}

std::optional<MomentLists> printed_moments(const std::string& name, const Params& params, const QuadMap& map,
                                           Transcription t)
{
    const Rational q = map.q;
    if (name == "jacobi_symmetric_semiclassical") {
        const Rational al = param(params, "alpha"), be = param(params, "beta"), s = al + be;
        const Rational last_den =
            t == Transcription::corrected ? (s + 2) * (s + 3) * (s + 4) : (s + 2) * (s + 3) * (s + 3);
        MomentLists m;
        m.u = {Rational(1), q + (be + 1) / (s + 2),
               q * q + 2 * q * (be + 1) / (s + 2) + (be + 1) * (be + 2) / ((s + 2) * (s + 3)),
               q * q * q + 3 * q * q * (be + 1) / (s + 2) +
                   3 * q * (be + 1) * (be + 2) / ((s + 2) * (s + 3)) +
                   (be + 1) * (be + 2) * (be + 3) / last_den};
        m.v = {Rational(1), q + (be + 2) / (s + 3),
               q * q + 2 * q * (be + 2) / (s + 3) + (be + 2) * (be + 3) / ((s + 3) * (s + 4)),
               q * q * q + 3 * q * q * (be + 2) / (s + 3) +
                   3 * q * (be + 2) * (be + 3) / ((s + 3) * (s + 4)) +
                   (be + 2) * (be + 3) * (be + 4) / ((s + 3) * (s + 4) * (s + 5))};
        return m;
    }
    if (name == "constant") {
        const Rational b = param(params, "beta"), g = param(params, "gamma");
        const Rational b2 = b * b, b4 = b2 * b2, b6 = b4 * b2;
        MomentLists m;
        m.u = {Rational(1), g - b2 + q, 2 * g * g + b4 + q * q - 2 * b2 * (g + q) + 2 * g * q,
               5 * g * g * g - b6 + q * q * q - 3 * b2 * (2 * g * g + q * q + 2 * g * q) + 3 * g * q * q +
                   6 * g * g * q + 3 * b4 * (g + q)};
        const Rational v1 = 2 * g - b2 + q;
        m.v = {Rational(1), v1, 5 * g * g + b4 + q * q - 2 * b2 * (2 * g + q) + 4 * g * q,
               v1 * (7 * g * g + b4 + q * q - 2 * b2 * (2 * g + q) + 4 * g * q)};
        return m;
    }
    return std::nullopt;
}

namespace {

Rational pochhammer_ratio(const Rational& top, const Rational& bottom, std::size_t k)
{
    // Π_{i=1}^{k} (top + i) / (bottom + i)
    Rational r(1);
    for (std::size_t i = 1; i <= k; ++i) {
        r *= (top + idx(i)) / (bottom + idx(i));
    }
    return r;
}

} // namespace

Rational model_w0_even(const Params& params, std::size_t k)
{
    const Rational al = param(params, "alpha"), be = param(params, "beta");
    return pochhammer_ratio(be, al + be + 1, k);
}

Rational model_u0(const Params& params, const Rational& q, std::size_t n)
{
    Rational sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
        sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
               q.pow(static_cast<long>(n - k)) * model_w0_even(params, k);
    }
    return sum;
}

Rational model_v0(const Params& params, const Rational& q, std::size_t n)
{
    const Rational al = param(params, "alpha"), be = param(params, "beta");
    Rational sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
        sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
               q.pow(static_cast<long>(n - k)) * pochhammer_ratio(be + 1, al + be + 2, k);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Errata

const std::vector<Erratum>& errata()
{
    static const std::vector<Erratum> list = [] {
        auto q_zero = [](Params&, QuadMap& m) { m.q = Rational(0); };
        std::vector<Erratum> e;
        e.push_back({"charlier", "betaP", "beta_0^P = a(p+2alpha+1) - alpha^2, beta_{n+1}^P without q",
                     "add q to both rows", "q = 0", q_zero});
        e.push_back({"charlier", "betaR", "beta_0^R and beta_{n+1}^R without q", "add q to both rows",
                     "q = 0", q_zero});
        e.push_back({"chebyshev1", "gammaP", "gamma_{n+1}^P = 1/16 for every n >= 0",
                     "gamma_1^P = gamma_1 gamma_2 = 1/8; 1/16 holds from gamma_2^P on", "none", nullptr});
        e.push_back({"chebyshev1", "class:p=0:relations", "P_n(x) = R_n(-1/4; x)",
                     "gamma_1^P = 1/8 is twice gamma_1^R, so P is a perturbation of R, not co-recursive",
                     "none", nullptr});
        e.push_back({"chebyshev1", "class:p=0&q=-1/2:relations",
                     "P_n = Q_n; P_n(x) = R_n(-1/4; x); P_n(x) = A^{-n} W_n(0; 0, 1/2; 1; Ax)",
                     "P_n(x) = A^{-n} W_n(Ax), A = 2 (P is first-kind Chebyshev, gamma_1^P = 1/8); "
                     "R^{(k)}_n = Q_n still holds",
                     "none", nullptr});
        e.push_back({"jacobi", "beta", "beta_{n+1} = (alpha^2-beta^2)/((2n+s+1)(2n+s+2)^2(2n+s+3))",
                     "the table blocks use this closed form for beta_n (n >= 1), one index lower",
                     "alpha^2 = beta^2", nullptr});
        e.push_back({"jacobi_symmetric_semiclassical", "gammaP",
                     "gamma_{n+1}^P = (n+1)^2(n+alpha+1)^2/((s+2n+1)(s+2n+2)^2(s+2n+3))",
                     "(n+1)(n+alpha+1)(n+beta+1)(n+s+1)/((s+2n+1)(s+2n+2)^2(s+2n+3))", "beta = 0",
                     [](Params& ps, QuadMap&) { ps["beta"] = Rational(0); }});
        e.push_back({"jacobi_symmetric_semiclassical", "u0", "(u_0)_3 last term over (s+2)(s+3)(s+3)",
                     "denominator (s+2)(s+3)(s+4)", "none in the regular parameter range", nullptr});
        e.push_back({"hermite", "class:p=0:a", "P_n, R_n, b_n, a_n orthogonal",
                     "a_n = 0 and b_n = aR_n, as in the generalized Hermite row at mu = 0", "none", nullptr});
        return e;
    }();
    return list;
}

const Erratum* find_erratum(const std::string& family, const std::string& item)
{
    for (const auto& e : errata()) {
        if (e.family == family && e.item == item) {
            return &e;
        }
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Cases and classification

const std::vector<CaseSpec>& canonical_cases()
{
    static const std::vector<CaseSpec> cases = {
        {"p=0", Rational(0), std::nullopt, std::nullopt, false},
        {"a=p=q=0", Rational(0), Rational(0), Rational(0), false},
        {"p=q=0", Rational(0), Rational(0), std::nullopt, false},
        {"a=p=0", Rational(0), std::nullopt, Rational(0), false},
        {"a=q=0", std::nullopt, Rational(0), Rational(0), false},
        {"a=0", std::nullopt, std::nullopt, Rational(0), false},
        {"q=0", std::nullopt, Rational(0), std::nullopt, false},
    };
    return cases;
}

namespace {

enum class Group { nonorthogonal, symmetric, chebyshev34, semiclassical, constant };

Group group_of(const std::string& name)
{
    if (name == "charlier" || name == "laguerre" || name == "bessel" || name == "jacobi") {
        return Group::nonorthogonal;
    }
    if (name == "chebyshev3" || name == "chebyshev4") {
        return Group::chebyshev34;
    }
    if (name == "jacobi_symmetric_semiclassical") {
        return Group::semiclassical;
    }
    if (name == "constant") {
        return Group::constant;
    }
    (void)family_info(name);
    return Group::symmetric;
}

const CaseSpec chebyshev_special{"p=0&q=-1/2", Rational(0), Rational(-1, 2), std::nullopt, false};
const CaseSpec constant_special{"p=-2beta", std::nullopt, std::nullopt, std::nullopt, true};

RelationClaim corecursive_claim(const Rational& mu, std::string text)
{
    RelationClaim c;
    c.kind = RelationClaim::Kind::corecursive;
    c.lhs = ComponentName::P;
    c.mu = mu;
    c.text = std::move(text);
    return c;
}

RelationClaim common_associated_claim(std::size_t k, std::string text)
{
    RelationClaim c;
    c.kind = RelationClaim::Kind::common_associated;
    c.order = k;
    c.text = std::move(text);
    return c;
}

RelationClaim reference_claim(ComponentName lhs, std::size_t k, std::string text)
{
    RelationClaim c;
    c.kind = RelationClaim::Kind::equals_reference;
    c.lhs = lhs;
    c.order = k;
    c.text = std::move(text);
    return c;
}

RelationClaim positive_claim(ComponentName lhs, std::string text)
{
    RelationClaim c;
    c.kind = RelationClaim::Kind::positive_definite;
    c.lhs = lhs;
    c.text = std::move(text);
    return c;
}

RelationClaim shift_claim(ComponentName lhs, AffineRelation shift, std::string text)
{
    RelationClaim c;
    c.kind = RelationClaim::Kind::shift_of_source;
    c.lhs = lhs;
    c.shift = shift;
    c.text = std::move(text);
    return c;
}

ExpectedRow all_nonorthogonal(std::string printed)
{
    ExpectedRow r;
    r.printed = std::move(printed);
    return r;
}

ExpectedRow principal_orthogonal(std::string printed)
{
    ExpectedRow r;
    r.P = r.R = ComponentClass::orthogonal;
    r.printed = std::move(printed);
    return r;
}

/// "Pₙ, Rₙ, bₙ = c·Rₙ orthogonal; aₙ = 0", or both vanishing when c = 0.
ExpectedRow symmetric_row(const Rational& c, std::string printed)
{
    ExpectedRow r = principal_orthogonal(std::move(printed));
    r.a = ComponentClass::vanishing;
    r.a_vanishes = true;
    if (c.is_zero()) {
        r.b = ComponentClass::vanishing;
        r.b_vanishes = true;
    } else {
        r.b = ComponentClass::orthogonal;
        r.b_over_r = c;
    }
    return r;
}

} // namespace

std::vector<CaseSpec> tabulated_cases(const std::string& name)
{
    switch (group_of(name)) {
    case Group::semiclassical: return {canonical_cases().front()};
    case Group::constant: return {constant_special};
    case Group::nonorthogonal: return canonical_cases();
    case Group::symmetric:
    case Group::chebyshev34: {
        auto cases = canonical_cases();
        if (name.rfind("chebyshev", 0) == 0) {
            cases.push_back(chebyshev_special);
        }
        return cases;
    }
    }
    return {};
}

std::optional<CaseSpec> find_case(const std::string& name, const std::string& id)
{
    for (const auto& c : tabulated_cases(name)) {
        if (c.id == id) {
            return c;
        }
    }
    return std::nullopt;
}

std::string to_string(ComponentName c)
{
    return c == ComponentName::P ? "P" : "R";
}

std::string to_string(RelationClaim::Kind k)
{
    switch (k) {
    case RelationClaim::Kind::corecursive: return "corecursive";
    case RelationClaim::Kind::common_associated: return "common_associated";
    case RelationClaim::Kind::equals_reference: return "equals_reference";
    case RelationClaim::Kind::shift_of_source: return "shift_of_source";
    case RelationClaim::Kind::positive_definite: return "positive_definite";
    }
    return "unknown";
}

ExpectedRow table_classification(const std::string& name, const Params& params, const CasePoint& point,
                                 Transcription t)
{
    const std::string& id = point.spec.id;
    if (!find_case(name, id)) {
        throw DomainError("case '" + id + "' is not tabulated for '" + name + "'");
    }
    const Rational& a = point.map.a;
    const bool p_zero = point.map.p.is_zero();

    switch (group_of(name)) {
    case Group::nonorthogonal: return all_nonorthogonal("all cases: P_n, R_n, a_n, b_n nonorthogonal");

    case Group::semiclassical: return symmetric_row(a, "p=0: P_n, R_n orthogonal; a_n = 0, b_n = aR_n");

    case Group::constant: {
        const Rational be = param(params, "beta"), g = param(params, "gamma");
        ExpectedRow r = symmetric_row(a - be, "p=-2beta: P_n, R_n orthogonal; a_n = 0, b_n = (a-beta)R_n");
        r.relations.push_back(corecursive_claim(-g, "P_n(x) = R_n(-gamma; x)"));
        r.relations.push_back(positive_claim(ComponentName::P, "P_n positive definite"));
        r.relations.push_back(positive_claim(ComponentName::R, "R_n positive definite"));
        if (auto A = g.inverse().exact_sqrt()) {
            const Rational B = -*A * (point.map.q + 2 * g - be * be) + be;
            r.relations.push_back(
                shift_claim(ComponentName::R, {*A, B},
                            "R_n(x) = A^{-n} W_n(Ax+B), A = sqrt(1/gamma), B = -A(q+2gamma-beta^2)+beta"));
        }
        return r;
    }

    case Group::symmetric: {
        if (!p_zero) {
            return all_nonorthogonal(id + ": P_n, R_n, a_n, b_n nonorthogonal");
        }
        ExpectedRow r = symmetric_row(a, id == "a=p=q=0" || id == "a=p=0"
                                             ? id + ": P_n, R_n orthogonal; a_n = 0, b_n = 0"
                                             : id + ": P_n, R_n, b_n = aR_n orthogonal; a_n = 0");
        if (name == "hermite" && id == "p=0" && t == Transcription::printed) {
            r.printed = "p=0: P_n, R_n, b_n, a_n orthogonal";
            r.a = ComponentClass::orthogonal;
            r.a_vanishes = false;
            r.b_over_r.reset();
        }
        const bool cheb12 = name == "chebyshev1" || name == "chebyshev2";
        // For the first kind these three claims rest on the misprinted γ₁ᴾ = 1/16.
        const bool printed_cheb1 = name == "chebyshev1" && t == Transcription::printed;
        if ((name == "chebyshev2" || printed_cheb1) && (id == "p=0" || id == chebyshev_special.id)) {
            r.relations.push_back(corecursive_claim(Rational(-1, 4), "P_n(x) = R_n(-1/4; x)"));
        }
        if (cheb12 && id == "p=0") {
            r.relations.push_back(positive_claim(ComponentName::P, "P_n positive definite"));
            r.relations.push_back(positive_claim(ComponentName::R, "R_n positive definite"));
            r.relations.push_back(common_associated_claim(1, "P^{(k)}_n = R^{(k)}_n, k >= 1"));
        }
        if (name == "chebyshev1" && id == chebyshev_special.id) {
            r.relations.push_back(reference_claim(ComponentName::R, 1, "R^{(k)}_n = Q_n, k >= 1"));
            if (printed_cheb1) {
                r.relations.push_back(reference_claim(ComponentName::P, 0, "P_n = Q_n"));
                RelationClaim c = shift_claim(ComponentName::P, {Rational(2), Rational(0)},
                                              "P_n(x) = A^{-n} W_n(0; 0, 1/2; 1; Ax), A = 2");
                c.source_perturbation = PerturbationSpec{Rational(0), {Rational(0)}, {Rational(1, 2)}};
                r.relations.push_back(c);
            } else {
                r.relations.push_back(shift_claim(ComponentName::P, {Rational(2), Rational(0)},
                                                  "P_n(x) = A^{-n} W_n(Ax), A = 2"));
            }
        }
        if (name == "chebyshev2" && id == chebyshev_special.id) {
            r.relations.push_back(reference_claim(ComponentName::R, 0, "R_n = Q_n"));
            r.relations.push_back(reference_claim(ComponentName::P, 1, "P^{(k)}_n = Q_n, k >= 1"));
            r.relations.push_back(
                shift_claim(ComponentName::R, {Rational(2), Rational(0)}, "R_n(x) = A^{-n} W_n(Ax), A = 2"));
        }
        return r;
    }

    case Group::chebyshev34: {
        if (!p_zero) {
            return all_nonorthogonal(id + ": P_n, R_n, a_n, b_n nonorthogonal");
        }
        ExpectedRow r = principal_orthogonal(id + ": P_n, R_n, a_n, b_n orthogonal");
        r.a = r.b = ComponentClass::orthogonal;
        const bool third = name == "chebyshev3";
        const Rational mu = third ? (a - half(1)) / 2 : -(a + half(1)) / 2;
        const std::string mu_text = third ? "1/2(a-1/2)" : "-1/2(a+1/2)";
        if (id == "p=0" || id == chebyshev_special.id) {
            r.relations.push_back(corecursive_claim(mu, "P_n(x) = R_n(" + mu_text + "; x)"));
        }
        if (id == "p=0") {
            r.relations.push_back(positive_claim(ComponentName::P, "P_n positive definite"));
            r.relations.push_back(positive_claim(ComponentName::R, "R_n positive definite"));
            r.relations.push_back(common_associated_claim(1, "P^{(k)}_n = R^{(k)}_n, k >= 1"));
        }
        if (id == chebyshev_special.id) {
            r.relations.push_back(reference_claim(ComponentName::R, 0, "R_n = Q_n"));
            r.relations.push_back(reference_claim(ComponentName::P, 1, "P^{(k)}_n = Q_n, k >= 1"));
            RelationClaim c = shift_claim(ComponentName::R, {Rational(2), Rational(0)},
                                          third ? "R_n(x) = A^{-n} W_n(-1/2; Ax), A = 2"
                                                : "R_n(x) = A^{-n} W_n(1/2; Ax), A = 2");
            c.source_corecursive = third ? Rational(-1, 2) : Rational(1, 2);
            r.relations.push_back(c);
        }
        return r;
    }
    }
    throw DomainError("unclassified family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Sampling

Rational RationalSampler::next()
{
    std::uniform_int_distribution<long> num(1, 18);
    std::uniform_int_distribution<long> den(1, 5);
    long n = num(rng_);
    n = n <= 9 ? n - 10 : n - 9;
    return Rational(n, den(rng_));
}

Params sample_params(const std::string& name, RationalSampler& rng, std::size_t depth)
{
    const auto& info = family_info(name);
    const QuadMap probe{Rational(1), Rational(1), Rational(1)};
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Params ps;
        for (const auto& key : info.params) {
            ps[key] = rng.next();
        }
        if (name == "jacobi" && (ps["alpha"] == ps["beta"] || ps["alpha"] == -ps["beta"])) {
            continue;
        }
        // At α = 1 every βₙ₊₁ vanishes and the a = p = 0 row turns orthogonal.
        if (name == "bessel" && ps["alpha"].is_one()) {
            continue;
        }
        try {
            const FamilySpec spec = build(name, ps);
            check_regular(spec, std::max<std::size_t>(4 * depth + 8, 32));
            if (has_printed_extended(name)) {
                for (std::size_t n = 0; n <= 12; ++n) {
                    (void)printed_extended(name, ps, probe, n);
                    (void)printed_extended(name, ps, probe, n, Transcription::corrected);
                }
            }
            (void)printed_component_recurrences(name, ps, probe);
            if (auto rcs = printed_component_recurrences(name, ps, probe)) {
                (void)rcs->p.prefix(2 * depth + 4);
                (void)rcs->r.prefix(2 * depth + 4);
            }
            (void)printed_moments(name, ps, probe);
            (void)printed_moments(name, ps, probe, Transcription::corrected);
            return ps;
        } catch (const Error&) {
            continue;
        }
    }
    throw DomainError("could not sample regular parameters for '" + name + "'");
}

CasePoint sample_case(const std::string& name, const Params& params, const CaseSpec& spec,
                      RationalSampler& rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        QuadMap m;
        m.p = spec.p ? *spec.p : rng.next();
        m.q = spec.q ? *spec.q : rng.next();
        m.a = spec.a ? *spec.a : rng.next();
        if (spec.p_minus_two_beta) {
            m.p = -2 * param(params, "beta");
        }
        if (name == "constant" && m.a == param(params, "beta")) {
            continue;
        }
        if (name == "chebyshev3" && m.a == half(1)) {
            continue;
        }
        if (name == "chebyshev4" && m.a == -half(1)) {
            continue;
        }
        return {spec, m};
    }
    throw DomainError("could not sample a point for case '" + spec.id + "'");
}

} // namespace quaddec
