#include <doctest.h>

#include "quaddec/errors.hpp"
#include "quaddec/families.hpp"
#include "quaddec/gqd.hpp"
#include "quaddec/transforms.hpp"
#include "support.hpp"

using namespace quaddec;
using testing::r;

namespace {

const Poly y = Poly::x();

Poly c(const Rational& v)
{
    return Poly::constant(v);
}

RecurrenceCoeffs rc_of(const char* name, const Params& ps = {})
{
    return build(name, ps).rc;
}

} // namespace

TEST_SUITE("gqd")
{
    TEST_CASE("decompose_direct")
    {
        const QuadMap m{r(0), r(0), r(0)};
        auto [g1, h1] = decompose_direct(Poly::monomial(r(1), 2), m);
        CHECK(g1 == y);
        CHECK(h1.is_zero());
        auto [g2, h2] = decompose_direct(Poly{r(0), r(-3, 2), r(0), r(1)}, m);
        CHECK(g2.is_zero());
        CHECK(h2 == y - c(r(3, 2)));
        auto [g3, h3] = decompose_direct(Poly{r(1), r(1), r(1)}, m);
        CHECK(g3 == y + c(r(1)));
        CHECK(h3 == c(r(1)));
    }

    TEST_CASE("hermite at the origin")
    {
        const auto rc = rc_of("hermite");
        const QuadMap m{r(0), r(0), r(0)};
        const auto res = gqd_direct(generate_orthogonal(rc, 10), m, 4);
        CHECK(res.P[1] == y - c(r(1, 2)));
        CHECK(res.R[1] == y - c(r(3, 2)));
        for (std::size_t n = 0; n <= 4; ++n) {
            CHECK(res.a(static_cast<long>(n)).is_zero());
            CHECK(res.b(n).is_zero());
        }
        CHECK(res == gqd_orthogonal(rc, m, 4));
    }

    TEST_CASE("initial conditions")
    {
        const auto rc = rc_of("laguerre", {{"alpha", r(2, 3)}});
        const QuadMap m{r(1, 2), r(-1), r(3)};
        for (const auto& res :
             {gqd_orthogonal(rc, m, 0), gqd_structured(StructureCoeffs::from_recurrence(rc), m, 0),
              gqd_direct(generate_orthogonal(rc, 2), m, 0)}) {
            CHECK(res.P[0] == c(r(1)));
            CHECK(res.R[0] == c(r(1)));
            CHECK(res.a(-1).is_zero());
            CHECK(res.b(0) == c(m.a - rc.beta(0)));
        }
        CHECK_THROWS_AS(gqd_direct(generate_orthogonal(rc, 5), m, 2), DomainError);
    }

    TEST_CASE("structured input of the third kind")
    {
        StructureCoeffs third([](std::size_t n) { return n == 0 ? r(1, 2) : r(0); },
                              [](std::size_t n, std::size_t nu) { return n == nu ? r(1, 4) : r(0); });
        const auto res = gqd_structured(third, {r(0), r(0), r(0)}, 3);
        CHECK(res.b(0) == c(r(-1, 2)));
        CHECK(res == gqd_orthogonal(rc_of("chebyshev3"), {r(0), r(0), r(0)}, 3));
    }

    TEST_CASE("generalized hermite with p = 0")
    {
        const auto rc = rc_of("generalized_hermite", {{"mu", r(3, 2)}});
        const QuadMap m{r(0), r(-2, 3), r(5, 4)};
        const auto pat = secondary_pattern(gqd_orthogonal(rc, m, 8));
        CHECK(pat.a_vanishes);
        CHECK(pat.b_over_r == r(5, 4));
    }

    TEST_CASE("constant coefficients with p = -2 beta")
    {
        const Rational beta(2, 3), gamma(5, 2), a(-1, 3);
        const auto rc = rc_of("constant", {{"beta", beta}, {"gamma", gamma}});
        const QuadMap m{-2 * beta, r(7, 5), a};
        const auto res = gqd_orthogonal(rc, m, 8);
        const auto pat = secondary_pattern(res);
        CHECK(pat.a_vanishes);
        CHECK(pat.b_over_r == a - beta);
        const auto [as, bs] = anbn_recurrence(rc, m, 8);
        CHECK(as == res.a_components());
        CHECK(bs == res.b_seq);
    }

    TEST_CASE("R is a shift of W when gamma is a rational square")
    {
        // A² = 1/γ only fixes A up to sign; B = β − A(q + 2γ − β²) works for both.
        const Rational beta(-3, 4), q(2, 7);
        for (const Rational& root : {r(3, 2), r(1, 5), r(2)}) {
            const Rational gamma = root * root;
            const auto rc = rc_of("constant", {{"beta", beta}, {"gamma", gamma}});
            const auto res = gqd_orthogonal(rc, {-2 * beta, q, r(1, 3)}, 8);
            const auto w = generate_orthogonal(rc, 8);
            for (const Rational& a : {root.inverse(), -root.inverse()}) {
                const Rational b = -a * (q + 2 * gamma - beta * beta) + beta;
                CHECK(shift_poly(w, a, b) == res.R);
            }
        }
    }

    TEST_CASE("charlier is nonorthogonal everywhere at the origin")
    {
        const auto res = gqd_orthogonal(rc_of("charlier", {{"alpha", r(1)}}), {r(0), r(0), r(0)}, 4);
        CHECK(classify_principal(res.P).cls == ComponentClass::nonorthogonal);
        CHECK(classify_principal(res.R).cls == ComponentClass::nonorthogonal);
        CHECK(classify_secondary(res.a_components()).cls == ComponentClass::nonorthogonal);
        CHECK(classify_secondary(res.b_seq).cls == ComponentClass::nonorthogonal);
        CHECK(secondary_pattern(res).generic());
    }

    TEST_CASE("extended coefficients in closed form")
    {
        const QuadMap m{r(3, 2), r(-1, 3), r(2, 5)};
        const ExtendedCoeffs h(rc_of("hermite"), m);
        for (std::size_t n = 0; n < 8; ++n) {
            const long k = static_cast<long>(n);
            CHECK(h.varrho_p(n + 1) == m.p);
            CHECK(h.rho_p(n + 1) == Rational(k + 1) * m.p);
            CHECK(h.gamma_p(n + 1) == Rational((k + 1) * (2 * k + 1), 2));
        }
        const Rational alpha(7, 3);
        const ExtendedCoeffs ch(rc_of("charlier", {{"alpha", alpha}}), m);
        for (std::size_t n = 0; n < 8; ++n) {
            CHECK(ch.varrho_p(n + 1) == Rational(4 * static_cast<long>(n) + 5) + m.p + 2 * alpha);
        }
        const Rational beta(-1, 2), gamma(3);
        const ExtendedCoeffs k(rc_of("constant", {{"beta", beta}, {"gamma", gamma}}), m);
        CHECK(k.beta_p(0) == m.q + gamma - beta * beta + m.a * (m.p + 2 * beta));
        const auto v = extended_values(k, 2);
        CHECK(v.beta_p == k.beta_p(2));
        CHECK(v.gamma_r == k.gamma_r(3));
    }

    TEST_CASE("lambda theta tables")
    {
        const auto zero = lambda_theta(gqd_orthogonal(rc_of("hermite"), {r(0), r(0), r(0)}, 4));
        for (const auto& row : zero.lambda) {
            for (const auto& v : row) {
                CHECK(v.is_zero());
            }
        }
        const auto rc = rc_of("generalized_hermite", {{"mu", r(1, 2)}});
        const QuadMap m{r(0), r(0), r(1)};
        const auto res = gqd_orthogonal(rc, m, 3);
        const auto t = lambda_theta(res);
        CHECK(t.theta[0][0] == m.a - rc.beta(0));
        // b₁ = θ₀¹P₀ + θ₁¹P₁ by direct substitution.
        CHECK(res.b(1) == t.theta[1][0] * res.P[0] + t.theta[1][1] * res.P[1]);
        CHECK(t.theta[1][1] == res.b(1).leading());
    }

    TEST_CASE("criterion examples")
    {
        const auto h = rc_of("hermite");
        auto verdicts = [](const RecurrenceCoeffs& rc, const QuadMap& m) {
            return prop4_check(rc, lambda_theta(gqd_orthogonal(rc, m, 8)), m, 8);
        };
        auto [p0, r0] = verdicts(h, {r(0), r(2, 3), r(-3)});
        CHECK(p0.orthogonal);
        CHECK(r0.orthogonal);
        auto [p1, r1] = verdicts(h, {r(5, 2), r(0), r(4, 3)});
        CHECK_FALSE(p1.orthogonal);
        CHECK_FALSE(r1.orthogonal);
        auto [p2, r2] = verdicts(rc_of("legendre"), {r(0), r(0), r(7, 2)});
        CHECK(p2.orthogonal);
        CHECK(r2.orthogonal);
        CHECK_THROWS_AS(prop4_check(h, lambda_theta(gqd_orthogonal(h, {}, 1)), {}, 1), DomainError);
    }

    TEST_CASE("collapsed recurrences of the semiclassical example")
    {
        const Rational alpha(2, 3), beta(5, 4);
        const QuadMap m{r(0), r(-3, 5), r(1, 2)};
        const auto ec =
            ExtendedCoeffs(rc_of("jacobi_symmetric_semiclassical", {{"alpha", alpha}, {"beta", beta}}), m);
        const auto rr = corollary_check(ec, 10);
        REQUIRE(rr.has_value());
        const auto shifted = ExtendedCoeffs(
            rc_of("jacobi_symmetric_semiclassical", {{"alpha", alpha}, {"beta", beta + 1}}), m);
        for (std::size_t n = 0; n < 8; ++n) {
            const Rational k(static_cast<long>(n));
            const Rational s = alpha + beta + 2 * k;
            CHECK(rr->p.gamma(n + 1) == (k + 1) * (alpha + k + 1) * (beta + k + 1) * (alpha + beta + k + 1) /
                                            ((s + 1) * (s + 2) * (s + 2) * (s + 3)));
            CHECK(rr->r.beta(n) == shifted.beta_p(n));
            CHECK(rr->r.gamma(n + 1) == shifted.gamma_p(n + 1));
        }
        CHECK_FALSE(corollary_check(ExtendedCoeffs(rc_of("hermite"), {r(1), r(0), r(0)}), 4).has_value());
    }

    TEST_CASE("secondary recurrences")
    {
        const auto h = rc_of("hermite");
        const QuadMap m{r(1), r(0), r(1)};
        const auto [as, bs] = anbn_recurrence(h, m, 5);
        const auto res = gqd_orthogonal(h, m, 5);
        CHECK(as == res.a_components());
        CHECK(bs == res.b_seq);

        const Rational alpha(1, 2);
        const auto lag = rc_of("laguerre", {{"alpha", alpha}});
        const QuadMap bad{r(1), r(0), lag.beta(2)};
        CHECK_THROWS_AS(anbn_recurrence(lag, bad, 4), PreconditionError);
        try {
            (void)anbn_recurrence(lag, bad, 4);
        } catch (const PreconditionError& e) {
            CHECK(e.index() == 0u);
        }
    }

    TEST_CASE("secondary patterns")
    {
        const auto h = secondary_pattern(gqd_orthogonal(rc_of("hermite"), {r(0), r(0), r(2)}, 8));
        CHECK(h.a_vanishes);
        CHECK(h.b_over_r == r(2));
        const auto g = secondary_pattern(
            gqd_orthogonal(rc_of("gegenbauer", {{"alpha", r(1, 3)}}), {r(0), r(4), r(0)}, 8));
        CHECK(g.a_vanishes);
        CHECK(g.b_vanishes);
        const auto ch =
            secondary_pattern(gqd_orthogonal(rc_of("charlier", {{"alpha", r(2)}}), {r(1), r(-1), r(3)}, 8));
        CHECK(ch.generic());
    }

    TEST_CASE("classification of components")
    {
        const auto res = gqd_orthogonal(rc_of("hermite"), {r(0), r(0), r(2)}, 8);
        const auto p = classify_principal(res.P);
        CHECK(p.cls == ComponentClass::orthogonal);
        CHECK(p.positive_definite);
        CHECK(classify_secondary(res.a_components()).cls == ComponentClass::vanishing);
        CHECK(classify_secondary(res.b_seq).cls == ComponentClass::orthogonal);
        const auto defect = classify_secondary({Poly{r(1)}, Poly{r(2)}});
        CHECK(defect.cls == ComponentClass::nonorthogonal);
        CHECK(defect.degree_defect == 1u);
        CHECK(to_string(ComponentClass::vanishing) == "vanishing");
    }
}
