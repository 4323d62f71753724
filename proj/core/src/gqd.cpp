#include "quaddec/gqd.hpp"

#include "quaddec/errors.hpp"

namespace quaddec {

namespace {

const Poly& y_var()
{
    static const Poly y = Poly::x();
    return y;
}

Poly c(const Rational& v)
{
    return Poly::constant(v);
}

} // namespace

// ---------------------------------------------------------------------------
// Direct splitting

std::pair<Poly, Poly> decompose_direct(const Poly& f, const QuadMap& map)
{
    // f = Σ (uₖ + vₖx) ωᵏ, then uₖ + vₖx = (uₖ + a vₖ) + (x − a) vₖ.
    const Poly omega = map.omega();
    std::vector<Rational> g;
    std::vector<Rational> h;
    Poly rest = f;
    while (!rest.is_zero()) {
        auto [quot, rem] = divrem(rest, omega);
        const Rational u = rem.coeff(0);
        const Rational v = rem.coeff(1);
        g.push_back(u + map.a * v);
        h.push_back(v);
        rest = std::move(quot);
    }
    return {Poly(std::move(g)), Poly(std::move(h))};
}

GqdResult gqd_direct(const SeqPrefix& seq, const QuadMap& map, std::size_t depth)
{
    if (seq.depth() < 2 * depth + 2) {
        throw DomainError("gqd_direct: need W up to index " + std::to_string(2 * depth + 2));
    }
    std::vector<Poly> P, R, a{Poly{}}, b;
    for (std::size_t n = 0; n <= depth; ++n) {
        auto [pn, am1] = decompose_direct(seq[2 * n], map);
        auto [bn, rn] = decompose_direct(seq[2 * n + 1], map);
        if (n == 0 && !am1.is_zero()) {
            throw DomainError("gqd_direct: W₀ is not constant");
        }
        P.push_back(std::move(pn));
        R.push_back(std::move(rn));
        b.push_back(std::move(bn));
    }
    for (std::size_t n = 1; n <= depth + 1; ++n) {
        a.push_back(decompose_direct(seq[2 * n], map).second);
    }
    return {SeqPrefix(std::move(P)), SeqPrefix(std::move(R)), std::move(a), std::move(b), depth};
}

// ---------------------------------------------------------------------------
// Structure-coefficient engine

GqdResult gqd_structured(const StructureCoeffs& sc, const QuadMap& map, std::size_t depth)
{
    const Rational& a = map.a;
    const Rational& p = map.p;
    const Poly shifted_y = y_var() - c(map.omega_at(a));

    std::vector<Poly> P{c(1)}, R{c(1)}, b{c(a - sc.beta(0))};
    // am[k] = aₖ₋₁
    std::vector<Poly> am{Poly{}};

    for (std::size_t n = 0;; ++n) {
        // odd part of W₂ₙ₊₂
        Poly an = b[n] - c(a + p + sc.beta(2 * n + 1)) * R[n];
        for (std::size_t nu = 0; nu <= n; ++nu) {
            an -= sc.chi(2 * n, 2 * nu) * am[nu];
        }
        for (std::size_t nu = 0; nu < n; ++nu) {
            an -= sc.chi(2 * n, 2 * nu + 1) * R[nu];
        }
        am.push_back(std::move(an));
        if (n == depth) {
            break;
        }

        // even part of W₂ₙ₊₂
        Poly pn = shifted_y * R[n] + (a - sc.beta(2 * n + 1)) * b[n];
        for (std::size_t nu = 0; nu <= n; ++nu) {
            pn -= sc.chi(2 * n, 2 * nu) * P[nu];
        }
        for (std::size_t nu = 0; nu < n; ++nu) {
            pn -= sc.chi(2 * n, 2 * nu + 1) * b[nu];
        }
        P.push_back(std::move(pn));

        // W₂ₙ₊₃
        const Rational beta = sc.beta(2 * n + 2);
        Poly bn = (a - beta) * P[n + 1] + shifted_y * am[n + 1];
        Poly rn = P[n + 1] - (a + p + beta) * am[n + 1];
        for (std::size_t nu = 0; nu <= n; ++nu) {
            const Rational even = sc.chi(2 * n + 1, 2 * nu);
            const Rational odd = sc.chi(2 * n + 1, 2 * nu + 1);
            bn -= even * P[nu] + odd * b[nu];
            rn -= even * am[nu] + odd * R[nu];
        }
        b.push_back(std::move(bn));
        R.push_back(std::move(rn));
    }
    return {SeqPrefix(std::move(P)), SeqPrefix(std::move(R)), std::move(am), std::move(b), depth};
}

// ---------------------------------------------------------------------------
// Extended coefficients

namespace {

void require_positive(std::size_t k, const char* name)
{
    if (k == 0) {
        throw DomainError(std::string(name) + " is indexed from 1");
    }
}

} // namespace

Rational ExtendedCoeffs::beta_p(std::size_t n) const
{
    const Rational& a = map_.a;
    const Rational w = map_.omega_at(a);
    if (n == 0) {
        return rc_.gamma(1) + w - (a - rc_.beta(0)) * (a - rc_.beta(1));
    }
    const std::size_t m = 2 * n;
    const Rational bm = rc_.beta(m);
    return w + rc_.gamma(m) + rc_.gamma(m + 1) - (bm + a + map_.p) * (a - bm);
}

Rational ExtendedCoeffs::gamma_p(std::size_t k) const
{
    require_positive(k, "gamma_p");
    return rc_.gamma(2 * k - 1) * rc_.gamma(2 * k);
}

Rational ExtendedCoeffs::varrho_p(std::size_t k) const
{
    require_positive(k, "varrho_p");
    return rc_.beta(2 * k) + rc_.beta(2 * k + 1) + map_.p;
}

Rational ExtendedCoeffs::rho_p(std::size_t k) const
{
    require_positive(k, "rho_p");
    return rc_.gamma(2 * k) * (rc_.beta(2 * k - 1) + rc_.beta(2 * k) + map_.p);
}

Rational ExtendedCoeffs::beta_r(std::size_t n) const
{
    const Rational& a = map_.a;
    const Rational& p = map_.p;
    const Rational w = map_.omega_at(a);
    if (n == 0) {
        const Rational b0 = rc_.beta(0), b1 = rc_.beta(1), b2 = rc_.beta(2);
        return w + rc_.gamma(1) + rc_.gamma(2) - (a - b0) * (a - b1) - (p + b0 + b1) * (b2 + a + p);
    }
    const std::size_t m = 2 * n + 1;
    const Rational bm = rc_.beta(m);
    return w + rc_.gamma(m) + rc_.gamma(m + 1) - (bm + a + p) * (a - bm);
}

Rational ExtendedCoeffs::gamma_r(std::size_t k) const
{
    require_positive(k, "gamma_r");
    return rc_.gamma(2 * k) * rc_.gamma(2 * k + 1);
}

Rational ExtendedCoeffs::varrho_r(std::size_t k) const
{
    require_positive(k, "varrho_r");
    return rc_.beta(2 * k + 1) + rc_.beta(2 * k + 2) + map_.p;
}

Rational ExtendedCoeffs::rho_r(std::size_t k) const
{
    require_positive(k, "rho_r");
    return rc_.gamma(2 * k + 1) * (rc_.beta(2 * k) + rc_.beta(2 * k + 1) + map_.p);
}

ExtendedValues extended_values(const ExtendedCoeffs& ec, std::size_t n)
{
    return {ec.beta_p(n), ec.gamma_p(n + 1), ec.varrho_p(n + 1), ec.rho_p(n + 1),
            ec.beta_r(n), ec.gamma_r(n + 1), ec.varrho_r(n + 1), ec.rho_r(n + 1)};
}

// ---------------------------------------------------------------------------
// Orthogonal engine

GqdResult gqd_orthogonal(const RecurrenceCoeffs& rc, const QuadMap& map, std::size_t depth)
{
    const ExtendedCoeffs ec(rc, map);
    const Rational& a = map.a;
    const Rational& p = map.p;
    const Poly& y = y_var();
    const Poly shifted_y = y - c(map.omega_at(a));

    std::vector<Poly> P{c(1)}, R{c(1)};
    std::vector<Poly> am{Poly{}, c(-(p + rc.beta(0) + rc.beta(1)))};
    std::vector<Poly> b{c(a - rc.beta(0))};
    if (depth >= 1) {
        P.push_back(y - c(ec.beta_p(0)));
        R.push_back(y - c(ec.beta_r(0)));
    }
    for (std::size_t n = 0; n + 1 <= depth; ++n) {
        // bₙ₊₁ and aₙ₊₁; am[k] holds aₖ₋₁
        b.push_back(-rc.gamma(2 * n + 2) * b[n] + (a - rc.beta(2 * n + 2)) * P[n + 1] +
                    shifted_y * am[n + 1]);
        am.push_back(-rc.gamma(2 * n + 3) * am[n + 1] - (a + p + rc.beta(2 * n + 3)) * R[n + 1] + b[n + 1]);
        if (n + 2 > depth) {
            continue;
        }
        const std::size_t k = n + 1;
        P.push_back((y - c(ec.beta_p(k))) * P[k] - ec.gamma_p(k) * P[n] - ec.varrho_p(k) * b[k] -
                    ec.rho_p(k) * b[n]);
        R.push_back((y - c(ec.beta_r(k))) * R[k] - ec.gamma_r(k) * R[n] - ec.varrho_r(k) * am[k + 1] -
                    ec.rho_r(k) * am[k]);
    }
    return {SeqPrefix(std::move(P)), SeqPrefix(std::move(R)), std::move(am), std::move(b), depth};
}

// ---------------------------------------------------------------------------
// Secondary-only recurrences

std::pair<std::vector<Poly>, std::vector<Poly>> anbn_recurrence(const RecurrenceCoeffs& rc,
                                                                const QuadMap& map, std::size_t depth)
{
    const Rational& a = map.a;
    const Rational& p = map.p;
    auto beta = [&](std::size_t n) { return rc.beta(n); };
    auto gamma = [&](std::size_t k) { return rc.gamma(k); };

    for (std::size_t n = 0; n < depth; ++n) {
        if ((a + p + beta(2 * n + 1)).is_zero()) {
            throw PreconditionError(n, "anbn_recurrence: a + p + β₂ₙ₊₁ = 0");
        }
        if ((a - beta(2 * n + 2)).is_zero()) {
            throw PreconditionError(n, "anbn_recurrence: a − β₂ₙ₊₂ = 0");
        }
    }

    const Poly& y = y_var();
    const Poly shifted_y = y - c(map.omega_at(a));
    auto omega_poly_at = [&](const Rational& v) { return y - c(map.omega_at(v)); };

    const Rational b0 = beta(0), b1 = beta(1);
    std::vector<Poly> as{c(-(p + b0 + b1))};
    std::vector<Poly> bs{c(a - b0)};
    if (depth >= 1) {
        const Rational b2 = beta(2);
        bs.push_back((a - (p + b0 + b1 + b2)) * shifted_y +
                     c(-gamma(1) * (a - b2) - gamma(2) * (a - b0) + (a - b0) * (a - b1) * (a - b2)));
    }

    for (std::size_t n = 0; n + 1 <= depth; ++n) {
        const Rational s1 = a + p + beta(2 * n + 1);
        const Rational s3 = a + p + beta(2 * n + 3);
        const Rational d2 = a - beta(2 * n + 2);

        Poly next =
            ((s3 / d2) * omega_poly_at(beta(2 * n + 2)) - c(gamma(2 * n + 2) * s3 / s1 + gamma(2 * n + 3))) *
            as[n];
        if (n >= 1) {
            next -= (gamma(2 * n + 1) * gamma(2 * n + 2) * s3 / s1) * as[n - 1];
        }
        next -= ((p + beta(2 * n + 2) + beta(2 * n + 3)) / d2) * bs[n + 1];
        next -= (gamma(2 * n + 2) * s3 * (p + beta(2 * n + 1) + beta(2 * n + 2)) / (s1 * d2)) * bs[n];
        as.push_back(std::move(next));

        if (n + 2 > depth) {
            continue;
        }
        const Rational d4 = a - beta(2 * n + 4);
        Poly nb =
            ((d4 / s3) * omega_poly_at(beta(2 * n + 3)) - c(gamma(2 * n + 3) * d4 / d2 + gamma(2 * n + 4))) *
            bs[n + 1];
        nb -= (gamma(2 * n + 2) * gamma(2 * n + 3) * d4 / d2) * bs[n];
        nb += ((p + beta(2 * n + 3) + beta(2 * n + 4)) / s3) * (shifted_y * as[n + 1]);
        nb += (gamma(2 * n + 3) * (p + beta(2 * n + 2) + beta(2 * n + 3)) * d4 / (d2 * s3)) *
              (shifted_y * as[n]);
        bs.push_back(std::move(nb));
    }
    return {std::move(as), std::move(bs)};
}

// ---------------------------------------------------------------------------
// λ/θ tables and the orthogonality criterion

namespace {

std::vector<std::vector<Rational>> expansion_rows(const std::vector<Poly>& seq, const SeqPrefix& basis,
                                                  std::size_t depth)
{
    std::vector<std::vector<Rational>> rows;
    for (std::size_t n = 0; n <= depth; ++n) {
        auto full = expand_in_basis(seq.at(n), basis);
        for (std::size_t k = n + 1; k < full.size(); ++k) {
            if (!full[k].is_zero()) {
                throw DomainError("secondary component of degree above its index");
            }
        }
        full.resize(n + 1);
        rows.push_back(std::move(full));
    }
    return rows;
}

} // namespace

LambdaThetaTables lambda_theta(const GqdResult& res)
{
    return {expansion_rows(res.a_components(), res.R, res.depth),
            expansion_rows(res.b_seq, res.P, res.depth)};
}

std::pair<CriterionVerdict, CriterionVerdict> prop4_check(const RecurrenceCoeffs& rc,
                                                          const LambdaThetaTables& tables, const QuadMap& map,
                                                          std::size_t depth)
{
    if (depth < 2) {
        throw DomainError("prop4_check: depth must be at least 2");
    }
    if (tables.theta.size() < depth || tables.lambda.size() < depth) {
        throw DomainError("prop4_check: λ/θ tables too short");
    }
    const ExtendedCoeffs ec(rc, map);

    auto run = [&](const std::vector<std::vector<Rational>>& t, auto&& three_term, auto&& varrho,
                   auto&& rho) {
        CriterionVerdict v;
        v.depth = depth;
        for (std::size_t n = 0; n + 2 <= depth; ++n) {
            const Rational vr = varrho(n + 1);
            const Rational rr = rho(n + 1);
            for (std::size_t nu = 0; nu < n; ++nu) {
                if (!(vr * t[n + 1][nu] + rr * t[n][nu]).is_zero()) {
                    v.witness = {n, nu};
                    return v;
                }
            }
            if ((three_term(n + 1) + vr * t[n + 1][n] + rr * t[n][n]).is_zero()) {
                v.witness = {n, n};
                return v;
            }
        }
        v.orthogonal = true;
        return v;
    };

    auto P = run(
        tables.theta, [&](std::size_t k) { return ec.gamma_p(k); },
        [&](std::size_t k) { return ec.varrho_p(k); }, [&](std::size_t k) { return ec.rho_p(k); });
    auto R = run(
        tables.lambda, [&](std::size_t k) { return ec.gamma_r(k); },
        [&](std::size_t k) { return ec.varrho_r(k); }, [&](std::size_t k) { return ec.rho_r(k); });
    return {P, R};
}

std::optional<ComponentRecurrences> corollary_check(const ExtendedCoeffs& ec, std::size_t depth)
{
    for (std::size_t k = 1; k <= depth; ++k) {
        if (!ec.varrho_p(k).is_zero() || !ec.rho_p(k).is_zero() || !ec.varrho_r(k).is_zero() ||
            !ec.rho_r(k).is_zero()) {
            return std::nullopt;
        }
    }
    RecurrenceCoeffs p([ec](std::size_t n) { return ec.beta_p(n); },
                       [ec](std::size_t k) { return ec.gamma_p(k); });
    RecurrenceCoeffs r([ec](std::size_t n) { return ec.beta_r(n); },
                       [ec](std::size_t k) { return ec.gamma_r(k); });
    return ComponentRecurrences{std::move(p), std::move(r)};
}

// ---------------------------------------------------------------------------
// Patterns and classification

namespace {

std::optional<Rational> proportional_to(const std::vector<Poly>& lhs, const SeqPrefix& rhs)
{
    // rhs is monic, so the ratio is fixed by the leading coefficient of lhs[0].
    if (lhs.empty()) {
        return std::nullopt;
    }
    const Rational ratio = lhs[0].coeff(0);
    for (std::size_t n = 0; n < lhs.size(); ++n) {
        if (lhs[n] != ratio * rhs[n]) {
            return std::nullopt;
        }
    }
    return ratio;
}

bool all_zero(const std::vector<Poly>& seq)
{
    for (const auto& f : seq) {
        if (!f.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace

SecondaryPattern secondary_pattern(const GqdResult& res)
{
    SecondaryPattern pat;
    pat.depth = res.depth;
    const auto as = res.a_components();
    pat.a_vanishes = all_zero(as);
    pat.b_vanishes = all_zero(res.b_seq);
    if (!pat.b_vanishes) {
        pat.b_over_r = proportional_to(res.b_seq, res.R);
    }
    if (!pat.a_vanishes) {
        pat.a_over_r = proportional_to(as, res.R);
    }
    return pat;
}

std::string to_string(ComponentClass c)
{
    switch (c) {
    case ComponentClass::orthogonal: return "orthogonal";
    case ComponentClass::nonorthogonal: return "nonorthogonal";
    case ComponentClass::vanishing: return "vanishing";
    }
    return "unknown";
}

ComponentVerdict classify_principal(const SeqPrefix& seq)
{
    ComponentVerdict v;
    v.depth = seq.depth();
    const auto ov = is_orthogonal(seq);
    v.witness = ov.witness;
    if (ov.orthogonal) {
        v.cls = ComponentClass::orthogonal;
        v.recurrence = ov.recurrence;
        v.positive_definite = true;
        for (const auto& g : v.recurrence.gamma) {
            if (g.sign() <= 0) {
                v.positive_definite = false;
            }
        }
    }
    return v;
}

ComponentVerdict classify_secondary(const std::vector<Poly>& seq)
{
    ComponentVerdict v;
    v.depth = seq.empty() ? 0 : seq.size() - 1;
    if (all_zero(seq)) {
        v.cls = ComponentClass::vanishing;
        return v;
    }
    std::vector<Poly> monic;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const auto deg = seq[n].degree();
        if (!deg || *deg != n) {
            v.degree_defect = n;
            return v;
        }
        monic.push_back(seq[n] * seq[n].leading().inverse());
    }
    auto out = classify_principal(SeqPrefix(std::move(monic)));
    out.depth = v.depth;
    return out;
}

} // namespace quaddec
