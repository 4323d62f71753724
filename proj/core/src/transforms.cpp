#include "quaddec/transforms.hpp"

#include "quaddec/errors.hpp"

namespace quaddec {

void PerturbationSpec::validate() const
{
    if (mu.empty() || mu.size() != lambda.size()) {
        throw DomainError("perturbation needs r >= 1 and as many lambdas as mus");
    }
    for (const auto& l : lambda) {
        if (l.is_zero()) {
            throw DomainError("perturbation lambda must be nonzero");
        }
    }
    if (mu.back().is_zero() && lambda.back().is_one()) {
        throw DomainError("perturbation of order r needs mu_r != 0 or lambda_r != 1");
    }
}

RecurrenceCoeffs shift(const RecurrenceCoeffs& rc, const Rational& a, const Rational& b)
{
    if (a.is_zero()) {
        throw DomainError("shift needs A != 0");
    }
    const Rational a2 = a * a;
    return RecurrenceCoeffs([rc, a, b](std::size_t n) { return (rc.beta(n) - b) / a; },
                            [rc, a2](std::size_t k) { return rc.gamma(k) / a2; });
}

SeqPrefix shift_poly(const SeqPrefix& seq, const Rational& a, const Rational& b)
{
    if (a.is_zero()) {
        throw DomainError("shift needs A != 0");
    }
    const Poly inner{b, a};
    const Rational a_inv = a.inverse();
    std::vector<Poly> out;
    out.reserve(seq.size());
    Rational factor(1);
    for (const auto& w : seq.polys()) {
        out.push_back(factor * compose(w, inner));
        factor *= a_inv;
    }
    return SeqPrefix(std::move(out));
}

RecurrenceCoeffs associated(const RecurrenceCoeffs& rc, std::size_t r)
{
    return RecurrenceCoeffs([rc, r](std::size_t n) { return rc.beta(n + r); },
                            [rc, r](std::size_t k) { return rc.gamma(k + r); });
}

RecurrenceCoeffs corecursive(const RecurrenceCoeffs& rc, const Rational& mu)
{
    return RecurrenceCoeffs([rc, mu](std::size_t n) { return n == 0 ? rc.beta(0) + mu : rc.beta(n); },
                            [rc](std::size_t k) { return rc.gamma(k); });
}

RecurrenceCoeffs perturbed(const RecurrenceCoeffs& rc, const PerturbationSpec& spec)
{
    spec.validate();
    const std::size_t r = spec.order();
    return RecurrenceCoeffs(
        [rc, spec, r](std::size_t n) {
            if (n == 0) {
                return rc.beta(0) + spec.mu0;
            }
            return n <= r ? rc.beta(n) + spec.mu[n - 1] : rc.beta(n);
        },
        [rc, spec, r](std::size_t k) { return k <= r ? spec.lambda[k - 1] * rc.gamma(k) : rc.gamma(k); });
}

bool same_coefficients(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs, std::size_t depth)
{
    for (std::size_t n = 0; n < depth; ++n) {
        if (lhs.beta(n) != rhs.beta(n) || lhs.gamma(n + 1) != rhs.gamma(n + 1)) {
            return false;
        }
    }
    return true;
}

std::optional<AffineRelation> detect_affine_relation(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                                     std::size_t depth)
{
    auto a = (lhs.gamma(1) / rhs.gamma(1)).exact_sqrt();
    if (!a) {
        return std::nullopt;
    }
    // β̃₀ = (β₀ − B)/A
    const Rational b = lhs.beta(0) - *a * rhs.beta(0);
    if (!same_coefficients(shift(lhs, *a, b), rhs, depth)) {
        return std::nullopt;
    }
    return AffineRelation{*a, b};
}

std::optional<Rational> detect_corecursive(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                           std::size_t depth)
{
    for (std::size_t n = 0; n < depth; ++n) {
        if (lhs.gamma(n + 1) != rhs.gamma(n + 1)) {
            return std::nullopt;
        }
        if (n > 0 && lhs.beta(n) != rhs.beta(n)) {
            return std::nullopt;
        }
    }
    return lhs.beta(0) - rhs.beta(0);
}

std::optional<std::size_t> detect_common_associated(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                                    std::size_t max_order, std::size_t depth)
{
    for (std::size_t k = 0; k <= max_order; ++k) {
        if (same_coefficients(associated(lhs, k), associated(rhs, k), depth)) {
            return k;
        }
    }
    return std::nullopt;
}

bool PerturbedShift::is_pure_shift() const
{
    if (!mu0.is_zero()) {
        return false;
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!mu[i].is_zero() || !lambda[i].is_one()) {
            return false;
        }
    }
    return true;
}

std::optional<PerturbedShift> detect_perturbed_shift(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                                     std::size_t order, std::size_t depth)
{
    if (depth <= order + 1) {
        throw DomainError("detection depth must exceed the perturbation order + 1");
    }
    // Beyond the perturbed head: β̃ₙ = (βₙ − B)/A, γ̃ₖ = γₖ/A².
    const std::size_t tail = order + 1;
    auto a = (lhs.gamma(tail) / rhs.gamma(tail)).exact_sqrt();
    if (!a) {
        return std::nullopt;
    }
    const Rational b = lhs.beta(tail) - *a * rhs.beta(tail);
    const Rational a2 = *a * *a;
    for (std::size_t n = tail; n < depth; ++n) {
        if ((lhs.beta(n) - b) / *a != rhs.beta(n) || lhs.gamma(n + 1) / a2 != rhs.gamma(n + 1)) {
            return std::nullopt;
        }
    }

    PerturbedShift out;
    out.shift = AffineRelation{*a, b};
    // β̃₀ = (β₀ + μ₀ − B)/A and so on for the head.
    out.mu0 = *a * rhs.beta(0) + b - lhs.beta(0);
    for (std::size_t n = 1; n <= order; ++n) {
        out.mu.push_back(*a * rhs.beta(n) + b - lhs.beta(n));
        out.lambda.push_back(a2 * rhs.gamma(n) / lhs.gamma(n));
    }
    return out;
}

} // namespace quaddec
