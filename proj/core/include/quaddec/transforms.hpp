#ifndef QUADDEC_TRANSFORMS_HPP
#define QUADDEC_TRANSFORMS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "quaddec/coeffs.hpp"
#include "quaddec/mps.hpp"

namespace quaddec {

/// Perturbation of order r ≥ 1: β̃₀ = β₀ + μ₀, β̃ₙ = βₙ + μₙ and γ̃ₙ = λₙγₙ
/// for 1 ≤ n ≤ r. Requires every λₙ ≠ 0 and (μ_r ≠ 0 or λ_r ≠ 1).
struct PerturbationSpec {
    Rational mu0;
    std::vector<Rational> mu;     // μ₁ … μ_r
    std::vector<Rational> lambda; // λ₁ … λ_r

    std::size_t order() const { return mu.size(); }

    /// Throws DomainError when the invariants above fail.
    void validate() const;
};

/// Coefficients of W̃ₙ(x) = A⁻ⁿ Wₙ(Ax + B): β̃ₙ = (βₙ − B)/A, γ̃ₙ₊₁ = γₙ₊₁/A².
RecurrenceCoeffs shift(const RecurrenceCoeffs& rc, const Rational& a, const Rational& b);

/// Polynomial-level shift A⁻ⁿ Wₙ(Ax + B).
SeqPrefix shift_poly(const SeqPrefix& seq, const Rational& a, const Rational& b);

/// Associated sequence of order r: βₙ ↦ βₙ₊ᵣ, γₙ₊₁ ↦ γₙ₊₁₊ᵣ.
RecurrenceCoeffs associated(const RecurrenceCoeffs& rc, std::size_t r);

/// Co-recursive sequence: β₀ ↦ β₀ + μ.
RecurrenceCoeffs corecursive(const RecurrenceCoeffs& rc, const Rational& mu);

RecurrenceCoeffs perturbed(const RecurrenceCoeffs& rc, const PerturbationSpec& spec);

/// True when β₀…β_{depth-1} and γ₁…γ_depth agree.
bool same_coefficients(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs, std::size_t depth);

struct AffineRelation {
    Rational a;
    Rational b;
};

/// Finds (A, B), A > 0, with rhs = shift(lhs, A, B) on β₀…β_{depth-1} and
/// γ₁…γ_depth. A² is read from γ₁ˡʰˢ/γ₁ʳʰˢ; when that ratio is not the
/// square of a rational the relation is reported as absent.
std::optional<AffineRelation> detect_affine_relation(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                                     std::size_t depth = 16);

/// μ with lhs = corecursive(rhs, μ), comparing every other coefficient to
/// depth. μ = 0 means the sequences coincide.
std::optional<Rational> detect_corecursive(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                           std::size_t depth = 16);

/// Smallest k ≤ max_order with associated(lhs, k) = associated(rhs, k).
std::optional<std::size_t> detect_common_associated(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                                    std::size_t max_order, std::size_t depth = 16);

/// rhs = shift(perturbed(lhs, spec), A, B) with a perturbation of the given
/// order (order 0 allows only μ₀, i.e. a co-recursive step). A and B are
/// solved from the unperturbed tail, the perturbation from the head.
struct PerturbedShift {
    AffineRelation shift;
    Rational mu0;
    std::vector<Rational> mu;
    std::vector<Rational> lambda;

    bool is_pure_shift() const;
};

std::optional<PerturbedShift> detect_perturbed_shift(const RecurrenceCoeffs& lhs, const RecurrenceCoeffs& rhs,
                                                     std::size_t order, std::size_t depth = 16);

} // namespace quaddec

#endif
