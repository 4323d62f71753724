#ifndef QUADDEC_GQD_HPP
#define QUADDEC_GQD_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quaddec/coeffs.hpp"
#include "quaddec/mps.hpp"
#include "quaddec/poly.hpp"

namespace quaddec {

/// The quadratic mapping ω(x) = x² + px + q together with the node a of the
/// factor (x − a).
struct QuadMap {
    Rational p;
    Rational q;
    Rational a;

    Poly omega() const { return Poly{q, p, 1}; }
    Rational omega_at(const Rational& x) const { return x * x + p * x + q; }

    friend bool operator==(const QuadMap&, const QuadMap&) = default;
};

/// Components of the decomposition
///
///     W₂ₙ(x)   = Pₙ(ω(x)) + (x − a) aₙ₋₁(ω(x))
///     W₂ₙ₊₁(x) = bₙ(ω(x)) + (x − a) Rₙ(ω(x))
///
/// for n = 0 … depth. The a-sequence is stored shifted by one so that
/// a_seq[0] is the a₋₁ = 0 term; use `a(n)` for aₙ with n ≥ −1.
struct GqdResult {
    SeqPrefix P;
    SeqPrefix R;
    std::vector<Poly> a_seq;
    std::vector<Poly> b_seq;
    std::size_t depth = 0;

    const Poly& a(long n) const { return a_seq.at(static_cast<std::size_t>(n + 1)); }
    const Poly& b(std::size_t n) const { return b_seq.at(n); }

    /// a₀ … a_depth (without the a₋₁ slot).
    std::vector<Poly> a_components() const { return {a_seq.begin() + 1, a_seq.end()}; }

    friend bool operator==(const GqdResult&, const GqdResult&) = default;
};

/// The eight extended-coefficient streams of the principal components of a
/// MOPS. Subscripts follow the recurrences
///
///     Pₙ₊₂ = (x − βₙ₊₁ᴾ)Pₙ₊₁ − γₙ₊₁ᴾPₙ − ϱₙ₊₁ᴾbₙ₊₁ − ρₙ₊₁ᴾbₙ
///     Rₙ₊₂ = (x − βₙ₊₁ᴿ)Rₙ₊₁ − γₙ₊₁ᴿRₙ − ϱₙ₊₁ᴿaₙ₊₁ − ρₙ₊₁ᴿaₙ
///
/// so beta_* take n ≥ 0 and the other streams take k ≥ 1.
class ExtendedCoeffs {
public:
    ExtendedCoeffs(RecurrenceCoeffs rc, QuadMap map) : rc_(std::move(rc)), map_(std::move(map)) {}

    Rational beta_p(std::size_t n) const;
    Rational gamma_p(std::size_t k) const;
    Rational varrho_p(std::size_t k) const;
    Rational rho_p(std::size_t k) const;

    Rational beta_r(std::size_t n) const;
    Rational gamma_r(std::size_t k) const;
    Rational varrho_r(std::size_t k) const;
    Rational rho_r(std::size_t k) const;

    const RecurrenceCoeffs& source() const { return rc_; }
    const QuadMap& map() const { return map_; }

private:
    RecurrenceCoeffs rc_;
    QuadMap map_;
};

/// Values of the eight streams at one index: the beta entries at n, the
/// others at n + 1.
struct ExtendedValues {
    Rational beta_p, gamma_p, varrho_p, rho_p;
    Rational beta_r, gamma_r, varrho_r, rho_r;

    friend bool operator==(const ExtendedValues&, const ExtendedValues&) = default;
};

ExtendedValues extended_values(const ExtendedCoeffs& ec, std::size_t n);

/// λᵥⁿ and θᵥⁿ with aₙ = Σ λᵥⁿ Rᵥ and bₙ = Σ θᵥⁿ Pᵥ; row n has n + 1 entries.
struct LambdaThetaTables {
    std::vector<std::vector<Rational>> lambda;
    std::vector<std::vector<Rational>> theta;
};

/// Finite-depth verdict of the λ/θ orthogonality criterion. The witness is
/// (n, ν) for a nonzero vanishing condition (ν < n) or (n, n) when the
/// effective γₙ₊₁ is zero; both refer to the relation producing Pₙ₊₂ (Rₙ₊₂).
struct CriterionVerdict {
    bool orthogonal = false;
    std::size_t depth = 0;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Single polynomial split f(x) = g(ω(x)) + (x − a) h(ω(x)); returns (g, h).
std::pair<Poly, Poly> decompose_direct(const Poly& f, const QuadMap& map);

/// Components to `depth` by splitting every Wₖ; needs seq.depth() ≥ 2·depth + 2.
GqdResult gqd_direct(const SeqPrefix& seq, const QuadMap& map, std::size_t depth);

/// Components from structure coefficients (general MPS).
GqdResult gqd_structured(const StructureCoeffs& sc, const QuadMap& map, std::size_t depth);

/// Components of a MOPS via the extended-coefficient recurrences.
GqdResult gqd_orthogonal(const RecurrenceCoeffs& rc, const QuadMap& map, std::size_t depth);

/// Secondary components only, through the recurrences that eliminate Pₙ and
/// Rₙ. Requires (a + p + β₂ₙ₊₁)(a − β₂ₙ₊₂) ≠ 0 for every n < depth and throws
/// PreconditionError with the first failing n otherwise.
std::pair<std::vector<Poly>, std::vector<Poly>> anbn_recurrence(const RecurrenceCoeffs& rc,
                                                                const QuadMap& map, std::size_t depth);

LambdaThetaTables lambda_theta(const GqdResult& res);

/// Orthogonality of P and R from the λ/θ tables of a MOPS decomposition.
std::pair<CriterionVerdict, CriterionVerdict> prop4_check(const RecurrenceCoeffs& rc,
                                                          const LambdaThetaTables& tables, const QuadMap& map,
                                                          std::size_t depth);

struct ComponentRecurrences {
    RecurrenceCoeffs p;
    RecurrenceCoeffs r;
};

/// When ϱₖᴾ, ρₖᴾ, ϱₖᴿ, ρₖᴿ vanish for k = 1 … depth, the principal components
/// obey three-term recurrences with (βᴾ, γᴾ) and (βᴿ, γᴿ). A nullopt result is
/// not evidence of nonorthogonality.
std::optional<ComponentRecurrences> corollary_check(const ExtendedCoeffs& ec, std::size_t depth);

/// Shape of the secondary components.
struct SecondaryPattern {
    std::size_t depth = 0;
    bool a_vanishes = false;
    bool b_vanishes = false;
    /// c with bₙ = c·Rₙ for every n, when such a constant exists.
    std::optional<Rational> b_over_r;
    /// c with aₙ = c·Rₙ for every n.
    std::optional<Rational> a_over_r;

    bool generic() const { return !a_vanishes && !b_vanishes && !b_over_r && !a_over_r; }
};

SecondaryPattern secondary_pattern(const GqdResult& res);

enum class ComponentClass { orthogonal, nonorthogonal, vanishing };

std::string to_string(ComponentClass c);

/// Classification of one component sequence at finite depth.
struct ComponentVerdict {
    ComponentClass cls = ComponentClass::nonorthogonal;
    std::size_t depth = 0;
    /// χ witness for a nonorthogonal sequence of exact degrees.
    std::optional<OrthogonalityVerdict::Witness> witness;
    /// First index whose degree is not n (secondary sequences only).
    std::optional<std::size_t> degree_defect;
    /// Recurrence coefficients of the monic normalization when orthogonal.
    RecurrencePrefix recurrence;
    /// Orthogonal with every γₖ > 0 (all coefficients rational, hence real).
    bool positive_definite = false;
};

ComponentVerdict classify_principal(const SeqPrefix& seq);

/// Vanishing when every term is zero; otherwise every term must have exact
/// degree n and the monic normalization must be orthogonal.
ComponentVerdict classify_secondary(const std::vector<Poly>& seq);

} // namespace quaddec

#endif
