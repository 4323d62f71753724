#ifndef QUADDEC_COEFFS_HPP
#define QUADDEC_COEFFS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "quaddec/rational.hpp"

namespace quaddec {

/// Finite table of recurrence coefficients: beta[n] = βₙ (n ≥ 0) and
/// gamma[k-1] = γₖ (k ≥ 1).
struct RecurrencePrefix {
    std::vector<Rational> beta;
    std::vector<Rational> gamma;

    friend bool operator==(const RecurrencePrefix&, const RecurrencePrefix&) = default;
};

/// Lazily evaluated, memoized recurrence coefficients of a MOPS,
///
///     W₀ = 1,  W₁ = x − β₀,  Wₙ₊₂ = (x − βₙ₊₁) Wₙ₊₁ − γₙ₊₁ Wₙ.
///
/// `gamma(k)` uses the natural subscript, k ≥ 1. A zero or undefined γₖ is
/// reported as a RegularityError when it is first requested; an undefined
/// βₙ (a pole of its formula) likewise.
///
/// Copies share one memo table. The table is mutex-protected, so a value may
/// be read from several threads.
class RecurrenceCoeffs {
public:
    using Formula = std::function<Rational(std::size_t)>;

    RecurrenceCoeffs(Formula beta, Formula gamma);

    /// Coefficients known only up to the prefix length; indices past it throw
    /// DomainError.
    static RecurrenceCoeffs from_prefix(RecurrencePrefix prefix);

    Rational beta(std::size_t n) const;
    Rational gamma(std::size_t k) const;

    /// β₀…β_{count-1} and γ₁…γ_count.
    RecurrencePrefix prefix(std::size_t count) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Finite structure-coefficient table: beta[n] = βₙ, chi[n][ν] = χₙ,ᵥ with
/// 0 ≤ ν ≤ n.
struct StructureTable {
    std::vector<Rational> beta;
    std::vector<std::vector<Rational>> chi;

    friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

/// Structure coefficients of an arbitrary MPS,
///
///     W₀ = 1,  W₁ = x − β₀,  Wₙ₊₂ = (x − βₙ₊₁) Wₙ₊₁ − Σ_{ν=0}^{n} χₙ,ᵥ Wᵥ.
class StructureCoeffs {
public:
    using BetaFormula = std::function<Rational(std::size_t)>;
    using ChiFormula = std::function<Rational(std::size_t, std::size_t)>;

    StructureCoeffs(BetaFormula beta, ChiFormula chi);

    static StructureCoeffs from_table(StructureTable table);

    /// The orthogonal special case: χₙ,ₙ = γₙ₊₁ and χₙ,ᵥ = 0 for ν < n.
    static StructureCoeffs from_recurrence(const RecurrenceCoeffs& rc);

    Rational beta(std::size_t n) const;
    Rational chi(std::size_t n, std::size_t nu) const;

    /// β₀…β_{count-1} and the χ rows 0…count-2.
    StructureTable table(std::size_t count) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

} // namespace quaddec

#endif
