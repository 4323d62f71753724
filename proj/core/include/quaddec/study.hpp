#ifndef QUADDEC_STUDY_HPP
#define QUADDEC_STUDY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quaddec/families.hpp"
#include "quaddec/gqd.hpp"

namespace quaddec {

/// Seed used when neither --seed nor QUADDEC_SEED is given.
inline constexpr std::uint64_t default_seed = 20240607;

/// A table relation re-checked against the computed components.
struct RelationCheck {
    RelationClaim claim;
    bool holds = false;
    /// Comparison depth in recurrence coefficients.
    std::size_t depth = 0;
};

/// Relations found by the detectors, independent of any table row.
struct DetectedRelations {
    /// P = R(μ).
    std::optional<Rational> corecursive;
    /// Smallest k ≤ 3 with P⁽ᵏ⁾ = R⁽ᵏ⁾.
    std::optional<std::size_t> common_associated;
    /// R = shift(W, A, B) and P = shift(W, A, B).
    std::optional<AffineRelation> r_from_w;
    std::optional<AffineRelation> p_from_w;
};

/// How the printed extended-coefficient block compares with the engine.
enum class ExtendedStatus {
    /// Printed formulas equal the engine.
    match,
    /// Only registered errata differ; the corrected reading equals the engine
    /// and the printed one does too on the erratum locus.
    erratum_confirmed,
    mismatch,
    /// The family has no printed block.
    not_tabulated,
};

std::string to_string(ExtendedStatus s);

struct StudyReport {
    std::string family;
    Params params;
    std::string case_id;
    QuadMap map;
    std::size_t depth = 0;

    ComponentVerdict P, R, a, b;
    SecondaryPattern pattern;
    CriterionVerdict prop4_p, prop4_r;
    /// The collapsed recurrences exist (ϱ and ρ vanish to depth).
    bool corollary = false;
    DetectedRelations detected;

    /// Expected row (corrected transcription) when the case is tabulated.
    std::optional<ExpectedRow> expected;
    std::vector<RelationCheck> relations;
    ExtendedStatus extended = ExtendedStatus::not_tabulated;
    /// Printed stream names that differ from the engine.
    std::vector<std::string> extended_differences;

    /// Verdicts, patterns and every claim agree with the expected row, and
    /// The λ/θ criterion agrees with the χ certificates.
    bool matches_expected() const;
};

/// Runs every step of the workflow for one family and one resolved case.
StudyReport run_case(const FamilySpec& spec, const CasePoint& point, std::size_t depth);

/// Resolves a --cases list ("all", "special", or comma-separated ids) to the
/// family's tabulated rows. Throws DomainError on an unknown id.
std::vector<CaseSpec> select_cases(const std::string& family, const std::string& list);

/// Studies each selected case. Free entries of a case are sampled from `seed`
/// unless given in `fixed` (p, q, a supplied on the command line).
std::vector<StudyReport> study(const FamilySpec& spec, const std::vector<CaseSpec>& cases, std::size_t depth,
                               std::uint64_t seed, const CaseSpec& fixed = {});

/// Compares the printed block with the engine at n = 0 … nmax. Returns the
/// status and the differing stream names.
std::pair<ExtendedStatus, std::vector<std::string>>
compare_extended(const std::string& family, const Params& params, const QuadMap& map, std::size_t nmax);

// ---------------------------------------------------------------------------
// Verification matrix

struct VerifyCell {
    std::string family;
    /// "extended", "classification", "moments" or "recurrences".
    std::string check;
    std::string case_id;
    std::size_t sample = 0;
    Params params;
    QuadMap map;
    bool pass = false;
    std::string status;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t depth = 0;
    std::vector<VerifyCell> cells;

    bool pass() const;
};

/// Extended formulas to n ≤ 12 and every tabulated classification, for
/// `samples` parameter tuples per family.
VerifyReport verify(const std::vector<std::string>& families, std::size_t samples, std::size_t depth,
                    std::uint64_t seed);

// ---------------------------------------------------------------------------
// Moments

struct MomentsReport {
    std::string family;
    Params params;
    QuadMap map;
    std::size_t nmax = 0;
    /// Canonical moments of W, P and R.
    std::vector<Rational> w0, u0, v0;
    /// Printed lists and whether the computed moments equal them.
    std::optional<MomentLists> printed;
    std::optional<bool> printed_match;
    /// (u₀)ₙ = Σ C(n,k) qⁿ⁻ᵏ (w₀)₂ₖ, checked when W is symmetric and p = a = 0.
    std::optional<bool> binomial_identity;
};

/// Moments to nmax. P and R are decomposed from W to degree 2·nmax + 1, so
/// W's own list runs to (w₀)_{2·nmax}.
MomentsReport moments(const FamilySpec& spec, const QuadMap& map, std::size_t nmax);

} // namespace quaddec

#endif
