#ifndef QUADDEC_FAMILIES_HPP
#define QUADDEC_FAMILIES_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quaddec/coeffs.hpp"
#include "quaddec/gqd.hpp"
#include "quaddec/transforms.hpp"

namespace quaddec {

using Params = std::map<std::string, Rational>;

/// A built catalog member.
struct FamilySpec {
    std::string name;
    Params params;
    RecurrenceCoeffs rc;
};

struct FamilyInfo {
    std::string name;
    std::string description;
    std::vector<std::string> params;
    /// Recurrence header as a readable formula.
    std::string recurrence;
};

/// Every registered family, in catalog order.
const std::vector<FamilyInfo>& family_catalog();

const FamilyInfo& family_info(const std::string& name);

/// Builds a family. Missing or unknown parameters throw DomainError.
/// Regularity is checked lazily by the returned coefficients.
FamilySpec build(const std::string& name, const Params& params);

/// Evaluates β₀…β_{count-1}, γ₁…γ_count and rethrows the first
/// RegularityError.
void check_regular(const FamilySpec& spec, std::size_t count);

/// Which reading of a printed formula to use. `corrected` applies every
/// registered erratum and is identical to `printed` elsewhere.
enum class Transcription { printed, corrected };

/// The printed closed forms of the eight extended-coefficient streams,
/// evaluated at one index (beta entries at n, the rest at n + 1). A pole of
/// a printed formula surfaces as RegularityError.
ExtendedValues printed_extended(const std::string& name, const Params& params, const QuadMap& map,
                                std::size_t n, Transcription t = Transcription::printed);

/// True when the family's table prints extended-coefficient formulas.
bool has_printed_extended(const std::string& name);

/// The simplified recurrence coefficients printed for the orthogonal special
/// case of the two worked examples (jacobi_symmetric_semiclassical at p = 0
/// and constant at p = −2β).
std::optional<ComponentRecurrences> printed_component_recurrences(const std::string& name,
                                                                  const Params& params, const QuadMap& map);

/// The printed canonical moments (u₀)₀…(u₀)₃ and (v₀)₀…(v₀)₃ of the worked
/// examples.
struct MomentLists {
    std::vector<Rational> u;
    std::vector<Rational> v;
};

std::optional<MomentLists> printed_moments(const std::string& name, const Params& params, const QuadMap& map,
                                           Transcription t = Transcription::printed);

/// Inferred closed models for the symmetric semi-classical example: (u₀)ₙ,
/// (v₀)ₙ and (w₀)₂ₖ.
Rational model_u0(const Params& params, const Rational& q, std::size_t n);
Rational model_v0(const Params& params, const Rational& q, std::size_t n);
Rational model_w0_even(const Params& params, std::size_t k);

// ---------------------------------------------------------------------------
// Errata

/// A printed formula or table entry that disagrees with the definitions.
/// `restrict_to_locus` moves a sample point onto the parameter set where the
/// printed form is still right (nullptr when there is none).
struct Erratum {
    std::string family;
    /// Stream ("betaP", …), "u0", "beta" (header), or "class:<case>:<component>".
    std::string item;
    std::string printed;
    std::string correction;
    std::string locus;
    std::function<void(Params&, QuadMap&)> restrict_to_locus;
};

const std::vector<Erratum>& errata();

const Erratum* find_erratum(const std::string& family, const std::string& item);

// ---------------------------------------------------------------------------
// Parameter cases and classifications

/// One row of a classification table. Unset values are free and sampled.
struct CaseSpec {
    std::string id;
    std::optional<Rational> p;
    std::optional<Rational> q;
    std::optional<Rational> a;
    /// p is tied to the family parameter β (p = −2β).
    bool p_minus_two_beta = false;
};

/// The seven canonical rows: p=0, a=p=q=0, p=q=0, a=p=0, a=q=0, a=0, q=0.
const std::vector<CaseSpec>& canonical_cases();

/// Rows tabulated for a family: canonical rows (when the table has them)
/// followed by family-specific special rows.
std::vector<CaseSpec> tabulated_cases(const std::string& name);

/// Looks a case up by id among the canonical and special rows of a family.
std::optional<CaseSpec> find_case(const std::string& name, const std::string& id);

enum class ComponentName { P, R };

std::string to_string(ComponentName c);

/// A relation between sequences stated in a table row.
struct RelationClaim {
    enum class Kind {
        /// lhs = other(μ): co-recursive with β₀ moved by μ.
        corecursive,
        /// associated(P, k) = associated(R, k).
        common_associated,
        /// associated(lhs, k) = Q, the constant sequence β = 0, γ = 1/16.
        equals_reference,
        /// lhs = shift(source', A, B) where source' is W, optionally made
        /// co-recursive or perturbed first.
        shift_of_source,
        /// lhs has every γ > 0.
        positive_definite,
    };

    Kind kind = Kind::corecursive;
    ComponentName lhs = ComponentName::P;
    Rational mu;
    std::size_t order = 0;
    AffineRelation shift{Rational(1), Rational(0)};
    std::optional<Rational> source_corecursive;
    std::optional<PerturbationSpec> source_perturbation;
    /// The relation as printed in the table.
    std::string text;
};

std::string to_string(RelationClaim::Kind k);

/// Expected verdicts for one row. A "b = c·R" entry is stored in b_over_r.
struct ExpectedRow {
    ComponentClass P = ComponentClass::nonorthogonal;
    ComponentClass R = ComponentClass::nonorthogonal;
    ComponentClass a = ComponentClass::nonorthogonal;
    ComponentClass b = ComponentClass::nonorthogonal;
    bool a_vanishes = false;
    bool b_vanishes = false;
    /// bₙ = c·Rₙ with the stated constant.
    std::optional<Rational> b_over_r;
    std::vector<RelationClaim> relations;
    /// The row text as printed.
    std::string printed;
};

/// Concrete values for one case: the free entries resolved.
struct CasePoint {
    CaseSpec spec;
    QuadMap map;
};

/// Expected classification of a family at a resolved case point. Throws
/// DomainError when the case is not tabulated for the family.
ExpectedRow table_classification(const std::string& name, const Params& params, const CasePoint& point,
                                 Transcription t = Transcription::corrected);

// ---------------------------------------------------------------------------
// Sampling

/// Seeded generator of small nonzero rationals: numerator in [−9, 9] \ {0},
/// denominator in [1, 5].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next();

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Draws family parameters that keep the coefficients regular and avoid the
/// family's excluded values (α = ±β for Jacobi, α = 1 for Bessel).
Params sample_params(const std::string& name, RationalSampler& rng, std::size_t depth);

/// Resolves the free entries of a case by sampling nonzero rationals, with
/// rejection of points excluded for the family (e.g. a = β for constant).
CasePoint sample_case(const std::string& name, const Params& params, const CaseSpec& spec,
                      RationalSampler& rng);

} // namespace quaddec

#endif
