#ifndef QUADDEC_MPS_HPP
#define QUADDEC_MPS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quaddec/coeffs.hpp"
#include "quaddec/poly.hpp"

namespace quaddec {

/// The first polynomials W₀ … W_N of a monic polynomial sequence.
/// Construction checks that Wₙ is monic of exact degree n.
class SeqPrefix {
public:
    explicit SeqPrefix(std::vector<Poly> polys);

    std::size_t size() const { return polys_.size(); }
    /// Highest index N present.
    std::size_t depth() const { return polys_.size() - 1; }

    const Poly& operator[](std::size_t n) const { return polys_.at(n); }
    const std::vector<Poly>& polys() const { return polys_; }

    /// W₀ … W_count-1.
    SeqPrefix truncated(std::size_t count) const;

    friend bool operator==(const SeqPrefix&, const SeqPrefix&) = default;

private:
    std::vector<Poly> polys_;
};

/// Moments (wₙ)ₘ of the dual sequence, keyed by (n, m).
struct MomentTable {
    std::map<std::pair<std::size_t, std::size_t>, Rational> moments;

    const Rational& at(std::size_t n, std::size_t m) const { return moments.at({n, m}); }
};

struct SymmetryVerdict {
    bool symmetric = true;
    std::size_t depth = 0;
    /// First index n with Wₙ(−x) ≠ (−1)ⁿWₙ(x).
    std::optional<std::size_t> witness;
};

/// Finite-depth orthogonality certificate.
struct OrthogonalityVerdict {
    struct Witness {
        std::size_t n = 0;
        std::size_t nu = 0;
        Rational chi;
    };

    bool orthogonal = false;
    /// Highest polynomial index examined.
    std::size_t depth = 0;
    /// χₙ,ᵥ ≠ 0 with ν < n, or χₙ,ₙ = 0 (regularity failure).
    std::optional<Witness> witness;
    /// β₀…β_{depth-1} and γ₁…γ_{depth-1} when orthogonal.
    RecurrencePrefix recurrence;
};

/// W₀ … W_nmax from the three-term recurrence.
SeqPrefix generate_orthogonal(const RecurrenceCoeffs& rc, std::size_t nmax);

/// W₀ … W_nmax from the structure relation.
SeqPrefix generate_structured(const StructureCoeffs& sc, std::size_t nmax);

/// Coefficients c₀ … c_N (N = basis.depth()) with f = Σ cᵥ Wᵥ. Throws
/// DomainError when deg f exceeds the basis depth.
std::vector<Rational> expand_in_basis(const Poly& f, const SeqPrefix& basis);

/// Structure coefficients recovered from a prefix: β₀ … β_{N-1} and the
/// χ rows 0 … N-2.
StructureTable structure_coeffs_of(const SeqPrefix& seq);

/// (wₙ)₀ … (wₙ)_mmax, all zero when n > mmax. Requires mmax ≤ seq.depth()
/// and n ≤ seq.depth().
std::vector<Rational> dual_moments(const SeqPrefix& seq, std::size_t n, std::size_t mmax);

/// Moments of the canonical form w₀: (w₀)₀ … (w₀)_mmax.
std::vector<Rational> canonical_moments(const SeqPrefix& seq, std::size_t mmax);

/// All (wₙ)ₘ with n ≤ m ≤ mmax (and the zero entries m < n).
MomentTable moment_table(const SeqPrefix& seq, std::size_t mmax);

SymmetryVerdict is_symmetric(const SeqPrefix& seq);

/// Orthogonal to depth N iff χₙ,ᵥ = 0 for ν < n and χₙ,ₙ ≠ 0 for every
/// n ≤ N − 2. Requires at least W₀, W₁, W₂.
OrthogonalityVerdict is_orthogonal(const SeqPrefix& seq);

} // namespace quaddec

#endif
