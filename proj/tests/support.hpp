#ifndef QUADDEC_TESTS_SUPPORT_HPP
#define QUADDEC_TESTS_SUPPORT_HPP

// Shared helpers for the test binaries: seeded random inputs and oracles that
// do not go through the library's own recurrence code.

#include <cstdint>
#include <random>
#include <vector>

#include "quaddec/coeffs.hpp"
#include "quaddec/families.hpp"
#include "quaddec/gqd.hpp"
#include "quaddec/poly.hpp"
#include "quaddec/rational.hpp"

namespace testing {

using namespace quaddec;

inline constexpr std::uint64_t base_seed = 0x5eed0001;
inline constexpr int instances = 120;

inline Rational r(long n, long d = 1)
{
    return Rational(n, d);
}

/// Small rational, possibly zero.
inline Rational small(std::mt19937_64& g)
{
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return Rational(num(g), den(g));
}

inline Rational nonzero(std::mt19937_64& g)
{
    for (;;) {
        Rational v = small(g);
        if (!v.is_zero()) {
            return v;
        }
    }
}

inline Poly random_poly(std::mt19937_64& g, std::size_t max_degree)
{
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Rational> c(deg(g) + 1);
    for (auto& v : c) {
        v = small(g);
    }
    return Poly(std::move(c));
}

/// β₀…β_{count-1} and γ₁…γ_count with every γ nonzero.
inline RecurrencePrefix random_prefix(std::mt19937_64& g, std::size_t count)
{
    RecurrencePrefix rc;
    for (std::size_t i = 0; i < count; ++i) {
        rc.beta.push_back(small(g));
        rc.gamma.push_back(nonzero(g));
    }
    return rc;
}

inline RecurrencePrefix symmetric_prefix(std::mt19937_64& g, std::size_t count)
{
    RecurrencePrefix rc = random_prefix(g, count);
    for (auto& b : rc.beta) {
        b = Rational(0);
    }
    return rc;
}

inline QuadMap random_map(std::mt19937_64& g)
{
    return {small(g), small(g), small(g)};
}

/// Monic Hermite polynomials from the explicit sum
/// Hₙ = Σₖ (−1)ᵏ n!/(k!(n−2k)!) x^{n−2k} / 4ᵏ.
inline Poly monic_hermite(unsigned n)
{
    std::vector<Rational> c(n + 1);
    Rational four_k(1);
    for (unsigned k = 0; 2 * k <= n; ++k) {
        Rational term = binomial(n, 2 * k) * binomial(2 * k, k);
        // n!/(k!(n−2k)!) = C(n, 2k)·C(2k, k)·k!
        for (unsigned j = 2; j <= k; ++j) {
            term *= Rational(j);
        }
        c[n - 2 * k] = (k % 2 ? -term : term) / four_k;
        four_k *= Rational(4);
    }
    return Poly(std::move(c));
}

/// Monic Laguerre polynomials from the explicit sum
/// Lₙ⁽ᵅ⁾ = Σₖ (−1)ⁿ⁻ᵏ n!/k! · C(n+α, n−k) xᵏ.
inline Poly monic_laguerre(const Rational& alpha, unsigned n)
{
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational v(1);
        for (unsigned j = k + 1; j <= n; ++j) {
            v *= Rational(j);
        }
        // C(n+α, n−k) = Π_{j=1}^{n−k} (α + k + j)/j
        for (unsigned j = 1; j <= n - k; ++j) {
            v *= (alpha + Rational(k + j)) / Rational(j);
        }
        c[k] = (n - k) % 2 ? -v : v;
    }
    return Poly(std::move(c));
}

/// Recurrence coefficients read off the two highest subleading coefficients
/// of a monic orthogonal prefix: β₀…β_{N-1}, γ₁…γ_{N-1}.
inline RecurrencePrefix recurrence_from_polys(const std::vector<Poly>& w)
{
    RecurrencePrefix out;
    auto sub = [&](std::size_t n, std::size_t k) { return n >= k ? w[n].coeff(n - k) : Rational(0); };
    for (std::size_t n = 0; n + 1 < w.size(); ++n) {
        const Rational beta = sub(n, 1) - sub(n + 1, 1);
        out.beta.push_back(beta);
        if (n >= 1) {
            out.gamma.push_back(sub(n, 2) - beta * sub(n, 1) - sub(n + 1, 2));
        }
    }
    return out;
}

inline bool same_prefix(const RecurrencePrefix& a, const RecurrencePrefix& b, std::size_t nb, std::size_t ng)
{
    if (a.beta.size() < nb || b.beta.size() < nb || a.gamma.size() < ng || b.gamma.size() < ng) {
        return false;
    }
    for (std::size_t i = 0; i < nb; ++i) {
        if (a.beta[i] != b.beta[i]) {
            return false;
        }
    }
    for (std::size_t i = 0; i < ng; ++i) {
        if (a.gamma[i] != b.gamma[i]) {
            return false;
        }
    }
    return true;
}

} // namespace testing

#endif
