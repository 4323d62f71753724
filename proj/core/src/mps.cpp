#include "quaddec/mps.hpp"

#include <string>

#include "quaddec/errors.hpp"

namespace quaddec {

SeqPrefix::SeqPrefix(std::vector<Poly> polys) : polys_(std::move(polys))
{
    if (polys_.empty()) {
        throw DomainError("a sequence prefix needs at least W0");
    }
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        const auto deg = polys_[n].degree();
        if (!deg || *deg != n || !polys_[n].is_monic()) {
            throw DomainError("W" + std::to_string(n) + " is not monic of degree " + std::to_string(n));
        }
    }
}

SeqPrefix SeqPrefix::truncated(std::size_t count) const
{
    if (count == 0 || count > polys_.size()) {
        throw DomainError("cannot truncate prefix to " + std::to_string(count) + " terms");
    }
    return SeqPrefix(std::vector<Poly>(polys_.begin(), polys_.begin() + static_cast<std::ptrdiff_t>(count)));
}

SeqPrefix generate_orthogonal(const RecurrenceCoeffs& rc, std::size_t nmax)
{
    std::vector<Poly> w;
    w.reserve(nmax + 1);
    w.push_back(Poly::constant(1));
    if (nmax >= 1) {
        w.push_back(Poly{-rc.beta(0), 1});
    }
    for (std::size_t n = 0; n + 2 <= nmax; ++n) {
        Poly next = Poly{-rc.beta(n + 1), 1} * w[n + 1] - rc.gamma(n + 1) * w[n];
        w.push_back(std::move(next));
    }
    return SeqPrefix(std::move(w));
}

SeqPrefix generate_structured(const StructureCoeffs& sc, std::size_t nmax)
{
    std::vector<Poly> w;
    w.reserve(nmax + 1);
    w.push_back(Poly::constant(1));
    if (nmax >= 1) {
        w.push_back(Poly{-sc.beta(0), 1});
    }
    for (std::size_t n = 0; n + 2 <= nmax; ++n) {
        Poly next = Poly{-sc.beta(n + 1), 1} * w[n + 1];
        for (std::size_t nu = 0; nu <= n; ++nu) {
            const Rational chi = sc.chi(n, nu);
            if (!chi.is_zero()) {
                next -= chi * w[nu];
            }
        }
        w.push_back(std::move(next));
    }
    return SeqPrefix(std::move(w));
}

std::vector<Rational> expand_in_basis(const Poly& f, const SeqPrefix& basis)
{
    std::vector<Rational> c(basis.size());
    if (f.is_zero()) {
        return c;
    }
    if (*f.degree() > basis.depth()) {
        throw DomainError("degree " + std::to_string(*f.degree()) + " exceeds basis depth " +
                          std::to_string(basis.depth()));
    }
    Poly rest = f;
    while (!rest.is_zero()) {
        const std::size_t d = *rest.degree();
        const Rational lead = rest.leading();
        c[d] = lead;
        rest -= lead * basis[d];
    }
    return c;
}

StructureTable structure_coeffs_of(const SeqPrefix& seq)
{
    StructureTable out;
    if (seq.depth() >= 1) {
        out.beta.push_back(-seq[1].coeff(0));
    }
    const Poly x = Poly::x();
    for (std::size_t n = 0; n + 2 <= seq.depth(); ++n) {
        // W_{n+2} − x·W_{n+1} = −β_{n+1} W_{n+1} − Σ χ_{n,ν} W_ν
        const auto c = expand_in_basis(seq[n + 2] - x * seq[n + 1], seq.truncated(n + 2));
        out.beta.push_back(-c[n + 1]);
        std::vector<Rational> row(n + 1);
        for (std::size_t nu = 0; nu <= n; ++nu) {
            row[nu] = -c[nu];
        }
        out.chi.push_back(std::move(row));
    }
    return out;
}

std::vector<Rational> dual_moments(const SeqPrefix& seq, std::size_t n, std::size_t mmax)
{
    if (mmax > seq.depth()) {
        throw DomainError("moment order " + std::to_string(mmax) + " needs W" + std::to_string(mmax) +
                          " but the prefix stops at W" + std::to_string(seq.depth()));
    }
    if (n > seq.depth()) {
        throw DomainError("dual form index beyond the prefix");
    }
    std::vector<Rational> w(mmax + 1);
    if (n > mmax) {
        return w;
    }
    w[n] = 1;
    for (std::size_t m = n + 1; m <= mmax; ++m) {
        Rational acc;
        for (std::size_t nu = n; nu < m; ++nu) {
            acc -= seq[m].coeff(nu) * w[nu];
        }
        w[m] = acc;
    }
    return w;
}

std::vector<Rational> canonical_moments(const SeqPrefix& seq, std::size_t mmax)
{
    return dual_moments(seq, 0, mmax);
}

MomentTable moment_table(const SeqPrefix& seq, std::size_t mmax)
{
    MomentTable table;
    for (std::size_t n = 0; n <= mmax; ++n) {
        const auto row = dual_moments(seq, n, mmax);
        for (std::size_t m = 0; m <= mmax; ++m) {
            table.moments.emplace(std::make_pair(n, m), row[m]);
        }
    }
    return table;
}

SymmetryVerdict is_symmetric(const SeqPrefix& seq)
{
    SymmetryVerdict v;
    v.depth = seq.depth();
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const Poly expected = n % 2 == 0 ? seq[n] : -seq[n];
        if (reflect(seq[n]) != expected) {
            v.symmetric = false;
            v.witness = n;
            return v;
        }
    }
    return v;
}

OrthogonalityVerdict is_orthogonal(const SeqPrefix& seq)
{
    if (seq.depth() < 2) {
        throw DomainError("orthogonality needs at least W0, W1, W2");
    }
    OrthogonalityVerdict v;
    v.depth = seq.depth();
    const StructureTable sc = structure_coeffs_of(seq);
    for (std::size_t n = 0; n < sc.chi.size(); ++n) {
        for (std::size_t nu = 0; nu < n; ++nu) {
            if (!sc.chi[n][nu].is_zero()) {
                v.witness = OrthogonalityVerdict::Witness{n, nu, sc.chi[n][nu]};
                return v;
            }
        }
        if (sc.chi[n][n].is_zero()) {
            v.witness = OrthogonalityVerdict::Witness{n, n, Rational(0)};
            return v;
        }
    }
    v.orthogonal = true;
    v.recurrence.beta = sc.beta;
    for (const auto& row : sc.chi) {
        v.recurrence.gamma.push_back(row.back());
    }
    return v;
}

} // namespace quaddec
