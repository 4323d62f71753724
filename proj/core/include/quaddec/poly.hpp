#ifndef QUADDEC_POLY_HPP
#define QUADDEC_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quaddec/rational.hpp"

namespace quaddec {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// powers. The zero polynomial has no coefficients; every other value has a
/// nonzero leading coefficient.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly x();
    static Poly monomial(const Rational& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k (zero past the degree).
    Rational coeff(std::size_t k) const;

    /// Leading coefficient; throws DomainError on the zero polynomial.
    const Rational& leading() const;

    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    Rational operator()(const Rational& at) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);

    friend bool operator==(const Poly&, const Poly&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Poly add(const Poly& f, const Poly& g);
Poly sub(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly scale(const Poly& f, const Rational& c);

/// Horner evaluation.
Rational eval(const Poly& f, const Rational& at);

/// f(g(x)).
Poly compose(const Poly& f, const Poly& g);

/// Euclidean division: returns (q, r) with f = q*g + r and deg r < deg g.
/// Throws DivisionByZero when g is the zero polynomial.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);

/// f(-x).
Poly reflect(const Poly& f);

/// Human-readable form, e.g. "x^2 - 1/2".
std::string to_string(const Poly& f, char var = 'x');

} // namespace quaddec

#endif
