#include "quaddec/poly.hpp"

#include <ostream>

#include "quaddec/errors.hpp"

namespace quaddec {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
{
    trim();
}

Poly Poly::constant(const Rational& c)
{
    return Poly(std::vector<Rational>{c});
}

Poly Poly::x()
{
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

Poly Poly::monomial(const Rational& c, std::size_t power)
{
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> Poly::degree() const
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Poly::leading() const
{
    if (coeffs_.empty()) {
        throw DomainError("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rational Poly::operator()(const Rational& at) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) {
        a *= c;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly& a)
{
    Poly r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    return os << to_string(p);
}

Poly add(const Poly& f, const Poly& g)
{
    return f + g;
}
Poly sub(const Poly& f, const Poly& g)
{
    return f - g;
}
Poly mul(const Poly& f, const Poly& g)
{
    return f * g;
}
Poly scale(const Poly& f, const Rational& c)
{
    return f * c;
}

Rational eval(const Poly& f, const Rational& at)
{
    return f(at);
}

Poly compose(const Poly& f, const Poly& g)
{
    // Horner in the ring of polynomials.
    Poly acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * g + Poly::constant(*it);
    }
    return acc;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g)
{
    if (g.is_zero()) {
        throw DivisionByZero();
    }
    const std::size_t dg = *g.degree();
    if (f.is_zero() || *f.degree() < dg) {
        return {Poly{}, f};
    }

    std::vector<Rational> rem = f.coeffs();
    std::vector<Rational> quot(rem.size() - dg);
    const Rational lead_inv = g.leading().inverse();
    const auto& gc = g.coeffs();

    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k].is_zero()) {
            continue;
        }
        const Rational t = rem[k] * lead_inv;
        quot[k - dg] = t;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[k - dg + j] -= t * gc[j];
        }
    }
    rem.resize(dg);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly reflect(const Poly& f)
{
    std::vector<Rational> c = f.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) {
        c[k] = -c[k];
    }
    return Poly(std::move(c));
}

std::string to_string(const Poly& f, char var)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) {
            continue;
        }
        Rational mag = c[k].sign() < 0 ? -c[k] : c[k];
        if (out.empty()) {
            out += c[k].sign() < 0 ? "-" : "";
        } else {
            out += c[k].sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag.is_one() && k > 0;
        if (!unit) {
            out += mag.str();
        }
        if (k > 0) {
            if (!unit) {
                out += "*";
            }
            out += var;
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

} // namespace quaddec
