#include "quaddec/rational.hpp"

#include <ostream>

#include "quaddec/errors.hpp"

namespace quaddec {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (sgn(value_.get_den()) == 0) {
        throw DivisionByZero();
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    // Accept the typographic minus sign (U+2212) as well as ASCII '-'.
    static constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (s.rfind(unicode_minus, 0) == 0) {
        s.replace(0, unicode_minus.size(), "-");
    }

    std::string_view body(s);
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const
{
    return value_.get_str(10);
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::inverse() const
{
    return Rational(1) / *this;
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::optional<Rational> Rational::exact_sqrt() const
{
    if (sign() < 0) {
        return std::nullopt;
    }
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Rational(mpq_class(sqrt(num), sqrt(den)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

} // namespace quaddec
