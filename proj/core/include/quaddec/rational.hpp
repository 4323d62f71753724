#ifndef QUADDEC_RATIONAL_HPP
#define QUADDEC_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace quaddec {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP.
class Rational {
public:
    Rational() = default;
    template <std::integral T> Rational(T value)
    {
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<long>(value);
        } else {
            value_ = static_cast<unsigned long>(value);
        }
    }
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses "n" or "n/d" (an optional leading sign, decimal digits).
    static Rational parse(std::string_view text);

    /// "n" when the denominator is one, "n/d" otherwise.
    std::string str() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const;
    Rational pow(long exponent) const;

    /// Square root if this is the square of a rational, else nullopt.
    /// The non-negative root is returned.
    std::optional<Rational> exact_sqrt() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs)
    {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs)
    {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs)
    {
        value_ *= rhs.value_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

/// Binomial coefficient C(n, k) as a Rational.
Rational binomial(unsigned n, unsigned k);

} // namespace quaddec

#endif
