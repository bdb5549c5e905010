#ifndef GPM_RATIONAL_HPP
#define GPM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gpm
{

// Exact rational number kept in lowest terms with a positive denominator.
// This is the only scalar type of the library; there is no floating point
// anywhere in the arithmetic.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(static_cast<long>(value)) {}
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpz_class integer) : value_(std::move(integer)) {}
    explicit Rational(mpq_class value);

    // Accepts "7", "-3", "1/24", "-3/2"; the fraction is reduced.
    static Rational parse(std::string_view text);

    // Integers print as decimal, everything else as "num/den" in lowest terms.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class &raw() const { return value_; }

    // Throws DivisionByZero for zero.
    [[nodiscard]] Rational inverse() const;

    // Integer power. 0^0 = 1; negative exponents require a nonzero base.
    [[nodiscard]] Rational pow(std::int64_t exponent) const;

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational &x);

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &x);

} // namespace gpm

#endif
