#include <gpm/rational.hpp>

#include <ostream>

#include <gpm/errors.hpp>

namespace gpm
{

namespace
{

bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole)
{
    if (!valid_integer_text(s)) {
        throw ParseError("invalid rational: \"" + std::string(whole) + "\"");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (sgn(value_.get_den()) == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (sgn(den) == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const
{
    // mpq_get_str already omits "/1" for canonical integers.
    return value_.get_str(10);
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational Rational::pow(std::int64_t exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    auto e = static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    Rational r;
    // Powers of a reduced fraction stay reduced.
    r.value_ = mpq_class(num, den);
    return r;
}

Rational &Rational::operator+=(const Rational &rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero()) {
        throw DivisionByZero("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational &x)
{
    Rational r;
    r.value_ = -x.value_;
    return r;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const Rational &x)
{
    return os << x.to_string();
}

} // namespace gpm
