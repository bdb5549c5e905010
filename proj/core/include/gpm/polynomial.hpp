#ifndef GPM_POLYNOMIAL_HPP
#define GPM_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gpm/rational.hpp>

namespace gpm
{

// Dense univariate polynomial with exact coefficients, index = degree.
// Also used as a power series truncated at an explicit degree. Trailing
// zeros are never stored, so the zero polynomial has no coefficients.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational &c);
    // c * x^k
    static Polynomial monomial(const Rational &c, std::size_t k);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Zero beyond the stored degree.
    [[nodiscard]] Rational coeff(std::size_t k) const;
    [[nodiscard]] const std::vector<Rational> &coefficients() const { return coeffs_; }
    // Coefficients 0..len-1, zero padded.
    [[nodiscard]] std::vector<Rational> dense(std::size_t len) const;

    [[nodiscard]] Polynomial truncated(std::size_t max_degree) const;
    // p(x^k)
    [[nodiscard]] Polynomial substitute_power(std::size_t k) const;
    // p(c x)
    [[nodiscard]] Polynomial scale_variable(const Rational &c) const;
    // x^k p(x)
    [[nodiscard]] Polynomial shifted(std::size_t k) const;
    [[nodiscard]] Rational evaluate(const Rational &x) const;

    Polynomial &operator+=(const Polynomial &rhs);
    Polynomial &operator-=(const Polynomial &rhs);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

// Product truncated at max_degree.
Polynomial multiply_truncated(const Polynomial &a, const Polynomial &b, std::size_t max_degree);

// Power series reciprocal through max_degree. Throws DivisionByZero when
// the constant term vanishes.
Polynomial series_inverse(const Polynomial &p, std::size_t max_degree);

// w_m(x) = 1 + x + ... + x^m, with w_{-1} = 0.
Polynomial w_poly(long m);

} // namespace gpm

#endif
