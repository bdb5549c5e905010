#include <gpm/polynomial.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <gpm/errors.hpp>

namespace gpm
{

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    normalize();
}

Polynomial Polynomial::constant(const Rational &c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational &c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational{};
}

std::vector<Rational> Polynomial::dense(std::size_t len) const
{
    std::vector<Rational> out(len);
    std::copy_n(coeffs_.begin(), std::min(len, coeffs_.size()), out.begin());
    return out;
}

Polynomial Polynomial::truncated(std::size_t max_degree) const
{
    if (coeffs_.size() <= max_degree + 1) {
        return *this;
    }
    return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_degree + 1)));
}

Polynomial Polynomial::substitute_power(std::size_t k) const
{
    if (k == 0) {
        throw std::invalid_argument("substitute_power: exponent must be positive");
    }
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v[i * k] = coeffs_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scale_variable(const Rational &c) const
{
    std::vector<Rational> v = coeffs_;
    Rational power{1};
    for (auto &x : v) {
        x *= power;
        power *= c;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational &x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial &Polynomial::operator+=(const Polynomial &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    return multiply_truncated(a, b, a.coeffs_.size() + b.coeffs_.size() - 2);
}

std::string Polynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto &c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        first = false;
        Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0 || !mag.is_one()) {
            os << mag;
        }
        if (k >= 1) {
            os << "x";
        }
        if (k >= 2) {
            os << "^" << k;
        }
    }
    return os.str();
}

Polynomial multiply_truncated(const Polynomial &a, const Polynomial &b, std::size_t max_degree)
{
    const auto &ac = a.coefficients();
    const auto &bc = b.coefficients();
    if (ac.empty() || bc.empty()) {
        return {};
    }
    std::size_t len = std::min(ac.size() + bc.size() - 1, max_degree + 1);
    std::vector<Rational> out(len);
    for (std::size_t i = 0; i < ac.size() && i < len; ++i) {
        if (ac[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < bc.size() && i + j < len; ++j) {
            out[i + j] += ac[i] * bc[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial series_inverse(const Polynomial &p, std::size_t max_degree)
{
    Rational p0 = p.coeff(0);
    if (p0.is_zero()) {
        throw DivisionByZero("series_inverse: zero constant term");
    }
    Rational inv0 = p0.inverse();
    std::vector<Rational> out(max_degree + 1);
    out[0] = inv0;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n && k <= static_cast<std::size_t>(p.degree()); ++k) {
            acc += p.coeff(k) * out[n - k];
        }
        out[n] = -acc * inv0;
    }
    return Polynomial(std::move(out));
}

Polynomial w_poly(long m)
{
    if (m < -1) {
        throw std::invalid_argument("w_poly: m must be >= -1");
    }
    return Polynomial(std::vector<Rational>(static_cast<std::size_t>(m + 1), Rational{1}));
}

} // namespace gpm
