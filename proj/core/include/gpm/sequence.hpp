#ifndef GPM_SEQUENCE_HPP
#define GPM_SEQUENCE_HPP

#include <memory>
#include <string>
#include <vector>

#include <gpm/digits.hpp>
#include <gpm/polynomial.hpp>
#include <gpm/rational.hpp>

namespace gpm
{

class CSequence;

// The sequence b_n of "generalized integers" (first column of a
// generalized Pascal matrix). b_0 = 0 by convention. Values are computed
// on demand and memoized; copies share the same cache, which is safe to
// read and fill from several threads.
class BSequence
{
public:
    // b_n = n
    static BSequence naturals();
    // b_n = phi^{v_q(n)}
    static BSequence fractal(Index q, Rational phi);
    // values[n] = b_n; values[0] is ignored and reads as 0.
    static BSequence explicit_values(std::vector<Rational> values);
    // b_n = c_{n-1} / c_n, the first column of P_c.
    static BSequence from_c(const CSequence &c);

    [[nodiscard]] Rational at(Index n) const;
    Rational operator()(Index n) const { return at(n); }

    // b_1 b_2 ... b_n; throws ZeroFactor when some b_m vanishes.
    [[nodiscard]] Rational factorial(Index n) const;

    // Number of stored terms for explicit sequences, 0 (unbounded) otherwise.
    [[nodiscard]] std::size_t bound() const;
    [[nodiscard]] std::string describe() const;

    struct Impl;

private:
    explicit BSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Coefficients c_n of the series c(x) defining P_c. Normalized so that
// c_0 = c_1 = 1 and every c_n is nonzero.
class CSequence
{
public:
    // c_n = 1/n!  (c(x) = e^x, gives Pascal)
    static CSequence exponential();
    // c_n = 1  (c(x) = 1/(1-x), gives the all-ones matrix)
    static CSequence geometric();
    // c_n = 1 / b_n!
    static CSequence from_b(const BSequence &b);
    // c_{qn+i} = phi^{-n}; throws ZeroPhi for phi = 0.
    static CSequence phi_q(Rational phi, Index q);
    // c_{qn+i} = c_n / phi^n, i.e. 1/b_n! with b = BSequence::fractal(q, phi).
    static CSequence fractal(Index q, Rational phi);
    static CSequence fractal(Index q) { return fractal(q, Rational(static_cast<std::int64_t>(q))); }
    // values[n] = c_n; validated against the normalization.
    static CSequence explicit_values(std::vector<Rational> values);

    [[nodiscard]] Rational at(Index n) const;
    Rational operator()(Index n) const { return at(n); }

    // c_0 + c_1 x + ... + c_D x^D
    [[nodiscard]] Polynomial series(Index max_degree) const;

    [[nodiscard]] std::size_t bound() const;
    [[nodiscard]] std::string describe() const;

    struct Impl;

private:
    explicit CSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// b_n! = b_1 ... b_n, with b_0! = 1.
Rational b_factorial(const BSequence &b, Index n);

// c_n = 1 / b_n!
Rational c_from_b(const BSequence &b, Index n);

// phi^{v_q(n)} for n >= 1.
Rational fractal_b(Index q, const Rational &phi, Index n);

} // namespace gpm

#endif
