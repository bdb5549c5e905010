#include <gpm/fractal.hpp>

#include <map>
#include <stdexcept>
#include <string>

#include <gpm/errors.hpp>
#include <gpm/pascal.hpp>
#include <gpm/special.hpp>
#include <gpm/zero_algebra.hpp>

namespace gpm
{

namespace
{

void require_base(Index q)
{
    if (q < 2) {
        throw std::invalid_argument("modulus q must be >= 2");
    }
}

Rational as_rational(Index v)
{
    return Rational(static_cast<std::int64_t>(v));
}

std::string str(Index v)
{
    return std::to_string(v);
}

} // namespace

Rational fractal_entry(const Rational &phi, Index q, Index n, Index m)
{
    require_base(q);
    if (m > n) {
        return {};
    }
    std::int64_t exponent = 0;
    // For q^k > n both residues equal the indices themselves and n >= m.
    for (Index qk = q; qk <= n; qk *= q) {
        if (n % qk < m % qk) {
            ++exponent;
        }
        if (qk > n / q) {
            break;
        }
    }
    return phi.pow(exponent);
}

TriangularMatrix fractal_matrix(const Rational &phi, Index q, std::size_t size)
{
    require_base(q);
    if (phi.is_zero()) {
        return zero_fractal_matrix(q, size);
    }
    // Factors with q^k >= N are all-ones on the block: for n, m < q^k the
    // residues are n and m themselves and n >= m below the diagonal. The
    // finite product is therefore exact.
    TriangularMatrix acc = phi_q_matrix(Rational{1}, q, size);
    for (Index qk = q; qk < size; qk *= q) {
        acc = hadamard(acc, phi_q_matrix(phi, qk, size));
        if (qk > size / q) {
            break;
        }
    }
    return acc;
}

unsigned fractal_exponent(Index q, Index n, Index m)
{
    require_base(q);
    if (m > n) {
        throw std::invalid_argument("fractal_exponent requires m <= n");
    }
    unsigned exponent = 0;
    while (m > 0) {
        const Index i = n % q;
        const Index j = m % q;
        n /= q;
        m /= q;
        if (i < j) {
            ++m;
            exponent += 1 + valuation(m, q);
        }
    }
    return exponent;
}

Rational fast_gbinom_fractal(Index q, Index n, Index m)
{
    return fast_gbinom_fractal(q, n, m, as_rational(q));
}

Rational fast_gbinom_fractal(Index q, Index n, Index m, const Rational &phi)
{
    if (m > n) {
        return {};
    }
    return phi.pow(fractal_exponent(q, n, m));
}

Polynomial fractal_row(Index q, Index n)
{
    return fractal_row(q, n, as_rational(q));
}

Polynomial fractal_row(Index q, Index n, const Rational &phi)
{
    require_base(q);
    std::map<Index, Polynomial> memo;
    auto row = [&](auto &&self, Index t) -> Polynomial {
        if (t == 0) {
            return Polynomial::constant(Rational{1});
        }
        if (auto it = memo.find(t); it != memo.end()) {
            return it->second;
        }
        const Index hi = t / q;
        const auto lo = static_cast<long>(t % q);
        Polynomial u = w_poly(lo) * self(self, hi).substitute_power(q);
        if (hi > 0) {
            Rational coeff = phi * fractal_b(q, phi, hi);
            Polynomial tail = w_poly(static_cast<long>(q) - 2 - lo).shifted(static_cast<std::size_t>(lo) + 1);
            u += (tail * self(self, hi - 1).substitute_power(q)) * coeff;
        }
        memo.emplace(t, u);
        return u;
    };
    return row(row, n);
}

Polynomial fractal_column(Index q, Index n, std::size_t size)
{
    return fractal_column(q, n, size, as_rational(q));
}

Polynomial fractal_column(Index q, Index n, std::size_t size, const Rational &phi)
{
    require_base(q);
    if (size == 0) {
        return {};
    }
    const std::size_t max_degree = size - 1;
    std::map<Index, Polynomial> memo;
    auto column = [&](auto &&self, Index t) -> Polynomial {
        if (auto it = memo.find(t); it != memo.end()) {
            return it->second;
        }
        Polynomial g;
        if (t < q) {
            std::vector<Rational> v(size);
            for (Index r = t; r < size; ++r) {
                v[r] = fractal_entry(phi, q, r, t);
            }
            g = Polynomial(std::move(v));
        } else {
            const Index hi = t / q;
            const auto lo = static_cast<long>(t % q);
            Polynomial head = w_poly(static_cast<long>(q) - 1 - lo).shifted(static_cast<std::size_t>(lo));
            g = multiply_truncated(head, self(self, hi).substitute_power(q).truncated(max_degree), max_degree);
            if (lo >= 1) {
                Rational coeff = phi * fractal_b(q, phi, hi + 1);
                g += multiply_truncated(w_poly(lo - 1), self(self, hi + 1).substitute_power(q).truncated(max_degree),
                                        max_degree) *
                     coeff;
            }
        }
        memo.emplace(t, g);
        return g;
    };
    return column(column, n);
}

Report pascal_prime_factorization(std::size_t size)
{
    Report report("primes");
    const auto primes = primes_up_to(size == 0 ? 0 : size - 1);
    std::vector<TriangularMatrix> factors;
    factors.reserve(primes.size());
    TriangularMatrix product = phi_q_matrix(Rational{1}, 2, size);
    for (Index p : primes) {
        factors.push_back(fractal_matrix(as_rational(p), p, size));
        product = hadamard(product, factors.back());
    }
    // Ordinary binomials by mpz, independent of every b-sequence.
    for (Index n = 0; n < size; ++n) {
        for (Index m = 0; m <= n; ++m) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), n, m);
            Rational expected(binom);
            report.expect(product(n, m) == expected, [&] {
                Report::Fields f{{"n", str(n)},
                                 {"m", str(m)},
                                 {"expected", expected.to_string()},
                                 {"product", product(n, m).to_string()}};
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    f.emplace_back("p=" + str(primes[i]), factors[i](n, m).to_string());
                }
                return f;
            });
        }
    }
    return report;
}

Polynomial fractal_c_product(Index q, Index max_degree)
{
    require_base(q);
    Polynomial acc = Polynomial::constant(Rational{1});
    Index qn = 1;
    while (qn <= max_degree) {
        // exponent (q^n - 1)/(q - 1) = 1 + q + ... + q^{n-1}
        const Index e = (qn - 1) / (q - 1);
        const Rational scale = as_rational(q).pow(static_cast<std::int64_t>(e)).inverse();
        Polynomial factor = w_poly(static_cast<long>(q) - 1).scale_variable(scale).substitute_power(qn);
        acc = multiply_truncated(acc, factor, max_degree);
        if (qn > max_degree / q) {
            break;
        }
        qn *= q;
    }
    return acc;
}

Report fractal_c_check(Index q, Index max_degree)
{
    Report report("fractal-c");
    const Polynomial product = fractal_c_product(q, max_degree);
    const BSequence b = BSequence::fractal(q, as_rational(q));
    for (Index n = 0; n <= max_degree; ++n) {
        const Rational expected = c_from_b(b, n);
        report.expect(product.coeff(n) == expected, [&] {
            return Report::Fields{{"part", "w-product"},
                                  {"q", str(q)},
                                  {"degree", str(n)},
                                  {"product", product.coeff(n).to_string()},
                                  {"expected", expected.to_string()}};
        });
    }
    std::vector<Polynomial> per_prime;
    for (Index p : primes_up_to(max_degree)) {
        per_prime.push_back(fractal_c_product(p, max_degree));
    }
    Rational inv_factorial{1};
    for (Index n = 0; n <= max_degree; ++n) {
        if (n > 0) {
            inv_factorial /= as_rational(n);
        }
        Rational acc{1};
        for (const auto &series : per_prime) {
            acc *= series.coeff(n);
        }
        report.expect(acc == inv_factorial, [&] {
            return Report::Fields{{"part", "prime Hadamard product"},
                                  {"degree", str(n)},
                                  {"product", acc.to_string()},
                                  {"expected", inv_factorial.to_string()}};
        });
    }
    return report;
}

Report b_functional_equation_check(Index q, Index max_degree)
{
    require_base(q);
    Report report("b-functional-equation");
    const Rational qr = as_rational(q);
    // x w_{q-2}(x) / (1 - x^q)
    Polynomial one_minus = Polynomial::constant(Rational{1}) - Polynomial::monomial(Rational{1}, q);
    Polynomial rhs = multiply_truncated(w_poly(static_cast<long>(q) - 2).shifted(1), series_inverse(one_minus, max_degree),
                                        max_degree);
    std::vector<Rational> scaled(max_degree + 1);
    for (Index k = 1; k * q <= max_degree; ++k) {
        scaled[k * q] = qr * fractal_b(q, qr, k);
    }
    rhs += Polynomial(std::move(scaled));
    for (Index n = 0; n <= max_degree; ++n) {
        const Rational lhs = n == 0 ? Rational{} : fractal_b(q, qr, n);
        report.expect(lhs == rhs.coeff(n), [&] {
            return Report::Fields{{"q", str(q)},
                                  {"degree", str(n)},
                                  {"lhs", lhs.to_string()},
                                  {"rhs", rhs.coeff(n).to_string()}};
        });
    }
    return report;
}

} // namespace gpm
