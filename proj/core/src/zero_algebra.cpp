#include <gpm/zero_algebra.hpp>

#include <stdexcept>
#include <string>

#include <gpm/errors.hpp>
#include <gpm/pascal.hpp>
#include <gpm/sequence.hpp>

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

std::string str(Index v)
{
    return std::to_string(v);
}

void require_fractal(const Polynomial &a, Index q, Index max_degree, const char *name)
{
    if (!a.coeff(0).is_one()) {
        throw NotFractal(std::string(name) + "_0 must be 1");
    }
    for (Index t = q; t <= max_degree; ++t) {
        if (a.coeff(t) != a.coeff(t % q) * a.coeff(t / q)) {
            throw NotFractal(std::string(name) + "(x) is not fractal in base " + str(q) + " at degree " + str(t));
        }
    }
}

} // namespace

int digit_binom(Index q, Index n, Index m)
{
    require_base(q);
    while (m > 0) {
        if (n % q < m % q) {
            return 0;
        }
        n /= q;
        m /= q;
    }
    return 1;
}

TriangularMatrix zero_fractal_matrix(Index q, std::size_t size)
{
    require_base(q);
    return TriangularMatrix::generate(size, [q](Index n, Index m) { return Rational(digit_binom(q, n, m)); });
}

Report sierpinski_selfsim_check(Index q, unsigned k)
{
    require_base(q);
    if (k == 0) {
        throw std::invalid_argument("sierpinski_selfsim_check: k must be >= 1");
    }
    Report report("kron");
    const Index qk = checked_pow(q, k);
    const TriangularMatrix s1 = zero_fractal_matrix(q, q);
    const TriangularMatrix sk = zero_fractal_matrix(q, qk);
    const TriangularMatrix block = zero_fractal_matrix(q, qk * q);
    const TriangularMatrix outer = kronecker(s1, sk);
    const TriangularMatrix inner = kronecker(sk, s1);
    for (Index n = 0; n < block.size(); ++n) {
        for (Index m = 0; m <= n; ++m) {
            report.expect(block(n, m) == outer(n, m) && block(n, m) == inner(n, m), [&] {
                return Report::Fields{{"q", str(q)},
                                      {"k", std::to_string(k)},
                                      {"n", str(n)},
                                      {"m", str(m)},
                                      {"direct", block(n, m).to_string()},
                                      {"S1(x)Sk", outer(n, m).to_string()},
                                      {"Sk(x)S1", inner(n, m).to_string()}};
            });
        }
    }
    return report;
}

TriangularMatrix masked_matrix(const Polynomial &a, Index q, std::size_t size)
{
    require_base(q);
    return TriangularMatrix::generate(size, [&](Index n, Index m) {
        return digit_binom(q, n, m) ? a.coeff(n - m) : Rational{};
    });
}

bool is_fractal_series(const Polynomial &a, Index q, Index max_degree)
{
    try {
        require_fractal(a, q, max_degree, "a");
    } catch (const NotFractal &) {
        return false;
    }
    return true;
}

Polynomial fractal_series(const std::vector<Rational> &base, Index q, Index max_degree)
{
    require_base(q);
    if (base.empty() || !base[0].is_one()) {
        throw NotFractal("fractal generator must start with 1");
    }
    std::vector<Rational> out(max_degree + 1);
    for (Index n = 0; n <= max_degree; ++n) {
        Rational acc{1};
        for (Index t = n; t > 0 && !acc.is_zero(); t /= q) {
            const Index d = t % q;
            acc *= d < base.size() ? base[d] : Rational{};
        }
        out[n] = acc;
    }
    return Polynomial(std::move(out));
}

Polynomial masked_convolve(const Polynomial &a, const Polynomial &b, Index q, Index max_degree)
{
    require_base(q);
    std::vector<Rational> out(max_degree + 1);
    for (Index n = 0; n <= max_degree; ++n) {
        for (Index m = 0; m <= n; ++m) {
            if (digit_binom(q, n, m)) {
                out[n] += a.coeff(m) * b.coeff(n - m);
            }
        }
    }
    return Polynomial(std::move(out));
}

Polynomial carryless_convolve(const Polynomial &a, const Polynomial &b, Index q, Index max_degree)
{
    require_base(q);
    require_fractal(a, q, max_degree, "a");
    require_fractal(b, q, max_degree, "b");
    // c_d = [x^d] a(x) b(x) for single digits d < q.
    std::vector<Rational> digit_coeff(q);
    for (Index d = 0; d < q; ++d) {
        for (Index m = 0; m <= d; ++m) {
            digit_coeff[d] += a.coeff(m) * b.coeff(d - m);
        }
    }
    std::vector<Rational> out(max_degree + 1);
    for (Index n = 0; n <= max_degree; ++n) {
        Rational acc{1};
        for (Index t = n; t > 0; t /= q) {
            acc *= digit_coeff[t % q];
        }
        out[n] = std::move(acc);
    }
    return Polynomial(std::move(out));
}

Polynomial masked_row(const Polynomial &a, Index q, Index n)
{
    require_base(q);
    require_fractal(a, q, n, "a");
    std::vector<Polynomial> base_rows;
    base_rows.reserve(q);
    for (Index d = 0; d < q; ++d) {
        std::vector<Rational> u(d + 1);
        for (Index m = 0; m <= d; ++m) {
            u[m] = a.coeff(d - m);
        }
        base_rows.emplace_back(std::move(u));
    }
    Polynomial row = Polynomial::constant(Rational{1});
    Index stride = 1;
    for (Index t = n; t > 0; t /= q) {
        row = row * base_rows[t % q].substitute_power(stride);
        if (t >= q) {
            stride *= q;
        }
    }
    return row;
}

TriangularMatrix block_matrix(const Polynomial &a, const Polynomial &b, Index q, unsigned k, std::size_t size)
{
    require_base(q);
    const Index qk = checked_pow(q, k);
    if (size % qk != 0) {
        throw SizeMismatch("block_matrix: size " + std::to_string(size) + " is not a multiple of " + str(qk));
    }
    if (b.degree() >= static_cast<long>(qk)) {
        throw SizeMismatch("block_matrix: deg b must be below " + str(qk));
    }
    return TriangularMatrix::generate(size, [&](Index row, Index col) {
        const Index n = row / qk, i = row % qk;
        const Index m = col / qk, j = col % qk;
        if (i < j || !digit_binom(q, n, m) || !digit_binom(q, i, j)) {
            return Rational{};
        }
        return a.coeff(n - m) * b.coeff(i - j);
    });
}

Report block_product_check(const Polynomial &a, const Polynomial &b, const Polynomial &c, const Polynomial &d,
                           Index q, unsigned k, std::size_t size)
{
    Report report("block-product");
    const Index qk = checked_pow(q, k);
    const TriangularMatrix lhs = multiply(block_matrix(a, b, q, k, size), block_matrix(c, d, q, k, size));
    const Index outer_degree = size / qk == 0 ? 0 : size / qk - 1;
    const TriangularMatrix rhs =
        block_matrix(masked_convolve(a, c, q, outer_degree), masked_convolve(b, d, q, qk - 1), q, k, size);
    for (Index n = 0; n < size; ++n) {
        for (Index m = 0; m <= n; ++m) {
            report.expect(lhs(n, m) == rhs(n, m), [&] {
                return Report::Fields{{"q", str(q)},
                                      {"k", std::to_string(k)},
                                      {"n", str(n)},
                                      {"m", str(m)},
                                      {"product", lhs(n, m).to_string()},
                                      {"direct", rhs(n, m).to_string()}};
            });
        }
    }
    return report;
}

Rational t_coefficient(Index q, Index n, Index m)
{
    require_base(q);
    if (m > n) {
        return {};
    }
    mpz_class acc = 1;
    while (n > 0) {
        const Index ni = n % q, mi = m % q;
        if (mi > ni) {
            return {};
        }
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), ni, mi);
        acc *= binom;
        n /= q;
        m /= q;
    }
    return Rational(acc);
}

Polynomial t_row(Index q, Index n)
{
    require_base(q);
    Polynomial row = Polynomial::constant(Rational{1});
    Index stride = 1;
    for (Index t = n; t > 0; t /= q) {
        const Polynomial factor = Polynomial::constant(Rational{1}) + Polynomial::monomial(Rational{1}, stride);
        for (Index e = 0; e < t % q; ++e) {
            row = row * factor;
        }
        if (t >= q) {
            stride *= q;
        }
    }
    return row;
}

TriangularMatrix t_matrix(Index q, std::size_t size)
{
    require_base(q);
    return TriangularMatrix::generate(size, [q](Index n, Index m) { return t_coefficient(q, n, m); });
}

TriangularMatrix t_matrix_kronecker(Index q, std::size_t size)
{
    require_base(q);
    const TriangularMatrix first = build_from_c(CSequence::exponential(), q);
    TriangularMatrix acc = first;
    while (acc.size() < size) {
        acc = kronecker(acc, first);
    }
    return acc.leading_block(size);
}

TriangularMatrix t_matrix_overlay(Index q, std::size_t size)
{
    require_base(q);
    if (size == 0) {
        return TriangularMatrix::from_rows({});
    }
    std::vector<Rational> base(q);
    Rational inv_factorial{1};
    for (Index d = 0; d < q; ++d) {
        if (d > 0) {
            inv_factorial /= Rational(static_cast<std::int64_t>(d));
        }
        base[d] = inv_factorial;
    }
    const CSequence c = CSequence::explicit_values(fractal_series(base, q, size - 1).dense(size));
    return hadamard(build_from_c(c, size), zero_fractal_matrix(q, size));
}

} // namespace gpm
