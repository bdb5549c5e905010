#include <gpm/suites.hpp>

#include <algorithm>
#include <stdexcept>

#include <gmpxx.h>

#include <gpm/fractal.hpp>
#include <gpm/pascal.hpp>
#include <gpm/special.hpp>
#include <gpm/zero_algebra.hpp>

namespace gpm
{

namespace
{

constexpr std::uint64_t seed = 20240611;

std::string str(Index v)
{
    return std::to_string(v);
}

Polynomial random_polynomial(std::mt19937_64 &rng, std::size_t len)
{
    std::vector<Rational> coeffs(len);
    std::uniform_int_distribution<int> zero(0, 4);
    for (auto &c : coeffs) {
        c = zero(rng) == 0 ? Rational{} : random_nonzero_rational(rng);
    }
    return Polynomial(std::move(coeffs));
}

Report identities(std::size_t n)
{
    Report report("identities");
    const Rational seven{7};
    const std::vector<std::pair<std::string, TriangularMatrix>> blocks = {
        {"pascal", build_from_c(CSequence::exponential(), n)},
        {"phiq(7,2)", phi_q_matrix(seven, 2, n)},
        {"phiq(7,3)", phi_q_matrix(seven, 3, n)},
        {"phiq(0,2)", phi_q_matrix(Rational{}, 2, n)},
        {"fractal(2,2)", fractal_matrix(Rational{2}, 2, n)},
        {"fractal(3,3)", fractal_matrix(Rational{3}, 3, n)},
        {"fractal(1/2,5)", fractal_matrix(Rational{1, 2}, 5, n)},
        {"fractal(0,2)", fractal_matrix(Rational{}, 2, n)},
        {"fractal(0,3)", fractal_matrix(Rational{}, 3, n)},
        {"qumbral(-1)", q_umbral_matrix(Rational{-1}, n)},
        {"qumbral(2)", q_umbral_matrix(Rational{2}, n)},
        {"zero-overlay(3)", zero_overlay_matrix(3, n)},
        {"tmatrix(2)", t_matrix(2, n)},
        {"tmatrix(3)", t_matrix(3, n)},
        {"fractal(2,2)xphiq(0,4)", hadamard(fractal_matrix(Rational{2}, 2, n), phi_q_matrix(Rational{}, 4, n))},
    };
    for (const auto &[name, block] : blocks) {
        Report sub = identity_check(block, name);
        report.absorb(sub);
    }
    return report;
}

Report lucas(std::size_t n)
{
    Report report("lucas");
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c <= r; ++c) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), r, c);
            const int parity = mpz_odd_p(binom.get_mpz_t()) ? 1 : 0;
            report.expect(digit_binom(2, r, c) == parity, [&] {
                return Report::Fields{{"n", str(r)}, {"m", str(c)}, {"C(n,m) mod 2", std::to_string(parity)}};
            });
        }
    }
    for (Index q : {2, 3}) {
        const TriangularMatrix digits = t_matrix(q, n);
        report.absorb(compare_matrices("tmatrix-kronecker(" + str(q) + ")", digits, t_matrix_kronecker(q, n)));
        report.absorb(compare_matrices("tmatrix-overlay(" + str(q) + ")", digits, t_matrix_overlay(q, n)));
        for (Index r = 0; r < n; ++r) {
            const Rational sum = t_row(q, r).evaluate(Rational{1});
            const Rational expected = Rational{2}.pow(static_cast<std::int64_t>(DigitVector::of(r, q).digit_sum()));
            report.expect(sum == expected, [&] {
                return Report::Fields{
                    {"check", "row sum"}, {"q", str(q)}, {"n", str(r)}, {"sum", sum.to_string()}};
            });
        }
    }
    return report;
}

Report kron(std::size_t n)
{
    Report report("kron");
    for (Index q : {2, 3}) {
        for (unsigned k = 1; checked_pow(q, k + 1) <= n; ++k) {
            report.absorb(sierpinski_selfsim_check(q, k));
        }
    }
    return report;
}

Report recurrences(std::size_t n)
{
    Report report("recurrences");
    const std::vector<std::pair<std::string, BSequence>> bs = {
        {"naturals", BSequence::naturals()},
        {"fractal(2,2)", BSequence::fractal(2, Rational{2})},
        {"fractal(3,3)", BSequence::fractal(3, Rational{3})},
    };
    for (const auto &[name, b] : bs) {
        const TriangularMatrix direct = build_from_b(b, n);
        report.absorb(compare_matrices("gbinom-recurrence " + name, direct, gbinom_table_via_recurrence(b, n)));
        report.absorb(compare_matrices("from-c " + name, direct, build_from_c(CSequence::from_b(b), n)));
    }
    for (Index q : {2, 3, 4, 5}) {
        const BSequence b = BSequence::fractal(q, Rational(static_cast<std::int64_t>(q)));
        for (Index r = 0; r < n; ++r) {
            for (Index c = 0; c <= r; ++c) {
                const Rational fast = fast_gbinom_fractal(q, r, c);
                const Rational slow = gbinom(b, r, c);
                report.expect(fast == slow, [&] {
                    return Report::Fields{{"check", "fast path"}, {"q", str(q)},         {"n", str(r)},
                                          {"m", str(c)},          {"fast", fast.to_string()}, {"gbinom", slow.to_string()}};
                });
            }
        }
    }
    for (Index q : {2, 3, 5}) {
        const TriangularMatrix block = fractal_matrix(Rational(static_cast<std::int64_t>(q)), q, n);
        for (Index r = 0; r < n; ++r) {
            const Polynomial row = fractal_row(q, r);
            const Polynomial column = fractal_column(q, r, n);
            for (Index c = 0; c < n; ++c) {
                const Rational row_expected = c <= r ? block(r, c) : Rational{};
                const Rational col_expected = c >= r ? block(c, r) : Rational{};
                report.expect(row.coeff(c) == row_expected && column.coeff(c) == col_expected, [&] {
                    return Report::Fields{{"check", "row/column recurrence"},
                                          {"q", str(q)},
                                          {"index", str(r)},
                                          {"degree", str(c)},
                                          {"row", row.coeff(c).to_string()},
                                          {"column", column.coeff(c).to_string()}};
                });
            }
        }
        if (n >= 2) {
            report.absorb(fractal_c_check(q, n - 1));
            report.absorb(b_functional_equation_check(q, n - 1));
        }
    }
    return report;
}

Report umbral(std::size_t n)
{
    Report report("umbral");
    for (std::int64_t q : {-1, 0, 1, 2, 3}) {
        const Rational qr{q};
        report.absorb(compare_matrices("qumbral(" + std::to_string(q) + ") x inverse",
                                       multiply(q_umbral_matrix(qr, n), q_umbral_inverse(qr, n)),
                                       TriangularMatrix::identity(n)));
    }
    report.absorb(compare_matrices("qumbral(-1) = zero-overlay(2)", q_umbral_matrix(Rational{-1}, n),
                                   zero_overlay_matrix(2, n)));
    report.absorb(compare_matrices("qumbral(1) = pascal", q_umbral_matrix(Rational{1}, n),
                                   build_from_c(CSequence::exponential(), n)));
    report.absorb(compare_matrices("qumbral(0) = ones", q_umbral_matrix(Rational{0}, n),
                                   build_from_c(CSequence::geometric(), n)));
    return report;
}

Report convolution(std::size_t n)
{
    Report report("convolution");
    std::mt19937_64 rng(seed);
    const Index max_degree = n - 1;
    for (Index q : {2, 3}) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Rational> base_a(q), base_b(q);
            base_a[0] = base_b[0] = Rational{1};
            for (Index d = 1; d < q; ++d) {
                base_a[d] = random_nonzero_rational(rng);
                base_b[d] = random_nonzero_rational(rng);
            }
            const Polynomial a = fractal_series(base_a, q, max_degree);
            const Polynomial b = fractal_series(base_b, q, max_degree);
            const Polynomial ab = carryless_convolve(a, b, q, max_degree);
            report.absorb(compare_matrices("masked product q=" + str(q),
                                           multiply(masked_matrix(a, q, n), masked_matrix(b, q, n)),
                                           masked_matrix(ab, q, n)));
            for (Index r = 0; r < n; ++r) {
                const Polynomial row = masked_row(a, q, r);
                const auto expected = masked_matrix(a, q, n).row(r);
                report.expect(row == Polynomial(expected), [&] {
                    return Report::Fields{{"check", "masked row"}, {"q", str(q)}, {"n", str(r)}, {"row", row.to_string()}};
                });
            }
        }
    }
    const unsigned k = 1;
    const Index q = 2;
    const std::size_t block_size = n - n % q;
    if (block_size > 0) {
        const Index outer = block_size / q;
        const Polynomial a = random_polynomial(rng, outer), b = random_polynomial(rng, q);
        const Polynomial c = random_polynomial(rng, outer), d = random_polynomial(rng, q);
        report.absorb(block_product_check(a, b, c, d, q, k, block_size));
    }
    const TriangularMatrix ones = build_from_c(CSequence::geometric(), n);
    const TriangularMatrix sierpinski = zero_fractal_matrix(2, n);
    const Polynomial x = random_polynomial(rng, n), y = random_polynomial(rng, n);
    report.expect(pascal_convolve(sierpinski, x, y) == pascal_convolve(sierpinski, y, x), [] {
        return Report::Fields{{"check", "commutativity"}};
    });
    report.expect(pascal_convolve(ones, x, y) == multiply_truncated(x, y, max_degree), [] {
        return Report::Fields{{"check", "all-ones matrix gives the Cauchy product"}};
    });
    return report;
}

Report decompose_roundtrip(std::size_t n)
{
    Report report("decompose-roundtrip");
    std::mt19937_64 rng(seed);
    const Index max_q = n - 1;
    if (max_q < 2) {
        return report;
    }
    const TriangularMatrix pascal = build_from_c(CSequence::exponential(), n);
    report.absorb(compare_matrices("pascal", recompose(phi_coordinates(pascal, max_q), n), pascal));
    for (int trial = 0; trial < 200; ++trial) {
        const TriangularMatrix block = build_from_c(random_c_sequence(rng, n), n);
        report.absorb(compare_matrices("random #" + std::to_string(trial), recompose(phi_coordinates(block, max_q), n),
                                       block));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const TriangularMatrix a = build_from_c(random_c_sequence(rng, n), n);
        const TriangularMatrix b = build_from_c(random_c_sequence(rng, n), n);
        report.absorb(homomorphism_check(a, b, max_q));
    }
    report.absorb(homomorphism_check(phi_q_matrix(Rational{-1}, 2, n), phi_q_matrix(Rational{-1}, 3, n), max_q));
    return report;
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {"identities",   "lucas",  "primes",      "kron",
                                                   "recurrences",  "umbral", "convolution", "decompose-roundtrip"};
    return names;
}

Report run_suite(const std::string &name, std::size_t size)
{
    if (size < 1) {
        throw std::invalid_argument("suite size must be >= 1");
    }
    Report report;
    if (name == "identities") {
        report = identities(size);
    } else if (name == "lucas") {
        report = lucas(size);
    } else if (name == "primes") {
        report = pascal_prime_factorization(size);
    } else if (name == "kron") {
        report = kron(size);
    } else if (name == "recurrences") {
        report = recurrences(size);
    } else if (name == "umbral") {
        report = umbral(size);
    } else if (name == "convolution") {
        report = convolution(size);
    } else if (name == "decompose-roundtrip") {
        report = decompose_roundtrip(size);
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    report.suite = name;
    return report;
}

Report compare_matrices(const std::string &suite, const TriangularMatrix &lhs, const TriangularMatrix &rhs)
{
    Report report(suite);
    if (lhs.size() != rhs.size()) {
        report.fail({{"size", str(lhs.size())}, {"other size", str(rhs.size())}});
        return report;
    }
    for (Index n = 0; n < lhs.size(); ++n) {
        for (Index m = 0; m <= n; ++m) {
            report.expect(lhs(n, m) == rhs(n, m), [&] {
                return Report::Fields{
                    {"n", str(n)}, {"m", str(m)}, {"lhs", lhs(n, m).to_string()}, {"rhs", rhs(n, m).to_string()}};
            });
        }
    }
    return report;
}

Rational random_nonzero_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<std::int64_t> digit(1, 9);
    std::bernoulli_distribution negative(0.5);
    const std::int64_t num = digit(rng);
    const std::int64_t den = digit(rng);
    return Rational(negative(rng) ? -num : num, den);
}

CSequence random_c_sequence(std::mt19937_64 &rng, std::size_t len)
{
    std::vector<Rational> values(std::max<std::size_t>(len, 2));
    values[0] = values[1] = Rational{1};
    for (std::size_t i = 2; i < values.size(); ++i) {
        values[i] = random_nonzero_rational(rng);
    }
    return CSequence::explicit_values(std::move(values));
}

} // namespace gpm
