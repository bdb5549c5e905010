#include <doctest.h>

#include <thread>
#include <vector>

#include <gpm/digits.hpp>
#include <gpm/errors.hpp>
#include <gpm/matrix.hpp>
#include <gpm/polynomial.hpp>
#include <gpm/rational.hpp>
#include <gpm/sequence.hpp>

#include "oracles.hpp"

using namespace gpm;

TEST_CASE("rational text format")
{
    CHECK(Rational(1, 24).to_string() == "1/24");
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK(Rational{}.to_string() == "0");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("3/9") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse("3/9x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational arithmetic")
{
    const Rational a(2, 3), b(-5, 4);
    CHECK(a + b == Rational(-7, 12));
    CHECK(a - b == Rational(23, 12));
    CHECK(a * b == Rational(-5, 6));
    CHECK(a / b == Rational(-8, 15));
    CHECK_THROWS_AS(a / Rational{}, DivisionByZero);
    CHECK_THROWS_AS((void)Rational{}.inverse(), DivisionByZero);
    CHECK(a.pow(3) == Rational(8, 27));
    CHECK(a.pow(-2) == Rational(9, 4));
    CHECK(Rational{}.pow(0) == Rational(1));
    CHECK(b < a);
    CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
    CHECK(Rational(4, 2).is_integer());
    CHECK(b.sign() == -1);
}

TEST_CASE("digits, valuation, mobius")
{
    const DigitVector d = DigitVector::of(10, 3);
    CHECK(d.digits == std::vector<Index>{1, 0, 1});
    CHECK(d.value() == 10);
    CHECK(d.digit_sum() == 2);
    CHECK(DigitVector::of(0, 2).digits.empty());
    CHECK(valuation(48, 2) == 4);
    CHECK(valuation(48, 4) == 2);
    CHECK(valuation(7, 3) == 0);
    CHECK(primes_up_to(30) == std::vector<Index>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    // Brute-force mobius: 0 if a square divides n, else (-1)^(prime count).
    for (Index n = 1; n < 500; ++n) {
        int expected = 1;
        Index r = n;
        for (Index p = 2; p <= r; ++p) {
            if (r % p == 0) {
                r /= p;
                expected = r % p == 0 ? 0 : -expected;
                if (expected == 0) {
                    break;
                }
            }
        }
        CHECK_MESSAGE(mobius(n) == expected, "n = " << n);
    }
}

TEST_CASE("polynomials and truncated series")
{
    const Polynomial one_minus_x{Rational(1), Rational(-1)};
    const Polynomial geo = series_inverse(one_minus_x, 5);
    CHECK(geo == Polynomial{1, 1, 1, 1, 1, 1});
    CHECK(multiply_truncated(geo, one_minus_x, 5) == Polynomial{1});
    CHECK_THROWS_AS(series_inverse(Polynomial{0, 1}, 3), DivisionByZero);

    const Polynomial p{1, 2};
    CHECK(p * p == Polynomial{1, 4, 4});
    CHECK(p.substitute_power(3) == Polynomial{1, 0, 0, 2});
    CHECK(p.shifted(2) == Polynomial{0, 0, 1, 2});
    CHECK(p.scale_variable(Rational(1, 2)) == Polynomial{1, 1});
    CHECK(p.evaluate(Rational(3)) == Rational(7));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(w_poly(-1).is_zero());
    CHECK(w_poly(2) == Polynomial{1, 1, 1});
    CHECK(Polynomial{1, 0, 0}.degree() == 0);
}

TEST_CASE("b- and c-sequences")
{
    const BSequence nat = BSequence::naturals();
    CHECK(nat(0) == Rational(0));
    CHECK(nat(7) == Rational(7));
    CHECK(nat.factorial(5) == Rational(120));

    const BSequence b2 = BSequence::fractal(2, Rational(2));
    std::vector<Rational> first;
    for (Index n = 1; n <= 8; ++n) {
        first.push_back(b2(n));
    }
    CHECK(first == std::vector<Rational>{1, 2, 1, 4, 1, 2, 1, 8});

    const BSequence zero = BSequence::fractal(2, Rational{});
    CHECK(zero(3) == Rational(1));
    CHECK_THROWS_AS((void)zero.factorial(2), ZeroFactor);

    CHECK(CSequence::phi_q(Rational(2), 2)(5) == Rational(1, 4));
    CHECK(CSequence::phi_q(Rational(5), 3)(0) == Rational(1));
    CHECK_THROWS_AS(CSequence::phi_q(Rational{}, 2), ZeroPhi);
    CHECK(CSequence::exponential()(4) == Rational(1, 24));
    CHECK(CSequence::fractal(3)(3) == Rational(1, 3));
    CHECK(CSequence::fractal(2)(16) == Rational(1, 32768));

    const BSequence back = BSequence::from_c(CSequence::exponential());
    CHECK(back(6) == Rational(6));

    CHECK_THROWS_AS(CSequence::explicit_values({Rational(1), Rational(2)}), InvalidSequence);
    CHECK_THROWS_AS(CSequence::explicit_values({Rational(1), Rational(1), Rational{}}), InvalidSequence);
    const CSequence c = CSequence::explicit_values({Rational(1), Rational(1), Rational(3)});
    CHECK(c(2) == Rational(3));
    CHECK(c.bound() == 3);
}

TEST_CASE("sequence caches under concurrent readers")
{
    constexpr Index limit = 600;
    const std::vector<mpq_class> expected = oracle::fractal_b(3, 3, limit + 1);

    const BSequence shared = BSequence::fractal(3, Rational(3));
    const CSequence c = CSequence::from_b(shared);
    std::vector<std::vector<Rational>> factorials(4);
    std::vector<std::vector<Rational>> cs(4);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            // Different starting points so the fills interleave.
            for (Index k = 0; k <= limit; ++k) {
                const Index n = (k * (t + 1) * 7) % (limit + 1);
                (void)shared(n);
            }
            for (Index n = t; n <= limit; n += 1) {
                factorials[t].push_back(shared.factorial(n));
                cs[t].push_back(c(n));
            }
        });
    }
    for (auto &w : workers) {
        w.join();
    }
    mpq_class fact = 1;
    std::vector<mpq_class> fact_oracle(limit + 1);
    for (Index n = 0; n <= limit; ++n) {
        if (n > 0) {
            fact *= expected[n];
        }
        fact_oracle[n] = fact;
    }
    for (std::size_t t = 0; t < 4; ++t) {
        for (std::size_t i = 0; i < factorials[t].size(); ++i) {
            const Index n = t + i;
            REQUIRE(factorials[t][i].raw() == fact_oracle[n]);
            REQUIRE(cs[t][i].raw() == 1 / fact_oracle[n]);
        }
    }
}

TEST_CASE("triangular matrices")
{
    const auto m = TriangularMatrix::generate(4, [](Index n, Index k) { return Rational(static_cast<std::int64_t>(10 * n + k)); });
    CHECK(m(3, 2) == Rational(32));
    CHECK(m(1, 3) == Rational(0));
    CHECK_THROWS_AS((void)m.at(4, 0), std::out_of_range);
    CHECK(m.row(2) == std::vector<Rational>{20, 21, 22});
    CHECK(m.column(1) == std::vector<Rational>{0, 11, 21, 31});
    CHECK(m.leading_block(2) == TriangularMatrix::from_rows({{0}, {10, 11}}));
    CHECK_THROWS_AS(TriangularMatrix::from_rows({{1}, {1}}), SizeMismatch);

    const TriangularMatrix id = TriangularMatrix::identity(4);
    CHECK(multiply(m, id) == m);
    CHECK(multiply(id, m) == m);
    CHECK(hadamard(m, id)(3, 3) == Rational(33));
    CHECK_THROWS_AS(hadamard(m, TriangularMatrix::identity(3)), SizeMismatch);
    CHECK_THROWS_AS(hadamard_inverse(m), ZeroEntry);
    CHECK(subtract(m, m) == TriangularMatrix::generate(4, [](Index, Index) { return Rational{}; }));

    const auto a = TriangularMatrix::from_rows({{1}, {2, 3}});
    const auto b = TriangularMatrix::from_rows({{5}, {7, 11}});
    const TriangularMatrix k = kronecker(a, b);
    // Block (1,0) of a (x) b is 2 b.
    CHECK(k(2, 0) == Rational(10));
    CHECK(k(3, 0) == Rational(14));
    CHECK(k(3, 3) == Rational(33));
    CHECK(k(1, 0) == Rational(7));
    const auto dense = oracle::multiply(oracle::dense(a), oracle::dense(b));
    const TriangularMatrix ab = multiply(a, b);
    for (Index n = 0; n < 2; ++n) {
        for (Index j = 0; j <= n; ++j) {
            CHECK(ab(n, j).raw() == dense[n][j]);
        }
    }
}
