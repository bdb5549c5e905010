#include <doctest.h>

#include <random>

#include <gpm/errors.hpp>
#include <gpm/fractal.hpp>
#include <gpm/gpspec.hpp>
#include <gpm/pascal.hpp>
#include <gpm/special.hpp>
#include <gpm/suites.hpp>
#include <gpm/zero_algebra.hpp>

#include "oracles.hpp"

using namespace gpm;

namespace
{

std::vector<Rational> ints(std::initializer_list<std::int64_t> v)
{
    return {v.begin(), v.end()};
}

const std::vector<std::pair<const char *, BSequence>> &b_family()
{
    static const std::vector<std::pair<const char *, BSequence>> family = {
        {"naturals", BSequence::naturals()},
        {"fractal(2,2)", BSequence::fractal(2, Rational(2))},
        {"fractal(3,3)", BSequence::fractal(3, Rational(3))},
    };
    return family;
}

} // namespace

TEST_CASE("build_from_c")
{
    CHECK(build_from_c(CSequence::exponential(), 5).row(4) == ints({1, 4, 6, 4, 1}));
    const TriangularMatrix ones = build_from_c(CSequence::geometric(), 9);
    for (Index n = 0; n < 9; ++n) {
        for (Index m = 0; m <= n; ++m) {
            CHECK(ones(n, m) == Rational(1));
        }
    }
    CHECK(build_from_c(CSequence::fractal(2), 11).row(10) == ints({1, 2, 1, 8, 2, 4, 2, 8, 1, 2, 1}));
}

TEST_CASE("gbinom")
{
    CHECK(gbinom(BSequence::fractal(2, Rational(2)), 8, 1) == Rational(8));
    CHECK(gbinom(BSequence::fractal(3, Rational(3)), 9, 3) == Rational(3));
    CHECK(gbinom(BSequence::naturals(), 30, 0) == Rational(1));
    CHECK(gbinom(BSequence::naturals(), 3, 5) == Rational(0));
    CHECK_THROWS_AS(gbinom(BSequence::fractal(2, Rational{}), 4, 1), ZeroFactor);

    CHECK(gbinom_via_recurrence(BSequence::fractal(2, Rational(2)), 4, 2) == Rational(2));
    CHECK(gbinom_via_recurrence(BSequence::naturals(), 5, 2) == Rational(10));
    CHECK(gbinom_via_recurrence(BSequence::fractal(3, Rational(3)), 11, 11) == Rational(1));
}

TEST_CASE("two definitions agree and match the direct product oracle")
{
    constexpr std::size_t n = 32;
    for (const auto &[name, b] : b_family()) {
        INFO(name);
        std::vector<mpq_class> bv(n);
        for (Index k = 1; k < n; ++k) {
            bv[k] = b(k).raw();
        }
        const TriangularMatrix from_c = build_from_c(CSequence::from_b(b), n);
        for (Index r = 0; r < n; ++r) {
            for (Index c = 0; c <= r; ++c) {
                REQUIRE(from_c(r, c) == gbinom(b, r, c));
                REQUIRE(from_c(r, c).raw() == oracle::gbinom(bv, r, c));
            }
        }
    }
}

TEST_CASE("recurrence table equals gbinom for n < 64")
{
    for (const auto &[name, b] : b_family()) {
        INFO(name);
        const TriangularMatrix table = gbinom_table_via_recurrence(b, 64);
        for (Index r = 0; r < 64; ++r) {
            for (Index c = 0; c <= r; ++c) {
                REQUIRE(table(r, c) == gbinom(b, r, c));
            }
        }
    }
}

TEST_CASE("hadamard group")
{
    const TriangularMatrix pascal = build_from_c(CSequence::exponential(), 16);
    const TriangularMatrix ones = build_from_c(CSequence::geometric(), 16);
    CHECK(hadamard(pascal, ones) == pascal);

    const TriangularMatrix p235 =
        hadamard(hadamard(fractal_matrix(Rational(2), 2, 7), fractal_matrix(Rational(3), 3, 7)),
                 fractal_matrix(Rational(5), 5, 7));
    CHECK(p235(6, 3) == Rational(20));

    CHECK(hadamard(fractal_matrix(Rational(2), 2, 16), fractal_matrix(Rational(3), 2, 16)) ==
          fractal_matrix(Rational(6), 2, 16));

    CHECK(hadamard_inverse(phi_q_matrix(Rational(2), 2, 9)) == phi_q_matrix(Rational(1, 2), 2, 9));
    CHECK(hadamard_inverse(ones) == ones);
    CHECK_THROWS_AS(hadamard_inverse(fractal_matrix(Rational{}, 2, 16)), ZeroEntry);

    // Closure: products of generalized Pascal blocks still satisfy the identities.
    std::mt19937_64 rng(7);
    for (int t = 0; t < 5; ++t) {
        const TriangularMatrix a = build_from_c(random_c_sequence(rng, 14), 14);
        const TriangularMatrix b = build_from_c(random_c_sequence(rng, 14), 14);
        CHECK(identity_check(hadamard(a, b)).pass);
    }
}

TEST_CASE("identity_check")
{
    CHECK(identity_check(build_from_c(CSequence::exponential(), 16)).pass);
    const Report r = identity_check(fractal_matrix(Rational(3), 3, 18));
    CHECK(r.pass);
    CHECK(r.checked > 0);

    // (2,1) = 5 on the 4x4 Pascal block is still the block of b = (1, 5, 3),
    // so no identity can reject it.
    std::vector<std::vector<Rational>> rows = {{1}, {1, 1}, {1, 5, 1}, {1, 3, 3, 1}};
    CHECK(identity_check(TriangularMatrix::from_rows(rows)).pass);

    rows[3][1] = Rational(5);
    const Report asym = identity_check(TriangularMatrix::from_rows(rows));
    CHECK_FALSE(asym.pass);
    REQUIRE(asym.counterexample.has_value());
    CHECK(asym.counterexample->front().second == "(n,m)=(n,n-m)");

    // (4,2) is fixed by b_2, b_3, b_4 once the first column is known.
    std::vector<std::vector<Rational>> p6;
    const TriangularMatrix pascal = build_from_c(CSequence::exponential(), 6);
    for (Index n = 0; n < 6; ++n) {
        p6.push_back(pascal.row(n));
    }
    p6[4][2] = Rational(7);
    const Report shift = identity_check(TriangularMatrix::from_rows(p6));
    CHECK_FALSE(shift.pass);
    REQUIRE(shift.counterexample.has_value());
    CHECK(shift.counterexample->front().second == "shift");

    rows = {{1}, {2, 1}};
    const Report column = identity_check(TriangularMatrix::from_rows(rows));
    CHECK_FALSE(column.pass);
    CHECK(column.counterexample->front().second == "(n,0)=1");
}

TEST_CASE("pascal_convolve")
{
    const Polynomial a{1, 2, 3}, b{Rational(1, 2), Rational(-1), 4};
    const TriangularMatrix ones = build_from_c(CSequence::geometric(), 6);
    CHECK(pascal_convolve(ones, a, b) == a * b);

    const Polynomial all_ones = Polynomial(std::vector<Rational>(16, Rational(1)));
    const Polynomial g = pascal_convolve(fractal_matrix(Rational{}, 2, 16), all_ones, all_ones);
    CHECK(g.coeff(15) == Rational(16));

    const TriangularMatrix f = fractal_matrix(Rational(2), 2, 8);
    CHECK(pascal_convolve(f, a, b) == pascal_convolve(f, b, a));
    // Bilinear in the first argument.
    const Polynomial c{0, 1, 0, 5};
    CHECK(pascal_convolve(f, a * Rational(3) + c, b) ==
          pascal_convolve(f, a, b) * Rational(3) + pascal_convolve(f, c, b));
    CHECK_THROWS_AS(pascal_convolve(TriangularMatrix::identity(2), a, b), SizeMismatch);
}

TEST_CASE("first_column_b")
{
    const BSequence nat = first_column_b(build_from_c(CSequence::exponential(), 10));
    for (Index n = 1; n < 10; ++n) {
        CHECK(nat(n) == Rational(static_cast<std::int64_t>(n)));
    }
    const BSequence b2 = first_column_b(fractal_matrix(Rational(2), 2, 9));
    std::vector<Rational> got;
    for (Index n = 1; n < 9; ++n) {
        got.push_back(b2(n));
    }
    CHECK(got == ints({1, 2, 1, 4, 1, 2, 1, 8}));

    const Rational phi(7);
    const BSequence b3 = first_column_b(phi_q_matrix(phi, 3, 12));
    for (Index n = 1; n < 12; ++n) {
        CHECK(b3(n) == (n % 3 == 0 ? phi : Rational(1)));
    }
}

TEST_CASE("lazy GPSpec evaluation matches materialization")
{
    const GPSpec spec = GPSpec::hadamard({GPSpec::fractal(Rational(2), 2), GPSpec::phi_q(Rational(-3, 5), 3),
                                         GPSpec::from_c(CSequence::exponential()), GPSpec::t_matrix(3),
                                         GPSpec::q_umbral(Rational(2))});
    const TriangularMatrix m = spec.materialize(20);
    const TriangularMatrix direct =
        hadamard(hadamard(hadamard(hadamard(fractal_matrix(Rational(2), 2, 20), phi_q_matrix(Rational(-3, 5), 3, 20)),
                                   build_from_c(CSequence::exponential(), 20)),
                          t_matrix(3, 20)),
                 q_umbral_matrix(Rational(2), 20));
    CHECK(m == direct);
    for (Index n = 0; n < 20; ++n) {
        for (Index k = 0; k <= n; ++k) {
            REQUIRE(spec.entry(n, k) == m(n, k));
        }
    }
    CHECK(spec.kind() == "hadamard");
    CHECK(GPSpec::phi_q(Rational(3), 4).modulus() == Index{4});
    CHECK(GPSpec::phi_q(Rational(3), 4).phi() == Rational(3));
    CHECK(GPSpec::hadamard({}).materialize(4) == build_from_c(CSequence::geometric(), 4));
}
