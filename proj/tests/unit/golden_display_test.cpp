#include <doctest.h>

#include <gpm/fractal.hpp>
#include <gpm/pascal.hpp>
#include <gpm/special.hpp>
#include <gpm/zero_algebra.hpp>

#include "golden.hpp"

using namespace gpm;

namespace
{

const std::map<std::string, golden::Display> &displays()
{
    static const auto all = golden::load();
    return all;
}

void expect_display(const std::string &name, const TriangularMatrix &m, const golden::Symbols &s = {})
{
    INFO(name);
    REQUIRE(displays().count(name) == 1);
    CHECK(golden::mismatch(displays().at(name), m, s) == "");
}

// The entries are exactly 1 or phi: matching both phi = 7 and phi = 11
// pins every position of the mask.
void expect_phi_display(const std::string &name, Index q)
{
    for (std::int64_t phi : {7, 11}) {
        golden::Symbols s;
        s.phi = phi;
        expect_display(name, phi_q_matrix(Rational(phi), q, 9), s);
    }
}

} // namespace

TEST_CASE("golden: pascal")
{
    expect_display("pascal", build_from_c(CSequence::exponential(), 5));
}

TEST_CASE("golden: phi_q, q = 2 and 3")
{
    expect_phi_display("phi_q2", 2);
    expect_phi_display("phi_q3", 3);
}

TEST_CASE("golden: q-umbral at q = -1 and its inverse")
{
    expect_display("qumbral_minus1", q_umbral_matrix(Rational(-1), 7));
    expect_display("qumbral_minus1_inverse", q_umbral_inverse(Rational(-1), 7));
}

TEST_CASE("golden: fractal matrices")
{
    expect_display("fractal_2", fractal_matrix(Rational(2), 2, 16));
    expect_display("zero_fractal_2", fractal_matrix(Rational{}, 2, 16));
    const TriangularMatrix f = fractal_matrix(Rational(2), 2, 12);
    const TriangularMatrix masked4 = hadamard(f, phi_q_matrix(Rational{}, 4, 12));
    expect_display("fractal_2_times_zero_phi_q2", hadamard(f, phi_q_matrix(Rational{}, 2, 12)));
    expect_display("fractal_2_times_zero_phi_q4", masked4);
    expect_display("fractal_2_minus_masked_q4", subtract(f, masked4));
}

TEST_CASE("golden: fractal_3 lower triangle")
{
    // Rows 15 and 16 of this display carry one entry too many: a 1 sits just
    // above the diagonal. The lower triangle must still match exactly.
    const auto diffs = golden::mismatches(displays().at("fractal_3"), fractal_matrix(Rational(3), 3, 18));
    REQUIRE(diffs.size() == 2);
    for (const auto &d : diffs) {
        INFO(d.describe());
        CHECK(d.m == d.n + 1);
        CHECK(d.token == "1");
        CHECK(d.computed == 0);
    }
}

TEST_CASE("golden: T matrix and squared Sierpinski")
{
    expect_display("t_matrix_3", t_matrix(3, 9));
    const TriangularMatrix s = zero_fractal_matrix(2, 16);
    expect_display("zero_fractal_2_squared", multiply(s, s));
}

TEST_CASE("golden: block matrices")
{
    // Distinct primes keep every product a_i b_j distinguishable.
    golden::Symbols s;
    s.a = {2, 3, 5, 7};
    s.b = {11, 13, 17, 19};
    const auto poly = [](const std::vector<mpq_class> &v) {
        std::vector<Rational> r;
        for (const auto &x : v) {
            r.emplace_back(x);
        }
        return Polynomial(r);
    };
    expect_display("block_2_1", block_matrix(poly(s.a), poly({s.b[0], s.b[1]}), 2, 1, 8), s);
    expect_display("block_2_2", block_matrix(poly({s.a[0], s.a[1]}), poly(s.b), 2, 2, 8), s);
}
