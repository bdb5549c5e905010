#include <gpm/special.hpp>

#include <stdexcept>
#include <string>

#include <gpm/errors.hpp>
#include <gpm/gpspec.hpp>
#include <gpm/pascal.hpp>
#include <gpm/polynomial.hpp>

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

bool is_sign(const Rational &x)
{
    return x.is_one() || x == Rational{-1};
}

} // namespace

Rational phi_q_entry(const Rational &phi, Index q, Index n, Index m)
{
    require_base(q);
    if (m > n) {
        return {};
    }
    return n % q >= m % q ? Rational{1} : phi;
}

TriangularMatrix phi_q_matrix(const Rational &phi, Index q, std::size_t size)
{
    require_base(q);
    return TriangularMatrix::generate(size, [&](Index n, Index m) { return phi_q_entry(phi, q, n, m); });
}

CSequence phi_q_series(const Rational &phi, Index q)
{
    return CSequence::phi_q(phi, q);
}

PhiCoordinates phi_coordinates(const TriangularMatrix &a, Index max_q)
{
    if (max_q >= a.size()) {
        throw std::out_of_range("phi_coordinates: modulus " + std::to_string(max_q) + " needs b_" +
                                std::to_string(max_q) + ", outside a " + std::to_string(a.size()) + "x" +
                                std::to_string(a.size()) + " block");
    }
    std::vector<Rational> b(max_q + 1);
    for (Index n = 1; n <= max_q; ++n) {
        b[n] = a(n, 1);
        if (b[n].is_zero()) {
            throw ZeroEntry("b_" + std::to_string(n) + " = 0: zero generalized Pascal matrices have no coordinates");
        }
    }
    PhiCoordinates coords;
    for (Index q = 2; q <= max_q; ++q) {
        Rational beta{1};
        for (Index d = 1; d <= q; ++d) {
            if (q % d != 0) {
                continue;
            }
            int mu = mobius(q / d);
            if (mu == 1) {
                beta *= b[d];
            } else if (mu == -1) {
                beta /= b[d];
            }
        }
        coords.emplace(q, std::move(beta));
    }
    return coords;
}

TriangularMatrix recompose(const PhiCoordinates &coords, std::size_t size)
{
    std::vector<GPSpec> factors;
    for (const auto &[q, beta] : coords) {
        if (q < size && !beta.is_one()) {
            factors.push_back(GPSpec::phi_q(beta, q));
        }
    }
    return GPSpec::hadamard(std::move(factors)).materialize(size);
}

Report homomorphism_check(const TriangularMatrix &a, const TriangularMatrix &b, Index max_q)
{
    Report report("homomorphism");
    const TriangularMatrix ab = hadamard(a, b);
    const PhiCoordinates ca = phi_coordinates(a, max_q);
    const PhiCoordinates cb = phi_coordinates(b, max_q);
    const PhiCoordinates cab = phi_coordinates(ab, max_q);
    for (const auto &[q, beta] : cab) {
        Rational expected = ca.at(q) * cb.at(q);
        report.expect(beta == expected, [&] {
            return Report::Fields{{"property", "beta(AxB) = beta(A) beta(B)"},
                                  {"q", std::to_string(q)},
                                  {"lhs", beta.to_string()},
                                  {"rhs", expected.to_string()}};
        });
    }
    auto kernel = [&](const TriangularMatrix &m, const PhiCoordinates &c, const char *which) {
        bool involution = true;
        for (const auto &[q, beta] : c) {
            involution = involution && is_sign(beta);
        }
        if (!involution) {
            return;
        }
        for (Index n = 0; n < m.size(); ++n) {
            for (Index k = 0; k <= n; ++k) {
                report.expect(is_sign(m(n, k)), [&] {
                    return Report::Fields{{"property", "kernel entries are +-1"},
                                          {"matrix", which},
                                          {"n", std::to_string(n)},
                                          {"m", std::to_string(k)},
                                          {"value", m(n, k).to_string()}};
                });
            }
        }
    };
    kernel(a, ca, "A");
    kernel(b, cb, "B");
    kernel(ab, cab, "AxB");
    return report;
}

Rational gaussian_binomial(const Rational &q, Index n, Index m)
{
    if (m > n) {
        return {};
    }
    // Row-wise q-Pascal rule, keeping columns 0..m.
    std::vector<Rational> row(m + 1);
    row[0] = Rational{1};
    std::vector<Rational> qpow(m + 1);
    qpow[0] = Rational{1};
    for (Index j = 1; j <= m; ++j) {
        qpow[j] = qpow[j - 1] * q;
    }
    for (Index k = 1; k <= n; ++k) {
        for (Index j = std::min(k, m); j >= 1; --j) {
            row[j] = row[j - 1] + qpow[j] * row[j];
        }
    }
    return row[m];
}

TriangularMatrix q_umbral_matrix(const Rational &q, std::size_t size)
{
    if (size == 0) {
        return TriangularMatrix::from_rows({});
    }
    const std::size_t max_degree = size - 1;
    // series = prod_{m=0}^{n} 1/(1 - q^m x), updated one factor per column.
    std::vector<Rational> series(size);
    series[0] = Rational{1};
    std::vector<std::vector<Rational>> columns;
    Rational qm{1};
    for (Index n = 0; n < size; ++n) {
        // Multiply by 1/(1 - qm x): s'_k = s_k + qm s'_{k-1}.
        for (std::size_t k = 1; k <= max_degree; ++k) {
            series[k] += qm * series[k - 1];
        }
        qm *= q;
        columns.push_back(series);
    }
    return TriangularMatrix::generate(size, [&](Index r, Index n) { return columns[n][r - n]; });
}

TriangularMatrix q_umbral_inverse(const Rational &q, std::size_t size)
{
    std::vector<std::vector<Rational>> rows;
    Polynomial row = Polynomial::constant(Rational{1});
    Rational qm{1};
    for (Index n = 0; n < size; ++n) {
        rows.push_back(row.dense(n + 1));
        row = row * Polynomial{-qm, Rational{1}};
        qm *= q;
    }
    return TriangularMatrix::from_rows(rows);
}

CSequence zero_overlay_series(Index q, Index max_degree)
{
    require_base(q);
    std::vector<Rational> c(max_degree + 1);
    Rational inv_factorial{1};
    for (Index n = 0; n <= max_degree; ++n) {
        Index block = n / q;
        if (n > 0 && n % q == 0) {
            inv_factorial /= Rational(static_cast<std::int64_t>(block));
        }
        c[n] = inv_factorial;
    }
    return CSequence::explicit_values(std::move(c));
}

TriangularMatrix zero_overlay_matrix(Index q, std::size_t size)
{
    if (size == 0) {
        return TriangularMatrix::from_rows({});
    }
    return hadamard(phi_q_matrix(Rational{}, q, size), build_from_c(zero_overlay_series(q, size - 1), size));
}

} // namespace gpm
