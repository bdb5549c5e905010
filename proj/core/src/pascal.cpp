#include <gpm/pascal.hpp>

#include <string>

#include <gpm/errors.hpp>

namespace gpm
{

namespace
{

std::string str(Index v)
{
    return std::to_string(v);
}

} // namespace

TriangularMatrix build_from_c(const CSequence &c, std::size_t size)
{
    std::vector<Rational> cs;
    cs.reserve(size);
    for (Index n = 0; n < size; ++n) {
        cs.push_back(c.at(n));
        if (cs.back().is_zero()) {
            throw InvalidSequence("c_" + str(n) + " is zero");
        }
    }
    return TriangularMatrix::generate(size, [&](Index n, Index m) { return cs[m] * cs[n - m] / cs[n]; });
}

TriangularMatrix build_from_b(const BSequence &b, std::size_t size)
{
    return TriangularMatrix::generate(size, [&](Index n, Index m) { return gbinom(b, n, m); });
}

Rational gbinom(const BSequence &b, Index n, Index m)
{
    if (m > n) {
        return {};
    }
    return b.factorial(n) / (b.factorial(m) * b.factorial(n - m));
}

namespace
{

// Rows 0..last of the recurrence, columns 0..min(row, max_col).
template <typename Sink>
void run_recurrence(const BSequence &b, Index last, Index max_col, Sink &&sink)
{
    std::vector<Rational> prev{Rational{1}};
    sink(0, prev);
    for (Index k = 1; k <= last; ++k) {
        const Index width = std::min(k, max_col);
        std::vector<Rational> cur(width + 1);
        cur[0] = Rational{1};
        const Rational bk = b.at(k);
        for (Index j = 1; j <= width; ++j) {
            cur[j] = prev[j - 1];
            if (j < k && j < prev.size()) {
                // C(k-1, j) is zero for j = k, which also avoids b_0 = 0 below.
                const Rational denom = b.at(k - j);
                if (denom.is_zero()) {
                    throw ZeroFactor("b_" + str(k - j) + " = 0 in the recurrence for " + b.describe());
                }
                cur[j] += (bk - b.at(j)) / denom * prev[j];
            }
        }
        sink(k, cur);
        prev = std::move(cur);
    }
}

} // namespace

Rational gbinom_via_recurrence(const BSequence &b, Index n, Index m)
{
    if (m > n) {
        return {};
    }
    Rational result;
    run_recurrence(b, n, m, [&](Index k, const std::vector<Rational> &row) {
        if (k == n) {
            result = row[m];
        }
    });
    return result;
}

TriangularMatrix gbinom_table_via_recurrence(const BSequence &b, std::size_t size)
{
    std::vector<std::vector<Rational>> rows;
    if (size == 0) {
        return TriangularMatrix::from_rows(rows);
    }
    run_recurrence(b, size - 1, size - 1, [&](Index, const std::vector<Rational> &row) { rows.push_back(row); });
    return TriangularMatrix::from_rows(rows);
}

Report identity_check(const TriangularMatrix &a, std::string suite)
{
    Report report(std::move(suite));
    const Index size = a.size();
    for (Index n = 0; n < size; ++n) {
        report.expect(a(n, 0).is_one(), [&] {
            return Report::Fields{{"identity", "(n,0)=1"}, {"n", str(n)}, {"value", a(n, 0).to_string()}};
        });
        for (Index m = 0; m <= n; ++m) {
            report.expect(a(n, m) == a(n, n - m), [&] {
                return Report::Fields{{"identity", "(n,m)=(n,n-m)"},
                                      {"n", str(n)},
                                      {"m", str(m)},
                                      {"lhs", a(n, m).to_string()},
                                      {"rhs", a(n, n - m).to_string()}};
            });
        }
    }
    // The shift identity is symmetric under p <-> q, so p < q suffices.
    for (Index n = 0; n < size; ++n) {
        for (Index m = 0; m <= n; ++m) {
            for (Index q = 1; n + q < size; ++q) {
                for (Index p = 0; p < q; ++p) {
                    Rational lhs = a(n + q, q) * a(n + p, m + p) * a(m + p, p);
                    Rational rhs = a(n + p, p) * a(n + q, m + q) * a(m + q, q);
                    report.expect(lhs == rhs, [&] {
                        return Report::Fields{{"identity", "shift"}, {"n", str(n)},           {"m", str(m)},
                                              {"p", str(p)},         {"q", str(q)},           {"lhs", lhs.to_string()},
                                              {"rhs", rhs.to_string()}};
                    });
                }
            }
        }
    }
    return report;
}

Polynomial pascal_convolve(const TriangularMatrix &a, const Polynomial &x, const Polynomial &y)
{
    const auto size = static_cast<long>(a.size());
    if (x.degree() >= size || y.degree() >= size) {
        throw SizeMismatch("pascal_convolve: operand degree must be below the matrix size");
    }
    std::vector<Rational> g(a.size());
    for (Index n = 0; n < a.size(); ++n) {
        for (Index m = 0; m <= n; ++m) {
            const Rational &w = a(n, m);
            if (!w.is_zero()) {
                g[n] += w * x.coeff(m) * y.coeff(n - m);
            }
        }
    }
    return Polynomial(std::move(g));
}

BSequence first_column_b(const TriangularMatrix &a)
{
    std::vector<Rational> values(a.size());
    for (Index n = 1; n < a.size(); ++n) {
        values[n] = a(n, 1);
    }
    return BSequence::explicit_values(std::move(values));
}

} // namespace gpm
