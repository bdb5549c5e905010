#include <gpm/matrix.hpp>

#include <stdexcept>
#include <string>

#include <gpm/errors.hpp>

namespace gpm
{

namespace
{

const Rational kZero{};

void require_same_size(const TriangularMatrix &a, const TriangularMatrix &b, const char *what)
{
    if (a.size() != b.size()) {
        throw SizeMismatch(std::string(what) + ": sizes " + std::to_string(a.size()) + " and " +
                           std::to_string(b.size()) + " differ");
    }
}

} // namespace

TriangularMatrix TriangularMatrix::generate(std::size_t size, const Generator &gen)
{
    std::vector<Rational> packed;
    packed.reserve(size * (size + 1) / 2);
    for (Index n = 0; n < size; ++n) {
        for (Index m = 0; m <= n; ++m) {
            packed.push_back(gen(n, m));
        }
    }
    return TriangularMatrix(size, std::move(packed));
}

TriangularMatrix TriangularMatrix::from_rows(const std::vector<std::vector<Rational>> &rows)
{
    std::vector<Rational> packed;
    packed.reserve(rows.size() * (rows.size() + 1) / 2);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].size() != n + 1) {
            throw SizeMismatch("row " + std::to_string(n) + " has " + std::to_string(rows[n].size()) +
                               " entries, expected " + std::to_string(n + 1));
        }
        packed.insert(packed.end(), rows[n].begin(), rows[n].end());
    }
    return TriangularMatrix(rows.size(), std::move(packed));
}

TriangularMatrix TriangularMatrix::identity(std::size_t size)
{
    return generate(size, [](Index n, Index m) { return Rational(n == m ? 1 : 0); });
}

const Rational &TriangularMatrix::at(Index n, Index m) const
{
    if (n >= size_ || m >= size_) {
        throw std::out_of_range("entry (" + std::to_string(n) + ", " + std::to_string(m) + ") outside " +
                                std::to_string(size_) + "x" + std::to_string(size_) + " block");
    }
    if (m > n) {
        return kZero;
    }
    return entries_[offset(n, m)];
}

std::vector<Rational> TriangularMatrix::row(Index n) const
{
    if (n >= size_) {
        throw std::out_of_range("row index outside block");
    }
    auto first = entries_.begin() + static_cast<long>(offset(n, 0));
    return std::vector<Rational>(first, first + static_cast<long>(n + 1));
}

std::vector<Rational> TriangularMatrix::column(Index m) const
{
    if (m >= size_) {
        throw std::out_of_range("column index outside block");
    }
    std::vector<Rational> out;
    out.reserve(size_);
    for (Index n = 0; n < size_; ++n) {
        out.push_back(at(n, m));
    }
    return out;
}

TriangularMatrix TriangularMatrix::leading_block(std::size_t k) const
{
    if (k > size_) {
        throw SizeMismatch("leading block larger than matrix");
    }
    return TriangularMatrix(k, std::vector<Rational>(entries_.begin(), entries_.begin() + static_cast<long>(k * (k + 1) / 2)));
}

bool TriangularMatrix::is_zero_one() const
{
    for (const auto &x : entries_) {
        if (!x.is_zero() && !x.is_one()) {
            return false;
        }
    }
    return true;
}

TriangularMatrix hadamard(const TriangularMatrix &a, const TriangularMatrix &b)
{
    require_same_size(a, b, "hadamard");
    return TriangularMatrix::generate(a.size(), [&](Index n, Index m) { return a(n, m) * b(n, m); });
}

TriangularMatrix hadamard_inverse(const TriangularMatrix &a)
{
    return TriangularMatrix::generate(a.size(), [&](Index n, Index m) {
        const Rational &x = a(n, m);
        if (x.is_zero()) {
            throw ZeroEntry("entry (" + std::to_string(n) + ", " + std::to_string(m) +
                            ") is zero; zero generalized Pascal matrices have no Hadamard inverse");
        }
        return x.inverse();
    });
}

TriangularMatrix multiply(const TriangularMatrix &a, const TriangularMatrix &b)
{
    require_same_size(a, b, "multiply");
    return TriangularMatrix::generate(a.size(), [&](Index n, Index m) {
        Rational acc;
        for (Index k = m; k <= n; ++k) {
            const Rational &x = a(n, k);
            if (x.is_zero()) {
                continue;
            }
            const Rational &y = b(k, m);
            if (!y.is_zero()) {
                acc += x * y;
            }
        }
        return acc;
    });
}

TriangularMatrix subtract(const TriangularMatrix &a, const TriangularMatrix &b)
{
    require_same_size(a, b, "subtract");
    return TriangularMatrix::generate(a.size(), [&](Index n, Index m) { return a(n, m) - b(n, m); });
}

TriangularMatrix kronecker(const TriangularMatrix &a, const TriangularMatrix &b)
{
    const Index inner = b.size();
    return TriangularMatrix::generate(a.size() * b.size(), [&](Index n, Index m) {
        return a(n / inner, m / inner) * b(n % inner, m % inner);
    });
}

} // namespace gpm
