#ifndef GPM_MATRIX_HPP
#define GPM_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include <gpm/digits.hpp>
#include <gpm/rational.hpp>

namespace gpm
{

// Finite N x N lower-triangular block with exact entries. Entries above
// the diagonal are implicitly zero. Row-major packed storage; immutable
// once built.
class TriangularMatrix
{
public:
    using Generator = std::function<Rational(Index n, Index m)>;

    TriangularMatrix() = default;

    // Evaluates gen(n, m) for every 0 <= m <= n < size.
    static TriangularMatrix generate(std::size_t size, const Generator &gen);
    // rows[n] must hold exactly n + 1 entries.
    static TriangularMatrix from_rows(const std::vector<std::vector<Rational>> &rows);
    static TriangularMatrix identity(std::size_t size);

    [[nodiscard]] std::size_t size() const { return size_; }
    // Zero above the diagonal; throws std::out_of_range outside the block.
    [[nodiscard]] const Rational &at(Index n, Index m) const;
    const Rational &operator()(Index n, Index m) const { return at(n, m); }

    [[nodiscard]] std::vector<Rational> row(Index n) const;
    [[nodiscard]] std::vector<Rational> column(Index m) const;
    // Top-left k x k block.
    [[nodiscard]] TriangularMatrix leading_block(std::size_t k) const;

    // True when every lower-triangle entry is 0 or 1.
    [[nodiscard]] bool is_zero_one() const;

    friend bool operator==(const TriangularMatrix &, const TriangularMatrix &) = default;

private:
    TriangularMatrix(std::size_t size, std::vector<Rational> packed) : size_(size), entries_(std::move(packed)) {}
    static std::size_t offset(Index n, Index m) { return static_cast<std::size_t>(n * (n + 1) / 2 + m); }

    std::size_t size_ = 0;
    std::vector<Rational> entries_;
};

// Entrywise product; throws SizeMismatch.
TriangularMatrix hadamard(const TriangularMatrix &a, const TriangularMatrix &b);

// Entrywise reciprocal on the lower triangle; throws ZeroEntry.
TriangularMatrix hadamard_inverse(const TriangularMatrix &a);

// Ordinary matrix product (lower-triangular times lower-triangular).
TriangularMatrix multiply(const TriangularMatrix &a, const TriangularMatrix &b);

TriangularMatrix subtract(const TriangularMatrix &a, const TriangularMatrix &b);

// Kronecker product; entry (i1*|B| + i2, j1*|B| + j2) = A(i1, j1) B(i2, j2).
TriangularMatrix kronecker(const TriangularMatrix &a, const TriangularMatrix &b);

} // namespace gpm

#endif
