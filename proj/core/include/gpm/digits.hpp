#ifndef GPM_DIGITS_HPP
#define GPM_DIGITS_HPP

#include <cstdint>
#include <vector>

namespace gpm
{

using Index = std::uint64_t;

// Base-q expansion of an index, least significant digit first. Zero has
// no digits.
struct DigitVector {
    Index base = 2;
    std::vector<Index> digits;

    static DigitVector of(Index n, Index base);
    [[nodiscard]] Index value() const;
    // Digit at position i, zero beyond the stored length.
    [[nodiscard]] Index at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
    [[nodiscard]] Index digit_sum() const;
};

// Largest k with q^k | n; n must be positive.
unsigned valuation(Index n, Index q);

// q^k, throwing std::overflow_error if it does not fit.
Index checked_pow(Index q, unsigned k);

bool is_prime(Index n);
std::vector<Index> primes_up_to(Index limit);

// Moebius function by trial factorization.
int mobius(Index n);

} // namespace gpm

#endif
