#include <gpm/digits.hpp>

#include <stdexcept>

namespace gpm
{

DigitVector DigitVector::of(Index n, Index base)
{
    if (base < 2) {
        throw std::invalid_argument("digit base must be >= 2");
    }
    DigitVector d;
    d.base = base;
    while (n > 0) {
        d.digits.push_back(n % base);
        n /= base;
    }
    return d;
}

Index DigitVector::value() const
{
    Index v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = v * base + *it;
    }
    return v;
}

Index DigitVector::digit_sum() const
{
    Index s = 0;
    for (auto d : digits) {
        s += d;
    }
    return s;
}

unsigned valuation(Index n, Index q)
{
    if (n == 0) {
        throw std::invalid_argument("valuation of zero");
    }
    if (q < 2) {
        throw std::invalid_argument("valuation base must be >= 2");
    }
    unsigned k = 0;
    while (n % q == 0) {
        n /= q;
        ++k;
    }
    return k;
}

Index checked_pow(Index q, unsigned k)
{
    Index r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q != 0 && r > UINT64_MAX / q) {
            throw std::overflow_error("checked_pow overflow");
        }
        r *= q;
    }
    return r;
}

bool is_prime(Index n)
{
    if (n < 2) {
        return false;
    }
    for (Index d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<Index> primes_up_to(Index limit)
{
    std::vector<Index> out;
    for (Index p = 2; p <= limit; ++p) {
        if (is_prime(p)) {
            out.push_back(p);
        }
    }
    return out;
}

int mobius(Index n)
{
    if (n == 0) {
        throw std::invalid_argument("mobius of zero");
    }
    int result = 1;
    for (Index d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

} // namespace gpm
