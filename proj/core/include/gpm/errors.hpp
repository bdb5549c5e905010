#ifndef GPM_ERRORS_HPP
#define GPM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpm
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A b-factorial met a zero term: the matrix is a zero generalized Pascal
// matrix and must be evaluated through the digit mask instead.
class ZeroFactor : public Error
{
public:
    using Error::Error;
};

// A zero entry where an invertible (nonzero) generalized Pascal matrix
// was required.
class ZeroEntry : public Error
{
public:
    using Error::Error;
};

class SizeMismatch : public Error
{
public:
    using Error::Error;
};

// The series c(phi, q, x) does not exist for phi = 0.
class ZeroPhi : public Error
{
public:
    using Error::Error;
};

// A series fails a(x) = (a_0 + ... + a_{q-1} x^{q-1}) a(x^q).
class NotFractal : public Error
{
public:
    using Error::Error;
};

class DivisionByZero : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

// A coefficient sequence violates its normalization (c_0 = c_1 = 1, c_n != 0).
class InvalidSequence : public Error
{
public:
    using Error::Error;
};

} // namespace gpm

#endif
