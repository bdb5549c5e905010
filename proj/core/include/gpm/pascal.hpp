#ifndef GPM_PASCAL_HPP
#define GPM_PASCAL_HPP

#include <cstddef>

#include <gpm/matrix.hpp>
#include <gpm/polynomial.hpp>
#include <gpm/report.hpp>
#include <gpm/sequence.hpp>

namespace gpm
{

// N x N block of P_c: entry (n, m) = c_m c_{n-m} / c_n.
TriangularMatrix build_from_c(const CSequence &c, std::size_t size);

// Same matrix through the b-factorial definition, entry = gbinom(b, n, m).
TriangularMatrix build_from_b(const BSequence &b, std::size_t size);

// Generalized binomial coefficient b_n! / (b_m! b_{n-m}!), 0 for m > n.
// Throws ZeroFactor for zero-kind b.
Rational gbinom(const BSequence &b, Index n, Index m);

// The same coefficient from
//   C(n, m) = C(n-1, m-1) + (b_n - b_m) / b_{n-m} * C(n-1, m)
// by dynamic programming over rows.
Rational gbinom_via_recurrence(const BSequence &b, Index n, Index m);

// All coefficients with n < size from the recurrence.
TriangularMatrix gbinom_table_via_recurrence(const BSequence &b, std::size_t size);

// Checks (n,0) = 1, (n,m) = (n,n-m) and the shift identity
//   (n+q,q)(n+p,m+p)(m+p,p) = (n+p,p)(n+q,m+q)(m+q,q)
// for every index combination that stays inside the block.
Report identity_check(const TriangularMatrix &a, std::string suite = "identities");

// g_n = sum_m A(n,m) a_m b_{n-m} for n < size(A). Throws SizeMismatch if a
// or b has degree >= size(A).
Polynomial pascal_convolve(const TriangularMatrix &a, const Polynomial &x, const Polynomial &y);

// b_n = A(n, 1) for 1 <= n < size, as an explicit sequence.
BSequence first_column_b(const TriangularMatrix &a);

} // namespace gpm

#endif
