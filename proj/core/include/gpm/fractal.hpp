#ifndef GPM_FRACTAL_HPP
#define GPM_FRACTAL_HPP

#include <cstddef>

#include <gpm/matrix.hpp>
#include <gpm/polynomial.hpp>
#include <gpm/report.hpp>
#include <gpm/sequence.hpp>

namespace gpm
{

// Entry of _{[phi,q]}P = prod_{k>=1} _{phi,q^k}P in closed form:
// phi^E where E counts the k >= 1 with n mod q^k < m mod q^k.
Rational fractal_entry(const Rational &phi, Index q, Index n, Index m);

// N x N block of _{[phi,q]}P as the Hadamard product of _{phi,q^k}P for
// q^k < N. phi = 0 yields the zero matrix _{[0,q]}P via the digit mask.
TriangularMatrix fractal_matrix(const Rational &phi, Index q, std::size_t size);

// Exponent E with C(n, m)_{[phi,q]} = phi^E, computed by peeling one base-q
// digit per step:
//   i >= j:  C(qn+i, qm+j) = C(n, m) C(i, j)          with C(i, j) = 1
//   i <  j:  C(qn+i, qm+j) = b_{m+1} C(n, m+1) C(q+i, j) with C(q+i, j) = phi
// Requires m <= n.
unsigned fractal_exponent(Index q, Index n, Index m);

// C(n, m) for b = fractal(q, phi) through fractal_exponent; phi defaults to q,
// the matrix _{[q]}P. Returns 0 for m > n.
Rational fast_gbinom_fractal(Index q, Index n, Index m);
Rational fast_gbinom_fractal(Index q, Index n, Index m, const Rational &phi);

// Row n of _{[phi,q]}P from
//   u_{qn+m}(x) = w_m(x) u_n(x^q) + phi b_n x^{m+1} w_{q-2-m}(x) u_{n-1}(x^q)
// with u_0 = 1.
Polynomial fractal_row(Index q, Index n);
Polynomial fractal_row(Index q, Index n, const Rational &phi);

// Column n of _{[phi,q]}P through degree size-1 from
//   g_{qn+m}(x) = x^m w_{q-1-m}(x) g_n(x^q) + phi b_{n+1} w_{m-1}(x) g_{n+1}(x^q),
// seeded with the directly evaluated columns 0..q-1.
Polynomial fractal_column(Index q, Index n, std::size_t size);
Polynomial fractal_column(Index q, Index n, std::size_t size, const Rational &phi);

// Hadamard product of _{[p]}P over primes p < N against the N x N Pascal
// block.
Report pascal_prime_factorization(std::size_t size);

// Through degree D: prod_n w_{q-1}(x^{q^n} / q^{(q^n-1)/(q-1)}) equals
// sum x^n / b_n!, and the coefficientwise product of these series over the
// primes p <= D equals e^x.
Report fractal_c_check(Index q, Index max_degree);

// b(x) = x w_{q-2}(x) / (1 - x^q) + q b(x^q) through degree D, b = fractal(q, q).
Report b_functional_equation_check(Index q, Index max_degree);

// The w-product series for modulus q through degree D.
Polynomial fractal_c_product(Index q, Index max_degree);

} // namespace gpm

#endif
