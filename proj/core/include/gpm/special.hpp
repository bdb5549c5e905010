#ifndef GPM_SPECIAL_HPP
#define GPM_SPECIAL_HPP

#include <cstddef>
#include <map>

#include <gpm/matrix.hpp>
#include <gpm/report.hpp>
#include <gpm/sequence.hpp>

namespace gpm
{

// Entry of the special matrix _{phi,q}P: 1 if n mod q >= m mod q, phi
// otherwise (0 above the diagonal).
Rational phi_q_entry(const Rational &phi, Index q, Index n, Index m);

// N x N block of _{phi,q}P. phi = 0 is allowed and gives a zero
// generalized Pascal matrix.
TriangularMatrix phi_q_matrix(const Rational &phi, Index q, std::size_t size);

// c(phi, q, x) = (1 + ... + x^{q-1}) / (1 - x^q/phi), so c_{qn+i} = phi^{-n}.
// Throws ZeroPhi for phi = 0.
CSequence phi_q_series(const Rational &phi, Index q);

// Multiplicative coordinates of a nonzero generalized Pascal matrix with
// respect to the special system: A = prod_q _{beta_q,q}P on the block.
using PhiCoordinates = std::map<Index, Rational>;

// beta_q = prod_{d | q} b_d^{mu(q/d)} with b the first column, for
// 2 <= q <= max_q. max_q must be below size(A); larger moduli are all-ones
// on the block. Throws ZeroEntry if some b_n vanishes.
PhiCoordinates phi_coordinates(const TriangularMatrix &a, Index max_q);

// Hadamard product of _{beta_q,q}P over the coordinates.
TriangularMatrix recompose(const PhiCoordinates &coords, std::size_t size);

// Coordinates of A x B equal the products of coordinates, and a matrix whose
// coordinates are all +-1 has only +-1 entries.
Report homomorphism_check(const TriangularMatrix &a, const TriangularMatrix &b, Index max_q);

// Gaussian binomial [n, m]_q from [n,m] = [n-1,m-1] + q^m [n-1,m]; valid
// for every rational q including roots of unity.
Rational gaussian_binomial(const Rational &q, Index n, Index m);

// P_{g(q,x)}: column n is x^n prod_{m=0}^{n} (1 - q^m x)^{-1}, expanded as
// power series through degree size-1.
TriangularMatrix q_umbral_matrix(const Rational &q, std::size_t size);

// Inverse of P_{g(q,x)}: row n is prod_{m=0}^{n-1} (x - q^m), coefficient of
// x^m in column m.
TriangularMatrix q_umbral_inverse(const Rational &q, std::size_t size);

// c(x) = (1 + ... + x^{q-1}) e^{x^q}, i.e. c_{qn+i} = 1/n!, through max_degree.
CSequence zero_overlay_series(Index q, Index max_degree);

// _{0,q}P x P_c with the series above. Entry (qn+i, qm+j) is C(n, m) when
// i >= j and 0 otherwise.
TriangularMatrix zero_overlay_matrix(Index q, std::size_t size);

} // namespace gpm

#endif
