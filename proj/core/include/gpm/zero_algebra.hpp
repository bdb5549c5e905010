#ifndef GPM_ZERO_ALGEBRA_HPP
#define GPM_ZERO_ALGEBRA_HPP

#include <cstddef>
#include <vector>

#include <gpm/matrix.hpp>
#include <gpm/polynomial.hpp>
#include <gpm/report.hpp>

namespace gpm
{

// C(n, m)_{0,q}: 1 iff every base-q digit of n is >= the digit of m.
int digit_binom(Index q, Index n, Index m);

// _{[0,q]}P (generalized Sierpinski matrix) from the digit rule.
TriangularMatrix zero_fractal_matrix(Index q, std::size_t size);

// Top q^{k+1} block of _{[0,q]}P against S_{q,1} (x) S_{q,k} and
// S_{q,k} (x) S_{q,1}, where S_{q,k} is the top q^k block.
Report sierpinski_selfsim_check(Index q, unsigned k);

// (a(x)|q): entry (n, m) = a_{n-m} C(n, m)_{0,q}.
TriangularMatrix masked_matrix(const Polynomial &a, Index q, std::size_t size);

// Does a(x) = (a_0 + ... + a_{q-1} x^{q-1}) a(x^q) hold through degree D,
// i.e. a_{qn+i} = a_i a_n?
bool is_fractal_series(const Polynomial &a, Index q, Index max_degree);

// The fractal series generated by base[0..q-1]: a_n = prod_i base[n_i].
Polynomial fractal_series(const std::vector<Rational> &base, Index q, Index max_degree);

// Product of the (a|q) algebra through degree D:
// [x^n] a o b = sum over m digit-dominated by n of a_m b_{n-m}.
Polynomial masked_convolve(const Polynomial &a, const Polynomial &b, Index q, Index max_degree);

// The same product for fractal operands with a_0 = b_0 = 1, as a digit
// product: [x^n] = prod_i [x^{n_i}] a(x) b(x). Throws NotFractal when a
// precondition fails at some degree <= D.
Polynomial carryless_convolve(const Polynomial &a, const Polynomial &b, Index q, Index max_degree);

// Row n of (a|q) as prod_i u_{n_i}(x^{q^i}), u_d(x) = sum_{m<=d} a_{d-m} x^m.
// Throws NotFractal.
Polynomial masked_row(const Polynomial &a, Index q, Index n);

// (a, b | q, k) = ((b_0 + ... + b_{q^k-1} x^{q^k-1}) a(x^{q^k}) | q); entry
// (q^k n + i, q^k m + j) = a_{n-m} C(n,m)_{0,q} b_{i-j} C(i,j)_{0,q}.
// size must be a multiple of q^k and deg b < q^k (SizeMismatch otherwise).
TriangularMatrix block_matrix(const Polynomial &a, const Polynomial &b, Index q, unsigned k, std::size_t size);

// (a,b|q,k)(c,d|q,k) = (a o c, b o d|q,k), left side by ordinary matrix
// multiplication, right side built directly.
Report block_product_check(const Polynomial &a, const Polynomial &b, const Polynomial &c, const Polynomial &d,
                           Index q, unsigned k, std::size_t size);

// C(n, m)_q = prod_i C(n_i, m_i) over base-q digits (0 if some m_i > n_i).
Rational t_coefficient(Index q, Index n, Index m);

// Row generating function prod_i (1 + x^{q^i})^{n_i}.
Polynomial t_row(Index q, Index n);

// T^{(q)} from digit products.
TriangularMatrix t_matrix(Index q, std::size_t size);
// T^{(q)} as the top block of T_1 (x) T_1 (x) ..., T_1 the q x q Pascal block.
TriangularMatrix t_matrix_kronecker(Index q, std::size_t size);
// T^{(q)} as P_c x _{[0,q]}P with the fractal c, c_n = 1/n! for n < q.
TriangularMatrix t_matrix_overlay(Index q, std::size_t size);

} // namespace gpm

#endif
