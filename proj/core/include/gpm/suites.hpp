#ifndef GPM_SUITES_HPP
#define GPM_SUITES_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <gpm/matrix.hpp>
#include <gpm/report.hpp>
#include <gpm/sequence.hpp>

namespace gpm
{

// identities, lucas, primes, kron, recurrences, umbral, convolution,
// decompose-roundtrip
const std::vector<std::string> &suite_names();

// Runs a named invariant suite on blocks of the given size. Randomized
// suites use a fixed seed. Throws std::invalid_argument for unknown names
// or a size below 1.
Report run_suite(const std::string &name, std::size_t size);

// Entrywise comparison; the counterexample names the first differing entry.
Report compare_matrices(const std::string &suite, const TriangularMatrix &lhs, const TriangularMatrix &rhs);

// Nonzero rational with numerator and denominator drawn from [1, 9], random sign.
Rational random_nonzero_rational(std::mt19937_64 &rng);
// c_0 = c_1 = 1, remaining terms random nonzero, length len.
CSequence random_c_sequence(std::mt19937_64 &rng, std::size_t len);

} // namespace gpm

#endif
