#ifndef WILSONQ_EXACT_HPP
#define WILSONQ_EXACT_HPP

/**
 * @file exact.hpp
 * @brief Exact combinatorial primitives: factorials, binomials, signed
 *        Stirling numbers of the first kind, harmonic and Bernoulli numbers.
 *
 * Bernoulli convention: these are the coefficients of x/(e^x - 1), so
 * B_1 = -1/2. Many references use the x/(1 - e^-x) convention with
 * B_1 = +1/2; everything downstream (the Lehmer-style congruences in
 * particular) depends on the -1/2 choice.
 *
 * All functions are pure. Internal memo tables are guarded and safe for
 * concurrent callers; results depend only on the arguments.
 */

#include <cstdint>

#include "wilsonq/numeric.hpp"

namespace wilsonq {

// n!
Integer factorial(std::uint64_t n);

// C(n, k). Throws std::domain_error when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

// Signed Stirling numbers of the first kind, defined by the falling
// factorial expansion prod_{j=0..n-1}(x - j) = sum_k s(n,k) x^k.
// Returns 0 for k > n, consistent with the expansion.
Integer stirling1(std::uint64_t n, std::uint64_t k);

// H_n = sum_{i=1..n} 1/i, with H_0 = 0.
Rational harmonic(std::uint64_t n);

// B_n under the x/(e^x - 1) convention (B_1 = -1/2), computed from the
// defining recurrence sum_{j=0..m} C(m+1, j) B_j = 0.
Rational bernoulli(std::uint64_t n);

}  // namespace wilsonq

#endif
