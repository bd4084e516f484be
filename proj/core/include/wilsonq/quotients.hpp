#ifndef WILSONQ_QUOTIENTS_HPP
#define WILSONQ_QUOTIENTS_HPP

/**
 * @file quotients.hpp
 * @brief Generalized Wilson quotients M_k(n), their unsigned forms, the sums
 *        Z(n) and Z+(n) (both as direct sums and in closed form), and the
 *        non-compositeness test they induce.
 *
 * M_k(n) = (1 + (-1)^k k! (n-k-1)!) / n is an integer exactly when n is 1 or
 * prime. The test is Theta(n) modular multiplications and is a mathematical
 * artifact, not a practical prime test.
 */

#include <cstdint>
#include <optional>

#include "wilsonq/numeric.hpp"

namespace wilsonq {

// An M_k(n) or Z-type value together with its integrality verdict.
// k = -1 is the sentinel for Z-type values.
struct QuotientValue {
    Rational value;
    std::int64_t n = 0;
    std::int64_t k = -1;
    bool is_integer = false;
};

// k selection for the non-compositeness test: k = 0 (classic Wilson),
// k = floor((n-1)/2) (balanced; halves each factorial product), or explicit.
class KChoice {
   public:
    static KChoice zero() { return KChoice{Mode::kZero, 0}; }
    static KChoice balanced() { return KChoice{Mode::kBalanced, 0}; }
    static KChoice at(std::int64_t k) { return KChoice{Mode::kExplicit, k}; }

    // Concrete k for a given n. Throws std::domain_error if an explicit k
    // is outside [0, n).
    std::int64_t resolve(std::int64_t n) const;

   private:
    enum class Mode { kZero, kBalanced, kExplicit };
    KChoice(Mode m, std::int64_t k) : mode_(m), k_(k) {}
    Mode mode_;
    std::int64_t k_;
};

// Modular-multiplication counts of the two factorial products in one
// non-compositeness test (bench instrumentation).
struct FactorialModCounters {
    std::uint64_t left_muls = 0;   // k! mod n
    std::uint64_t right_muls = 0;  // (n-k-1)! mod n
};

// W(n) = (1 + (n-1)!)/n; equals m_quotient(n, 0).
QuotientValue wilson_quotient(std::int64_t n);

// M_k(n) = (1 + (-1)^k k! (n-k-1)!)/n, reduced. Requires 1 <= n, 0 <= k < n.
QuotientValue m_quotient(std::int64_t n, std::int64_t k);

// M_k+(n) = |M_k(n)| = ((-1)^k + k!(n-k-1)!)/n.
QuotientValue m_plus(std::int64_t n, std::int64_t k);

// W(n) recovered through the Stirling expansion of the falling factorial:
// (1 + (n-k-1)! sum_{i=0..k+1} s(k+1, i+1) n^i) / n. Equal to
// wilson_quotient(n).value for every admissible k.
Rational wilson_via_stirling(std::int64_t n, std::int64_t k);

// True iff (-1)^k k! (n-k-1)! = -1 (mod n), which holds iff n is 1 or prime.
// Factorial products are reduced mod n incrementally; full factorials are
// never formed. Counters, when given, receive the per-product mul counts.
bool noncomposite_test(std::int64_t n, const KChoice& choice,
                       FactorialModCounters* counters = nullptr);

// Deterministic trial division; true for 1 and the primes.
bool is_noncomposite(std::int64_t n);

// Z(n) = sum_{k=0..n-1} M_k(n); an integer >= 1 for every n >= 1.
QuotientValue z_sum(std::int64_t n);

// Z(n) = 1 + (1 + (-1)^(n-1)) (n-1)! / (n+1).
QuotientValue z_closed(std::int64_t n);

// Z+(n) = sum_{k=0..n-1} M_k+(n); integer iff n is even or non-composite.
QuotientValue z_plus_sum(std::int64_t n);

// Z+(n) = (1 + (-1)^(n-1))/(2n) + ((n-1)!/2^n) sum_{r=1..n} 2^r/r.
QuotientValue z_plus_closed(std::int64_t n);

}  // namespace wilsonq

#endif
