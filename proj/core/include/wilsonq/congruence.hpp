#ifndef WILSONQ_CONGRUENCE_HPP
#define WILSONQ_CONGRUENCE_HPP

/**
 * @file congruence.hpp
 * @brief Rational-modulo reduction and checkers for the Lehmer-style
 *        congruences, the Z/Z+ congruences, and the harmonic-number sums,
 *        plus the range-sweep suite.
 *
 * Rational congruence semantics: a = b (mod m) means the reduced a - b has a
 * denominator coprime to m and maps to 0 under rational_mod. A denominator
 * sharing a factor with m makes the congruence ill-posed at that modulus,
 * which is reported as NotPIntegral, distinct from holding or failing.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wilsonq/numeric.hpp"

namespace wilsonq {

// Raised when a rational is reduced modulo m but its denominator is not
// invertible mod m.
class NotPIntegral : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Canonical representative modulo m: value in [0, m), m >= 1.
struct Residue {
    Integer value;
    Integer modulus;

    friend bool operator==(const Residue& a, const Residue& b) = default;
};

// Canonicalizes v into [0, m). m >= 1.
Residue make_residue(const Integer& v, const Integer& m);

// Arithmetic between equal moduli only; mismatches throw std::domain_error.
Residue operator+(const Residue& a, const Residue& b);
Residue operator*(const Residue& a, const Residue& b);

// q.num * q.den^{-1} mod m, canonical in [0, m). Requires m >= 2 and
// gcd(q.den, m) = 1; otherwise NotPIntegral.
Residue rational_mod(const Rational& q, const Integer& m);

// Machine-readable outcome of one congruence check. `lhs`/`rhs` are empty
// exactly when the check was ill-posed (NotPIntegral). `asserted` is false
// for purely informational reports, which never affect suite verdicts.
struct CongruenceReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> params;
    Integer modulus;
    std::optional<Residue> lhs;
    std::optional<Residue> rhs;
    bool holds = false;
    bool ill_posed = false;
    bool asserted = true;
    std::string note;
};

// Lehmer's relation: p-1 + p t W(p) = p B_{t(p-1)} (mod p^2), p odd prime.
CongruenceReport check_lehmer(std::int64_t p, std::int64_t t);

// M_0(p) = B_{2(p-1)} - B_{p-1} (mod p).
CongruenceReport check_m0_bernoulli(std::int64_t p);

// M_k(p) = B_{2(p-1)} - B_{p-1} - H_k (mod p), 0 <= k < p.
CongruenceReport check_mk_bernoulli(std::int64_t p, std::int64_t k);

// p-1 + p t M_k(p) = p B_{t(p-1)} - p t H_k (mod p^2).
CongruenceReport check_mk_lehmer(std::int64_t p, std::int64_t k, std::int64_t t);

// Unsigned forms, both moduli: M_k+(p) = (-1)^k (B_{2(p-1)} - B_{p-1} - H_k)
// (mod p) and (-1)^k (p-1) + p t M_k+(p) = (-1)^k (p B_{t(p-1)} - p t H_k)
// (mod p^2). The report's lhs/rhs carry the mod-p^2 pair; the mod-p
// sub-verdict is recorded in the note. holds is the conjunction.
CongruenceReport check_mplus(std::int64_t p, std::int64_t k, std::int64_t t);

// Z(n) = -1 (mod n) for non-composite n, = +1 for composite n; n >= 2.
CongruenceReport check_z_sign(std::int64_t n);

// sum_{k=1..p-1} H_k = 1 (mod p), p odd prime.
CongruenceReport check_harmonic_sum(std::int64_t p);

// Reporter, not an asserter: records the residues of H_p - 1/p (mod p) and
// p H_p (mod p^2), and whether the literal form H_p = 1 + 1/p (mod p) holds.
// Observation: the additive constant is 0, not 1, for every p >= 5.
CongruenceReport probe_harmonic_p(std::int64_t p);

// n | Z(2n-1) for non-composite n. For composite n the report is
// informational only (not asserted); with require_noncomposite = true a
// composite n is a domain error instead.
CongruenceReport check_z_odd(std::int64_t n, bool require_noncomposite = false);

// Z+(2n) = 0 (mod 2n) when n is 2 or composite; Z+(2n) = n+1 (mod 2n) when
// n is an odd prime. Selects the branch by the class of n; n >= 2.
CongruenceReport check_zplus_even(std::int64_t n);

// Z+(p) = B_{2(p-1)} - B_{p-1} - H_{(p-1)/2}/2 (mod p), p odd prime.
CongruenceReport check_zplus_prime(std::int64_t p);

// Z+(p) = (M_0(p) + M_{(p-1)/2}(p))/2 (mod p), p odd prime.
CongruenceReport check_zplus_half(std::int64_t p);

enum class KMode { kZero, kBalanced, kAll };

enum class Family { kLehmer, kZSign, kZPlus, kHarmonic };

struct VerifyConfig {
    std::int64_t p_max = 13;
    std::int64_t n_max = 50;
    std::int64_t bernoulli_p_max = 13;
    std::vector<std::int64_t> t_set = {1};
    KMode k_mode = KMode::kAll;
    int jobs = 1;
};

// One family's checkers over their admissible ranges under the config.
// Bernoulli-dependent checkers are capped at bernoulli_p_max. Reports come
// back sorted by (name, params); per-item errors become ill-posed reports
// rather than aborting the sweep. Evaluation may be concurrent (jobs > 1);
// the result is identical either way.
std::vector<CongruenceReport> run_family(Family family, const VerifyConfig& config);

// Every congruence family in one deterministic list.
std::vector<CongruenceReport> verify_suite(const VerifyConfig& config);

struct SuiteSummary {
    std::int64_t checked = 0;
    std::int64_t held = 0;
    std::int64_t failed = 0;
    std::int64_t ill_posed = 0;

    // Suite verdict: no asserted report failed or was ill-posed.
    bool all_asserted_hold = true;
};

SuiteSummary summarize(const std::vector<CongruenceReport>& reports);

}  // namespace wilsonq

#endif
