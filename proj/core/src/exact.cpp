#include "wilsonq/exact.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace wilsonq {

namespace {

// Memo tables are append-only and bounded; above the bound we compute
// without caching so pathological arguments cannot exhaust memory.
constexpr std::uint64_t kFactorialCacheBound = 1u << 16;
constexpr std::uint64_t kStirlingCacheBound = 1024;
constexpr std::uint64_t kHarmonicCacheBound = 1u << 16;
constexpr std::uint64_t kBernoulliCacheBound = 4096;

std::shared_mutex g_factorial_mutex;
std::vector<Integer> g_factorial{Integer(1)};  // g_factorial[i] = i!

std::shared_mutex g_stirling_mutex;
std::vector<std::vector<Integer>> g_stirling{{Integer(1)}};  // row n = s(n, 0..n)

std::shared_mutex g_harmonic_mutex;
std::vector<Rational> g_harmonic{Rational(0)};  // g_harmonic[i] = H_i

std::shared_mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};  // g_bernoulli[i] = B_i

// s(n+1, k) = s(n, k-1) - n * s(n, k), with s(n, k) = 0 out of range.
std::vector<Integer> next_stirling_row(const std::vector<Integer>& row, std::uint64_t n) {
    std::vector<Integer> next(row.size() + 1, Integer(0));
    for (std::size_t k = 0; k <= row.size(); ++k) {
        Integer v(0);
        if (k >= 1) v = row[k - 1];
        if (k < row.size()) v -= Integer(static_cast<unsigned long>(n)) * row[k];
        next[k] = v;
    }
    return next;
}

// B_m = -(1/(m+1)) sum_{j=0..m-1} C(m+1, j) B_j for m >= 1.
Rational bernoulli_from(const std::vector<Rational>& prior, std::uint64_t m) {
    Rational acc(0);
    for (std::uint64_t j = 0; j < m; ++j) {
        acc += Rational(binomial(m + 1, j)) * prior[j];
    }
    return -acc / Rational(Integer(static_cast<unsigned long>(m + 1)));
}

}  // namespace

Integer factorial(std::uint64_t n) {
    if (n >= kFactorialCacheBound) {
        Integer r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    {
        std::shared_lock lock(g_factorial_mutex);
        if (n < g_factorial.size()) return g_factorial[n];
    }
    std::unique_lock lock(g_factorial_mutex);
    while (g_factorial.size() <= n) {
        auto i = static_cast<unsigned long>(g_factorial.size());
        g_factorial.push_back(g_factorial.back() * Integer(i));
    }
    return g_factorial[n];
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::domain_error("binomial: requires k <= n");
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer stirling1(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Integer(0);
    if (n >= kStirlingCacheBound) {
        std::vector<Integer> row{Integer(1)};
        for (std::uint64_t i = 0; i < n; ++i) row = next_stirling_row(row, i);
        return row[k];
    }
    {
        std::shared_lock lock(g_stirling_mutex);
        if (n < g_stirling.size()) return g_stirling[n][k];
    }
    std::unique_lock lock(g_stirling_mutex);
    while (g_stirling.size() <= n) {
        std::uint64_t i = g_stirling.size() - 1;
        g_stirling.push_back(next_stirling_row(g_stirling.back(), i));
    }
    return g_stirling[n][k];
}

Rational harmonic(std::uint64_t n) {
    if (n >= kHarmonicCacheBound) {
        Rational h = harmonic(kHarmonicCacheBound - 1);
        for (std::uint64_t i = kHarmonicCacheBound; i <= n; ++i) {
            h += make_rational(Integer(1), Integer(static_cast<unsigned long>(i)));
        }
        return h;
    }
    {
        std::shared_lock lock(g_harmonic_mutex);
        if (n < g_harmonic.size()) return g_harmonic[n];
    }
    std::unique_lock lock(g_harmonic_mutex);
    while (g_harmonic.size() <= n) {
        auto i = static_cast<unsigned long>(g_harmonic.size());
        g_harmonic.push_back(g_harmonic.back() + make_rational(Integer(1), Integer(i)));
    }
    return g_harmonic[n];
}

Rational bernoulli(std::uint64_t n) {
    if (n >= kBernoulliCacheBound) {
        std::vector<Rational> table;
        table.reserve(n + 1);
        table.emplace_back(1);
        for (std::uint64_t m = 1; m <= n; ++m) table.push_back(bernoulli_from(table, m));
        return table[n];
    }
    {
        std::shared_lock lock(g_bernoulli_mutex);
        if (n < g_bernoulli.size()) return g_bernoulli[n];
    }
    std::unique_lock lock(g_bernoulli_mutex);
    while (g_bernoulli.size() <= n) {
        g_bernoulli.push_back(bernoulli_from(g_bernoulli, g_bernoulli.size()));
    }
    return g_bernoulli[n];
}

}  // namespace wilsonq
