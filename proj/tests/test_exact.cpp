#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "wilsonq/exact.hpp"

using namespace wilsonq;
using namespace wilsonq::oracles;

TEST_CASE("factorial: anchors and oracle sweep") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    for (std::uint64_t n = 0; n <= 40; ++n) CHECK(factorial(n) == oracle_factorial(n));
}

TEST_CASE("binomial: anchors, identity column, domain error") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
    for (std::uint64_t n = 0; n <= 30; ++n) CHECK(binomial(n, 0) == 1);
    for (std::uint64_t n = 0; n <= 25; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle_binomial(n, k));
    }
    CHECK_THROWS_AS(binomial(3, 4), std::domain_error);
}

TEST_CASE("stirling1: anchors and out-of-range zero") {
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling1(1, 1) == 1);
    CHECK(stirling1(4, 1) == -6);
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(3, 5) == 0);
    CHECK(stirling1(0, 1) == 0);
}

TEST_CASE("stirling1: falling-factorial expansion against polynomial oracle") {
    for (std::uint64_t n = 0; n <= 20; ++n) {
        auto row = oracle_stirling_row(n);
        for (std::uint64_t k = 0; k <= n; ++k) CHECK(stirling1(n, k) == row[k]);
    }
}

TEST_CASE("stirling1: triangle recurrence s(n+1,k) = s(n,k-1) - n s(n,k)") {
    for (std::uint64_t n = 0; n + 1 <= 64; ++n) {
        for (std::uint64_t k = 0; k <= n + 1; ++k) {
            Integer expect = -Integer(static_cast<unsigned long>(n)) * stirling1(n, k);
            if (k >= 1) expect += stirling1(n, k - 1);
            CHECK(stirling1(n + 1, k) == expect);
        }
    }
}

TEST_CASE("stirling1: evaluation identity prod(x-j) = sum s(n,k) x^k") {
    for (std::uint64_t n = 1; n <= 20; ++n) {
        for (long x = -5; x <= 5; ++x) {
            Integer lhs(1);
            for (std::uint64_t j = 0; j < n; ++j) lhs *= Integer(x) - Integer(static_cast<long>(j));
            Integer rhs(0);
            Integer xpow(1);
            for (std::uint64_t k = 0; k <= n; ++k) {
                rhs += stirling1(n, k) * xpow;
                xpow *= Integer(x);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("stirling1: first and second column closed forms") {
    for (std::uint64_t k = 0; k <= 30; ++k) {
        Integer expect = factorial(k);
        if (k % 2 == 1) expect = -expect;
        CHECK(stirling1(k + 1, 1) == expect);  // s(k+1,1) = (-1)^k k!
    }
    for (std::uint64_t k = 1; k <= 30; ++k) {
        Rational expect = Rational(factorial(k)) * harmonic(k);
        if (k % 2 == 0) expect = -expect;
        CHECK(Rational(stirling1(k + 1, 2)) == expect);  // s(k+1,2) = (-1)^(k+1) k! H_k
    }
}

TEST_CASE("harmonic: anchors and recurrence") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(3) == rat("11/6"));
    CHECK(harmonic(5) == oracle_harmonic(5));
    CHECK(harmonic(5) == rat("137/60"));
    for (std::uint64_t n = 0; n <= 200; ++n) {
        CHECK(harmonic(n + 1) ==
              harmonic(n) + make_rational(Integer(1), Integer(static_cast<unsigned long>(n + 1))));
    }
}

TEST_CASE("bernoulli: anchors under the B_1 = -1/2 convention") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat("-1/2"));
    CHECK(bernoulli(4) == rat("-1/30"));
    CHECK(bernoulli(12) == rat("-691/2730"));
    for (std::uint64_t n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli: Akiyama-Tanigawa cross-check") {
    for (std::uint64_t n = 0; n <= 40; ++n) CHECK(bernoulli(n) == oracle_bernoulli(n));
}

TEST_CASE("bernoulli: von Staudt-Clausen denominators for even m <= 60") {
    for (std::uint64_t m = 2; m <= 60; m += 2)
        CHECK(bernoulli(m).get_den() == oracle_vsc_denominator(m));
}

TEST_CASE("memo tables are safe under concurrent first use") {
    std::vector<std::thread> pool;
    std::vector<int> bad(8, 0);
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([t, &bad] {
            for (std::uint64_t n = 0; n <= 120; ++n) {
                if (factorial(n) != oracle_factorial(n)) bad[static_cast<std::size_t>(t)]++;
                if (stirling1(n % 40 + 1, 1) != (n % 40 % 2 == 0 ? factorial(n % 40)
                                                                 : -factorial(n % 40)))
                    bad[static_cast<std::size_t>(t)]++;
            }
            if (bernoulli(60 + static_cast<std::uint64_t>(t) % 4) !=
                oracle_bernoulli(60 + static_cast<std::uint64_t>(t) % 4))
                bad[static_cast<std::size_t>(t)]++;
            if (harmonic(150) != oracle_harmonic(150)) bad[static_cast<std::size_t>(t)]++;
        });
    }
    for (auto& th : pool) th.join();
    for (int b : bad) CHECK(b == 0);
}
