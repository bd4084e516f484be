#include "wilsonq/quotients.hpp"

#include <stdexcept>

#include "wilsonq/exact.hpp"

namespace wilsonq {

namespace {

void require_positive(std::int64_t n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": requires n >= 1");
}

void require_k_range(std::int64_t n, std::int64_t k, const char* who) {
    if (k < 0 || k >= n) throw std::domain_error(std::string(who) + ": requires 0 <= k < n");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// x! mod m via incremental products, counting the multiplications performed.
std::uint64_t factorial_mod(std::int64_t x, std::uint64_t m, std::uint64_t* muls) {
    std::uint64_t acc = 1 % m;
    for (std::int64_t i = 2; i <= x; ++i) {
        acc = mulmod(acc, static_cast<std::uint64_t>(i) % m, m);
        if (muls) ++*muls;
    }
    return acc;
}

QuotientValue as_z_value(Rational value, std::int64_t n) {
    QuotientValue q;
    q.value = std::move(value);
    q.n = n;
    q.k = -1;
    q.is_integer = is_integral(q.value);
    return q;
}

}  // namespace

std::int64_t KChoice::resolve(std::int64_t n) const {
    switch (mode_) {
        case Mode::kZero:
            return 0;
        case Mode::kBalanced:
            return (n - 1) / 2;
        case Mode::kExplicit:
            if (k_ < 0 || k_ >= n) throw std::domain_error("KChoice: explicit k outside [0, n)");
            return k_;
    }
    throw std::logic_error("KChoice: unreachable");
}

QuotientValue wilson_quotient(std::int64_t n) {
    require_positive(n, "wilson_quotient");
    return m_quotient(n, 0);
}

QuotientValue m_quotient(std::int64_t n, std::int64_t k) {
    require_positive(n, "m_quotient");
    require_k_range(n, k, "m_quotient");
    Integer prod = factorial(static_cast<std::uint64_t>(k)) *
                   factorial(static_cast<std::uint64_t>(n - k - 1));
    Integer num;
    if (k & 1) {
        num = Integer(1) - prod;
    } else {
        num = Integer(1) + prod;
    }
    QuotientValue q;
    q.value = make_rational(num, Integer(static_cast<long>(n)));
    q.n = n;
    q.k = k;
    q.is_integer = is_integral(q.value);
    return q;
}

QuotientValue m_plus(std::int64_t n, std::int64_t k) {
    QuotientValue q = m_quotient(n, k);
    if (k & 1) q.value = -q.value;
    q.is_integer = is_integral(q.value);
    return q;
}

Rational wilson_via_stirling(std::int64_t n, std::int64_t k) {
    require_positive(n, "wilson_via_stirling");
    require_k_range(n, k, "wilson_via_stirling");
    auto row = static_cast<std::uint64_t>(k + 1);
    Integer acc(0);
    Integer npow(1);
    for (std::uint64_t i = 0; i <= row; ++i) {
        acc += stirling1(row, i + 1) * npow;
        npow *= static_cast<long>(n);
    }
    Integer num = Integer(1) + factorial(static_cast<std::uint64_t>(n - k - 1)) * acc;
    return make_rational(num, Integer(static_cast<long>(n)));
}

bool noncomposite_test(std::int64_t n, const KChoice& choice, FactorialModCounters* counters) {
    require_positive(n, "noncomposite_test");
    std::int64_t k = choice.resolve(n);
    if (counters) *counters = FactorialModCounters{};
    if (n == 1) return true;  // every residue is 0 = -1 (mod 1)
    auto m = static_cast<std::uint64_t>(n);
    std::uint64_t left = factorial_mod(k, m, counters ? &counters->left_muls : nullptr);
    std::uint64_t right = factorial_mod(n - k - 1, m, counters ? &counters->right_muls : nullptr);
    std::uint64_t prod = mulmod(left, right, m);
    std::uint64_t lhs = (k & 1) ? (m - prod) % m : prod;
    return lhs == m - 1;
}

bool is_noncomposite(std::int64_t n) {
    if (n < 1) throw std::domain_error("is_noncomposite: requires n >= 1");
    if (n == 1 || n == 2) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

QuotientValue z_sum(std::int64_t n) {
    if (n < 1) throw std::domain_error("z_sum: Z(n) is undefined for n < 1");
    Rational acc(0);
    for (std::int64_t k = 0; k < n; ++k) acc += m_quotient(n, k).value;
    return as_z_value(std::move(acc), n);
}

QuotientValue z_closed(std::int64_t n) {
    if (n < 1) throw std::domain_error("z_closed: Z(n) is undefined for n < 1");
    Rational v(1);
    if (n % 2 == 1) {  // (1 + (-1)^(n-1)) = 2 for odd n, 0 for even n
        v += make_rational(Integer(2) * factorial(static_cast<std::uint64_t>(n - 1)),
                           Integer(static_cast<long>(n + 1)));
    }
    return as_z_value(std::move(v), n);
}

QuotientValue z_plus_sum(std::int64_t n) {
    if (n < 1) throw std::domain_error("z_plus_sum: Z+(n) is undefined for n < 1");
    Rational acc(0);
    for (std::int64_t k = 0; k < n; ++k) acc += m_plus(n, k).value;
    return as_z_value(std::move(acc), n);
}

QuotientValue z_plus_closed(std::int64_t n) {
    if (n < 1) throw std::domain_error("z_plus_closed: Z+(n) is undefined for n < 1");
    Rational v(0);
    if (n % 2 == 1) v = make_rational(Integer(1), Integer(static_cast<long>(n)));
    Rational tail(0);
    for (std::int64_t r = 1; r <= n; ++r) {
        tail += make_rational(pow2(static_cast<unsigned long>(r)), Integer(static_cast<long>(r)));
    }
    v += make_rational(factorial(static_cast<std::uint64_t>(n - 1)),
                       pow2(static_cast<unsigned long>(n))) *
         tail;
    return as_z_value(std::move(v), n);
}

}  // namespace wilsonq
