#ifndef WILSONQ_NUMERIC_HPP
#define WILSONQ_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wilsonq {

// The universal value types. Every quantity in the library is exact; no
// rounding occurs anywhere.
using Integer = mpz_class;
using Rational = mpq_class;  // kept canonical: gcd(|num|, den) = 1, den >= 1

// Reduced fraction num/den with positive denominator. Throws on den = 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Exact decimal rendering.
inline std::string to_decimal(const Integer& v) { return v.get_str(); }

// "num/den" with "/den" omitted when den = 1.
inline std::string to_fraction(const Rational& q) { return q.get_str(); }

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace wilsonq

#endif
