#ifndef WILSONQ_SERIES_HPP
#define WILSONQ_SERIES_HPP

/**
 * @file series.hpp
 * @brief Truncated formal power series over exact rationals, and the
 *        coefficient-by-coefficient checks of the exponential
 *        generating-function identities for M_k, Z, and the sinh
 *        rearrangement.
 *
 * Everything here is formal: a series is its first `order` coefficients,
 * arithmetic truncates at that order, and identity checks compare exact
 * rational coefficients. No convergence questions arise and nothing is
 * ever evaluated numerically.
 */

#include <cstddef>
#include <vector>

#include "wilsonq/numeric.hpp"

namespace wilsonq {

// Raised by div_xpow when a low-order coefficient is nonzero.
class NotDivisible : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Coefficients of x^0 .. x^{order-1}. Arithmetic requires equal orders.
class PowerSeries {
   public:
    explicit PowerSeries(std::size_t order) : coeffs_(order) {
        if (order < 1) throw std::domain_error("PowerSeries: order must be >= 1");
    }
    static PowerSeries from_coeffs(std::vector<Rational> coeffs);
    // c * x^e truncated at `order` (zero series when e >= order).
    static PowerSeries monomial(const Rational& c, std::size_t e, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    void set(std::size_t i, Rational v) { coeffs_.at(i) = std::move(v); }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

   private:
    std::vector<Rational> coeffs_;
};

// a / x^j: coefficients shift down by j and the order decreases by j.
// Requires the first j coefficients of a to vanish (NotDivisible otherwise)
// and j < a.order().
PowerSeries div_xpow(const PowerSeries& a, std::size_t j);

enum class NamedSeries {
    kExp,      // sum x^n / n!
    kSinh,     // sum x^(2n+1) / (2n+1)!
    kCosh,     // sum x^(2n) / (2n)!
    kLog1mX2,  // ln(1 - x^2) = -sum_{m>=1} x^(2m) / m
};

PowerSeries named_series(NamedSeries which, std::size_t order);

// sum r^n x^n (the expansion of 1/(1 - r x)).
PowerSeries geometric_series(const Rational& r, std::size_t order);

// Coefficient rule 1/(n + k + 1): the defining series of the Lerch
// transcendent Phi(x, 1, k+1).
PowerSeries lerch_tail(std::size_t k, std::size_t order);

// Coefficient rule 1/(n! (n + k + 1)): the series factor of the lower
// incomplete gamma function gamma(k+1, -x) / (-x)^(k+1).
PowerSeries inc_gamma_tail(std::size_t k, std::size_t order);

struct CoeffCheck {
    bool ok = false;
    std::size_t first_mismatch = 0;  // meaningful only when !ok
};

// EG(M_k; x): coefficient n must equal M_k(n+k+1)/n!, and must agree with
// both the split sum inc_gamma_tail(k) + (-1)^k k! lerch_tail(k) and the
// signed closed combination (-1)^k (k! Phi(x,1,k+1) - gamma(k+1,-x)/x^(k+1)).
// The unsigned variant is checked simultaneously via the (-1)^k relation.
CoeffCheck egf_m_check(std::size_t k, std::size_t order);

// EG(Z; x) = e^x - ln(1 - x^2)/x^2, against Z(n+1)/n!.
CoeffCheck egf_z_check(std::size_t order);

// x sinh x - cosh x + 1 = x^2 sum x^(2n) / ((2n)! (2n+2)).
CoeffCheck sinh_identity_check(std::size_t order);

}  // namespace wilsonq

#endif
