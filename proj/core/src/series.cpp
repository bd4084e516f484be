#include "wilsonq/series.hpp"

#include "wilsonq/exact.hpp"
#include "wilsonq/quotients.hpp"

namespace wilsonq {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw std::domain_error("PowerSeries: order mismatch");
}

Rational unit_fraction(const Integer& den) { return make_rational(Integer(1), den); }

}  // namespace

PowerSeries PowerSeries::from_coeffs(std::vector<Rational> coeffs) {
    PowerSeries s(coeffs.size());
    s.coeffs_ = std::move(coeffs);
    return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, std::size_t e, std::size_t order) {
    PowerSeries s(order);
    if (e < order) s.coeffs_[e] = c;
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < b.order(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

PowerSeries operator-(const PowerSeries& a) {
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r.coeffs_[i] = -a.coeffs_[i];
    return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r.coeffs_[i] = c * a.coeffs_[i];
    return r;
}

PowerSeries div_xpow(const PowerSeries& a, std::size_t j) {
    if (j < 1) throw std::domain_error("div_xpow: requires j >= 1");
    if (j >= a.order()) throw std::domain_error("div_xpow: j must be below the order");
    for (std::size_t i = 0; i < j; ++i) {
        if (a[i] != 0)
            throw NotDivisible("div_xpow: nonzero coefficient below x^" + std::to_string(j));
    }
    PowerSeries r(a.order() - j);
    for (std::size_t i = j; i < a.order(); ++i) r.set(i - j, a[i]);
    return r;
}

PowerSeries named_series(NamedSeries which, std::size_t order) {
    PowerSeries s(order);
    switch (which) {
        case NamedSeries::kExp:
            for (std::size_t n = 0; n < order; ++n) s.set(n, unit_fraction(factorial(n)));
            break;
        case NamedSeries::kSinh:
            for (std::size_t n = 1; n < order; n += 2) s.set(n, unit_fraction(factorial(n)));
            break;
        case NamedSeries::kCosh:
            for (std::size_t n = 0; n < order; n += 2) s.set(n, unit_fraction(factorial(n)));
            break;
        case NamedSeries::kLog1mX2:
            for (std::size_t m = 1; 2 * m < order; ++m)
                s.set(2 * m, -unit_fraction(Integer(static_cast<unsigned long>(m))));
            break;
    }
    return s;
}

PowerSeries geometric_series(const Rational& r, std::size_t order) {
    PowerSeries s(order);
    Rational pow(1);
    for (std::size_t n = 0; n < order; ++n) {
        s.set(n, pow);
        pow *= r;
    }
    return s;
}

PowerSeries lerch_tail(std::size_t k, std::size_t order) {
    PowerSeries s(order);
    for (std::size_t n = 0; n < order; ++n)
        s.set(n, unit_fraction(Integer(static_cast<unsigned long>(n + k + 1))));
    return s;
}

PowerSeries inc_gamma_tail(std::size_t k, std::size_t order) {
    PowerSeries s(order);
    for (std::size_t n = 0; n < order; ++n)
        s.set(n, unit_fraction(factorial(n) * Integer(static_cast<unsigned long>(n + k + 1))));
    return s;
}

namespace {

CoeffCheck compare_all(const std::vector<const PowerSeries*>& routes, std::size_t order) {
    for (std::size_t n = 0; n < order; ++n) {
        for (std::size_t r = 1; r < routes.size(); ++r) {
            if ((*routes[r])[n] != (*routes[0])[n]) return CoeffCheck{false, n};
        }
    }
    return CoeffCheck{true, 0};
}

}  // namespace

CoeffCheck egf_m_check(std::size_t k, std::size_t order) {
    const int sign = (k % 2 == 0) ? 1 : -1;
    const Rational kfact(factorial(k));

    // Route 1: quotient values, coefficient n = M_k(n+k+1)/n!.
    PowerSeries quotient_route(order);
    PowerSeries unsigned_route(order);
    for (std::size_t n = 0; n < order; ++n) {
        auto arg = static_cast<std::int64_t>(n + k + 1);
        auto kk = static_cast<std::int64_t>(k);
        quotient_route.set(n, m_quotient(arg, kk).value / Rational(factorial(n)));
        unsigned_route.set(n, m_plus(arg, kk).value / Rational(factorial(n)));
    }

    // Route 2: split sum.
    PowerSeries split_route =
        inc_gamma_tail(k, order) + (Rational(sign) * kfact) * lerch_tail(k, order);

    // Route 3: the signed closed combination, with gamma(k+1, -x) built as a
    // shifted series and brought down by x^(k+1).
    PowerSeries gamma_shifted(order + k + 1);
    for (std::size_t n = 0; n + k + 1 < order + k + 1; ++n) {
        Rational c = unit_fraction(factorial(n) * Integer(static_cast<unsigned long>(n + k + 1)));
        gamma_shifted.set(n + k + 1, Rational(-sign) * c);  // (-1)^(k+1) x^(n+k+1) / (n!(n+k+1))
    }
    PowerSeries closed_route =
        Rational(sign) * (kfact * lerch_tail(k, order) - div_xpow(gamma_shifted, k + 1));

    // Unsigned variant: EG(M_k+; x) = (-1)^k EG(M_k; x).
    PowerSeries unsigned_from_signed = Rational(sign) * quotient_route;

    CoeffCheck main = compare_all({&quotient_route, &split_route, &closed_route}, order);
    if (!main.ok) return main;
    return compare_all({&unsigned_route, &unsigned_from_signed}, order);
}

CoeffCheck egf_z_check(std::size_t order) {
    PowerSeries z_route(order);
    for (std::size_t n = 0; n < order; ++n) {
        z_route.set(n, z_sum(static_cast<std::int64_t>(n + 1)).value / Rational(factorial(n)));
    }
    PowerSeries closed_route =
        named_series(NamedSeries::kExp, order) +
        div_xpow(-named_series(NamedSeries::kLog1mX2, order + 2), 2);
    return compare_all({&z_route, &closed_route}, order);
}

CoeffCheck sinh_identity_check(std::size_t order) {
    PowerSeries x = PowerSeries::monomial(Rational(1), 1, order);
    PowerSeries one = PowerSeries::monomial(Rational(1), 0, order);
    PowerSeries lhs = x * named_series(NamedSeries::kSinh, order) -
                      named_series(NamedSeries::kCosh, order) + one;

    PowerSeries rhs(order);  // x^2 sum x^(2n) / ((2n)! (2n+2))
    for (std::size_t n = 0; 2 * n + 2 < order; ++n) {
        rhs.set(2 * n + 2,
                unit_fraction(factorial(2 * n) * Integer(static_cast<unsigned long>(2 * n + 2))));
    }
    return compare_all({&lhs, &rhs}, order);
}

}  // namespace wilsonq
