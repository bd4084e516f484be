#include "wilsonq/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "wilsonq/exact.hpp"
#include "wilsonq/quotients.hpp"

namespace wilsonq {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

bool is_prime(std::int64_t n) { return n >= 2 && is_noncomposite(n); }

void require_prime(std::int64_t p, const char* who) {
    if (!is_prime(p)) throw std::domain_error(std::string(who) + ": requires p prime");
}

void require_odd_prime(std::int64_t p, const char* who) {
    if (p < 3 || !is_prime(p)) throw std::domain_error(std::string(who) + ": requires odd prime p");
}

Integer int_of(std::int64_t v) { return Integer(static_cast<long>(v)); }

// The value of an integral quotient; preconditions guarantee den = 1.
Integer whole(const QuotientValue& q, const char* who) {
    if (!q.is_integer) throw std::logic_error(std::string(who) + ": expected an integral value");
    return q.value.get_num();
}

CongruenceReport make_report(std::string name, Params params, Residue lhs, Residue rhs,
                             std::string note = {}, bool asserted = true) {
    CongruenceReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.modulus = lhs.modulus;
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.asserted = asserted;
    r.note = std::move(note);
    return r;
}

}  // namespace

Residue make_residue(const Integer& v, const Integer& m) {
    if (m < 1) throw std::domain_error("make_residue: modulus must be >= 1");
    Integer value;
    mpz_mod(value.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return Residue{value, m};
}

Residue operator+(const Residue& a, const Residue& b) {
    if (a.modulus != b.modulus) throw std::domain_error("Residue: modulus mismatch");
    return make_residue(a.value + b.value, a.modulus);
}

Residue operator*(const Residue& a, const Residue& b) {
    if (a.modulus != b.modulus) throw std::domain_error("Residue: modulus mismatch");
    return make_residue(a.value * b.value, a.modulus);
}

Residue rational_mod(const Rational& q, const Integer& m) {
    if (m < 2) throw std::domain_error("rational_mod: modulus must be >= 2");
    const Integer& den = q.get_den();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw NotPIntegral("rational_mod: denominator " + den.get_str() +
                           " not invertible modulo " + m.get_str());
    }
    return make_residue(q.get_num() * inv, m);
}

CongruenceReport check_lehmer(std::int64_t p, std::int64_t t) {
    require_odd_prime(p, "check_lehmer");
    if (t < 1) throw std::domain_error("check_lehmer: requires t >= 1");
    Integer p2 = int_of(p) * int_of(p);
    Integer w = whole(wilson_quotient(p), "check_lehmer");
    Residue lhs = make_residue(int_of(p - 1) + int_of(p) * int_of(t) * w, p2);
    Residue rhs = rational_mod(Rational(int_of(p)) * bernoulli(static_cast<std::uint64_t>(t * (p - 1))), p2);
    return make_report("lehmer", {{"p", p}, {"t", t}}, std::move(lhs), std::move(rhs));
}

CongruenceReport check_m0_bernoulli(std::int64_t p) {
    require_prime(p, "check_m0_bernoulli");
    Integer m0 = whole(wilson_quotient(p), "check_m0_bernoulli");
    Rational diff = bernoulli(static_cast<std::uint64_t>(2 * (p - 1))) -
                    bernoulli(static_cast<std::uint64_t>(p - 1));
    Residue lhs = make_residue(m0, int_of(p));
    Residue rhs = rational_mod(diff, int_of(p));
    return make_report("m0_bernoulli", {{"p", p}}, std::move(lhs), std::move(rhs));
}

CongruenceReport check_mk_bernoulli(std::int64_t p, std::int64_t k) {
    require_prime(p, "check_mk_bernoulli");
    if (k < 0 || k >= p) throw std::domain_error("check_mk_bernoulli: requires 0 <= k < p");
    Integer mk = whole(m_quotient(p, k), "check_mk_bernoulli");
    Rational rhs_value = bernoulli(static_cast<std::uint64_t>(2 * (p - 1))) -
                         bernoulli(static_cast<std::uint64_t>(p - 1)) -
                         harmonic(static_cast<std::uint64_t>(k));
    Residue lhs = make_residue(mk, int_of(p));
    Residue rhs = rational_mod(rhs_value, int_of(p));
    return make_report("mk_bernoulli", {{"p", p}, {"k", k}}, std::move(lhs), std::move(rhs));
}

CongruenceReport check_mk_lehmer(std::int64_t p, std::int64_t k, std::int64_t t) {
    require_odd_prime(p, "check_mk_lehmer");
    if (k < 0 || k >= p) throw std::domain_error("check_mk_lehmer: requires 0 <= k < p");
    if (t < 1) throw std::domain_error("check_mk_lehmer: requires t >= 1");
    Integer p2 = int_of(p) * int_of(p);
    Integer mk = whole(m_quotient(p, k), "check_mk_lehmer");
    Residue lhs = make_residue(int_of(p - 1) + int_of(p) * int_of(t) * mk, p2);
    Rational rhs_value =
        Rational(int_of(p)) * bernoulli(static_cast<std::uint64_t>(t * (p - 1))) -
        Rational(int_of(p) * int_of(t)) * harmonic(static_cast<std::uint64_t>(k));
    Residue rhs = rational_mod(rhs_value, p2);
    return make_report("mk_lehmer", {{"p", p}, {"k", k}, {"t", t}}, std::move(lhs), std::move(rhs));
}

CongruenceReport check_mplus(std::int64_t p, std::int64_t k, std::int64_t t) {
    require_odd_prime(p, "check_mplus");
    if (k < 0 || k >= p) throw std::domain_error("check_mplus: requires 0 <= k < p");
    if (t < 1) throw std::domain_error("check_mplus: requires t >= 1");
    const int sign = (k & 1) ? -1 : 1;
    Integer p2 = int_of(p) * int_of(p);
    Integer mkp = whole(m_plus(p, k), "check_mplus");
    Rational bern_part = bernoulli(static_cast<std::uint64_t>(2 * (p - 1))) -
                         bernoulli(static_cast<std::uint64_t>(p - 1)) -
                         harmonic(static_cast<std::uint64_t>(k));

    Residue lhs_p = make_residue(mkp, int_of(p));
    Residue rhs_p = rational_mod(Rational(sign) * bern_part, int_of(p));
    bool holds_p = lhs_p == rhs_p;

    Residue lhs_p2 = make_residue(int_of(sign) * int_of(p - 1) + int_of(p) * int_of(t) * mkp, p2);
    Rational rhs2_value =
        Rational(sign) * (Rational(int_of(p)) * bernoulli(static_cast<std::uint64_t>(t * (p - 1))) -
                          Rational(int_of(p) * int_of(t)) * harmonic(static_cast<std::uint64_t>(k)));
    Residue rhs_p2 = rational_mod(rhs2_value, p2);

    std::ostringstream note;
    note << "mod p: " << lhs_p.value.get_str() << " vs " << rhs_p.value.get_str() << " (mod "
         << p << "), " << (holds_p ? "holds" : "fails");
    CongruenceReport r = make_report("mplus", {{"p", p}, {"k", k}, {"t", t}}, std::move(lhs_p2),
                                     std::move(rhs_p2), note.str());
    r.holds = r.holds && holds_p;
    return r;
}

CongruenceReport check_z_sign(std::int64_t n) {
    if (n < 2) throw std::domain_error("check_z_sign: requires n >= 2");
    bool nc = is_noncomposite(n);
    Integer z = whole(z_closed(n), "check_z_sign");
    Residue lhs = make_residue(z, int_of(n));
    Residue rhs = make_residue(nc ? Integer(-1) : Integer(1), int_of(n));
    return make_report("z_sign", {{"n", n}}, std::move(lhs), std::move(rhs),
                       nc ? "n non-composite: Z(n) = -1 expected"
                          : "n composite: Z(n) = +1 expected");
}

CongruenceReport check_harmonic_sum(std::int64_t p) {
    require_odd_prime(p, "check_harmonic_sum");
    Rational sum(0);
    for (std::int64_t k = 1; k < p; ++k) sum += harmonic(static_cast<std::uint64_t>(k));
    Residue lhs = rational_mod(sum, int_of(p));
    Residue rhs = make_residue(Integer(1), int_of(p));
    return make_report("harmonic_sum", {{"p", p}}, std::move(lhs), std::move(rhs));
}

CongruenceReport probe_harmonic_p(std::int64_t p) {
    if (p < 5) throw std::domain_error("probe_harmonic_p: requires p >= 5");
    require_prime(p, "probe_harmonic_p");
    Rational hp = harmonic(static_cast<std::uint64_t>(p));
    Rational h_prev = hp - make_rational(Integer(1), int_of(p));  // = H_{p-1}
    Integer p2 = int_of(p) * int_of(p);
    Residue r1 = rational_mod(h_prev, int_of(p));
    Residue r2 = rational_mod(Rational(int_of(p)) * hp, p2);
    bool literal_form = rational_mod(h_prev - Rational(1), int_of(p)).value == 0;

    std::ostringstream note;
    note << "H_p - 1/p = H_(p-1) has residue " << r1.value.get_str() << " (mod " << p
         << "); p*H_p has residue " << r2.value.get_str() << " (mod " << p2.get_str()
         << "); literal form H_p = 1 + 1/p (mod p) holds: " << (literal_form ? "true" : "false");
    CongruenceReport r = make_report("probe_harmonic_p", {{"p", p}}, std::move(r1),
                                     make_residue(Integer(0), int_of(p)), note.str(),
                                     /*asserted=*/false);
    return r;
}

CongruenceReport check_z_odd(std::int64_t n, bool require_noncomposite) {
    if (n < 1) throw std::domain_error("check_z_odd: requires n >= 1");
    bool nc = is_noncomposite(n);
    if (!nc && require_noncomposite)
        throw std::domain_error("check_z_odd: n is composite");
    Integer z = whole(z_closed(2 * n - 1), "check_z_odd");
    Residue lhs = make_residue(z, int_of(n));
    Residue rhs = make_residue(Integer(0), int_of(n));
    return make_report("z_odd", {{"n", n}}, std::move(lhs), std::move(rhs),
                       nc ? std::string{} : "n composite: congruence not claimed, informational",
                       /*asserted=*/nc);
}

CongruenceReport check_zplus_even(std::int64_t n) {
    if (n < 2) throw std::domain_error("check_zplus_even: requires n >= 2");
    Integer m = int_of(2 * n);
    Integer zp = whole(z_plus_closed(2 * n), "check_zplus_even");
    bool odd_prime = (n % 2 == 1) && is_prime(n);
    Residue lhs = make_residue(zp, m);
    Residue rhs = make_residue(odd_prime ? int_of(n + 1) : Integer(0), m);
    return make_report("zplus_even", {{"n", n}}, std::move(lhs), std::move(rhs),
                       odd_prime ? "branch: Z+(2n) = n+1 (mod 2n), n odd prime"
                                 : "branch: Z+(2n) = 0 (mod 2n), n = 2 or composite");
}

CongruenceReport check_zplus_prime(std::int64_t p) {
    require_odd_prime(p, "check_zplus_prime");
    Integer zp = whole(z_plus_sum(p), "check_zplus_prime");
    Rational rhs_value = bernoulli(static_cast<std::uint64_t>(2 * (p - 1))) -
                         bernoulli(static_cast<std::uint64_t>(p - 1)) -
                         harmonic(static_cast<std::uint64_t>((p - 1) / 2)) / Rational(2);
    Residue lhs = make_residue(zp, int_of(p));
    Residue rhs = rational_mod(rhs_value, int_of(p));
    return make_report("zplus_prime", {{"p", p}}, std::move(lhs), std::move(rhs));
}

CongruenceReport check_zplus_half(std::int64_t p) {
    require_odd_prime(p, "check_zplus_half");
    Integer zp = whole(z_plus_sum(p), "check_zplus_half");
    Rational half_sum =
        (m_quotient(p, 0).value + m_quotient(p, (p - 1) / 2).value) / Rational(2);
    Residue lhs = make_residue(zp, int_of(p));
    Residue rhs = rational_mod(half_sum, int_of(p));
    return make_report("zplus_half", {{"p", p}}, std::move(lhs), std::move(rhs));
}

namespace {

struct Item {
    std::string name;
    Params params;
    std::function<CongruenceReport()> eval;
};

std::vector<std::int64_t> odd_primes_up_to(std::int64_t max) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 3; p <= max; p += 2) {
        if (is_prime(p)) ps.push_back(p);
    }
    return ps;
}

std::vector<std::int64_t> k_values(KMode mode, std::int64_t p) {
    switch (mode) {
        case KMode::kZero:
            return {0};
        case KMode::kBalanced:
            return {(p - 1) / 2};
        case KMode::kAll: {
            std::vector<std::int64_t> ks(static_cast<std::size_t>(p));
            for (std::int64_t k = 0; k < p; ++k) ks[static_cast<std::size_t>(k)] = k;
            return ks;
        }
    }
    throw std::logic_error("k_values: unreachable");
}

std::vector<Item> build_items(Family family, const VerifyConfig& config) {
    std::vector<Item> items;
    auto add = [&items](std::string name, Params params, std::function<CongruenceReport()> fn) {
        items.push_back(Item{std::move(name), std::move(params), std::move(fn)});
    };

    switch (family) {
        case Family::kLehmer: {
            std::int64_t cap = std::min(config.p_max, config.bernoulli_p_max);
            for (std::int64_t p : odd_primes_up_to(cap)) {
                for (std::int64_t t : config.t_set)
                    add("lehmer", {{"p", p}, {"t", t}}, [p, t] { return check_lehmer(p, t); });
                add("m0_bernoulli", {{"p", p}}, [p] { return check_m0_bernoulli(p); });
                for (std::int64_t k : k_values(config.k_mode, p)) {
                    add("mk_bernoulli", {{"p", p}, {"k", k}},
                        [p, k] { return check_mk_bernoulli(p, k); });
                    for (std::int64_t t : config.t_set) {
                        add("mk_lehmer", {{"p", p}, {"k", k}, {"t", t}},
                            [p, k, t] { return check_mk_lehmer(p, k, t); });
                        add("mplus", {{"p", p}, {"k", k}, {"t", t}},
                            [p, k, t] { return check_mplus(p, k, t); });
                    }
                }
            }
            break;
        }
        case Family::kZSign: {
            for (std::int64_t n = 2; n <= config.n_max; ++n)
                add("z_sign", {{"n", n}}, [n] { return check_z_sign(n); });
            for (std::int64_t n = 1; n <= config.n_max; ++n) {
                if (is_noncomposite(n))
                    add("z_odd", {{"n", n}}, [n] { return check_z_odd(n); });
            }
            break;
        }
        case Family::kZPlus: {
            for (std::int64_t n = 2; n <= config.n_max; ++n)
                add("zplus_even", {{"n", n}}, [n] { return check_zplus_even(n); });
            std::int64_t cap = std::min(config.p_max, config.bernoulli_p_max);
            for (std::int64_t p : odd_primes_up_to(cap))
                add("zplus_prime", {{"p", p}}, [p] { return check_zplus_prime(p); });
            for (std::int64_t p : odd_primes_up_to(config.p_max))
                add("zplus_half", {{"p", p}}, [p] { return check_zplus_half(p); });
            break;
        }
        case Family::kHarmonic: {
            for (std::int64_t p : odd_primes_up_to(config.p_max)) {
                add("harmonic_sum", {{"p", p}}, [p] { return check_harmonic_sum(p); });
                if (p >= 5)
                    add("probe_harmonic_p", {{"p", p}}, [p] { return probe_harmonic_p(p); });
            }
            break;
        }
    }
    return items;
}

CongruenceReport evaluate_item(const Item& item) {
    try {
        return item.eval();
    } catch (const NotPIntegral& e) {
        CongruenceReport r;
        r.name = item.name;
        r.params = item.params;
        r.modulus = 0;
        r.ill_posed = true;
        r.note = e.what();
        return r;
    } catch (const std::exception& e) {
        CongruenceReport r;
        r.name = item.name;
        r.params = item.params;
        r.modulus = 0;
        r.ill_posed = true;
        r.note = std::string("error: ") + e.what();
        return r;
    }
}

std::vector<CongruenceReport> evaluate_items(const std::vector<Item>& items, int jobs) {
    std::vector<CongruenceReport> reports(items.size());
    if (jobs <= 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i) reports[i] = evaluate_item(items[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                reports[i] = evaluate_item(items[i]);
            }
        };
        std::vector<std::thread> pool;
        auto count = static_cast<unsigned>(std::min<std::size_t>(
            static_cast<std::size_t>(jobs), items.size()));
        pool.reserve(count);
        for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CongruenceReport& a, const CongruenceReport& b) {
                         if (a.name != b.name) return a.name < b.name;
                         return a.params < b.params;
                     });
    return reports;
}

}  // namespace

std::vector<CongruenceReport> run_family(Family family, const VerifyConfig& config) {
    if (config.p_max < 2 || config.n_max < 2 || config.bernoulli_p_max < 2)
        throw std::domain_error("run_family: all bounds must be >= 2");
    return evaluate_items(build_items(family, config), config.jobs);
}

std::vector<CongruenceReport> verify_suite(const VerifyConfig& config) {
    if (config.p_max < 2 || config.n_max < 2 || config.bernoulli_p_max < 2)
        throw std::domain_error("verify_suite: all bounds must be >= 2");
    std::vector<Item> items;
    for (Family family :
         {Family::kLehmer, Family::kZSign, Family::kZPlus, Family::kHarmonic}) {
        auto part = build_items(family, config);
        items.insert(items.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
    }
    return evaluate_items(items, config.jobs);
}

SuiteSummary summarize(const std::vector<CongruenceReport>& reports) {
    SuiteSummary s;
    for (const auto& r : reports) {
        ++s.checked;
        if (r.ill_posed) {
            ++s.ill_posed;
        } else if (r.holds) {
            ++s.held;
        } else {
            ++s.failed;
        }
        if (r.asserted && (r.ill_posed || !r.holds)) s.all_asserted_hold = false;
    }
    return s;
}

}  // namespace wilsonq
