#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wilsonq/congruence.hpp"
#include "wilsonq/exact.hpp"
#include "wilsonq/quotients.hpp"

using namespace wilsonq;
using namespace wilsonq::oracles;

namespace {

bool reports_equal(const CongruenceReport& a, const CongruenceReport& b) {
    return a.name == b.name && a.params == b.params && a.modulus == b.modulus &&
           a.lhs == b.lhs && a.rhs == b.rhs && a.holds == b.holds &&
           a.ill_posed == b.ill_posed && a.asserted == b.asserted && a.note == b.note;
}

}  // namespace

TEST_CASE("rational_mod: anchors") {
    CHECK(rational_mod(rat("3/2"), 5).value == 4);
    CHECK(rational_mod(rat("-1/6"), 25).value == 4);
    CHECK_THROWS_AS(rational_mod(rat("1/2"), 4), NotPIntegral);
    CHECK_THROWS_AS(rational_mod(rat("1/2"), 1), std::domain_error);
}

TEST_CASE("rational_mod: ring morphism on p-integral rationals") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num_dist(-999, 999);
    std::uniform_int_distribution<long> den_dist(1, 999);
    for (Integer m : {Integer(7), Integer(25), Integer(243), Integer(1009)}) {
        int done = 0;
        while (done < 50) {
            Rational a = make_rational(Integer(num_dist(rng)), Integer(den_dist(rng)));
            Rational b = make_rational(Integer(num_dist(rng)), Integer(den_dist(rng)));
            if (gcd(a.get_den(), m) != 1 || gcd(b.get_den(), m) != 1) continue;
            ++done;
            CHECK(rational_mod(a + b, m) == rational_mod(a, m) + rational_mod(b, m));
            CHECK(rational_mod(a * b, m) == rational_mod(a, m) * rational_mod(b, m));
        }
    }
}

TEST_CASE("Residue arithmetic requires matching moduli") {
    Residue a = make_residue(3, 7);
    Residue b = make_residue(5, 7);
    CHECK((a + b).value == 1);
    CHECK((a * b).value == 1);
    Residue c = make_residue(3, 11);
    CHECK_THROWS_AS(a + c, std::domain_error);
    CHECK_THROWS_AS(a * c, std::domain_error);
}

TEST_CASE("check_lehmer: anchors") {
    auto r = check_lehmer(5, 1);
    CHECK(r.holds);
    CHECK(r.lhs->value == 4);
    CHECK(r.rhs->value == 4);
    CHECK(r.modulus == 25);
    CHECK(check_lehmer(5, 2).holds);
    CHECK(check_lehmer(7, 1).holds);
    CHECK_THROWS_AS(check_lehmer(4, 1), std::domain_error);
    CHECK_THROWS_AS(check_lehmer(2, 1), std::domain_error);
    CHECK_THROWS_AS(check_lehmer(5, 0), std::domain_error);
}

TEST_CASE("check_m0_bernoulli: anchors") {
    auto r5 = check_m0_bernoulli(5);
    CHECK(r5.holds);
    CHECK(r5.lhs->value == 0);  // M_0(5) = 5 = 0, B_8 - B_4 = 0
    CHECK(r5.rhs->value == 0);
    auto r7 = check_m0_bernoulli(7);
    CHECK(r7.holds);
    CHECK(r7.lhs->value == 5);  // W(7) = 103 = 5 (mod 7)
    auto r3 = check_m0_bernoulli(3);
    CHECK(r3.holds);
    CHECK(r3.lhs->value == 1);  // W(3) = 1; B_4 - B_2 = -1/5 = 1 (mod 3)
    CHECK_THROWS_AS(check_m0_bernoulli(6), std::domain_error);
}

TEST_CASE("check_mk_bernoulli: anchors") {
    auto r = check_mk_bernoulli(5, 2);
    CHECK(r.holds);
    CHECK(r.lhs->value == 1);  // M_2(5) = 1; -3/2 = 1 (mod 5)
    auto r0 = check_mk_bernoulli(5, 0);
    CHECK(r0.holds);
    CHECK(r0.lhs == check_m0_bernoulli(5).lhs);
    CHECK(r0.rhs == check_m0_bernoulli(5).rhs);
    auto r73 = check_mk_bernoulli(7, 3);
    CHECK(r73.holds);
    CHECK(r73.lhs->value == 2);  // M_3(7) = -5 = 2 (mod 7)
    CHECK_THROWS_AS(check_mk_bernoulli(5, 5), std::domain_error);
}

TEST_CASE("check_mk_lehmer: anchors") {
    auto base = check_mk_lehmer(5, 0, 1);
    CHECK(base.holds);
    CHECK(base.lhs == check_lehmer(5, 1).lhs);
    CHECK(base.rhs == check_lehmer(5, 1).rhs);
    auto r = check_mk_lehmer(5, 2, 1);
    CHECK(r.holds);
    CHECK(r.lhs->value == 9);  // 4 + 5 M_2(5) = 9; RHS -1/6 - 15/2 = 9 (mod 25)
    CHECK(r.rhs->value == 9);
    CHECK(check_mk_lehmer(7, 1, 2).holds);
}

TEST_CASE("check_mplus: anchors carry the mod-p sub-verdict in the note") {
    auto r = check_mplus(5, 1, 1);
    CHECK(r.holds);
    CHECK(r.modulus == 25);
    CHECK(r.note.find("mod p:") != std::string::npos);
    CHECK(r.note.find("holds") != std::string::npos);
    CHECK(check_mplus(5, 0, 1).holds);
    CHECK(check_mplus(7, 3, 1).holds);
}

TEST_CASE("check_z_sign: anchors") {
    auto r7 = check_z_sign(7);
    CHECK(r7.holds);
    CHECK(r7.lhs->value == 6);  // Z(7) = 181 = -1 (mod 7)
    auto r9 = check_z_sign(9);
    CHECK(r9.holds);
    CHECK(r9.lhs->value == 1);  // Z(9) = 8065 = 1 (mod 9)
    auto r2 = check_z_sign(2);
    CHECK(r2.holds);
    CHECK(r2.lhs->value == 1);  // 1 = -1 (mod 2)
    CHECK_THROWS_AS(check_z_sign(1), std::domain_error);
}

TEST_CASE("check_harmonic_sum: anchors") {
    auto r5 = check_harmonic_sum(5);
    CHECK(r5.holds);
    CHECK(r5.lhs->value == 1);  // 77/12 = 1 (mod 5)
    CHECK(check_harmonic_sum(3).holds);
    CHECK(check_harmonic_sum(7).holds);
    CHECK_THROWS_AS(check_harmonic_sum(2), std::domain_error);
}

TEST_CASE("probe_harmonic_p: reports, never asserts") {
    auto r5 = probe_harmonic_p(5);
    CHECK_FALSE(r5.asserted);
    CHECK(r5.lhs->value == 0);  // H_5 - 1/5 = H_4 = 25/12 = 0 (mod 5)
    CHECK(r5.note.find("has residue 0 (mod 5)") != std::string::npos);
    CHECK(r5.note.find("p*H_p has residue 1 (mod 25)") != std::string::npos);
    CHECK(r5.note.find("holds: false") != std::string::npos);
    auto r7 = probe_harmonic_p(7);
    CHECK(r7.lhs->value == 0);  // H_6 = 49/20, numerator divisible by 49
    CHECK_THROWS_AS(probe_harmonic_p(3), std::domain_error);

    // A failing non-asserted report must not flip the suite verdict.
    CongruenceReport fake = r5;
    fake.holds = false;
    CHECK(summarize({fake}).all_asserted_hold);
    CHECK(summarize({fake}).failed == 1);
}

TEST_CASE("check_z_odd: anchors and the informational composite branch") {
    CHECK(check_z_odd(5).holds);  // Z(9) = 8065 = 5 * 1613
    CHECK(check_z_odd(7).holds);  // Z(13) = 68428801 = 7 * 9775543
    auto r1 = check_z_odd(1);
    CHECK(r1.holds);
    CHECK(r1.modulus == 1);
    auto comp = check_z_odd(8);
    CHECK_FALSE(comp.asserted);
    CHECK(comp.note.find("informational") != std::string::npos);
    CHECK_THROWS_AS(check_z_odd(8, /*require_noncomposite=*/true), std::domain_error);
}

TEST_CASE("check_zplus_even: both branches") {
    auto r4 = check_zplus_even(4);  // Z+(8) = 1536 = 0 (mod 8)
    CHECK(r4.holds);
    CHECK(r4.rhs->value == 0);
    auto r3 = check_zplus_even(3);  // Z+(6) = 52 = 4 (mod 6)
    CHECK(r3.holds);
    CHECK(r3.rhs->value == 4);
    auto r5 = check_zplus_even(5);  // Z+(10) = 84096 = 6 (mod 10)
    CHECK(r5.holds);
    CHECK(r5.lhs->value == 6);
    auto r2 = check_zplus_even(2);  // Z+(4) = 4 = 0 (mod 4)
    CHECK(r2.holds);
    CHECK(r2.rhs->value == 0);
    CHECK_THROWS_AS(check_zplus_even(1), std::domain_error);
}

TEST_CASE("check_zplus_prime / check_zplus_half: anchors and shared residue") {
    auto p5 = check_zplus_prime(5);
    CHECK(p5.holds);
    CHECK(p5.lhs->value == 3);  // Z+(5) = 13 = 3 (mod 5)
    CHECK(check_zplus_prime(7).holds);
    CHECK(check_zplus_prime(3).holds);
    auto h5 = check_zplus_half(5);
    CHECK(h5.holds);
    CHECK(h5.rhs->value == 3);  // (5 + 1)/2 = 3
    auto h7 = check_zplus_half(7);
    CHECK(h7.holds);
    CHECK(h7.lhs->value == 0);  // Z+(7) = 259 = 0 (mod 7)
    CHECK(check_zplus_half(11).holds);
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        CHECK(check_zplus_prime(p).rhs == check_zplus_half(p).rhs);
    }
}

TEST_CASE("Z+ anchor values from the text") {
    CHECK(z_plus_sum(4).value == 4);
    CHECK(z_plus_sum(8).value == 1536);
}

TEST_CASE("verify_suite: small config holds and is deterministic across jobs") {
    VerifyConfig config;
    config.p_max = 7;
    config.n_max = 10;
    config.bernoulli_p_max = 7;
    config.t_set = {1};
    config.k_mode = KMode::kAll;

    config.jobs = 1;
    auto seq = verify_suite(config);
    auto summary = summarize(seq);
    CHECK(summary.checked == static_cast<std::int64_t>(seq.size()));
    CHECK(summary.failed == 0);
    CHECK(summary.ill_posed == 0);
    CHECK(summary.all_asserted_hold);

    config.jobs = 4;
    auto par = verify_suite(config);
    REQUIRE(par.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(reports_equal(seq[i], par[i]));

    auto again = verify_suite(config);
    REQUIRE(again.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(reports_equal(seq[i], again[i]));
}

TEST_CASE("verify_suite: reports sorted by (name, params)") {
    VerifyConfig config;
    config.p_max = 11;
    config.n_max = 12;
    config.bernoulli_p_max = 11;
    config.t_set = {1, 2};
    auto reports = verify_suite(config);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        bool ordered = reports[i - 1].name < reports[i].name ||
                       (reports[i - 1].name == reports[i].name &&
                        reports[i - 1].params <= reports[i].params);
        CHECK(ordered);
    }
}

TEST_CASE("verify_suite: p_max = 2 leaves odd-prime sections empty") {
    VerifyConfig config;
    config.p_max = 2;
    config.n_max = 10;
    config.bernoulli_p_max = 2;
    auto reports = verify_suite(config);
    bool any_prime_checker = false;
    bool any_z_sign = false;
    for (const auto& r : reports) {
        if (r.name == "lehmer" || r.name == "harmonic_sum" || r.name == "zplus_prime")
            any_prime_checker = true;
        if (r.name == "z_sign") any_z_sign = true;
    }
    CHECK_FALSE(any_prime_checker);
    CHECK(any_z_sign);
}

TEST_CASE("verify_suite: bernoulli_p_max caps only Bernoulli-dependent checkers") {
    VerifyConfig config;
    config.p_max = 13;
    config.n_max = 6;
    config.bernoulli_p_max = 5;
    auto reports = verify_suite(config);
    std::int64_t max_lehmer_p = 0;
    std::int64_t max_half_p = 0;
    for (const auto& r : reports) {
        if (r.name == "lehmer") max_lehmer_p = std::max(max_lehmer_p, r.params[0].second);
        if (r.name == "zplus_half") max_half_p = std::max(max_half_p, r.params[0].second);
    }
    CHECK(max_lehmer_p == 5);
    CHECK(max_half_p == 13);
}

TEST_CASE("k_mode narrows the k sweep") {
    VerifyConfig config;
    config.p_max = 7;
    config.n_max = 4;
    config.bernoulli_p_max = 7;
    config.k_mode = KMode::kBalanced;
    auto reports = verify_suite(config);
    for (const auto& r : reports) {
        if (r.name == "mk_bernoulli") {
            CHECK(r.params[1].first == "k");
            CHECK(r.params[1].second == (r.params[0].second - 1) / 2);
        }
    }
}
