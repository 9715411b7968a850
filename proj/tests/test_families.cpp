#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spanind/families.hpp"
#include "testutil.hpp"

using namespace spanind;

namespace {

std::vector<std::int64_t> residues(const SubsetCertificate& cert) {
    std::vector<std::int64_t> out;
    for (const auto& e : cert.set) out.push_back(e[0]);
    return out;
}

}  // namespace

TEST_CASE("closed form for minimum 1-spanning size") {
    for (std::int64_t n = 1; n <= 20; ++n) {
        CHECK(p1_formula(AbelianGroup({n})) == n / 2);
    }
    CHECK(p1_formula(AbelianGroup({2, 4})) == 5);
    CHECK(p1_formula(AbelianGroup({1})) == 0);
    // brute force on the order-8 groups
    for (const auto& g : abelian_groups_of_order(8)) {
        CHECK(p1_formula(g) == testutil::oracle_p_min(g, 1));
    }
    CHECK(p1_formula(AbelianGroup({12})) == testutil::oracle_p_min(AbelianGroup({12}), 1));
}

TEST_CASE("closed forms for 1- and 2-independence maxima") {
    const AbelianGroup z25({25});
    CHECK(q1_formula(z25) == 24);
    CHECK(q2_formula(z25) == 12);
    for (int k = 1; k <= 4; ++k) {
        CHECK(q2_formula(AbelianGroup(std::vector<std::int64_t>(k, 2))) == 0);
    }
    const AbelianGroup g24({2, 4});
    CHECK(q2_formula(g24) == 2);
    CHECK(q2_formula(g24) == testutil::oracle_q_max(g24, 2));
    CHECK(q2_formula(AbelianGroup({9})) == testutil::oracle_q_max(AbelianGroup({9}), 2));
    for (std::int64_t n = 1; n <= 16; ++n) {
        CHECK(q2_formula(AbelianGroup({n})) == (n - 1) / 2);
    }
}

TEST_CASE("exact 3-independence values") {
    CHECK(q3_cyclic(25).value == 5);
    CHECK(q3_cyclic(25).branch == Q3Branch::FiveMod6);
    CHECK(q3_cyclic(25).p == 5);
    CHECK(q3_cyclic(38).value == 9);
    CHECK(q3_cyclic(38).branch == Q3Branch::Even);
    CHECK(q3_cyclic(27).value == 4);
    CHECK(q3_cyclic(27).branch == Q3Branch::Floor6);
    CHECK(q3_cyclic(1).value == 0);
    CHECK(q3_cyclic(35).value == 7);   // p = 5
    CHECK(q3_cyclic(77).value == 14);  // 7 * 11, p = 11
    CHECK_THROWS_AS(q3_cyclic(0), std::invalid_argument);
}

TEST_CASE("q3 equals brute force on small cyclic groups") {
    for (std::int64_t n = 1; n <= 30; ++n) {
        CHECK(q3_cyclic(n).value == testutil::oracle_q_max(AbelianGroup({n}), 3));
    }
}

TEST_CASE("smallest 5 mod 6 prime divisor") {
    CHECK(smallest_5mod6_prime_divisor(25) == 5);
    CHECK(smallest_5mod6_prime_divisor(77) == 11);  // 7 = 1 mod 6
    CHECK(smallest_5mod6_prime_divisor(27) == std::nullopt);
    CHECK(smallest_5mod6_prime_divisor(1) == std::nullopt);
    CHECK(smallest_5mod6_prime_divisor(23) == 23);
    CHECK(smallest_5mod6_prime_divisor(55) == 5);
}

TEST_CASE("spanning families") {
    const auto consec3 = spanning_family(SpanFamily::Consecutive, 25, 3);
    CHECK(residues(consec3) == std::vector<std::int64_t>{3, 4});
    CHECK(consec3.claim.kind == ClaimKind::Perfect);
    CHECK(consec3.verified);

    const auto consec2 = spanning_family(SpanFamily::Consecutive, 13, 2);
    CHECK(residues(consec2) == std::vector<std::int64_t>{2, 3});
    CHECK(consec2.claim.kind == ClaimKind::Perfect);

    const auto consec_mid = spanning_family(SpanFamily::Consecutive, 20, 3);
    CHECK(consec_mid.claim.kind == ClaimKind::Spanning);

    const auto alt = spanning_family(SpanFamily::Alternate, 25, 3);
    CHECK(residues(alt) == std::vector<std::int64_t>{1, 7});
    CHECK(alt.claim.kind == ClaimKind::Perfect);

    const auto half = spanning_family(SpanFamily::HalfRange, 7, 1);
    CHECK(residues(half) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(half.claim.kind == ClaimKind::Perfect);

    const auto single = spanning_family(SpanFamily::Single, 7, 3);
    CHECK(single.claim.kind == ClaimKind::Perfect);
    CHECK(spanning_family(SpanFamily::Single, 6, 3).claim.kind == ClaimKind::Spanning);

    CHECK_THROWS_AS(spanning_family(SpanFamily::Consecutive, 26, 3), std::invalid_argument);
    CHECK_THROWS_AS(spanning_family(SpanFamily::Consecutive, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(spanning_family(SpanFamily::Single, 8, 3), std::invalid_argument);
    CHECK_THROWS_AS(spanning_family(SpanFamily::Alternate, 24, 3), std::invalid_argument);
    CHECK_THROWS_AS(spanning_family(SpanFamily::HalfRange, 8, 1), std::invalid_argument);
}

TEST_CASE("independent families") {
    FamilyParams p;
    p.n = 25;
    const auto five = independent_family(IndepFamily::FiveMod6, p);
    CHECK(residues(five) == std::vector<std::int64_t>{1, 6, 11, 16, 21});
    CHECK(static_cast<std::int64_t>(five.set.size()) == q3_cyclic(25).value);
    CHECK(five.verified);

    p = {};
    p.n = 18;
    p.t = 5;
    const auto pair5 = independent_family(IndepFamily::OnePairOdd, p);
    CHECK(residues(pair5) == std::vector<std::int64_t>{1, 5});
    CHECK(pair5.claim.kind == ClaimKind::Tight);

    p = {};
    p.n = 25;
    p.t = 6;
    const auto pair6 = independent_family(IndepFamily::HalfPairEven, p);
    CHECK(residues(pair6) == std::vector<std::int64_t>{3, 4});
    CHECK(pair6.claim.kind == ClaimKind::Tight);

    p = {};
    p.n = 38;
    const auto spo = independent_family(IndepFamily::Sporadic38, p);
    CHECK(residues(spo) == std::vector<std::int64_t>{1, 7, 11});
    CHECK(spo.claim.kind == ClaimKind::Tight);

    p = {};
    p.n = 9;
    const auto tight2 = independent_family(IndepFamily::TightHalf2, p);
    CHECK(residues(tight2) == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(tight2.claim.kind == ClaimKind::Tight);

    p = {};
    p.n = 12;
    const auto tight3 = independent_family(IndepFamily::TightOdds3, p);
    CHECK(residues(tight3) == std::vector<std::int64_t>{1, 3, 5});
    CHECK(tight3.claim.kind == ClaimKind::Tight);

    p = {};
    p.n = 14;
    const auto oddhalf = independent_family(IndepFamily::OddBelowHalf, p);
    CHECK(residues(oddhalf) == std::vector<std::int64_t>{1, 3, 5});
    CHECK(oddhalf.verified);

    p = {};
    p.n = 25;
    const auto oddthird = independent_family(IndepFamily::OddBelowThird, p);
    CHECK(residues(oddthird) == std::vector<std::int64_t>{1, 3, 5, 7});
    CHECK(oddthird.verified);

    p = {};
    p.n = 9;
    p.t = 8;
    const auto single_t = independent_family(IndepFamily::SingleT, p);
    CHECK(single_t.claim.kind == ClaimKind::Tight);  // n = t + 1

    p = {};
    p.n = 9;
    p.t = 4;
    CHECK(independent_family(IndepFamily::SingleT, p).claim.kind == ClaimKind::Independent);

    p = {};
    p.n = 27;
    CHECK_THROWS_AS(independent_family(IndepFamily::FiveMod6, p), std::invalid_argument);
    p.n = 17;
    p.t = 5;
    CHECK_THROWS_AS(independent_family(IndepFamily::OnePairOdd, p), std::invalid_argument);
    p.n = 10;
    p.t = 6;
    CHECK_THROWS_AS(independent_family(IndepFamily::HalfPairEven, p), std::invalid_argument);
}

TEST_CASE("five-mod-six set size matches the exact formula branch") {
    for (std::int64_t n : {25, 35, 55, 65, 77, 85, 95, 115, 121, 125, 155, 175}) {
        const auto p = smallest_5mod6_prime_divisor(n);
        REQUIRE(p.has_value());
        const auto set = five_mod6_residues(n, *p);
        CHECK(static_cast<std::int64_t>(set.size()) == (n / *p) * ((*p + 1) / 6));
        CHECK(static_cast<std::int64_t>(set.size()) == q3_cyclic(n).value);
    }
}

TEST_CASE("construct-verify round trip over the full parameter grid") {
    // every certificate re-verifies through the definitional predicates
    for (int s = 1; s <= 7; ++s) {
        for (std::int64_t n = 2; n <= 200; ++n) {
            if (n <= 2 * s + 1) {
                const auto cert = spanning_family(SpanFamily::Single, n, s);
                CHECK(verify_certificate(cert).claim_ok);
            }
            if (n >= 2 * s + 2 && n <= 2 * s * s + 2 * s + 1) {
                const auto cert = spanning_family(SpanFamily::Consecutive, n, s);
                CHECK(verify_certificate(cert).claim_ok);
                CHECK((cert.claim.kind == ClaimKind::Perfect) ==
                      (n == 2 * s * s + 2 * s + 1));
            }
            if (n == 2 * s * s + 2 * s + 1) {
                CHECK(verify_certificate(spanning_family(SpanFamily::Alternate, n, s)).claim_ok);
            }
            if (s == 1 && n % 2 == 1 && n >= 3) {
                CHECK(verify_certificate(spanning_family(SpanFamily::HalfRange, n, 1)).claim_ok);
            }
        }
    }
    for (std::int64_t n = 1; n <= 200; ++n) {
        FamilyParams p;
        p.n = n;
        CHECK(verify_certificate(independent_family(IndepFamily::OddBelowThird, p)).claim_ok);
        if (n % 2 == 0 && n >= 2) {
            CHECK(verify_certificate(independent_family(IndepFamily::OddBelowHalf, p)).claim_ok);
        }
        if (n % 2 == 1 && n >= 5 && smallest_5mod6_prime_divisor(n)) {
            CHECK(verify_certificate(independent_family(IndepFamily::FiveMod6, p)).claim_ok);
        }
        if (n % 2 == 1 && n >= 3) {
            CHECK(verify_certificate(independent_family(IndepFamily::TightHalf2, p)).claim_ok);
        }
        if (n % 4 == 0) {
            CHECK(verify_certificate(independent_family(IndepFamily::TightOdds3, p)).claim_ok);
        }
        for (int t = 1; t <= 7; ++t) {
            p.t = t;
            if (n >= t + 1) {
                CHECK(verify_certificate(independent_family(IndepFamily::SingleT, p)).claim_ok);
            }
            if (t % 2 == 0 && t >= 2 && n >= t * t / 2 + t + 1) {
                CHECK(
                    verify_certificate(independent_family(IndepFamily::HalfPairEven, p)).claim_ok);
            }
            if (t % 2 == 1 && t >= 3 && n == (t * t - 1) / 2 + t + 1) {
                CHECK(verify_certificate(independent_family(IndepFamily::OnePairOdd, p)).claim_ok);
            }
        }
    }
}

TEST_CASE("family lookup by name") {
    FamilyParams p;
    p.n = 25;
    p.s = 3;
    CHECK(family_by_name("consec", p).verified);
    CHECK_THROWS_AS(family_by_name("nope", p), std::invalid_argument);
}

TEST_CASE("3-independent sets of size 5 exist exactly where expected (n <= 60)") {
    for (std::int64_t n = 1; n <= 60; ++n) {
        const bool has5 = q3_cyclic(n).value >= 5;
        const bool expected = (n == 20 || n == 22 || n == 24 || n == 25 || n == 26 || n >= 28);
        CHECK(has5 == expected);
    }
}
