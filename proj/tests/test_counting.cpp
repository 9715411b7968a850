#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "spanind/counting.hpp"

using namespace spanind;

TEST_CASE("closed form ball count") {
    // a(2, s) = 2s^2 + 2s + 1
    for (int s = 0; s <= 10; ++s) {
        CHECK(l1_ball_count(2, s) == Bigint(2 * s * s + 2 * s + 1));
    }
    CHECK(l1_ball_count(2, 3) == 25);
    CHECK(l1_ball_count(3, 2) == 25);  // 1 + 12 + 12
    for (int m = 0; m <= 8; ++m) {
        CHECK(l1_ball_count(m, 0) == 1);
        CHECK(l1_ball_count(0, m) == 1);
    }
}

TEST_CASE("recursion equals closed form on a grid") {
    CHECK(l1_ball_count_recursive(1, 1) == 3);
    CHECK(l1_ball_count_recursive(2, 2) == 13);
    CHECK(l1_ball_count_recursive(2, 3) == 25);
    for (int m = 0; m <= 12; ++m) {
        for (int s = 0; s <= 12; ++s) {
            CHECK(l1_ball_count_recursive(m, s) == l1_ball_count(m, s));
        }
    }
}

TEST_CASE("ball count is symmetric") {
    for (int m = 0; m <= 10; ++m) {
        for (int s = 0; s <= 10; ++s) {
            CHECK(l1_ball_count(m, s) == l1_ball_count(s, m));
        }
    }
}

TEST_CASE("large arguments stay exact") {
    const Bigint big = l1_ball_count(40, 40);
    CHECK(big > Bigint("18446744073709551615"));  // beyond 64-bit
    CHECK(l1_ball_count_capped(40, 40, 1'000'000) == 1'000'000);
    CHECK(l1_ball_count_capped(2, 3, 1'000'000) == 25);
}

TEST_CASE("independence order bound") {
    CHECK(independence_order_bound(2, 4) == 13);
    CHECK(independence_order_bound(2, 5) == 18);
    CHECK(independence_order_bound(3, 5) == 38);
    CHECK(independence_order_bound(0, 7) == 1);
    // even case ties to the ball count
    for (int m = 0; m <= 8; ++m) {
        for (int s = 1; s <= 6; ++s) {
            CHECK(independence_order_bound(m, 2 * s) == l1_ball_count(m, s));
        }
    }
    // a single element is t-independent exactly when the order exceeds t
    for (int t = 2; t <= 12; ++t) {
        CHECK(independence_order_bound(1, t) == t + 1);
    }
    // documented extension below the theorem's range
    CHECK(independence_order_bound(3, 1) == 2);
    CHECK_THROWS_AS(independence_order_bound(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(independence_order_bound(-1, 4), std::invalid_argument);
}

TEST_CASE("coefficient enumeration: counts, order, distinctness") {
    const auto tiny = coeff_vectors_up_to(1, 1);
    REQUIRE(tiny.size() == 3);
    CHECK(tiny[0].lambdas == std::vector<int>{0});
    CHECK(tiny[1].lambdas == std::vector<int>{-1});
    CHECK(tiny[2].lambdas == std::vector<int>{1});

    CHECK(coeff_vectors_up_to(2, 2).size() == 13);

    for (int m = 0; m <= 6; ++m) {
        for (int w = 0; w <= 6; ++w) {
            const auto vecs = coeff_vectors_up_to(m, w);
            CHECK(Bigint(vecs.size()) == l1_ball_count(m, w));
            std::set<std::vector<int>> uniq;
            std::map<int, std::int64_t> by_support;
            int last_weight = 0;
            for (const auto& v : vecs) {
                CHECK(v.weight() <= w);
                CHECK(v.weight() >= last_weight);  // ordered by weight
                last_weight = v.weight();
                uniq.insert(v.lambdas);
                ++by_support[v.support()];
            }
            CHECK(uniq.size() == vecs.size());
            // support-size layer counts: C(w,k) C(m,k) 2^k
            for (int k = 0; k <= m; ++k) {
                Bigint expect = binomial(w, k) * binomial(m, k);
                for (int i = 0; i < k; ++i) expect *= 2;
                CHECK(Bigint(by_support.count(k) ? by_support[k] : 0) == expect);
            }
        }
    }
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(coeff_vectors_up_to(20, 20, 1000), BudgetExceeded);
}

TEST_CASE("leading-positive layer") {
    const auto single = leading_positive_layer(1, 2);
    REQUIRE(single.size() == 1);
    CHECK(single[0].lambdas == std::vector<int>{3});

    CHECK(Bigint(leading_positive_layer(2, 2).size()) == l1_ball_count(1, 2));  // 5
    CHECK(Bigint(leading_positive_layer(3, 2).size()) == l1_ball_count(2, 2));  // 13

    for (int m = 1; m <= 5; ++m) {
        for (int h = 0; h <= 5; ++h) {
            const auto layer = leading_positive_layer(m, h);
            CHECK(Bigint(layer.size()) == l1_ball_count(m - 1, h));
            std::set<std::vector<int>> uniq;
            for (const auto& v : layer) {
                CHECK(v.lambdas[0] >= 1);
                CHECK(v.weight() == h + 1);
                uniq.insert(v.lambdas);
            }
            CHECK(uniq.size() == layer.size());
        }
    }
}
