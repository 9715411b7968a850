#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spanind/errors.hpp"

namespace spanind {

/// Counting values grow fast; arbitrary precision keeps identities exact.
using Bigint = boost::multiprecision::cpp_int;

Bigint binomial(std::int64_t n, std::int64_t k);

/**
 * Number of integer vectors of length m with l1-norm at most w:
 *
 *     sum_{k=0}^{w} C(w,k) C(m,k) 2^k.
 *
 * Symmetric in (m, w). This is the ambient count behind both the
 * spanning lower bound (order <= ball count) and the independence upper
 * bound (order >= ball count at radius t/2).
 */
Bigint l1_ball_count(int m, int w);

/// Same value through the three-term recursion
/// a(m,w) = a(m-1,w) + a(m,w-1) + a(m-1,w-1), memoized.
Bigint l1_ball_count_recursive(int m, int w);

/// min(l1_ball_count(m,w), cap) as a machine integer; cap must be >= 0.
std::int64_t l1_ball_count_capped(int m, int w, std::int64_t cap);

/**
 * Smallest order of a group that can contain a t-independent set of
 * size m: the ball count at radius t/2 for even t, and the two-layer
 * count a(m,h) + a(m-1,h) with h = (t-1)/2 for odd t >= 3.
 *
 * t = 1 is outside the two-layer derivation (which needs t >= 2); for
 * m >= 1 the odd formula degenerates to 2 and that value is returned as
 * a documented extension. t = 0 is rejected.
 */
Bigint independence_order_bound(int m, int t);

/**
 * Integer coefficient vector (lambda_1, ..., lambda_m). The l1 weight
 * is the quantity bounded in both the spanning and the independence
 * definitions.
 */
struct CoeffVector {
    std::vector<int> lambdas;

    int weight() const {
        int w = 0;
        for (int v : lambdas) w += v < 0 ? -v : v;
        return w;
    }
    int support() const {
        int s = 0;
        for (int v : lambdas) s += (v != 0);
        return s;
    }
    bool is_zero() const { return support() == 0; }
    bool operator==(const CoeffVector& o) const { return lambdas == o.lambdas; }
};

/// Streams every length-m vector of weight exactly w in lexicographic
/// order (entries compared as integers).
void for_each_coeff_vector_of_weight(int m, int w,
                                     const std::function<bool(const CoeffVector&)>& fn);

/**
 * All vectors of weight <= w, ordered by weight then lexicographically.
 * Size equals l1_ball_count(m, w); throws BudgetExceeded when that
 * count is above `budget`.
 */
std::vector<CoeffVector> coeff_vectors_up_to(int m, int w, std::int64_t budget = 1'000'000);

/**
 * Vectors with lambda_1 >= 1 and weight exactly h+1: the extra layer
 * used by the odd independence bound. Exactly l1_ball_count(m-1, h)
 * vectors.
 */
std::vector<CoeffVector> leading_positive_layer(int m, int h);

}  // namespace spanind
