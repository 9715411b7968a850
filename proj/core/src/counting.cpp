#include "spanind/counting.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace spanind {

Bigint binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Bigint r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Bigint l1_ball_count(int m, int w) {
    if (m < 0 || w < 0) throw std::invalid_argument("l1_ball_count needs m, w >= 0");
    Bigint total = 0;
    Bigint pow2 = 1;
    for (int k = 0; k <= std::min(m, w); ++k) {
        total += binomial(w, k) * binomial(m, k) * pow2;
        pow2 *= 2;
    }
    return total;
}

Bigint l1_ball_count_recursive(int m, int w) {
    if (m < 0 || w < 0) throw std::invalid_argument("l1_ball_count_recursive needs m, w >= 0");
    static std::mutex mu;
    static std::map<std::pair<int, int>, Bigint> memo;
    std::lock_guard<std::mutex> lock(mu);

    std::function<const Bigint&(int, int)> rec = [&](int mm, int ww) -> const Bigint& {
        auto it = memo.find({mm, ww});
        if (it != memo.end()) return it->second;
        Bigint v;
        if (mm == 0 || ww == 0) {
            v = 1;
        } else {
            v = rec(mm - 1, ww) + rec(mm, ww - 1) + rec(mm - 1, ww - 1);
        }
        return memo.emplace(std::make_pair(mm, ww), std::move(v)).first->second;
    };
    return rec(m, w);
}

std::int64_t l1_ball_count_capped(int m, int w, std::int64_t cap) {
    if (cap < 0) throw std::invalid_argument("cap must be >= 0");
    const Bigint v = l1_ball_count(m, w);
    if (v >= cap) return cap;
    return static_cast<std::int64_t>(v);
}

Bigint independence_order_bound(int m, int t) {
    if (m < 0) throw std::invalid_argument("independence_order_bound needs m >= 0");
    if (t < 1) throw std::invalid_argument("independence_order_bound needs t >= 1");
    if (m == 0) return 1;  // the empty set fits in the trivial group
    if (t == 1) return 2;  // extension; the two-layer derivation needs t >= 2
    if (t % 2 == 0) return l1_ball_count(m, t / 2);
    const int h = (t - 1) / 2;
    return l1_ball_count(m, h) + l1_ball_count(m - 1, h);
}

namespace {

bool exact_weight_rec(int pos, int m, int rem, CoeffVector& cur,
                      const std::function<bool(const CoeffVector&)>& fn) {
    if (pos == m) {
        if (rem != 0) return true;
        return fn(cur);
    }
    // Last coordinate must absorb whatever weight remains.
    for (int v = -rem; v <= rem; ++v) {
        cur.lambdas[pos] = v;
        if (!exact_weight_rec(pos + 1, m, rem - (v < 0 ? -v : v), cur, fn)) return false;
    }
    cur.lambdas[pos] = 0;
    return true;
}

}  // namespace

void for_each_coeff_vector_of_weight(int m, int w,
                                     const std::function<bool(const CoeffVector&)>& fn) {
    if (m < 0 || w < 0) throw std::invalid_argument("need m, w >= 0");
    if (m == 0) {
        if (w == 0) {
            CoeffVector empty;
            fn(empty);
        }
        return;
    }
    CoeffVector cur;
    cur.lambdas.assign(m, 0);
    exact_weight_rec(0, m, w, cur, fn);
}

std::vector<CoeffVector> coeff_vectors_up_to(int m, int w, std::int64_t budget) {
    const Bigint count = l1_ball_count(m, w);
    if (count > budget) {
        throw BudgetExceeded("coefficient enumeration of size " + count.str() +
                             " exceeds budget " + std::to_string(budget));
    }
    std::vector<CoeffVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int ww = 0; ww <= w; ++ww) {
        for_each_coeff_vector_of_weight(m, ww, [&](const CoeffVector& v) {
            out.push_back(v);
            return true;
        });
    }
    return out;
}

std::vector<CoeffVector> leading_positive_layer(int m, int h) {
    if (m < 1 || h < 0) throw std::invalid_argument("leading_positive_layer needs m >= 1, h >= 0");
    std::vector<CoeffVector> out;
    for (int first = 1; first <= h + 1; ++first) {
        const int rem = h + 1 - first;
        if (m == 1) {
            if (rem == 0) {
                CoeffVector v;
                v.lambdas = {first};
                out.push_back(v);
            }
            continue;
        }
        for_each_coeff_vector_of_weight(m - 1, rem, [&](const CoeffVector& tail) {
            CoeffVector v;
            v.lambdas.reserve(m);
            v.lambdas.push_back(first);
            v.lambdas.insert(v.lambdas.end(), tail.lambdas.begin(), tail.lambdas.end());
            out.push_back(std::move(v));
            return true;
        });
    }
    return out;
}

}  // namespace spanind
