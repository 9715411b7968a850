#include "spanind/families.hpp"

#include <algorithm>

namespace spanind {

namespace {

constexpr std::int64_t kTrialDivisionCap = 1'000'000'000;

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

AbelianGroup cyclic(std::int64_t n) { return AbelianGroup({n}); }

std::vector<GroupElement> residues_to_set(const std::vector<std::int64_t>& residues) {
    std::vector<GroupElement> out;
    out.reserve(residues.size());
    for (auto r : residues) out.push_back(GroupElement{r});
    return out;
}

SubsetCertificate certify_spanning(std::int64_t n, const std::vector<std::int64_t>& residues,
                                   int s) {
    const AbelianGroup g = cyclic(n);
    const auto set = residues_to_set(residues);
    const bool perfect = Bigint(n) == l1_ball_count(static_cast<int>(set.size()), s);
    auto cert = make_certificate(g, set, {perfect ? ClaimKind::Perfect : ClaimKind::Spanning, s});
    if (!cert.verified) {
        throw std::logic_error("spanning family failed verification at n=" + std::to_string(n));
    }
    return cert;
}

SubsetCertificate certify_independent(std::int64_t n, const std::vector<std::int64_t>& residues,
                                      int t) {
    const AbelianGroup g = cyclic(n);
    const auto set = residues_to_set(residues);
    const bool tight =
        Bigint(n) == independence_order_bound(static_cast<int>(set.size()), std::max(t, 1));
    auto cert = make_certificate(g, set, {tight ? ClaimKind::Tight : ClaimKind::Independent, t});
    if (!cert.verified) {
        throw std::logic_error("independent family failed verification at n=" + std::to_string(n));
    }
    return cert;
}

}  // namespace

SubsetCertificate spanning_family(SpanFamily kind, std::int64_t n, int s) {
    if (s < 1) throw std::invalid_argument("spanning families need s >= 1");
    switch (kind) {
        case SpanFamily::Single: {
            if (n < 2 || n > 2 * static_cast<std::int64_t>(s) + 1) {
                throw std::invalid_argument("single: need 2 <= n <= 2s+1");
            }
            return certify_spanning(n, {1}, s);
        }
        case SpanFamily::Consecutive: {
            const std::int64_t lo = 2 * static_cast<std::int64_t>(s) + 2;
            const std::int64_t hi = 2 * static_cast<std::int64_t>(s) * s + 2 * s + 1;
            if (n < lo || n > hi) {
                throw std::invalid_argument("consec: need 2s+2 <= n <= 2s^2+2s+1");
            }
            return certify_spanning(n, {s, s + 1}, s);
        }
        case SpanFamily::Alternate: {
            const std::int64_t exact = 2 * static_cast<std::int64_t>(s) * s + 2 * s + 1;
            if (n != exact) throw std::invalid_argument("alt: need n = 2s^2+2s+1");
            return certify_spanning(n, {1, 2 * s + 1}, s);
        }
        case SpanFamily::HalfRange: {
            if (s != 1) throw std::invalid_argument("halfrange: defined for s = 1");
            if (n < 3 || n % 2 == 0) throw std::invalid_argument("halfrange: need odd n >= 3");
            const std::int64_t m = (n - 1) / 2;
            std::vector<std::int64_t> residues(m);
            for (std::int64_t i = 0; i < m; ++i) residues[i] = i + 1;
            return certify_spanning(n, residues, 1);
        }
    }
    throw std::invalid_argument("unknown spanning family");
}

SubsetCertificate independent_family(IndepFamily kind, const FamilyParams& params) {
    const std::int64_t n = params.n;
    switch (kind) {
        case IndepFamily::OddBelowThird: {
            if (n < 1) throw std::invalid_argument("odd_below_n3: need n >= 1");
            std::vector<std::int64_t> residues;
            for (std::int64_t k = 1; 3 * k < n; k += 2) residues.push_back(k);
            return certify_independent(n, residues, 3);
        }
        case IndepFamily::OddBelowHalf: {
            if (n < 2 || n % 2 != 0) throw std::invalid_argument("odd_below_n2: need even n");
            std::vector<std::int64_t> residues;
            for (std::int64_t k = 1; 2 * k < n; k += 2) residues.push_back(k);
            return certify_independent(n, residues, 3);
        }
        case IndepFamily::FiveMod6: {
            if (n < 5 || n % 2 == 0) throw std::invalid_argument("5mod6: need odd n >= 5");
            std::int64_t p = params.p;
            if (p == 0) {
                const auto found = smallest_5mod6_prime_divisor(n);
                if (!found) {
                    throw std::invalid_argument("5mod6: n has no prime divisor = 5 (mod 6)");
                }
                p = *found;
            }
            if (p % 6 != 5 || n % p != 0 || !is_prime(p)) {
                throw std::invalid_argument("5mod6: p must be a prime divisor of n, p = 5 (mod 6)");
            }
            return certify_independent(n, five_mod6_residues(n, p), 3);
        }
        case IndepFamily::SingleT: {
            if (params.t < 1) throw std::invalid_argument("single_t: need t >= 1");
            if (n < params.t + 1) throw std::invalid_argument("single_t: need n >= t+1");
            return certify_independent(n, {1}, params.t);
        }
        case IndepFamily::HalfPairEven: {
            const std::int64_t t = params.t;
            if (t < 2 || t % 2 != 0) throw std::invalid_argument("half_t_even: need even t >= 2");
            const std::int64_t lo = t * t / 2 + t + 1;
            if (n < lo) throw std::invalid_argument("half_t_even: need n >= t^2/2 + t + 1");
            return certify_independent(n, {t / 2, t / 2 + 1}, params.t);
        }
        case IndepFamily::OnePairOdd: {
            const std::int64_t t = params.t;
            if (t < 3 || t % 2 != 1) throw std::invalid_argument("one_t_odd: need odd t >= 3");
            const std::int64_t exact = (t * t - 1) / 2 + t + 1;
            if (n != exact) throw std::invalid_argument("one_t_odd: need n = (t^2-1)/2 + t + 1");
            return certify_independent(n, {1, t}, params.t);
        }
        case IndepFamily::Sporadic38: {
            if (n != 0 && n != 38) throw std::invalid_argument("sporadic38: defined for n = 38");
            return certify_independent(38, {1, 7, 11}, 5);
        }
        case IndepFamily::TightHalf2: {
            if (n < 3 || n % 2 == 0) throw std::invalid_argument("tight2: need odd n >= 3");
            const std::int64_t m = (n - 1) / 2;
            std::vector<std::int64_t> residues(m);
            for (std::int64_t i = 0; i < m; ++i) residues[i] = i + 1;
            return certify_independent(n, residues, 2);
        }
        case IndepFamily::TightOdds3: {
            if (n < 4 || n % 4 != 0) throw std::invalid_argument("tight3: need n = 4m");
            const std::int64_t m = n / 4;
            std::vector<std::int64_t> residues(m);
            for (std::int64_t i = 0; i < m; ++i) residues[i] = 2 * i + 1;
            return certify_independent(n, residues, 3);
        }
    }
    throw std::invalid_argument("unknown independent family");
}

std::string family_name(SpanFamily kind) {
    switch (kind) {
        case SpanFamily::Single: return "single";
        case SpanFamily::Consecutive: return "consec";
        case SpanFamily::Alternate: return "alt";
        case SpanFamily::HalfRange: return "halfrange";
    }
    return "?";
}

std::string family_name(IndepFamily kind) {
    switch (kind) {
        case IndepFamily::OddBelowThird: return "odd_below_n3";
        case IndepFamily::OddBelowHalf: return "odd_below_n2";
        case IndepFamily::FiveMod6: return "5mod6";
        case IndepFamily::SingleT: return "single_t";
        case IndepFamily::HalfPairEven: return "half_t_even";
        case IndepFamily::OnePairOdd: return "one_t_odd";
        case IndepFamily::Sporadic38: return "sporadic38";
        case IndepFamily::TightHalf2: return "tight2";
        case IndepFamily::TightOdds3: return "tight3";
    }
    return "?";
}

SubsetCertificate family_by_name(const std::string& name, const FamilyParams& params) {
    if (name == "single") return spanning_family(SpanFamily::Single, params.n, params.s);
    if (name == "consec") return spanning_family(SpanFamily::Consecutive, params.n, params.s);
    if (name == "alt") return spanning_family(SpanFamily::Alternate, params.n, params.s);
    if (name == "halfrange") {
        return spanning_family(SpanFamily::HalfRange, params.n, params.s == 0 ? 1 : params.s);
    }
    if (name == "odd_below_n3") return independent_family(IndepFamily::OddBelowThird, params);
    if (name == "odd_below_n2") return independent_family(IndepFamily::OddBelowHalf, params);
    if (name == "5mod6") return independent_family(IndepFamily::FiveMod6, params);
    if (name == "single_t") return independent_family(IndepFamily::SingleT, params);
    if (name == "half_t_even") return independent_family(IndepFamily::HalfPairEven, params);
    if (name == "one_t_odd") return independent_family(IndepFamily::OnePairOdd, params);
    if (name == "sporadic38") return independent_family(IndepFamily::Sporadic38, params);
    if (name == "tight2") return independent_family(IndepFamily::TightHalf2, params);
    if (name == "tight3") return independent_family(IndepFamily::TightOdds3, params);
    throw std::invalid_argument("unknown family: " + name);
}

std::int64_t p1_formula(const AbelianGroup& g) {
    if (g.order() == 1) return 0;
    return (g.order() + g.order2_count() - 1) / 2;
}

std::int64_t q1_formula(const AbelianGroup& g) { return g.order() - 1; }

std::int64_t q2_formula(const AbelianGroup& g) {
    return (g.order() - g.order2_count() - 1) / 2;
}

std::optional<std::int64_t> smallest_5mod6_prime_divisor(std::int64_t n) {
    if (n < 2) return std::nullopt;
    if (n > kTrialDivisionCap * kTrialDivisionCap) {
        throw std::invalid_argument("n too large for trial division");
    }
    std::int64_t rest = n;
    for (std::int64_t d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        if (d % 6 == 5) return d;
        while (rest % d == 0) rest /= d;
    }
    if (rest > 1 && rest % 6 == 5) return rest;
    return std::nullopt;
}

std::vector<std::int64_t> five_mod6_residues(std::int64_t n, std::int64_t p) {
    std::vector<std::int64_t> out;
    const std::int64_t i1_count = n / p;
    const std::int64_t i2_count = (p - 5) / 6 + 1;
    out.reserve(static_cast<std::size_t>(i1_count * i2_count));
    for (std::int64_t i1 = 0; i1 < i1_count; ++i1) {
        for (std::int64_t i2 = 0; i2 < i2_count; ++i2) {
            out.push_back(p * i1 + 2 * i2 + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Q3Value q3_cyclic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("q3 needs n >= 1");
    if (n % 2 == 0) return {n / 4, Q3Branch::Even, 0};
    if (const auto p = smallest_5mod6_prime_divisor(n)) {
        // (1 + 1/p) n/6 = (n/p) * (p+1)/6, exactly divisible by design.
        if (n % *p != 0 || (*p + 1) % 6 != 0) {
            throw std::logic_error("q3 divisibility violated");
        }
        return {(n / *p) * ((*p + 1) / 6), Q3Branch::FiveMod6, *p};
    }
    return {n / 6, Q3Branch::Floor6, 0};
}

}  // namespace spanind
