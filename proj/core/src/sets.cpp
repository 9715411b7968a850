#include "spanind/sets.hpp"

#include <algorithm>
#include <unordered_set>

namespace spanind {

std::string claim_kind_name(ClaimKind kind) {
    switch (kind) {
        case ClaimKind::Spanning: return "spanning";
        case ClaimKind::Independent: return "independent";
        case ClaimKind::Perfect: return "perfect";
        case ClaimKind::Tight: return "tight";
    }
    return "?";
}

void validate_subset(const AbelianGroup& g, const std::vector<GroupElement>& set) {
    std::unordered_set<std::int64_t> seen;
    for (const auto& e : set) {
        if (static_cast<int>(e.size()) != g.rank()) {
            throw std::invalid_argument("set element rank does not match group");
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= g.factors()[i]) {
                throw std::invalid_argument("set element not reduced into the group");
            }
        }
        if (!seen.insert(g.index_of(e)).second) {
            throw std::invalid_argument("set elements must be distinct");
        }
    }
}

std::vector<std::int32_t> min_weight_table(const AbelianGroup& g,
                                           const std::vector<GroupElement>& set, int cap) {
    const std::int64_t n = g.order();
    std::vector<std::int32_t> dist(static_cast<std::size_t>(n), -1);
    dist[0] = 0;
    std::vector<std::int64_t> deltas;
    deltas.reserve(set.size() * 2);
    for (const auto& e : set) {
        const std::int64_t idx = g.index_of(e);
        deltas.push_back(idx);
        deltas.push_back(g.index_negate(idx));
    }
    std::vector<std::int64_t> frontier{0};
    std::vector<std::int64_t> next;
    std::int32_t level = 0;
    while (!frontier.empty() && (cap < 0 || level < cap)) {
        ++level;
        next.clear();
        for (const std::int64_t idx : frontier) {
            for (const std::int64_t d : deltas) {
                const std::int64_t v = g.index_add(idx, d);
                if (dist[v] < 0) {
                    dist[v] = level;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

SpanningCheck is_spanning(const AbelianGroup& g, const std::vector<GroupElement>& set, int s) {
    if (s < 0) throw std::invalid_argument("spanning radius must be >= 0");
    validate_subset(g, set);
    const auto dist = min_weight_table(g, set, s);
    for (std::int64_t i = 0; i < g.order(); ++i) {
        if (dist[i] < 0) return {false, g.element_at(i)};
    }
    return {true, std::nullopt};
}

std::optional<int> spanning_number(const AbelianGroup& g, const std::vector<GroupElement>& set) {
    validate_subset(g, set);
    const auto dist = min_weight_table(g, set, -1);
    std::int32_t worst = 0;
    for (std::int64_t i = 0; i < g.order(); ++i) {
        if (dist[i] < 0) return std::nullopt;
        worst = std::max(worst, dist[i]);
    }
    return static_cast<int>(worst);
}

namespace {

// First zero relation of weight exactly w in lexicographic order.
std::optional<CoeffVector> relation_at_weight(const AbelianGroup& g,
                                              const std::vector<GroupElement>& set, int w) {
    const int m = static_cast<int>(set.size());
    if (m == 0 || w == 0) return std::nullopt;

    // multiples[i][k + w] = packed index of k * a_i for k in [-w, w]
    std::vector<std::vector<std::int64_t>> multiples(m);
    for (int i = 0; i < m; ++i) {
        multiples[i].resize(2 * w + 1);
        const std::int64_t base = g.index_of(set[i]);
        for (int k = -w; k <= w; ++k) multiples[i][k + w] = g.index_scalar_mul(k, base);
    }

    CoeffVector cur;
    cur.lambdas.assign(m, 0);
    std::optional<CoeffVector> found;

    std::function<bool(int, int, std::int64_t)> rec = [&](int pos, int rem,
                                                          std::int64_t sum) -> bool {
        if (pos == m) {
            if (rem == 0 && sum == 0) {
                found = cur;
                return false;
            }
            return true;
        }
        for (int v = -rem; v <= rem; ++v) {
            cur.lambdas[pos] = v;
            const std::int64_t s2 = g.index_add(sum, multiples[pos][v + w]);
            if (!rec(pos + 1, rem - (v < 0 ? -v : v), s2)) return false;
        }
        cur.lambdas[pos] = 0;
        return true;
    };
    rec(0, w, 0);
    return found;
}

}  // namespace

IndependenceCheck is_independent(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                 int t) {
    if (t < 0) throw std::invalid_argument("independence level must be >= 0");
    validate_subset(g, set);
    for (int w = 1; w <= t; ++w) {
        if (auto rel = relation_at_weight(g, set, w)) return {false, std::move(rel)};
    }
    return {true, std::nullopt};
}

IndependenceNumber independence_number(const AbelianGroup& g,
                                       const std::vector<GroupElement>& set) {
    validate_subset(g, set);
    if (set.empty()) return {true, 0};
    // A nonempty set always has the relation order(a) * a = 0, so the
    // scan terminates at weight <= |G|.
    for (int w = 1; w <= g.order(); ++w) {
        if (relation_at_weight(g, set, w)) return {false, w - 1};
    }
    throw std::logic_error("no relation found up to the group order");
}

std::int64_t SignedSumTable::distinct() const {
    std::int64_t d = 0;
    for (auto c : counts) d += (c > 0);
    return d;
}

std::int64_t SignedSumTable::total() const {
    std::int64_t tot = 0;
    for (auto c : counts) tot += c;
    return tot;
}

bool SignedSumTable::all_unique() const {
    for (auto c : counts) {
        if (c > 1) return false;
    }
    return true;
}

SignedSumTable signed_sum_table(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                int radius, std::int64_t budget) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    validate_subset(g, set);
    const int m = static_cast<int>(set.size());
    const Bigint work = l1_ball_count(m, radius);
    if (work > budget || g.order() > budget) {
        throw BudgetExceeded("signed sum table of size " + work.str() + " over order " +
                             std::to_string(g.order()) + " exceeds budget " +
                             std::to_string(budget));
    }

    SignedSumTable table;
    table.radius = radius;
    table.counts.assign(static_cast<std::size_t>(g.order()), 0);

    std::vector<std::vector<std::int64_t>> multiples(m);
    for (int i = 0; i < m; ++i) {
        multiples[i].resize(2 * radius + 1);
        const std::int64_t base = g.index_of(set[i]);
        for (int k = -radius; k <= radius; ++k) {
            multiples[i][k + radius] = g.index_scalar_mul(k, base);
        }
    }

    std::function<void(int, int, std::int64_t)> rec = [&](int pos, int rem, std::int64_t sum) {
        if (pos == m) {
            ++table.counts[sum];
            return;
        }
        for (int v = -rem; v <= rem; ++v) {
            rec(pos + 1, rem - (v < 0 ? -v : v), g.index_add(sum, multiples[pos][v + radius]));
        }
    };
    rec(0, radius, 0);
    return table;
}

bool even_independent_by_sum_table(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                   int t_even) {
    if (t_even < 0 || t_even % 2 != 0) throw std::invalid_argument("t must be even and >= 0");
    return signed_sum_table(g, set, t_even / 2).all_unique();
}

bool is_perfect_spanning(const AbelianGroup& g, const std::vector<GroupElement>& set, int s) {
    if (Bigint(g.order()) != l1_ball_count(static_cast<int>(set.size()), s)) return false;
    return is_spanning(g, set, s).spanning;
}

bool is_tight_independent(const AbelianGroup& g, const std::vector<GroupElement>& set, int t) {
    if (t < 1) throw std::invalid_argument("tightness needs t >= 1");
    if (Bigint(g.order()) != independence_order_bound(static_cast<int>(set.size()), t)) {
        return false;
    }
    return is_independent(g, set, t).independent;
}

DualityReport duality_report(const AbelianGroup& g, const std::vector<GroupElement>& set) {
    validate_subset(g, set);
    DualityReport rep;
    rep.m = static_cast<int>(set.size());
    rep.n = g.order();
    rep.span = spanning_number(g, set);
    rep.ind = independence_number(g, set);

    if (!rep.span.has_value()) {
        rep.skip_reason = "set does not generate the group";
        return rep;
    }
    if (rep.ind.infinite) {
        rep.skip_reason = "empty set has unbounded independence";
        return rep;
    }

    const int s = *rep.span;
    const int t = rep.ind.value;
    rep.upper_bound = l1_ball_count(rep.m, s);
    rep.t_equals_2s = (t == 2 * s);
    rep.perfect = is_perfect_spanning(g, set, s);
    rep.tight = t >= 1 && is_tight_independent(g, set, t);
    rep.equivalence_consistent =
        (rep.t_equals_2s == rep.perfect) && (rep.perfect == rep.tight);

    if (t % 2 != 0) {
        rep.skip_reason = "ind(A) is odd; bounds stated for even ind only";
        return rep;
    }
    rep.theorem_applies = true;
    rep.lower_bound = l1_ball_count(rep.m, t / 2);
    rep.order_in_bounds = rep.lower_bound <= rep.n && Bigint(rep.n) <= rep.upper_bound;
    rep.t_at_most_2s = t <= 2 * s;
    return rep;
}

namespace {

bool bound_holds(const AbelianGroup& g, int m, const Claim& claim) {
    switch (claim.kind) {
        case ClaimKind::Spanning:
        case ClaimKind::Perfect:
            return Bigint(g.order()) <= l1_ball_count(m, claim.param);
        case ClaimKind::Independent:
        case ClaimKind::Tight:
            if (claim.param < 2) return true;  // bound stated for t >= 2
            return Bigint(g.order()) >= independence_order_bound(m, claim.param);
    }
    return true;
}

}  // namespace

SubsetCertificate make_certificate(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                   Claim claim) {
    validate_subset(g, set);
    SubsetCertificate cert{g, set, claim, false, std::nullopt, std::nullopt};
    switch (claim.kind) {
        case ClaimKind::Spanning: {
            auto chk = is_spanning(g, set, claim.param);
            cert.verified = chk.spanning;
            cert.unreached = chk.unreached;
            break;
        }
        case ClaimKind::Perfect: {
            auto chk = is_spanning(g, set, claim.param);
            cert.unreached = chk.unreached;
            cert.verified = chk.spanning &&
                            Bigint(g.order()) ==
                                l1_ball_count(static_cast<int>(set.size()), claim.param);
            break;
        }
        case ClaimKind::Independent: {
            auto chk = is_independent(g, set, claim.param);
            cert.verified = chk.independent;
            cert.relation = chk.relation;
            break;
        }
        case ClaimKind::Tight: {
            auto chk = is_independent(g, set, claim.param);
            cert.relation = chk.relation;
            cert.verified = chk.independent &&
                            Bigint(g.order()) ==
                                independence_order_bound(static_cast<int>(set.size()),
                                                         claim.param);
            break;
        }
    }
    if (cert.verified && !bound_holds(g, static_cast<int>(set.size()), claim)) {
        throw std::logic_error("verified certificate violates a proved counting bound");
    }
    return cert;
}

CertificateCheck verify_certificate(const SubsetCertificate& cert) {
    CertificateCheck out;
    const auto& g = cert.group;
    const auto& set = cert.set;
    validate_subset(g, set);
    switch (cert.claim.kind) {
        case ClaimKind::Spanning:
            out.claim_ok = is_spanning(g, set, cert.claim.param).spanning;
            break;
        case ClaimKind::Perfect:
            out.claim_ok = is_perfect_spanning(g, set, cert.claim.param);
            break;
        case ClaimKind::Independent:
            out.claim_ok = is_independent(g, set, cert.claim.param).independent;
            break;
        case ClaimKind::Tight:
            out.claim_ok = is_tight_independent(g, set, cert.claim.param);
            break;
    }
    if (out.claim_ok) {
        out.bound_ok = bound_holds(g, static_cast<int>(set.size()), cert.claim);
    }
    return out;
}

}  // namespace spanind
