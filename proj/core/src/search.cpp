#include "spanind/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "spanind/cache.hpp"
#include "spanind/json_io.hpp"
#include "spanind/version.hpp"

namespace spanind {

namespace {

constexpr std::int16_t kInf = 0x3fff;
constexpr std::int64_t kMaxSearchOrder = 2'000'000;
constexpr std::int64_t kMaxTableBytes = std::int64_t{1} << 29;  // dist-table stack limit

// Depth-first search for a fixed-size subset, over candidates in
// increasing packed-index order. Each accepted prefix carries a table
// of least representation weights (capped at the radius), so both the
// spanning coverage test and the incremental independence test are
// O(1) lookups per candidate; extending a prefix costs O(n * radius).
struct DfsEngine {
    const AbelianGroup& g;
    const SearchMode mode;
    const int radius;  // s (spanning) or t (independence)
    const std::uint64_t budget;

    std::int64_t n;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<std::int64_t> cands;
    std::vector<char> first_ok;  // admissible at depth 0 (unit-orbit restriction)
    std::vector<std::vector<std::int16_t>> dist;
    std::vector<std::int64_t> covered;  // spanning: #elements with weight <= radius
    std::vector<std::int64_t> chosen;

    std::vector<std::int64_t> ball;  // ball(r, radius) capped at n
    std::vector<std::int64_t> suf_pair, suf_self;  // s == 1 additive prune

    int target = 0;

    DfsEngine(const AbelianGroup& group, SearchMode mode_, int radius_, std::uint64_t budget_,
              bool symmetry, bool unit_orbit)
        : g(group), mode(mode_), radius(radius_), budget(budget_), n(group.order()) {
        build_candidates(symmetry, unit_orbit);
    }

    void build_candidates(bool symmetry, bool unit_orbit) {
        const bool indep = mode == SearchMode::MaxIndependent;
        // A {g,-g} representative suffices: flipping the sign of any
        // member changes neither property. Not valid for t < 2, where a
        // set may contain such a pair.
        const bool canonical = symmetry && (!indep || radius >= 2);
        for (std::int64_t idx = 0; idx < n; ++idx) {
            if (idx == 0) {
                if (indep && radius == 0) cands.push_back(idx);
                continue;
            }
            if (canonical && g.index_negate(idx) < idx) continue;
            if (indep && radius >= 1 &&
                g.element_order(g.element_at(idx)) <= radius) {
                continue;  // k * a = 0 for some k <= t
            }
            cands.push_back(idx);
        }
        first_ok.assign(cands.size(), 1);
        if (unit_orbit && g.rank() == 1) {
            // Unit scaling maps any set to one whose smallest canonical
            // element is min gcd(a, n), a divisor of n.
            for (std::size_t i = 0; i < cands.size(); ++i) {
                first_ok[i] = (n % cands[i] == 0);
            }
        }
        if (mode == SearchMode::MinSpanning) {
            const int max_m = static_cast<int>(cands.size());
            ball.resize(max_m + 1);
            for (int r = 0; r <= max_m; ++r) ball[r] = l1_ball_count_capped(r, radius, n);
            if (radius == 1) {
                suf_pair.assign(cands.size() + 1, 0);
                suf_self.assign(cands.size() + 1, 0);
                for (int i = static_cast<int>(cands.size()) - 1; i >= 0; --i) {
                    const bool self = g.index_negate(cands[i]) == cands[i];
                    suf_pair[i] = suf_pair[i + 1] + (self ? 0 : 1);
                    suf_self[i] = suf_self[i + 1] + (self ? 1 : 0);
                }
            }
        }
    }

    bool indep_ok(const std::vector<std::int16_t>& d, std::int64_t b) const {
        std::int64_t acc = b;  // mu * b
        for (int mu = 1; mu <= radius; ++mu) {
            if (d[acc] <= radius - mu) return false;
            acc = g.index_add(acc, b);
        }
        return true;
    }

    // dist[depth+1][x] = min over mu of dist[depth][x - mu b] + |mu|,
    // values above the radius dropped. Returns whether anything changed.
    bool apply(int depth, std::int64_t b) {
        const auto& cur = dist[depth];
        auto& nxt = dist[depth + 1];
        nxt = cur;
        bool changed = false;
        std::int64_t pb = 0;
        for (int mu = 1; mu <= radius; ++mu) {
            pb = g.index_add(pb, b);
            const std::int64_t nb = g.index_negate(pb);
            for (std::int64_t y = 0; y < n; ++y) {
                const std::int16_t base = cur[y];
                if (base + mu > radius) continue;
                const std::int16_t cand = static_cast<std::int16_t>(base + mu);
                const std::int64_t up = g.index_add(y, pb);
                if (cand < nxt[up]) {
                    nxt[up] = cand;
                    changed = true;
                }
                const std::int64_t dn = g.index_add(y, nb);
                if (cand < nxt[dn]) {
                    nxt[dn] = cand;
                    changed = true;
                }
            }
        }
        if (mode == SearchMode::MinSpanning) {
            std::int64_t cov = 0;
            for (std::int64_t x = 0; x < n; ++x) cov += (nxt[x] <= radius);
            covered[depth + 1] = cov;
        }
        return changed;
    }

    std::int64_t best_additive_gain(std::size_t from, std::int64_t slots) const {
        const std::int64_t pairs = std::min<std::int64_t>(slots, suf_pair[from]);
        const std::int64_t selfs = std::min<std::int64_t>(slots - pairs, suf_self[from]);
        return 2 * pairs + selfs;
    }

    bool run(int target_m) {
        target = target_m;
        const std::int64_t bytes = static_cast<std::int64_t>(target + 1) * n * 2;
        if (bytes > kMaxTableBytes) {
            throw BudgetExceeded("search table stack would need " + std::to_string(bytes) +
                                 " bytes");
        }
        dist.resize(target + 1);
        dist[0].assign(static_cast<std::size_t>(n), kInf);
        dist[0][0] = 0;
        covered.assign(target + 1, 0);
        covered[0] = 1;
        chosen.clear();
        if (mode == SearchMode::MinSpanning && ball[std::min<std::size_t>(target, ball.size() - 1)] < n) {
            return false;  // counting bound rules the size out
        }
        if (target == 0) {
            return mode == SearchMode::MaxIndependent || covered[0] == n;
        }
        return dfs(0, 0);
    }

    bool dfs(int depth, std::size_t start) {
        if (depth == target) {
            return mode == SearchMode::MaxIndependent || covered[depth] == n;
        }
        const std::size_t remaining = static_cast<std::size_t>(target - depth);
        for (std::size_t i = start; i < cands.size(); ++i) {
            if (cands.size() - i < remaining) return false;
            if (depth == 0 && !first_ok[i]) continue;
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            const std::int64_t b = cands[i];
            if (mode == SearchMode::MaxIndependent) {
                if (!indep_ok(dist[depth], b)) continue;
                apply(depth, b);
            } else {
                if (!apply(depth, b)) continue;  // adds nothing, now or later
                if (covered[depth + 1] < n) {
                    const std::int64_t r = static_cast<std::int64_t>(remaining) - 1;
                    if (r == 0) continue;
                    if (covered[depth + 1] * ball[r] < n) continue;
                    if (radius == 1 &&
                        covered[depth + 1] + best_additive_gain(i + 1, r) < n) {
                        continue;
                    }
                }
            }
            chosen.push_back(b);
            if (dfs(depth + 1, i + 1)) return true;
            chosen.pop_back();
            if (budget_hit) return false;
        }
        return false;
    }
};

SubsetCertificate certificate_from_indices(const AbelianGroup& g,
                                           const std::vector<std::int64_t>& indices,
                                           SearchMode mode, int param) {
    std::vector<GroupElement> set;
    set.reserve(indices.size());
    for (auto i : indices) set.push_back(g.element_at(i));
    const int m = static_cast<int>(set.size());
    Claim claim{};
    if (mode == SearchMode::MinSpanning) {
        const bool perfect = Bigint(g.order()) == l1_ball_count(m, param);
        claim = {perfect ? ClaimKind::Perfect : ClaimKind::Spanning, param};
    } else {
        const bool tight =
            param >= 1 && Bigint(g.order()) == independence_order_bound(m, param);
        claim = {tight ? ClaimKind::Tight : ClaimKind::Independent, param};
    }
    auto cert = make_certificate(g, set, claim);
    if (!cert.verified) {
        throw std::logic_error("search result failed definitional re-verification");
    }
    return cert;
}

void check_search_order(const AbelianGroup& g) {
    if (g.order() > kMaxSearchOrder) {
        throw BudgetExceeded("group order " + std::to_string(g.order()) +
                             " too large for exhaustive search");
    }
}

}  // namespace

SearchResult min_spanning_size(const SearchTask& task) {
    const auto& g = task.group;
    const std::int64_t n = g.order();
    if (task.param < 1) {
        if (task.param == 0 && n == 1) {
            SearchResult res;
            res.value = 0;
            res.certificate = make_certificate(g, {}, {ClaimKind::Perfect, 0});
            res.proved_optimal = true;
            return res;
        }
        throw std::invalid_argument("spanning search needs s >= 1 (s = 0 spans only Z_1)");
    }
    check_search_order(g);

    DfsEngine engine(g, SearchMode::MinSpanning, task.param, task.node_budget,
                     task.symmetry_reduction, task.unit_orbit_reduction);

    int m0 = 0;
    while (l1_ball_count_capped(m0, task.param, n) < n) ++m0;

    for (int m = m0; m <= static_cast<int>(engine.cands.size()); ++m) {
        if (engine.run(m)) {
            SearchResult res;
            res.value = m;
            res.nodes_explored = engine.nodes;
            res.proved_optimal = true;
            res.certificate = certificate_from_indices(g, engine.chosen,
                                                       SearchMode::MinSpanning, task.param);
            return res;
        }
        if (engine.budget_hit) {
            // Partial outcome: the full candidate set is a verified upper
            // bound (it 1-spans, hence s-spans), just not proved minimal.
            SearchResult res;
            res.value = static_cast<int>(engine.cands.size());
            res.nodes_explored = engine.nodes;
            res.proved_optimal = false;
            res.certificate = certificate_from_indices(g, engine.cands,
                                                       SearchMode::MinSpanning, task.param);
            return res;
        }
    }
    throw std::logic_error("spanning search exhausted every size");
}

SearchResult max_independent_size(const SearchTask& task) {
    const auto& g = task.group;
    const std::int64_t n = g.order();
    if (task.param < 0) throw std::invalid_argument("independence search needs t >= 0");
    check_search_order(g);

    DfsEngine engine(g, SearchMode::MaxIndependent, task.param, task.node_budget,
                     task.symmetry_reduction, task.unit_orbit_reduction);

    int m_hi = 0;
    if (task.param >= 2) {
        while (independence_order_bound(m_hi + 1, task.param) <= n) ++m_hi;
    } else if (task.param == 1) {
        m_hi = static_cast<int>(n - 1);  // any n-subset is all of G and contains 0
    } else {
        m_hi = static_cast<int>(n);
    }
    m_hi = std::min(m_hi, static_cast<int>(engine.cands.size()));

    for (int m = m_hi; m >= 0; --m) {
        if (engine.run(m)) {
            SearchResult res;
            res.value = m;
            res.nodes_explored = engine.nodes;
            res.proved_optimal = true;
            res.certificate = certificate_from_indices(g, engine.chosen,
                                                       SearchMode::MaxIndependent, task.param);
            return res;
        }
        if (engine.budget_hit) {
            // Partial outcome: the empty set is always independent; the
            // value is a valid lower bound, not proved maximal.
            SearchResult res;
            res.value = 0;
            res.nodes_explored = engine.nodes;
            res.proved_optimal = false;
            res.certificate =
                certificate_from_indices(g, {}, SearchMode::MaxIndependent, task.param);
            return res;
        }
    }
    throw std::logic_error("independence search fell through size zero");
}

namespace {

TableRow row_from_record(const CacheRecord& rec) {
    TableRow row;
    row.n = AbelianGroup::parse(rec.group).order();
    row.value = rec.value;
    row.proved = rec.proved;
    row.from_cache = true;
    row.certificate = certificate_from_json(rec.certificate);
    row.extremal = row.certificate.claim.kind == ClaimKind::Perfect ||
                   row.certificate.claim.kind == ClaimKind::Tight;
    return row;
}

}  // namespace

std::vector<TableRow> sweep_table(SearchMode mode, int param, std::int64_t from, std::int64_t to,
                                  const SweepOptions& options) {
    if (from < 1 || to < from) throw std::invalid_argument("bad table range");
    const std::size_t count = static_cast<std::size_t>(to - from + 1);
    std::vector<TableRow> rows(count);
    std::vector<char> need(count, 1);
    const std::string mode_str = mode == SearchMode::MinSpanning ? "p" : "q";

    if (options.cache && options.cache->enabled() && !options.fresh) {
        for (std::size_t k = 0; k < count; ++k) {
            if (auto rec = options.cache->lookup(std::to_string(from + k), mode_str, param)) {
                if (rec->proved) {
                    rows[k] = row_from_record(*rec);
                    need[k] = 0;
                }
            }
        }
    }

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= count) return;
            if (!need[k]) continue;
            const std::int64_t n = from + k;
            TableRow row;
            row.n = n;
            try {
                SearchTask task{AbelianGroup({n}),       mode,
                                param,                   options.node_budget,
                                options.symmetry_reduction, options.unit_orbit_reduction};
                const SearchResult res = mode == SearchMode::MinSpanning
                                             ? min_spanning_size(task)
                                             : max_independent_size(task);
                row.value = res.value;
                row.proved = res.proved_optimal;
                row.nodes = res.nodes_explored;
                row.certificate = res.certificate;
                row.extremal = res.certificate.claim.kind == ClaimKind::Perfect ||
                               res.certificate.claim.kind == ClaimKind::Tight;
            } catch (const BudgetExceeded&) {
                row.value = -1;
                row.proved = false;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
            rows[k] = std::move(row);
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    if (options.cache && options.cache->enabled()) {
        for (std::size_t k = 0; k < count; ++k) {
            if (!need[k] || !rows[k].proved) continue;
            CacheRecord rec;
            rec.group = std::to_string(rows[k].n);
            rec.mode = mode_str;
            rec.param = param;
            rec.value = rows[k].value;
            rec.certificate = certificate_to_json(rows[k].certificate);
            rec.proved = rows[k].proved;
            rec.version = kVersion;
            options.cache->append(std::move(rec));
        }
    }
    return rows;
}

}  // namespace spanind
