#pragma once

#include <cstdint>
#include <vector>

#include "spanind/sets.hpp"

namespace spanind {

enum class SearchMode { MinSpanning, MaxIndependent };

/**
 * An exhaustive-search task. The search is depth-first over increasing
 * packed indices of candidate elements and is deterministic: the
 * returned certificate is the lexicographically smallest optimum under
 * the candidate ordering.
 *
 * symmetry_reduction restricts candidates to one representative of each
 * {g, -g} pair (sound because flipping the sign of any element changes
 * neither spanning nor independence); it is skipped for independence
 * levels t < 2, where a set may legitimately contain such a pair.
 *
 * unit_orbit_reduction (cyclic groups only, off by default) restricts
 * the smallest chosen element to divisors of n: multiplication by a
 * unit maps any set to one whose smallest canonical element is
 * gcd(a, n) for the member a minimizing that gcd.
 */
struct SearchTask {
    AbelianGroup group;
    SearchMode mode;
    int param = 1;  // s or t
    std::uint64_t node_budget = 1'000'000'000;
    bool symmetry_reduction = true;
    bool unit_orbit_reduction = false;
};

struct SearchResult {
    int value = 0;
    SubsetCertificate certificate;
    std::uint64_t nodes_explored = 0;
    bool proved_optimal = false;
};

/// Smallest m such that some m-subset is s-spanning; the scan starts at
/// the counting lower bound min{m : ball(m,s) >= n} and moves upward.
SearchResult min_spanning_size(const SearchTask& task);

/// Largest m such that some m-subset is t-independent; the scan starts
/// at the counting upper bound max{m : order_bound(m,t) <= n} and moves
/// downward. Supports t >= 0 (t < 2 handled by direct packing).
SearchResult max_independent_size(const SearchTask& task);

struct TableRow {
    std::int64_t n = 0;
    int value = 0;
    bool extremal = false;  // perfect (spanning) or tight (independence)
    bool proved = false;
    bool from_cache = false;
    std::uint64_t nodes = 0;
    SubsetCertificate certificate;
};

class ResultCache;  // see cache.hpp

struct SweepOptions {
    int jobs = 1;
    std::uint64_t node_budget = 1'000'000'000;
    bool symmetry_reduction = true;
    bool unit_orbit_reduction = false;
    bool fresh = false;           // ignore cached rows
    ResultCache* cache = nullptr; // optional read/write cache
};

/// One row per cyclic group Z_n, n in [from, to]. Rows are computed in
/// a worker pool of `jobs` threads; output is ordered by n and does not
/// depend on the worker count.
std::vector<TableRow> sweep_table(SearchMode mode, int param, std::int64_t from, std::int64_t to,
                                  const SweepOptions& options = {});

}  // namespace spanind
