#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanind/counting.hpp"
#include "spanind/group.hpp"

namespace spanind {

enum class ClaimKind { Spanning, Independent, Perfect, Tight };

struct Claim {
    ClaimKind kind = ClaimKind::Spanning;
    int param = 0;  // s for spanning/perfect, t for independent/tight
};

std::string claim_kind_name(ClaimKind kind);

/**
 * A subset of a group together with a verified claim about it. Negative
 * verifications carry a witness: a minimal-weight nonzero relation for
 * failed independence, or the lexicographically least unreached element
 * for failed spanning.
 */
struct SubsetCertificate {
    AbelianGroup group;
    std::vector<GroupElement> set;
    Claim claim;
    bool verified = false;
    std::optional<CoeffVector> relation;
    std::optional<GroupElement> unreached;
};

struct SpanningCheck {
    bool spanning = false;
    std::optional<GroupElement> unreached;  // set when spanning is false
};

struct IndependenceCheck {
    bool independent = false;
    std::optional<CoeffVector> relation;  // set when independent is false
};

/// ind(A) as a value: infinite only for the empty set.
struct IndependenceNumber {
    bool infinite = false;
    int value = 0;
};

/**
 * Least representation weights over the whole group: entry g is the
 * minimal l1 weight of a coefficient vector expressing g over `set`,
 * or -1 when no representation of weight <= cap exists (cap < 0 means
 * unbounded). Computed as BFS distance in the Cayley graph on +/-set.
 */
std::vector<std::int32_t> min_weight_table(const AbelianGroup& g,
                                           const std::vector<GroupElement>& set, int cap = -1);

/// True iff every group element has a representation of weight <= s.
SpanningCheck is_spanning(const AbelianGroup& g, const std::vector<GroupElement>& set, int s);

/// Least s such that `set` is s-spanning; nullopt when the set does not
/// generate the group. The empty set spans only the trivial group.
std::optional<int> spanning_number(const AbelianGroup& g, const std::vector<GroupElement>& set);

/// True iff no nonzero coefficient vector of weight <= t sums to zero.
/// The witness (when false) is the first relation in weight-then-lex order.
IndependenceCheck is_independent(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                 int t);

/// Largest t for which the set is t-independent, i.e. minimal relation
/// weight minus one.
IndependenceNumber independence_number(const AbelianGroup& g,
                                       const std::vector<GroupElement>& set);

/**
 * Multiplicity of every group element as a signed sum over `set` with
 * weight <= radius. Total multiplicity is the full ball count; all
 * counts equal to one is the uniqueness property of perfect spanning
 * sets and, at radius t/2, the optimized even-t independence test.
 */
struct SignedSumTable {
    int radius = 0;
    std::vector<std::int64_t> counts;  // indexed by packed element index

    std::int64_t distinct() const;
    std::int64_t total() const;
    bool all_unique() const;
};

SignedSumTable signed_sum_table(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                int radius, std::int64_t budget = 10'000'000);

/// Optimized check for even t: independent iff all signed sums at
/// radius t/2 are distinct. Cross-validated against is_independent.
bool even_independent_by_sum_table(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                   int t_even);

/// s-spanning in a group whose order equals the radius-s ball count.
bool is_perfect_spanning(const AbelianGroup& g, const std::vector<GroupElement>& set, int s);

/// t-independent in a group whose order equals the independence bound.
bool is_tight_independent(const AbelianGroup& g, const std::vector<GroupElement>& set, int t);

/**
 * Consistency report tying span(A) and ind(A) together. When ind(A) is
 * even and A generates G, the following hold and are asserted:
 * ball(m, t/2) <= n <= ball(m, s), t <= 2s, and the equivalence of
 * {t = 2s, perfect, tight}. For odd ind(A) the theorem does not apply;
 * the three flags are still reported but nothing is asserted.
 */
struct DualityReport {
    int m = 0;
    std::int64_t n = 0;
    std::optional<int> span;
    IndependenceNumber ind;
    bool theorem_applies = false;  // span finite and ind even
    std::string skip_reason;

    Bigint lower_bound;  // ball(m, t/2), valid when theorem_applies
    Bigint upper_bound;  // ball(m, s), valid when span is finite
    bool order_in_bounds = false;
    bool t_at_most_2s = false;

    bool t_equals_2s = false;
    bool perfect = false;
    bool tight = false;
    bool equivalence_consistent = false;  // the three flags agree

    bool all_assertions_hold() const {
        if (!theorem_applies) return true;
        return order_in_bounds && t_at_most_2s && equivalence_consistent;
    }
};

DualityReport duality_report(const AbelianGroup& g, const std::vector<GroupElement>& set);

/// Builds a certificate for the claim, verifying it and recording a
/// witness on failure. Throws std::logic_error if a verified claim
/// violates the corresponding counting bound (a proved impossibility).
SubsetCertificate make_certificate(const AbelianGroup& g, const std::vector<GroupElement>& set,
                                   Claim claim);

struct CertificateCheck {
    bool claim_ok = false;
    bool bound_ok = true;  // n <= ball(m,s) for spanning / n >= bound(m,t) for t >= 2
};

/// Re-verifies a certificate from scratch (definitional predicates) and
/// re-checks the counting bounds.
CertificateCheck verify_certificate(const SubsetCertificate& cert);

/// Throws std::invalid_argument unless all elements are distinct,
/// reduced members of g.
void validate_subset(const AbelianGroup& g, const std::vector<GroupElement>& set);

}  // namespace spanind
