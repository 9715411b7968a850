#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spanind/errors.hpp"

namespace spanind {

/**
 * A group element is a dense residue vector: coordinate i lies in
 * [0, n_i) where n_i is the i-th invariant factor of the owning group.
 * Elements do not carry a pointer to their group; all arithmetic goes
 * through AbelianGroup, which validates shapes.
 */
using GroupElement = std::vector<std::int64_t>;

/**
 * Finite abelian group in invariant-factor form,
 *
 *     G = Z_{n1} x Z_{n2} x ... x Z_{nr},   n1 | n2 | ... | nr.
 *
 * Arbitrary factor lists are accepted and canonicalized by repeated
 * gcd/lcm exchange, so "6,4" and "2,12" describe the same group and
 * compare equal. Factors equal to 1 are dropped; the trivial group is
 * kept as Z_1. Instances are immutable after construction and safe to
 * share across threads.
 *
 * Elements can also be handled as packed mixed-radix indices in
 * [0, order). Index 0 is the identity, and index order equals the
 * lexicographic position of the residue vector, which keeps element
 * enumeration, packing and tie-breaking consistent.
 */
class AbelianGroup {
public:
    static constexpr std::int64_t kDefaultElementBudget = 1'000'000;

    /// The trivial group Z_1.
    AbelianGroup() : AbelianGroup(std::vector<std::int64_t>{1}) {}

    explicit AbelianGroup(std::vector<std::int64_t> factors);

    /// Parses a comma-separated factor list, e.g. "25" or "2,4".
    static AbelianGroup parse(const std::string& text);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    std::int64_t order() const { return order_; }

    /// Canonical literal, e.g. "2,4".
    std::string to_string() const;

    GroupElement zero() const { return GroupElement(factors_.size(), 0); }

    /// Reduces arbitrary integer coordinates into canonical range.
    GroupElement make_element(const GroupElement& coords) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scalar_mul(std::int64_t k, const GroupElement& a) const;

    /// Least k >= 1 with k*a = 0.
    std::int64_t element_order(const GroupElement& a) const;

    /// Number of elements of order exactly 2; equals 2^(#even factors) - 1.
    std::int64_t order2_count() const;

    /**
     * All group elements in lexicographic order starting with the
     * identity. Throws BudgetExceeded when the order is above `budget`.
     */
    std::vector<GroupElement> elements(std::int64_t budget = kDefaultElementBudget) const;

    // Packed-index arithmetic. Indices are mixed-radix encodings of the
    // residue vector and admit O(rank) group operations; rank-1 groups
    // take a branch-free fast path.
    std::int64_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::int64_t index) const;
    std::int64_t index_add(std::int64_t a, std::int64_t b) const;
    std::int64_t index_sub(std::int64_t a, std::int64_t b) const;
    std::int64_t index_negate(std::int64_t a) const;
    std::int64_t index_scalar_mul(std::int64_t k, std::int64_t a) const;

    /// min(index, index of the inverse): canonical representative of {g, -g}.
    std::int64_t index_sign_canonical(std::int64_t a) const;

    bool operator==(const AbelianGroup& other) const { return factors_ == other.factors_; }
    bool operator!=(const AbelianGroup& other) const { return !(*this == other); }

private:
    void check_rank(const GroupElement& a) const;

    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_ = 1;
};

/// Serializes an element as comma-separated residues, e.g. "1,3".
std::string format_element(const GroupElement& a);

/// Parses comma-separated residues into an element of `g` (reduced).
GroupElement parse_element(const AbelianGroup& g, const std::string& text);

/**
 * Parses a subset literal. Elements are separated by ';' and residues
 * within an element by ','. For rank-1 groups a plain comma-separated
 * list is also accepted: "1,4,6".
 */
std::vector<GroupElement> parse_subset(const AbelianGroup& g, const std::string& text);

std::string format_subset(const std::vector<GroupElement>& set);

/// All invariant-factor shapes of abelian groups of the given order.
std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t n);

}  // namespace spanind
