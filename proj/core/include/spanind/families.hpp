#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spanind/sets.hpp"

namespace spanind {

// Explicit extremal families in cyclic groups. Constructors validate
// their parameter ranges, build the set, and return a certificate that
// has been re-verified through the definitional predicates; a
// verification failure throws std::logic_error since each family is
// proved to work on its stated range.

enum class SpanFamily {
    Single,       // {1} in Z_n, 2 <= n <= 2s+1
    Consecutive,  // {s, s+1} in Z_n, 2s+2 <= n <= 2s^2+2s+1
    Alternate,    // {1, 2s+1} in Z_n, n = 2s^2+2s+1
    HalfRange,    // {1, ..., m} in Z_{2m+1}, s = 1
};

enum class IndepFamily {
    OddBelowThird,  // odd residues below n/3, 3-independent
    OddBelowHalf,   // odd residues below n/2 (n even), 3-independent
    FiveMod6,       // p*i1 + 2*i2 + 1 grid for a prime divisor p = 5 mod 6
    SingleT,        // {1} in Z_n, n >= t+1
    HalfPairEven,   // {t/2, t/2+1}, t even, n >= t^2/2 + t + 1
    OnePairOdd,     // {1, t}, t odd, n = (t^2-1)/2 + t + 1
    Sporadic38,     // {1, 7, 11} in Z_38, 5-independent
    TightHalf2,     // {1, ..., m} in Z_{2m+1}, 2-independent
    TightOdds3,     // {1, 3, ..., 2m-1} in Z_{4m}, 3-independent
};

struct FamilyParams {
    std::int64_t n = 0;
    int s = 0;
    int t = 0;
    std::int64_t p = 0;  // optional prime for FiveMod6; 0 = pick smallest
};

SubsetCertificate spanning_family(SpanFamily kind, std::int64_t n, int s);
SubsetCertificate independent_family(IndepFamily kind, const FamilyParams& params);

/// CLI names: single, consec, alt, halfrange, odd_below_n3,
/// odd_below_n2, 5mod6, single_t, half_t_even, one_t_odd, sporadic38,
/// tight2, tight3.
SubsetCertificate family_by_name(const std::string& name, const FamilyParams& params);
std::string family_name(SpanFamily kind);
std::string family_name(IndepFamily kind);

/// Minimum size of a 1-spanning set: (n + #order-2 elements - 1) / 2,
/// and 0 for the trivial group.
std::int64_t p1_formula(const AbelianGroup& g);

/// Maximum size of a 1-independent set: n - 1.
std::int64_t q1_formula(const AbelianGroup& g);

/// Maximum size of a 2-independent set: (n - #order-2 elements - 1) / 2.
std::int64_t q2_formula(const AbelianGroup& g);

enum class Q3Branch { Even, FiveMod6, Floor6 };

struct Q3Value {
    std::int64_t value = 0;
    Q3Branch branch = Q3Branch::Floor6;
    std::int64_t p = 0;  // the prime divisor used on the FiveMod6 branch
};

/**
 * Exact maximum size of a 3-independent set in Z_n: floor(n/4) for even
 * n; (1 + 1/p) n/6 for odd n with a prime divisor p = 5 (mod 6), p the
 * smallest such; floor(n/6) otherwise. All arithmetic exact; the middle
 * branch asserts divisibility instead of rounding.
 */
Q3Value q3_cyclic(std::int64_t n);

std::optional<std::int64_t> smallest_5mod6_prime_divisor(std::int64_t n);

/// The FiveMod6 residue set {p*i1 + 2*i2 + 1} as sorted residues.
std::vector<std::int64_t> five_mod6_residues(std::int64_t n, std::int64_t p);

}  // namespace spanind
