#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spanind/counting.hpp"
#include "spanind/group.hpp"

namespace spanind {

using Rational = boost::multiprecision::cpp_rational;

/// Points on the unit sphere S^d stored as coordinate rows in R^{d+1}.
struct PointSet {
    int ambient = 0;  // d + 1
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
};

/// Lower bound on the size of a t-design on S^d:
/// C(d + floor(t/2), floor(t/2)) + C(d + floor((t-1)/2), floor((t-1)/2)).
Bigint dgs_bound(int t, int d);

/// Vertices of the regular n-gon on S^1, j = 1..n.
PointSet regular_polygon(std::int64_t n);

/// True iff the complex power sums of the n-th roots of unity vanish
/// for k = 1..t, checked numerically; equivalent to n >= t+1.
bool power_sums_vanish(std::int64_t n, int t, double tol = 1e-9);

/**
 * The n-point configuration on S^{2m-1} built from frequency list A
 * (duplicates allowed): point j has the coordinate pair
 * (cos(2 pi j a_i / n), sin(2 pi j a_i / n)) / sqrt(m) for each a_i.
 */
PointSet lift_to_sphere(const std::vector<std::int64_t>& freqs, std::int64_t n);

/**
 * Exact mean of the monomial x^alpha over the uniform sphere in R^N,
 * N = alpha.size(): zero when any exponent is odd, otherwise
 * prod (alpha_i - 1)!! / (N (N+2) ... (N + 2k - 2)) with 2k = |alpha|.
 */
Rational sphere_monomial_moment(const std::vector<int>& alpha);

struct DegreeVerdict {
    int degree = 0;
    double max_error = 0.0;
    bool pass = false;  // all degrees <= this one within tolerance
};

struct DesignReport {
    int t_checked = 0;
    double tolerance = 0.0;
    double max_moment_error = 0.0;
    std::int64_t monomials_checked = 0;
    std::vector<DegreeVerdict> degrees;
    std::vector<int> worst_monomial;

    bool pass_at(int k) const;
    bool pass() const { return pass_at(t_checked); }
};

/**
 * Compares the sample mean of every monomial of total degree 1..t
 * against its exact sphere moment. Monomials span all polynomials of
 * bounded degree, so this decides the design property up to tolerance.
 * Rows must have unit norm within 1e-12; off-sphere input is rejected.
 */
DesignReport verify_design(const PointSet& points, int t, double tol = 1e-9);

/**
 * Exact verdict for lifted configurations, no floating point: each
 * monomial mean expands into cosine frequencies, and a frequency
 * contributes iff it is divisible by n. Compares exact rationals.
 */
bool verify_lifted_design_exact(const std::vector<std::int64_t>& freqs, std::int64_t n, int t);

/// Construction outcome: a point set, or a stated reason none is
/// provided for these parameters.
struct ConstructionOutcome {
    std::optional<PointSet> points;
    std::vector<std::int64_t> freqs;  // the frequency list used
    std::string infeasible_reason;    // set when points is empty

    bool feasible() const { return points.has_value(); }
};

/**
 * Direct t-design constructions on S^d for t <= 3 and odd d, via
 * lifted independent sets in Z_n (m = (d+1)/2 frequencies):
 *   t=1: all frequencies 1 (n >= 2);
 *   t=2: frequencies 1..m (n >= d+2);
 *   t=3: m odd frequencies for even n >= 2d+2 or odd n >= 3d+3, else m
 *        elements of the 5-mod-6 set when a prime divisor p = 5 (mod 6)
 *        of n satisfies n >= p(3d+3)/(p+1).
 * Throws for even d or t > 3.
 */
ConstructionOutcome construct_design(int t, int d, std::int64_t n);

/**
 * Evaluates t-independence of A in Z_n and the design property of the
 * lifted configuration side by side. For t <= 3 independence implies
 * the design property; a violation throws std::logic_error. For t > 3
 * no implication is asserted and both raw results are returned.
 */
struct LiftReport {
    bool independent = false;
    DesignReport design;
    bool implication_guaranteed = false;  // t <= 3
};

LiftReport independence_design_report(const std::vector<std::int64_t>& freqs, std::int64_t n,
                                      int t, double tol = 1e-9);

}  // namespace spanind
