#include "spanind/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "spanind/families.hpp"
#include "spanind/sets.hpp"

namespace spanind {

namespace {

constexpr double kNormTolerance = 1e-9;

Bigint double_factorial(int x) {
    // (-1)!! = 1 by convention
    Bigint r = 1;
    for (int v = x; v >= 2; v -= 2) r *= v;
    return r;
}

void for_each_monomial(int dims, int degree, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> alpha(dims, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == dims - 1) {
            alpha[pos] = rem;
            fn(alpha);
            alpha[pos] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            alpha[pos] = e;
            rec(pos + 1, rem - e);
        }
        alpha[pos] = 0;
    };
    if (dims <= 0) return;
    rec(0, degree);
}

}  // namespace

Bigint dgs_bound(int t, int d) {
    if (t < 0 || d < 1) throw std::invalid_argument("dgs_bound needs t >= 0, d >= 1");
    const int k1 = t / 2;
    const int k2 = (t - 1) / 2;  // t = 0 handled below
    Bigint out = binomial(d + k1, k1);
    if (t >= 1) out += binomial(d + k2, k2);
    return out;
}

PointSet regular_polygon(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("polygon needs n >= 1");
    PointSet out;
    out.ambient = 2;
    out.points.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        out.points.push_back({std::cos(theta), std::sin(theta)});
    }
    return out;
}

bool power_sums_vanish(std::int64_t n, int t, double tol) {
    if (n < 1 || t < 0) throw std::invalid_argument("power_sums_vanish needs n >= 1, t >= 0");
    for (int k = 1; k <= t; ++k) {
        double re = 0.0, im = 0.0;
        for (std::int64_t j = 1; j <= n; ++j) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(j) * k / static_cast<double>(n);
            re += std::cos(theta);
            im += std::sin(theta);
        }
        if (std::hypot(re, im) > tol) return false;
    }
    return true;
}

PointSet lift_to_sphere(const std::vector<std::int64_t>& freqs, std::int64_t n) {
    if (freqs.empty()) throw std::invalid_argument("lift needs at least one frequency");
    if (n < 1) throw std::invalid_argument("lift needs n >= 1");
    const std::size_t m = freqs.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    PointSet out;
    out.ambient = static_cast<int>(2 * m);
    out.points.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j) {
        std::vector<double> row;
        row.reserve(2 * m);
        for (const std::int64_t a : freqs) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) *
                                 static_cast<double>(a) / static_cast<double>(n);
            row.push_back(scale * std::cos(theta));
            row.push_back(scale * std::sin(theta));
        }
        out.points.push_back(std::move(row));
    }
    return out;
}

Rational sphere_monomial_moment(const std::vector<int>& alpha) {
    if (alpha.empty()) throw std::invalid_argument("moment needs a nonempty multi-index");
    const int dims = static_cast<int>(alpha.size());
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("exponents must be >= 0");
        if (a % 2 != 0) return Rational(0);
        total += a;
    }
    const int k = total / 2;
    Bigint num = 1;
    for (int a : alpha) num *= double_factorial(a - 1);
    Bigint den = 1;
    for (int j = 1; j <= k; ++j) den *= dims + 2 * j - 2;
    return Rational(num, den);
}

bool DesignReport::pass_at(int k) const {
    for (const auto& dv : degrees) {
        if (dv.degree <= k && !dv.pass) return false;
    }
    return true;
}

DesignReport verify_design(const PointSet& points, int t, double tol) {
    if (points.points.empty()) throw std::invalid_argument("empty point set");
    if (t < 0) throw std::invalid_argument("degree must be >= 0");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const int dims = points.ambient;
    for (const auto& row : points.points) {
        if (static_cast<int>(row.size()) != dims) {
            throw std::invalid_argument("inconsistent point dimensions");
        }
        double sq = 0.0;
        for (double x : row) sq += x * x;
        if (std::abs(std::sqrt(sq) - 1.0) > kNormTolerance) {
            throw std::invalid_argument("point off the unit sphere");
        }
    }

    DesignReport rep;
    rep.t_checked = t;
    rep.tolerance = tol;

    const double inv_count = 1.0 / static_cast<double>(points.size());
    bool pass_so_far = true;
    for (int degree = 1; degree <= t; ++degree) {
        DegreeVerdict verdict;
        verdict.degree = degree;
        for_each_monomial(dims, degree, [&](const std::vector<int>& alpha) {
            ++rep.monomials_checked;
            double sum = 0.0;
            for (const auto& row : points.points) {
                double term = 1.0;
                for (int i = 0; i < dims; ++i) {
                    for (int e = 0; e < alpha[i]; ++e) term *= row[i];
                }
                sum += term;
            }
            const double mean = sum * inv_count;
            const double exact = static_cast<double>(sphere_monomial_moment(alpha));
            const double err = std::abs(mean - exact);
            verdict.max_error = std::max(verdict.max_error, err);
            if (err > rep.max_moment_error) {
                rep.max_moment_error = err;
                rep.worst_monomial = alpha;
            }
        });
        pass_so_far = pass_so_far && verdict.max_error <= tol;
        verdict.pass = pass_so_far;
        rep.degrees.push_back(verdict);
    }
    return rep;
}

namespace {

struct RationalComplex {
    Rational re, im;
};

}  // namespace

bool verify_lifted_design_exact(const std::vector<std::int64_t>& freqs, std::int64_t n, int t) {
    if (freqs.empty() || n < 1 || t < 0) throw std::invalid_argument("bad exact-verify input");
    const int m = static_cast<int>(freqs.size());
    const int dims = 2 * m;

    bool ok = true;
    for (int degree = 1; degree <= t && ok; ++degree) {
        for_each_monomial(dims, degree, [&](const std::vector<int>& alpha) {
            if (!ok) return;
            // Expand prod cos^p sin^q into exponential terms (freq, coeff).
            std::vector<std::pair<std::int64_t, RationalComplex>> terms;
            terms.push_back({0, {Rational(1), Rational(0)}});
            for (int i = 0; i < dims; ++i) {
                const std::int64_t a = freqs[i / 2];
                const bool is_sin = (i % 2 == 1);
                for (int e = 0; e < alpha[i]; ++e) {
                    std::vector<std::pair<std::int64_t, RationalComplex>> next;
                    next.reserve(terms.size() * 2);
                    for (const auto& [f, c] : terms) {
                        if (!is_sin) {
                            // cos x = (e^{ix} + e^{-ix}) / 2
                            next.push_back({f + a, {c.re / 2, c.im / 2}});
                            next.push_back({f - a, {c.re / 2, c.im / 2}});
                        } else {
                            // sin x = -i/2 e^{ix} + i/2 e^{-ix}
                            next.push_back({f + a, {c.im / 2, -c.re / 2}});
                            next.push_back({f - a, {-c.im / 2, c.re / 2}});
                        }
                    }
                    terms = std::move(next);
                }
            }
            RationalComplex mean{Rational(0), Rational(0)};
            for (const auto& [f, c] : terms) {
                if (((f % n) + n) % n == 0) {
                    mean.re += c.re;
                    mean.im += c.im;
                }
            }
            if (mean.im != 0) throw std::logic_error("trigonometric mean not real");
            // Scale (1/sqrt m)^degree: for odd degree the exact moment is
            // zero and scaling does not matter; for even degree divide by
            // m^(degree/2).
            const Rational moment = sphere_monomial_moment(alpha);
            if (degree % 2 == 1) {
                if (mean.re != 0) ok = false;
            } else {
                Bigint scale = 1;
                for (int e = 0; e < degree / 2; ++e) scale *= m;
                if (mean.re != moment * scale) ok = false;
            }
        });
    }
    return ok;
}

ConstructionOutcome construct_design(int t, int d, std::int64_t n) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("construction needs odd d >= 1");
    if (t < 1 || t > 3) throw std::invalid_argument("construction covers t in {1,2,3}");
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const std::int64_t m = (d + 1) / 2;

    ConstructionOutcome out;
    auto finish = [&](std::vector<std::int64_t> freqs) {
        out.freqs = std::move(freqs);
        out.points = lift_to_sphere(out.freqs, n);
        if (!verify_lifted_design_exact(out.freqs, n, t)) {
            throw std::logic_error("constructed configuration fails the design property");
        }
        return out;
    };

    if (t == 1) {
        if (n == 1) {
            out.infeasible_reason = "no 1-design on a single point";
            return out;
        }
        return finish(std::vector<std::int64_t>(m, 1));
    }

    if (t == 2) {
        if (n <= d + 1) {
            out.infeasible_reason = "no 2-design with n <= d+1 points";
            return out;
        }
        std::vector<std::int64_t> freqs(m);
        for (std::int64_t i = 0; i < m; ++i) freqs[i] = i + 1;
        return finish(freqs);
    }

    // t == 3
    if (n <= 2 * d + 1) {
        out.infeasible_reason = "no 3-design with n <= 2d+1 points";
        return out;
    }
    const AbelianGroup zn({n});
    auto odd_freqs = [&](std::int64_t first) {
        std::vector<std::int64_t> freqs(m);
        for (std::int64_t i = 0; i < m; ++i) freqs[i] = first + 2 * i;
        return freqs;
    };
    auto residues_of = [&](const std::vector<std::int64_t>& freqs) {
        std::vector<GroupElement> set;
        for (auto f : freqs) set.push_back(zn.make_element({f}));
        return set;
    };
    if (n % 2 == 0 || n >= 3 * d + 3) {
        // Odd frequencies starting at 3; at boundary orders that exact
        // list can hit n/2 or n/3 and pick up a short relation, in which
        // case the first m odd numbers work instead.
        auto freqs = odd_freqs(3);
        if (is_independent(zn, residues_of(freqs), 3).independent) return finish(freqs);
        return finish(odd_freqs(1));
    }
    const auto p = smallest_5mod6_prime_divisor(n);
    if (p) {
        const auto residues = five_mod6_residues(n, *p);
        if (static_cast<std::int64_t>(residues.size()) >= m) {
            return finish(std::vector<std::int64_t>(residues.begin(), residues.begin() + m));
        }
        out.infeasible_reason = "odd n below the 5-mod-6 threshold p(3d+3)/(p+1)";
        return out;
    }
    out.infeasible_reason = "odd n below 3d+3 with no prime divisor = 5 (mod 6)";
    return out;
}

LiftReport independence_design_report(const std::vector<std::int64_t>& freqs, std::int64_t n,
                                      int t, double tol) {
    if (freqs.empty() || n < 1 || t < 0) throw std::invalid_argument("bad lift-report input");
    LiftReport rep;

    const AbelianGroup zn({n});
    std::vector<GroupElement> set;
    bool duplicates = false;
    {
        std::vector<std::int64_t> residues;
        for (auto f : freqs) residues.push_back(zn.make_element({f})[0]);
        std::sort(residues.begin(), residues.end());
        duplicates = std::adjacent_find(residues.begin(), residues.end()) != residues.end();
        if (!duplicates) {
            for (auto r : residues) set.push_back(GroupElement{r});
        }
    }
    if (duplicates) {
        // A repeated frequency is a weight-2 relation; only t <= 1 survives.
        if (t >= 2) {
            rep.independent = false;
        } else if (t == 1) {
            rep.independent = true;
            for (auto f : freqs) {
                if (zn.make_element({f})[0] == 0) rep.independent = false;
            }
        } else {
            rep.independent = true;
        }
    } else {
        rep.independent = is_independent(zn, set, t).independent;
    }

    rep.design = verify_design(lift_to_sphere(freqs, n), t, tol);
    rep.implication_guaranteed = t <= 3;
    if (rep.implication_guaranteed && rep.independent && !rep.design.pass()) {
        throw std::logic_error("independent set failed to lift to a design");
    }
    return rep;
}

}  // namespace spanind
