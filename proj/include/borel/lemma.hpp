#ifndef BOREL_LEMMA_HPP
#define BOREL_LEMMA_HPP

// The lemma engine. For a growth function T and a lemma variant it locates
// the set of radii where the variant inequality
//     T(r + step(T(r))) < threshold(T(r))
// is reversed, rebuilds the proofs' inductive interval cover, and produces
// the certified series bound the measured set must stay under.
//
// Scanning runs at machine precision (the certification lives in the cover
// chain and the series bounds, not in the scan), with boundaries refined by
// bisection to an absolute tolerance on r.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "borel/expr.hpp"
#include "borel/interval.hpp"
#include "borel/interval_set.hpp"
#include "borel/tower.hpp"
#include "borel/zeta.hpp"

namespace borel {

enum class VariantKind { Borel, Nevanlinna, Hayman, HanLiu, FernandezArias };

inline const char* variant_name(VariantKind k) {
    switch (k) {
        case VariantKind::Borel: return "borel";
        case VariantKind::Nevanlinna: return "nevanlinna";
        case VariantKind::Hayman: return "hayman";
        case VariantKind::HanLiu: return "hanliu";
        case VariantKind::FernandezArias: return "fernandez-arias";
    }
    return "?";
}

inline std::optional<VariantKind> variant_from_name(std::string_view name) {
    if (name == "borel") return VariantKind::Borel;
    if (name == "nevanlinna") return VariantKind::Nevanlinna;
    if (name == "hayman") return VariantKind::Hayman;
    if (name == "hanliu" || name == "han-liu") return VariantKind::HanLiu;
    if (name == "fernandez-arias" || name == "fa") return VariantKind::FernandezArias;
    return std::nullopt;
}

struct VariantSpec {
    VariantKind kind = VariantKind::Hayman;
    double s = 2.0;  // unused for FernandezArias

    static VariantSpec make(VariantKind kind, double s = 2.0) {
        if (kind != VariantKind::FernandezArias && !(s > 1.0)) {
            throw std::invalid_argument(std::string("variant ") + variant_name(kind) +
                                        ": requires s > 1");
        }
        VariantSpec v;
        v.kind = kind;
        v.s = s;
        return v;
    }
    static VariantSpec borel(double s) { return make(VariantKind::Borel, s); }
    static VariantSpec nevanlinna(double s) { return make(VariantKind::Nevanlinna, s); }
    static VariantSpec hayman(double s) { return make(VariantKind::Hayman, s); }
    static VariantSpec hanliu(double s) { return make(VariantKind::HanLiu, s); }
    static VariantSpec fernandez_arias() { return make(VariantKind::FernandezArias, 2.0); }

    // Minimum admissible T value under the variant's hypothesis.
    double floor_value() const {
        switch (kind) {
            case VariantKind::Borel: return 2.718281828459045235360287471352662498;
            case VariantKind::FernandezArias: return 0.0;
            default: return 1.0;
        }
    }
    const char* name() const { return variant_name(kind); }
};

namespace lemma_detail {
inline constexpr double floor_slack = 1e-9;

inline void check_floor(const VariantSpec& v, double t) {
    if (!(t >= v.floor_value() - floor_slack)) {
        throw std::domain_error(std::string("variant ") + v.name() + ": T = " +
                                std::to_string(t) + " is below the admissible floor " +
                                std::to_string(v.floor_value()));
    }
}
}  // namespace lemma_detail

// Radius increment chosen by the variant: always in (0, 1] once T is at the
// floor, and nonincreasing in T.
inline double step_size(const VariantSpec& v, double t) {
    lemma_detail::check_floor(v, t);
    switch (v.kind) {
        case VariantKind::Borel: return 1.0 / std::log(std::max(t, v.floor_value()));
        case VariantKind::Nevanlinna: return std::pow(t, -v.s);
        case VariantKind::Hayman:
        case VariantKind::HanLiu: return 1.0 / t;
        case VariantKind::FernandezArias: return std::exp(-t);
    }
    throw std::logic_error("unreachable variant kind");
}

// Growth threshold the variant inequality compares T(r + step) against.
inline double rhs_threshold(const VariantSpec& v, double t) {
    lemma_detail::check_floor(v, t);
    switch (v.kind) {
        case VariantKind::Borel: return std::pow(t, v.s);
        case VariantKind::Nevanlinna: return t + 1.0;
        case VariantKind::Hayman: return v.s * t;
        case VariantKind::HanLiu: return std::pow(std::pow(t, 1.0 / v.s) + 1.0, v.s);
        case VariantKind::FernandezArias: return std::exp(t);
    }
    throw std::logic_error("unreachable variant kind");
}

using GrowthFn = std::function<double(double)>;

inline GrowthFn growth_fn(const GrowthExpr& expr) {
    return [expr](double r) { return expr(r); };
}

// True iff the variant inequality is reversed at r (boundary equality
// counts: the exceptional sets are closed).
inline bool violation_indicator(const GrowthFn& T, const VariantSpec& v, double r) {
    const double t = T(r);
    if (!std::isfinite(t)) throw EvalError("T not finite", r);
    lemma_detail::check_floor(v, t);
    const double lhs = T(r + step_size(v, t));
    return lhs >= rhs_threshold(v, t);
}

inline bool violation_indicator(const GrowthExpr& T, const VariantSpec& v, double r) {
    return violation_indicator(growth_fn(T), v, r);
}

struct ScanResult {
    IntervalSet violations;
    std::vector<std::string> warnings;
    long grid = 0;
    double grid_step = 0.0;
    double tol = 0.0;
};

namespace lemma_detail {

// Leftmost indicator transition inside (a, b], given ind(a) = false,
// ind(b) = true. Returns a point certified on the true side, within tol.
inline double refine_rise(const GrowthFn& T, const VariantSpec& v, double a, double b,
                          double tol) {
    for (int i = 0; i < 200 && b - a > tol; ++i) {
        const double m = a + (b - a) / 2.0;
        if (violation_indicator(T, v, m)) {
            b = m;
        } else {
            a = m;
        }
    }
    return b;
}

// Rightmost true point in [a, b), given ind(a) = true, ind(b) = false.
inline double refine_fall(const GrowthFn& T, const VariantSpec& v, double a, double b,
                          double tol) {
    for (int i = 0; i < 200 && b - a > tol; ++i) {
        const double m = a + (b - a) / 2.0;
        if (violation_indicator(T, v, m)) {
            a = m;
        } else {
            b = m;
        }
    }
    return a;
}

inline void check_scan_preconditions(const GrowthFn& T, const VariantSpec& v, double r0,
                                     double r_max, long grid, double tol) {
    if (!(r0 < r_max)) throw std::invalid_argument("scan: requires r0 < r_max");
    if (grid < 100) throw std::invalid_argument("scan: requires grid >= 100");
    if (!(tol > 0.0)) throw std::invalid_argument("scan: requires tol > 0");
    const double t0 = T(r0);
    if (!std::isfinite(t0)) throw EvalError("T not finite", r0);
    check_floor(v, t0);
    const double horizon = r_max + step_size(v, t0);
    const double th = T(horizon);
    if (!std::isfinite(th)) {
        throw EvalError("T overflows the scan horizon; reduce r_max", horizon);
    }
    if (th < t0) {
        throw std::domain_error("scan: T decreases over the scan range; run validate_monotone");
    }
    // The indicator compares T(r + step); once the step falls below the
    // radius resolution of a double, r + step collapses to a neighbouring
    // representable and the comparison turns into quantization noise.
    const double scale = std::max({1.0, std::fabs(r0), std::fabs(r_max)});
    const double t_end = T(r_max);
    if (std::isfinite(t_end) &&
        step_size(v, t_end) < 64.0 * std::numeric_limits<double>::epsilon() * scale) {
        throw EvalError(
            "variant step underflows the double resolution of r near the horizon; reduce r_max",
            r_max);
    }
}

}  // namespace lemma_detail

// Largest horizon in (r0, r_max] whose variant step stays resolvable in
// double precision; the scan preconditions reject anything beyond it.
inline double resolvable_horizon(const GrowthFn& T, const VariantSpec& v, double r0,
                                 double r_max) {
    const auto resolvable = [&](double r) {
        const double t = T(r);
        if (!std::isfinite(t)) return false;
        const double scale = std::max({1.0, std::fabs(r0), std::fabs(r)});
        return step_size(v, t) >= 1e-12 * scale;  // comfortably above the engine guard
    };
    if (resolvable(r_max)) return r_max;
    double lo = r0, hi = r_max;
    for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
        const double m = lo + (hi - lo) / 2.0;
        (resolvable(m) ? lo : hi) = m;
    }
    return lo;
}

// Grid scan for the closed set where the variant inequality is reversed.
// Sign-change brackets are refined to width <= tol; violations narrower
// than one grid cell may be reported as degenerate intervals or missed
// (flagged on the warning channel).
inline ScanResult scan_violations(const GrowthFn& T, const VariantSpec& v, double r0,
                                  double r_max, long grid = 10000, double tol = 1e-12) {
    lemma_detail::check_scan_preconditions(T, v, r0, r_max, grid, tol);

    ScanResult out;
    out.grid = grid;
    out.tol = tol;
    const double h = (r_max - r0) / static_cast<double>(grid - 1);
    out.grid_step = h;

    std::vector<char> flag(static_cast<size_t>(grid));
    for (long i = 0; i < grid; ++i) {
        const double x = r0 + static_cast<double>(i) * h;
        flag[static_cast<size_t>(i)] = violation_indicator(T, v, x) ? 1 : 0;
    }

    std::vector<ClosedInterval> found;
    long i = 0;
    while (i < grid) {
        if (!flag[static_cast<size_t>(i)]) {
            ++i;
            continue;
        }
        long j = i;
        while (j + 1 < grid && flag[static_cast<size_t>(j + 1)]) ++j;

        const double gi = r0 + static_cast<double>(i) * h;
        const double gj = r0 + static_cast<double>(j) * h;
        const double left =
            (i == 0) ? r0 : lemma_detail::refine_rise(T, v, gi - h, gi, tol);
        const double right =
            (j == grid - 1) ? r_max : lemma_detail::refine_fall(T, v, gj, gj + h, tol);
        found.push_back({left, std::max(left, right)});
        if (i == j) {
            out.warnings.push_back("isolated violation near r = " + std::to_string(gi) +
                                   "; the grid may be too coarse to resolve its width");
        }
        i = j + 1;
    }
    out.violations = IntervalSet::from_intervals(std::move(found));
    return out;
}

inline ScanResult scan_violations(const GrowthExpr& T, const VariantSpec& v, double r0,
                                  double r_max, long grid = 10000, double tol = 1e-12) {
    return scan_violations(growth_fn(T), v, r0, r_max, grid, tol);
}

struct CoverStep {
    double r = 0.0;                       // leftmost violation of this round
    double r_prime = 0.0;                 // least radius with T(r') = threshold
    double certified_length_bound = 0.0;  // the proof's chain value for this step
    double threshold_value = 0.0;         // rhs_threshold(T(r))
};

struct CoverSequence {
    std::vector<CoverStep> steps;
    // True when the construction stopped because no violation remains below
    // the horizon; false when it ran out of steps or the threshold exceeded
    // T at the search horizon (the final step is then truncated there).
    bool exhausted = false;

    double total_length() const {
        double sum = 0.0;
        for (const auto& st : steps) sum += st.r_prime - st.r;
        return sum;
    }
    IntervalSet as_interval_set() const {
        std::vector<ClosedInterval> ivs;
        ivs.reserve(steps.size());
        for (const auto& st : steps) ivs.push_back({st.r, st.r_prime});
        return IntervalSet::from_intervals(std::move(ivs));
    }
};

// The proof's per-step certified length: 1/s^(j-1) for the log-step and
// 1/T-step geometric chains, 1/j^s for the additive chains (shifted to
// 1/(start_T^(1/s)+j-1)^s when the scan starts above the floor), and the
// reciprocal exponential tower for the exp-step variant.
inline double chain_length_bound(const VariantSpec& v, long j,
                                 std::optional<double> start_T = std::nullopt) {
    if (j < 1) throw std::invalid_argument("chain_length_bound: j >= 1");
    switch (v.kind) {
        case VariantKind::Borel:
        case VariantKind::Hayman:
            return std::pow(v.s, 1.0 - static_cast<double>(j));
        case VariantKind::Nevanlinna:
            return std::pow(static_cast<double>(j), -v.s);
        case VariantKind::HanLiu: {
            if (start_T && *start_T > 1.0) {
                const double base = std::pow(*start_T, 1.0 / v.s) + static_cast<double>(j - 1);
                return std::pow(base, -v.s);
            }
            return std::pow(static_cast<double>(j), -v.s);
        }
        case VariantKind::FernandezArias: {
            // 1/a_{j-1}; underflows to zero past j = 4, where the engine stops.
            double ln_a = 0.0;
            for (long k = 1; k < j; ++k) {
                ln_a = std::exp(ln_a);
                if (!std::isfinite(ln_a)) return 0.0;
            }
            return std::exp(-ln_a);
        }
    }
    throw std::logic_error("unreachable variant kind");
}

// Rebuilds the proofs' inductive construction: r_j is the leftmost violation
// at or after r'_{j-1}, and r'_j is the least radius where T reaches the
// threshold computed at r_j, found by monotone bisection (leftmost root at
// plateaus).
inline CoverSequence build_cover(const GrowthFn& T, const VariantSpec& v, double r0,
                                 double r_max, long max_steps = 64, long grid = 10000,
                                 double tol = 1e-12,
                                 std::optional<double> start_T = std::nullopt) {
    lemma_detail::check_scan_preconditions(T, v, r0, r_max, grid, tol);

    CoverSequence cover;
    const double horizon = r_max + step_size(v, T(r0));

    double pos = r0;
    for (long count = 0; count < max_steps; ++count) {
        if (pos > r_max) {
            cover.exhausted = true;
            return cover;
        }
        // Leftmost violation in [pos, r_max].
        std::optional<double> rj;
        if (violation_indicator(T, v, pos)) {
            rj = pos;
        } else {
            const double h = (r_max - pos) / static_cast<double>(grid - 1);
            if (h <= 0.0) {
                cover.exhausted = true;
                return cover;
            }
            for (long i = 1; i < grid; ++i) {
                const double x = pos + static_cast<double>(i) * h;
                if (violation_indicator(T, v, x)) {
                    rj = lemma_detail::refine_rise(T, v, x - h, x, tol);
                    break;
                }
            }
        }
        if (!rj) {
            cover.exhausted = true;
            return cover;
        }

        const double t_j = T(*rj);
        const double threshold = rhs_threshold(v, t_j);
        const double bound = chain_length_bound(v, count + 1, start_T);
        if (bound <= 0.0) {
            return cover;  // chain value underflowed; cannot certify further steps
        }

        if (!(threshold <= T(horizon))) {
            // Threshold unreachable below the horizon: the true r' lies
            // beyond it. Record the truncated step (still within the chain
            // bound) and stop without claiming exhaustion.
            cover.steps.push_back({*rj, horizon, bound, threshold});
            return cover;
        }
        double lo = *rj, hi = horizon;
        for (int it = 0; it < 200 && hi - lo > tol; ++it) {
            const double m = lo + (hi - lo) / 2.0;
            if (T(m) >= threshold) {
                hi = m;
            } else {
                lo = m;
            }
        }
        const double r_prime = hi;
        cover.steps.push_back({*rj, r_prime, bound, threshold});
        pos = r_prime;
    }
    return cover;  // max_steps hit, exhausted stays false
}

inline CoverSequence build_cover(const GrowthExpr& T, const VariantSpec& v, double r0,
                                 double r_max, long max_steps = 64, long grid = 10000,
                                 double tol = 1e-12,
                                 std::optional<double> start_T = std::nullopt) {
    return build_cover(growth_fn(T), v, r0, r_max, max_steps, grid, tol, start_T);
}

// The series constant bounding the exceptional set's linear measure:
// s/(s-1) for the geometric chains, zeta(s) for the additive chains,
// zeta(s, start_T^(1/s)) for the shifted chain, and S_e for the
// exponential tower.
inline Enclosure measure_bound(const VariantSpec& v, std::optional<Interval> start_T,
                               int digits) {
    switch (v.kind) {
        case VariantKind::Borel:
        case VariantKind::Hayman:
            return gamma_series_enclosure(v.s, digits);
        case VariantKind::Nevanlinna:
            return riemann_zeta(v.s, digits);
        case VariantKind::HanLiu: {
            if (start_T) {
                if (!start_T->certainly_ge(1.0)) {
                    throw std::domain_error("measure_bound: start_T must be >= 1");
                }
                const mpfr_prec_t p = prec_for_digits(digits + 8);
                const Interval s_iv = Interval::exact(v.s, p);
                const Interval a = pow(to_prec(*start_T, p),
                                       div(Interval::exact(1L, p), s_iv));
                return hurwitz_zeta(s_iv, a, digits);
            }
            return riemann_zeta(v.s, digits);
        }
        case VariantKind::FernandezArias:
            return tower_constant_Se(digits);
    }
    throw std::logic_error("unreachable variant kind");
}

inline Enclosure measure_bound(const VariantSpec& v, std::optional<double> start_T,
                               int digits) {
    std::optional<Interval> iv;
    if (start_T) {
        iv = Interval::exact(*start_T, prec_for_digits(digits + 8));
    }
    return measure_bound(v, iv, digits);
}

inline Enclosure measure_bound(const VariantSpec& v, int digits) {
    return measure_bound(v, std::optional<Interval>{}, digits);
}

}  // namespace borel

#endif  // BOREL_LEMMA_HPP
