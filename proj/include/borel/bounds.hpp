#ifndef BOREL_BOUNDS_HPP
#define BOREL_BOUNDS_HPP

// The logarithmic-derivative error term log+( T(R)/(R-r) * R/r ) and the
// per-variant upper bounds it stays under outside the exceptional set,
// plus the crossover threshold at which the sharpened two-log bound beats
// the classical one, and the asymptotic ordering report.
//
// All logarithms are natural; log+ x = max(ln x, 0).

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "borel/lemma.hpp"

namespace borel {

inline double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

// Direct evaluation from the growth function. Overflows if T(R) does; the
// dominance reports below use the log-space form instead.
inline double eq4_term(const GrowthFn& T, double r, double R) {
    if (!(0.0 < r && r < R)) throw std::invalid_argument("eq4_term: requires 0 < r < R");
    const double tR = T(R);
    if (!std::isfinite(tR)) throw EvalError("T not finite", R);
    return log_plus(tR * R / ((R - r) * r));
}

inline double eq4_term(const GrowthExpr& T, double r, double R) {
    return eq4_term(growth_fn(T), r, R);
}

inline double bound_borel(double t, double r, double s) {
    if (!(t >= 2.718281828459045 - 1e-9)) throw std::domain_error("bound_borel: requires t >= e");
    if (!(r > 0.0)) throw std::domain_error("bound_borel: requires r > 0");
    if (!(s > 1.0)) throw std::domain_error("bound_borel: requires s > 1");
    const double lt = log_plus(t);
    return s * lt + log_plus(lt) + std::log1p(1.0 / (r * lt));
}

inline double bound_nevanlinna(double t, double r, double s) {
    if (!(t >= 1.0 - 1e-12)) throw std::domain_error("bound_nevanlinna: requires t >= 1");
    if (!(r > 0.0)) throw std::domain_error("bound_nevanlinna: requires r > 0");
    if (!(s > 1.0)) throw std::domain_error("bound_nevanlinna: requires s > 1");
    return (s + 1.0) * log_plus(t) + std::log1p(1.0 / t) + std::log1p(1.0 / (r * std::pow(t, s)));
}

inline double bound_hayman(double t, double r, double s) {
    if (!(t >= 1.0 - 1e-12)) throw std::domain_error("bound_hayman: requires t >= 1");
    if (!(r > 0.0)) throw std::domain_error("bound_hayman: requires r > 0");
    if (!(s > 1.0)) throw std::domain_error("bound_hayman: requires s > 1");
    return 2.0 * log_plus(t) + std::log(s) + std::log1p(1.0 / (r * t));
}

inline double bound_hanliu(double t, double r, double s) {
    if (!(t >= 1.0 - 1e-12)) throw std::domain_error("bound_hanliu: requires t >= 1");
    if (!(r > 0.0)) throw std::domain_error("bound_hanliu: requires r > 0");
    if (!(s > 1.0)) throw std::domain_error("bound_hanliu: requires s > 1");
    return 2.0 * log_plus(t) + s * std::log1p(std::pow(t, -1.0 / s)) +
           std::log1p(1.0 / (r * t));
}

// Bound for the exp-step variant applied to T^sigma, 0 < sigma < 1.
inline double bound_fa(double t_char, double r, double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw std::domain_error("bound_fa: requires 0 < sigma < 1");
    if (!(t_char >= 1.0 - 1e-12)) throw std::domain_error("bound_fa: requires T >= 1");
    if (!(r > 0.0)) throw std::domain_error("bound_fa: requires r > 0");
    const double u = std::pow(t_char, sigma);
    return ((sigma + 1.0) / sigma) * u + std::log1p(std::exp(-u) / r);
}

// T value above which (1 + T^(-1/s))^s <= s, i.e. the sharpened two-log
// bound becomes at least as good as the classical one.
inline double crossover_threshold(double s) {
    if (!(s > 1.0)) throw std::domain_error("crossover_threshold: requires s > 1");
    return std::pow(1.0 / (std::pow(s, 1.0 / s) - 1.0), s);
}

// One dominance sample: the error term at R = r + step against the
// variant's bound, both at machine precision. The error term is assembled
// in log space so tiny steps cannot underflow the quotient.
struct BoundReport {
    VariantKind variant = VariantKind::Hayman;
    double r = 0.0;
    double T_at_r = 0.0;
    double R = 0.0;
    double lhs_eq4 = 0.0;
    double bound_value = 0.0;
    bool dominated = false;
};

namespace bounds_detail {

inline double log_step(const VariantSpec& v, double t) {
    switch (v.kind) {
        case VariantKind::Borel: return -std::log(std::log(t));
        case VariantKind::Nevanlinna: return -v.s * std::log(t);
        case VariantKind::Hayman:
        case VariantKind::HanLiu: return -std::log(t);
        case VariantKind::FernandezArias: return -t;
    }
    throw std::logic_error("unreachable variant kind");
}

}  // namespace bounds_detail

inline BoundReport dominance_report(const GrowthFn& T, const VariantSpec& v, double r) {
    if (v.kind == VariantKind::FernandezArias) {
        throw std::invalid_argument("dominance_report: use dominance_report_fa for the exp-step variant");
    }
    if (!(r > 0.0)) throw std::invalid_argument("dominance_report: requires r > 0");
    BoundReport rep;
    rep.variant = v.kind;
    rep.r = r;
    rep.T_at_r = T(r);
    const double step = step_size(v, rep.T_at_r);
    rep.R = r + step;
    const double tR = T(rep.R);
    if (!std::isfinite(tR)) throw EvalError("T not finite", rep.R);
    rep.lhs_eq4 = std::max(
        0.0, std::log(tR) + std::log(rep.R) - bounds_detail::log_step(v, rep.T_at_r) - std::log(r));
    switch (v.kind) {
        case VariantKind::Borel: rep.bound_value = bound_borel(rep.T_at_r, r, v.s); break;
        case VariantKind::Nevanlinna: rep.bound_value = bound_nevanlinna(rep.T_at_r, r, v.s); break;
        case VariantKind::Hayman: rep.bound_value = bound_hayman(rep.T_at_r, r, v.s); break;
        case VariantKind::HanLiu: rep.bound_value = bound_hanliu(rep.T_at_r, r, v.s); break;
        default: break;
    }
    rep.dominated = rep.lhs_eq4 <= rep.bound_value + 1e-9;
    return rep;
}

// Exp-step dominance: the step is taken from U = T^sigma, the bound from T.
inline BoundReport dominance_report_fa(const GrowthFn& T, double sigma, double r) {
    if (!(sigma > 0.0 && sigma < 1.0)) {
        throw std::domain_error("dominance_report_fa: requires 0 < sigma < 1");
    }
    if (!(r > 0.0)) throw std::invalid_argument("dominance_report_fa: requires r > 0");
    BoundReport rep;
    rep.variant = VariantKind::FernandezArias;
    rep.r = r;
    rep.T_at_r = T(r);
    const double u = std::pow(rep.T_at_r, sigma);
    rep.R = r + std::exp(-u);
    const double tR = T(rep.R);
    if (!std::isfinite(tR)) throw EvalError("T not finite", rep.R);
    rep.lhs_eq4 = std::max(0.0, std::log(tR) + std::log(rep.R) + u - std::log(r));
    rep.bound_value = bound_fa(rep.T_at_r, r, sigma);
    rep.dominated = rep.lhs_eq4 <= rep.bound_value + 1e-9;
    return rep;
}

struct OrderingEntry {
    VariantKind variant = VariantKind::Hayman;
    double value = 0.0;
    bool applicable = true;  // the log-step bound needs t >= e
};

struct OrderingReport {
    double s = 0.0, t = 0.0, r = 0.0;
    std::vector<OrderingEntry> ascending;  // applicable entries, sorted by value
    bool has_ties = false;
    bool asymptotic_regime = false;  // t >= 1e4, where the paper's orderings apply
};

// Evaluates the four bounds at (s, t, r) and sorts them.
inline OrderingReport ordering_report(double s, double t, double r) {
    if (!(s > 1.0) || !(t >= 1.0 - 1e-12) || !(r > 0.0)) {
        throw std::invalid_argument("ordering_report: requires s > 1, t >= 1, r > 0");
    }
    OrderingReport rep;
    rep.s = s;
    rep.t = t;
    rep.r = r;
    rep.asymptotic_regime = t >= 1e4;

    if (t >= 2.718281828459045 - 1e-9) {
        rep.ascending.push_back({VariantKind::Borel, bound_borel(t, r, s), true});
    }
    rep.ascending.push_back({VariantKind::Nevanlinna, bound_nevanlinna(t, r, s), true});
    rep.ascending.push_back({VariantKind::Hayman, bound_hayman(t, r, s), true});
    rep.ascending.push_back({VariantKind::HanLiu, bound_hanliu(t, r, s), true});

    std::sort(rep.ascending.begin(), rep.ascending.end(),
              [](const OrderingEntry& a, const OrderingEntry& b) { return a.value < b.value; });
    for (size_t i = 0; i + 1 < rep.ascending.size(); ++i) {
        const double a = rep.ascending[i].value, b = rep.ascending[i + 1].value;
        if (std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)})) {
            rep.has_ties = true;
        }
    }
    return rep;
}

}  // namespace borel

#endif  // BOREL_BOUNDS_HPP
