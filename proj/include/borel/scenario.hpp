#ifndef BOREL_SCENARIO_HPP
#define BOREL_SCENARIO_HPP

// The worked fast-growth scenario and the one-command reproduction of
// every numeric claim the library is built around.
//
// The scenario: given r0 and a gap g <= zeta(2) - zeta(2, sqrt(2)+1), set
// d = 2 ln(sqrt(2)+1)/g and T(r) = e^(d (r - r0)). Then T(r0) = 1 and
// T(r0 + g) = (sqrt(2)+1)^2, the stretch where 1 <= T < (sqrt(2)+1)^2 has
// measure exactly g, the violation set beyond it is covered with total
// bound zeta(2, sqrt(2)+1), and the combined exceptional measure stays
// under zeta(2) = pi^2/6 < 2.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "borel/bounds.hpp"
#include "borel/expr.hpp"
#include "borel/format.hpp"
#include "borel/interval.hpp"
#include "borel/lemma.hpp"
#include "borel/tower.hpp"
#include "borel/zeta.hpp"

namespace borel {

struct CheckEntry {
    std::string id;
    std::string claim;
    std::string computed_lo;
    std::string computed_hi;
    bool pass = false;
};

struct ScenarioReport {
    double r0 = 0.0;
    double r0_prime = 0.0;
    double gap = 0.0;
    double d = 0.0;
    double e_doubleprime_measure = 0.0;  // measure of {r : 1 <= T(r) < (sqrt2+1)^2}
    Enclosure e_prime_bound;             // zeta(2, sqrt(2)+1)
    Enclosure total_bound;               // zeta(2)
    std::string growth_text;
    ScanResult scan;
    CoverSequence cover;
    std::vector<CheckEntry> checks;
    bool all_pass = false;
};

namespace scenario_detail {

// True when v lies strictly inside the open interval given by two decimal
// literals, certified through their outward-rounded brackets.
inline bool inside_open_decimal(const Interval& v, const char* lo_dec, const char* hi_dec) {
    const mpfr_prec_t p = v.prec();
    const Interval lo = Interval::from_decimal(lo_dec, p);
    const Interval hi = Interval::from_decimal(hi_dec, p);
    return mpfr_cmp(v.lo(), lo.hi()) > 0 && mpfr_cmp(v.hi(), hi.lo()) < 0;
}

inline Interval sqrt2_plus_1(mpfr_prec_t p) {
    return add(sqrt(Interval::exact(2L, p)), Interval::exact(1L, p));
}

}  // namespace scenario_detail

inline ScenarioReport example6_scenario(double r0, std::optional<double> gap_opt, int digits,
                                        long grid = 4000, double tol = 1e-12) {
    if (digits < 15) throw std::invalid_argument("example6_scenario: digits must be >= 15");
    if (!(r0 > 0.0)) throw std::invalid_argument("example6_scenario: requires r0 > 0");

    const mpfr_prec_t p = prec_for_digits(digits + 8);
    const Interval root2p1 = scenario_detail::sqrt2_plus_1(p);
    const Interval crossover_iv = mul(root2p1, root2p1);  // (sqrt2+1)^2
    const Interval two_log = mul(Interval::exact(2L, p), log(root2p1));

    ScenarioReport rep;
    rep.total_bound = riemann_zeta(2.0, digits);
    rep.e_prime_bound = hurwitz_zeta(Interval::exact(2L, p), root2p1, digits);
    const Interval diff = sub(rep.total_bound.value, rep.e_prime_bound.value);

    const double max_gap = diff.lo_double();  // rounded toward admissibility
    const double gap = gap_opt.value_or(max_gap);
    if (!(gap > 0.0) || mpfr_cmp_d(diff.lo(), gap) < 0) {
        throw std::domain_error(
            "example6_scenario: gap " + format_double(gap) +
            " exceeds zeta(2) - zeta(2, sqrt(2)+1), enclosed in [" + diff.lo_string(digits) +
            ", " + diff.hi_string(digits) + "]");
    }

    rep.r0 = r0;
    rep.gap = gap;
    rep.r0_prime = r0 + gap;
    rep.e_doubleprime_measure = gap;
    const Interval d_iv = div(two_log, Interval::exact(gap, p));
    rep.d = d_iv.mid_double();
    rep.growth_text = "exp(" + format_double(rep.d) + "*(r - " + format_double(r0) + "))";
    const GrowthExpr T = parse_growth(rep.growth_text);

    auto push = [&rep](std::string id, std::string claim, std::string lo, std::string hi,
                       bool pass) {
        rep.checks.push_back({std::move(id), std::move(claim), std::move(lo), std::move(hi), pass});
    };

    const double t_start = T(r0);
    push("T_at_r0_is_one", "T(r0) = 1 within 1e-9", format_double(t_start),
         format_double(t_start), std::fabs(t_start - 1.0) <= 1e-9);

    const double t_cross = T(rep.r0_prime);
    const double crossover_d = crossover_iv.mid_double();
    push("T_at_r0_prime_is_crossover", "T(r0') = (sqrt(2)+1)^2 within 1e-9",
         format_double(t_cross), format_double(t_cross),
         std::fabs(t_cross - crossover_d) <= 1e-9);

    push("d_exceeds_low_bound", "d = 2 ln(sqrt(2)+1)/gap > 1.5551982843 for admissible gap",
         d_iv.lo_string(digits), d_iv.hi_string(digits),
         mpfr_cmp(d_iv.lo(), Interval::from_decimal("1.5551982843", p).hi()) > 0);

    push("e2_measure_equals_gap", "measure of {1 <= T < (sqrt2+1)^2} equals the gap",
         format_double(rep.r0_prime - rep.r0), format_double(rep.r0_prime - rep.r0),
         std::fabs((rep.r0_prime - rep.r0) - gap) <= 1e-12);

    // Scan and cover the sharpened-inequality violations beyond r0'.
    const VariantSpec hanliu = VariantSpec::hanliu(2.0);
    const double r_hi = rep.r0_prime + 10.0;
    rep.scan = scan_violations(T, hanliu, rep.r0_prime, r_hi, grid, tol);
    rep.cover = build_cover(T, hanliu, rep.r0_prime, r_hi, 64, grid, tol,
                            crossover_iv.lo_double());

    const double cover_len = rep.cover.total_length();
    push("cover_within_hurwitz_bound",
         "cover total length <= zeta(2, sqrt(2)+1) upper bound",
         format_double(cover_len), rep.e_prime_bound.hi_string(),
         cover_len <= rep.e_prime_bound.hi_double() + 1e-9);

    const double scan_len = measure(rep.scan.violations);
    push("scan_within_hurwitz_bound",
         "measured violation set <= zeta(2, sqrt(2)+1) upper bound",
         format_double(scan_len), rep.e_prime_bound.hi_string(),
         scan_len <= rep.e_prime_bound.hi_double() + 1e-9);

    const Interval chain_total = add(Interval::exact(gap, p),
                                     to_prec(rep.e_prime_bound.value, p));
    push("chain_total_below_zeta2",
         "gap + zeta(2, sqrt(2)+1) <= zeta(2), certified",
         chain_total.lo_string(digits), chain_total.hi_string(digits),
         mpfr_cmp(chain_total.hi(), rep.total_bound.value.hi()) <= 0);

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

struct ReproReport {
    std::string tool = "borel-lab";
    std::string version = "0.1.0";
    int digits = 0;
    std::vector<CheckEntry> entries;
    bool all_pass = false;
};

// One entry per numeric claim; failures become entries, not exceptions.
inline ReproReport reproduce_all(int digits) {
    if (digits < 15) throw std::invalid_argument("reproduce_all: digits must be >= 15");
    ReproReport rep;
    rep.digits = digits;
    const mpfr_prec_t p = prec_for_digits(digits + 8);

    auto add_entry = [&rep](const std::string& id, const std::string& claim, auto&& fn) {
        CheckEntry e;
        e.id = id;
        e.claim = claim;
        try {
            fn(e);
        } catch (const std::exception& ex) {
            e.pass = false;
            e.computed_lo = std::string("error: ") + ex.what();
            e.computed_hi = "";
        }
        rep.entries.push_back(std::move(e));
    };

    add_entry("se_interval", "S_e lies in (1.4338677391, 1.4338677392)", [&](CheckEntry& e) {
        const Enclosure se = tower_constant_Se(std::min(digits, 50));
        e.computed_lo = se.lo_string();
        e.computed_hi = se.hi_string();
        e.pass = scenario_detail::inside_open_decimal(se.value, "1.4338677391", "1.4338677392");
    });

    add_entry("se4_interval", "S_e(4) lies in (1.43386773918, 1.43386773919)",
              [&](CheckEntry& e) {
                  const Enclosure s4 = tower_partial_Se(5, std::min(digits, 50));
                  e.computed_lo = s4.lo_string();
                  e.computed_hi = s4.hi_string();
                  e.pass = scenario_detail::inside_open_decimal(s4.value, "1.43386773918",
                                                                "1.43386773919");
              });

    add_entry("tail_exponent", "log10 of the doubling-tower tail bound from n = 5 is <= -19728",
              [&](CheckEntry& e) {
                  const double lg = tower_tail_bound_log10(5);
                  e.computed_lo = format_double(lg);
                  e.computed_hi = format_double(lg);
                  e.pass = lg <= -19728.0;
              });

    add_entry("hurwitz_052", "zeta(2, sqrt(2)+1) <= 0.52", [&](CheckEntry& e) {
        const Interval a = scenario_detail::sqrt2_plus_1(p);
        const Enclosure z = hurwitz_zeta(Interval::exact(2L, p), a, digits);
        e.computed_lo = z.lo_string();
        e.computed_hi = z.hi_string();
        e.pass = mpfr_cmp(z.value.hi(), Interval::from_decimal("0.52", p).lo()) <= 0;
    });

    add_entry("zeta2_gap", "zeta(2) - zeta(2, sqrt(2)+1) < 1.1334549375", [&](CheckEntry& e) {
        const Interval a = scenario_detail::sqrt2_plus_1(p);
        const Interval diff = sub(riemann_zeta(2.0, digits).value,
                                  hurwitz_zeta(Interval::exact(2L, p), a, digits).value);
        e.computed_lo = diff.lo_string(digits);
        e.computed_hi = diff.hi_string(digits);
        e.pass = mpfr_cmp(diff.hi(), Interval::from_decimal("1.1334549375", p).lo()) < 0;
    });

    add_entry("d_at_max_gap",
              "d = 2 ln(sqrt(2)+1) / (zeta(2) - zeta(2, sqrt(2)+1)) > 1.5551982843",
              [&](CheckEntry& e) {
                  const Interval a = scenario_detail::sqrt2_plus_1(p);
                  const Interval diff = sub(riemann_zeta(2.0, digits).value,
                                            hurwitz_zeta(Interval::exact(2L, p), a, digits).value);
                  const Interval d = div(mul(Interval::exact(2L, p), log(a)), diff);
                  e.computed_lo = d.lo_string(digits);
                  e.computed_hi = d.hi_string(digits);
                  e.pass = mpfr_cmp(d.lo(), Interval::from_decimal("1.5551982843", p).hi()) > 0;
              });

    add_entry("d_at_rounded_gap",
              "2 ln(sqrt(2)+1) / 1.1334549375 > 1.5551982843 within the 1e-10 guard",
              [&](CheckEntry& e) {
                  const Interval a = scenario_detail::sqrt2_plus_1(p);
                  const Interval d = div(mul(Interval::exact(2L, p), log(a)),
                                         Interval::from_decimal("1.1334549375", p));
                  e.computed_lo = d.lo_string(digits);
                  e.computed_hi = d.hi_string(digits);
                  const Interval guarded = sub(Interval::from_decimal("1.5551982843", p),
                                               Interval::from_decimal("0.0000000001", p));
                  e.pass = mpfr_cmp(d.lo(), guarded.hi()) > 0;
              });

    add_entry("r0_prime_bound", "1 + 2 ln(sqrt(2)+1) / 1.556 <= 2.134 within the 1e-10 guard",
              [&](CheckEntry& e) {
                  const Interval a = scenario_detail::sqrt2_plus_1(p);
                  const Interval r0p =
                      add(Interval::exact(1L, p),
                          div(mul(Interval::exact(2L, p), log(a)),
                              Interval::from_decimal("1.556", p)));
                  e.computed_lo = r0p.lo_string(digits);
                  e.computed_hi = r0p.hi_string(digits);
                  const Interval guarded = add(Interval::from_decimal("2.134", p),
                                               Interval::from_decimal("0.0000000001", p));
                  e.pass = mpfr_cmp(r0p.hi(), guarded.lo()) <= 0;
              });

    add_entry("prop1_grid", "zeta(s) < s/(s-1) across the test grid", [&](CheckEntry& e) {
        const double grid_s[] = {1.01, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0};
        bool ok = true;
        double worst = std::numeric_limits<double>::infinity();
        for (double s : grid_s) {
            const Enclosure z = riemann_zeta(s, digits);
            const Enclosure g = gamma_series_enclosure(s, digits);
            const double margin = g.lo_double() - z.hi_double();
            worst = std::min(worst, margin);
            ok = ok && mpfr_cmp(z.value.hi(), g.value.lo()) < 0;
        }
        e.computed_lo = format_double(worst);
        e.computed_hi = format_double(worst);
        e.pass = ok;
    });

    add_entry("gap_identity",
              "sawtooth quadrature agrees with s/(s-1) - zeta(s) within combined widths",
              [&](CheckEntry& e) {
                  const double grid_s[] = {1.5, 2.0, 3.0, 5.0, 10.0};
                  bool ok = true;
                  double widest = 0.0;
                  for (double s : grid_s) {
                      const Enclosure q = zeta_gap_quadrature(s, digits);
                      const Enclosure z = riemann_zeta(s, digits);
                      const Enclosure g = gamma_series_enclosure(s, digits);
                      // Mid-point agreement at full precision, plus interval overlap.
                      const mpfr_prec_t wp = g.value.prec();
                      Real delta(wp), w(wp), t(wp);
                      mpfr_sub(delta.raw(), g.value.mid().raw(), z.value.mid().raw(),
                               MPFR_RNDN);
                      mpfr_sub(delta.raw(), q.value.mid().raw(), delta.raw(), MPFR_RNDN);
                      mpfr_abs(delta.raw(), delta.raw(), MPFR_RNDN);
                      mpfr_sub(w.raw(), q.value.hi(), q.value.lo(), MPFR_RNDU);
                      mpfr_sub(t.raw(), z.value.hi(), z.value.lo(), MPFR_RNDU);
                      mpfr_add(w.raw(), w.raw(), t.raw(), MPFR_RNDU);
                      mpfr_sub(t.raw(), g.value.hi(), g.value.lo(), MPFR_RNDU);
                      mpfr_add(w.raw(), w.raw(), t.raw(), MPFR_RNDU);
                      const bool agrees = mpfr_cmp(delta.raw(), w.raw()) <= 0;
                      const bool overlaps =
                          q.value.intersects(sub(g.value, to_prec(z.value, wp)));
                      widest = std::max(widest, q.width());
                      ok = ok && agrees && overlaps && q.lo_double() > 0.0;
                  }
                  e.computed_lo = format_double(widest);
                  e.computed_hi = format_double(widest);
                  e.pass = ok;
              });

    add_entry("gap_positive_grid", "sawtooth quadrature stays strictly positive on (1.1, 10]",
              [&](CheckEntry& e) {
                  const double grid_s[] = {1.2, 1.7, 2.5, 3.7, 6.0, 10.0};
                  bool ok = true;
                  double worst = std::numeric_limits<double>::infinity();
                  for (double s : grid_s) {
                      const Enclosure q = zeta_gap_quadrature(s, 8, 20000);
                      worst = std::min(worst, q.lo_double());
                      ok = ok && q.lo_double() > 0.0;
                  }
                  e.computed_lo = format_double(worst);
                  e.computed_hi = format_double(worst);
                  e.pass = ok;
              });

    add_entry("zeta2_pi2_over_6", "zeta(2) encloses pi^2/6 and stays below 2",
              [&](CheckEntry& e) {
                  const Enclosure z = riemann_zeta(2.0, digits);
                  const Interval pi2_6 =
                      div(mul(Interval::pi(p), Interval::pi(p)), Interval::exact(6L, p));
                  e.computed_lo = z.lo_string();
                  e.computed_hi = z.hi_string();
                  e.pass = z.value.intersects(pi2_6) && z.value.certainly_less(2.0);
              });

    add_entry("example6_chain",
              "fast-growth scenario: gap + zeta(2, sqrt(2)+1) <= zeta(2) end to end",
              [&](CheckEntry& e) {
                  const ScenarioReport sc = example6_scenario(1.0, std::nullopt, digits);
                  for (const auto& c : sc.checks) {
                      if (c.id == "chain_total_below_zeta2") {
                          e.computed_lo = c.computed_lo;
                          e.computed_hi = c.computed_hi;
                      }
                  }
                  e.pass = sc.all_pass;
              });

    add_entry("hayman_exp_measure",
              "exceptional set of exp(r) under the 1/T step has measure ln(1/ln 2)",
              [&](CheckEntry& e) {
                  const GrowthExpr T = parse_growth("exp(r)");
                  const ScanResult sr =
                      scan_violations(T, VariantSpec::hayman(2.0), 0.0, 5.0, 10000, 1e-12);
                  const double m = measure(sr.violations);
                  e.computed_lo = format_double(m);
                  e.computed_hi = format_double(m);
                  e.pass = std::fabs(m - 0.36651292058166433) <= 1e-6;
              });

    add_entry("hanliu_exp_empty",
              "exp(r) admits no violations of the sharpened inequality at s = 2",
              [&](CheckEntry& e) {
                  const GrowthExpr T = parse_growth("exp(r)");
                  const ScanResult sr =
                      scan_violations(T, VariantSpec::hanliu(2.0), 0.0, 5.0, 10000, 1e-12);
                  e.computed_lo = format_double(measure(sr.violations));
                  e.computed_hi = e.computed_lo;
                  e.pass = sr.violations.empty();
              });

    rep.all_pass = true;
    for (const auto& e : rep.entries) rep.all_pass = rep.all_pass && e.pass;
    return rep;
}

}  // namespace borel

#endif  // BOREL_SCENARIO_HPP
