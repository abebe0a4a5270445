// borel-lab: certified evaluation of growth-lemma constants, exceptional-set
// scans and covers for user-supplied growth functions, bound comparisons,
// and one-command reproduction of the library's numeric claims.
//
// Exit codes: 0 success / all checks pass, 1 a reported check failed,
// 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "borel/borel.hpp"

namespace {

using namespace borel;

void emit_enclosure(const Enclosure& e, const std::string& format) {
    if (format == "csv") {
        std::cout << enclosure_csv(e);
    } else {
        std::cout << enclosure_json(e).dump(2) << "\n";
    }
}

int worst_case_bounds_compare(double s, double t, double r, std::optional<double> sigma,
                              const std::string& format) {
    // Threshold-case error term per variant, assembled in log space: outside
    // the exceptional set T(R) is below the variant threshold, so this is
    // the largest value the error term can take there.
    std::vector<BoundReport> rows;
    auto push = [&rows](VariantKind kind, double rr, double tt, double R, double lhs,
                        double bound) {
        rows.push_back({kind, rr, tt, R, lhs, bound, lhs <= bound + 1e-9});
    };

    const double lt = std::log(t);
    if (t >= 2.718281828459045 - 1e-9) {
        const double R = r + 1.0 / lt;
        push(VariantKind::Borel, r, t, R, s * lt + std::log(lt) + std::log1p(1.0 / (r * lt)),
             bound_borel(t, r, s));
    }
    {
        const double R = r + std::pow(t, -s);
        push(VariantKind::Nevanlinna, r, t, R,
             std::log(t + 1.0) + s * lt + std::log1p(1.0 / (r * std::pow(t, s))),
             bound_nevanlinna(t, r, s));
    }
    {
        const double R = r + 1.0 / t;
        push(VariantKind::Hayman, r, t, R,
             std::log(s * t) + lt + std::log1p(1.0 / (r * t)), bound_hayman(t, r, s));
    }
    {
        const double R = r + 1.0 / t;
        push(VariantKind::HanLiu, r, t, R,
             s * std::log(std::pow(t, 1.0 / s) + 1.0) + lt + std::log1p(1.0 / (r * t)),
             bound_hanliu(t, r, s));
    }
    if (sigma) {
        const double u = std::pow(t, *sigma);
        const double R = r + std::exp(-u);
        push(VariantKind::FernandezArias, r, t, R,
             u / *sigma + u + std::log1p(std::exp(-u) / r), bound_fa(t, r, *sigma));
    }

    bool all = true;
    for (const auto& b : rows) all = all && b.dominated;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& b : rows) arr.push_back(bound_report_json(b));
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "variant,lhs,bound,dominated\n";
        for (const auto& b : rows) {
            std::cout << variant_name(b.variant) << "," << format_double(b.lhs_eq4) << ","
                      << format_double(b.bound_value) << ","
                      << (b.dominated ? "true" : "false") << "\n";
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"borel-lab: certified growth-lemma constants and exceptional sets"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "full help for every subcommand");

    int digits = 30;
    std::string format = "json";
    app.add_option("--digits", digits, "decimal digits for certified results")
        ->envname("BOREL_LAB_DIGITS")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    int code = 0;

    // zeta --s S
    std::string zeta_s = "2";
    auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta enclosure for real s > 1");
    zeta_cmd->add_option("--s", zeta_s, "exponent (decimal, exact)")->required();
    zeta_cmd->callback([&] {
        const mpfr_prec_t p = prec_for_digits(digits + 8);
        emit_enclosure(riemann_zeta(Interval::from_decimal(zeta_s, p), digits), format);
    });

    // hurwitz --s S --a A
    std::string hz_s = "2", hz_a = "1";
    auto* hz_cmd = app.add_subcommand("hurwitz", "Hurwitz zeta enclosure for s > 1, a > 0");
    hz_cmd->add_option("--s", hz_s, "exponent (decimal, exact)")->required();
    hz_cmd->add_option("--a", hz_a, "shift (decimal, exact)")->required();
    hz_cmd->callback([&] {
        const mpfr_prec_t p = prec_for_digits(digits + 8);
        emit_enclosure(hurwitz_zeta(Interval::from_decimal(hz_s, p),
                                    Interval::from_decimal(hz_a, p), digits),
                       format);
    });

    // gap --s S [--max-intervals N]
    double gap_s = 2.0;
    long gap_cap = 100000;
    auto* gap_cmd =
        app.add_subcommand("gap", "sawtooth quadrature enclosure of s/(s-1) - zeta(s)");
    gap_cmd->add_option("--s", gap_s, "exponent, s > 1")->required();
    gap_cmd->add_option("--max-intervals", gap_cap, "cap on summed unit intervals")
        ->capture_default_str();
    gap_cmd->callback([&] { emit_enclosure(zeta_gap_quadrature(gap_s, digits, gap_cap), format); });

    // se-constant
    auto* se_cmd = app.add_subcommand("se-constant",
                                      "enclosure of the reciprocal exponential-tower sum");
    se_cmd->callback([&] { emit_enclosure(tower_constant_Se(std::min(digits, 50)), format); });

    // exceptional-set / cover share inputs
    std::string es_T = "exp(r)", es_variant = "hayman";
    double es_s = 2.0, es_r0 = 0.0, es_rmax = 5.0, es_tol = 1e-12;
    long es_grid = 10000, es_max_steps = 64;
    auto add_engine_options = [&](CLI::App* cmd) {
        cmd->add_option("--T", es_T, "growth expression in r")->required();
        cmd->add_option("--variant", es_variant,
                        "borel | nevanlinna | hayman | hanliu | fernandez-arias")
            ->required();
        cmd->add_option("--s", es_s, "variant parameter s > 1")->capture_default_str();
        cmd->add_option("--r0", es_r0, "left end of the scan")->capture_default_str();
        cmd->add_option("--rmax", es_rmax, "scan horizon")->capture_default_str();
        cmd->add_option("--grid", es_grid, "scan grid points")->capture_default_str();
        cmd->add_option("--tol", es_tol, "bisection tolerance on r")->capture_default_str();
    };

    auto* es_cmd = app.add_subcommand(
        "exceptional-set", "scan the set where the variant inequality is reversed");
    add_engine_options(es_cmd);
    es_cmd->callback([&] {
        const auto kind = variant_from_name(es_variant);
        if (!kind) throw CLI::ValidationError("--variant", "unknown variant " + es_variant);
        const VariantSpec v = VariantSpec::make(*kind, es_s);
        const GrowthExpr T = parse_growth(es_T);
        const ScanResult sr = scan_violations(T, v, es_r0, es_rmax, es_grid, es_tol);
        const Enclosure bound = measure_bound(v, digits);
        const bool ok = measure(sr.violations) <= bound.hi_double() + 1e-9;
        if (format == "csv") {
            std::cout << scan_csv(sr, bound);
        } else {
            std::cout << scan_json(sr, bound).dump(2) << "\n";
        }
        code = ok ? 0 : 1;
    });

    auto* cover_cmd =
        app.add_subcommand("cover", "build the inductive interval cover of the violation set");
    add_engine_options(cover_cmd);
    cover_cmd->add_option("--max-steps", es_max_steps, "cap on cover steps")
        ->capture_default_str();
    cover_cmd->callback([&] {
        const auto kind = variant_from_name(es_variant);
        if (!kind) throw CLI::ValidationError("--variant", "unknown variant " + es_variant);
        const VariantSpec v = VariantSpec::make(*kind, es_s);
        const GrowthExpr T = parse_growth(es_T);
        const CoverSequence cover =
            build_cover(T, v, es_r0, es_rmax, es_max_steps, es_grid, es_tol);
        const Enclosure bound = measure_bound(v, digits);
        const nlohmann::json j = cover_json(cover, bound);
        if (format == "csv") {
            std::cout << cover_csv(cover, bound);
        } else {
            std::cout << j.dump(2) << "\n";
        }
        code = j["chain_ok"].get<bool>() ? 0 : 1;
    });

    // bounds-compare --s S --t T --r R [--sigma SIGMA]
    double bc_s = 2.0, bc_t = 100.0, bc_r = 1.0;
    double bc_sigma = -1.0;
    auto* bc_cmd = app.add_subcommand(
        "bounds-compare", "threshold-case error term against each variant's bound");
    bc_cmd->add_option("--s", bc_s, "variant parameter s > 1")->required();
    bc_cmd->add_option("--t", bc_t, "value of T(r)")->required();
    bc_cmd->add_option("--r", bc_r, "radius r > 0")->required();
    bc_cmd->add_option("--sigma", bc_sigma, "include the exp-step row for T^sigma, 0 < sigma < 1");
    bc_cmd->callback([&] {
        std::optional<double> sig;
        if (bc_sigma > 0.0) sig = bc_sigma;
        std::string f = format;
        if (format == "json" && !app.count("--format")) f = "csv";
        code = worst_case_bounds_compare(bc_s, bc_t, bc_r, sig, f);
    });

    // example6 [--r0 R0] [--gap G]
    double ex_r0 = 1.0, ex_gap = -1.0;
    auto* ex_cmd = app.add_subcommand(
        "example6", "fast-growth scenario with the maximal (or a chosen) admissible gap");
    ex_cmd->add_option("--r0", ex_r0, "base radius, r0 > 0")->capture_default_str();
    ex_cmd->add_option("--gap", ex_gap, "gap r0' - r0; defaults to the maximal admissible");
    ex_cmd->callback([&] {
        std::optional<double> g;
        if (ex_cmd->count("--gap")) g = ex_gap;
        const ScenarioReport sc = example6_scenario(ex_r0, g, digits);
        if (format == "csv") {
            std::cout << "id,claim,computed_lo,computed_hi,pass\n";
            for (const auto& c : sc.checks) {
                std::cout << csv_quote(c.id) << "," << csv_quote(c.claim) << ","
                          << csv_quote(c.computed_lo) << "," << csv_quote(c.computed_hi) << ","
                          << (c.pass ? "true" : "false") << "\n";
            }
        } else {
            std::cout << scenario_json(sc).dump(2) << "\n";
        }
        code = sc.all_pass ? 0 : 1;
    });

    // reproduce
    auto* rp_cmd =
        app.add_subcommand("reproduce", "recompute and verify every built-in numeric claim");
    rp_cmd->callback([&] {
        const ReproReport rr = reproduce_all(digits);
        if (format == "csv") {
            std::cout << repro_csv(rr);
        } else {
            std::cout << repro_json(rr).dump(2) << "\n";
        }
        code = rr.all_pass ? 0 : 1;
    });

    // Global options (--digits, --format) may follow the subcommand.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
