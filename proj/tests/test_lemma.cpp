#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "borel/lemma.hpp"
#include "borel/monotone_spline.hpp"

#include "helpers.hpp"

using namespace borel;

namespace {
constexpr double kLn2Inv = 0.36651292058166433;  // ln(1/ln 2)
}

TEST_CASE("step sizes") {
    CHECK(step_size(VariantSpec::hayman(2.0), 1.0) == 1.0);
    CHECK(step_size(VariantSpec::nevanlinna(2.0), 10.0) == Catch::Approx(0.01).epsilon(1e-14));
    CHECK(step_size(VariantSpec::fernandez_arias(), 0.0) == 1.0);
    CHECK(step_size(VariantSpec::borel(2.0), std::exp(1.0)) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(step_size(VariantSpec::borel(2.0), 1.0), std::domain_error);
    CHECK_THROWS_AS(step_size(VariantSpec::hayman(2.0), 0.5), std::domain_error);
    CHECK_THROWS_AS(VariantSpec::hayman(1.0), std::invalid_argument);
}

TEST_CASE("growth thresholds") {
    CHECK(rhs_threshold(VariantSpec::hanliu(2.0), 2.0) ==
          Catch::Approx(5.8284271247461903).epsilon(1e-14));
    CHECK(rhs_threshold(VariantSpec::hayman(2.0), 2.0) == 4.0);
    // At T = 1 and s = 2 the sharpened and classical thresholds coincide.
    CHECK(rhs_threshold(VariantSpec::hanliu(2.0), 1.0) == Catch::Approx(4.0).epsilon(1e-14));
    CHECK(rhs_threshold(VariantSpec::nevanlinna(2.0), 2.0) == 3.0);
    CHECK(rhs_threshold(VariantSpec::borel(2.0), 3.0) == 9.0);
    CHECK(rhs_threshold(VariantSpec::fernandez_arias(), 0.0) == 1.0);
}

TEST_CASE("violation indicator on exp(r)") {
    const GrowthExpr T = parse_growth("exp(r)");
    CHECK(violation_indicator(T, VariantSpec::hayman(2.0), 0.2));
    CHECK_FALSE(violation_indicator(T, VariantSpec::hayman(2.0), 1.0));
    CHECK_FALSE(violation_indicator(T, VariantSpec::hanliu(2.0), 0.0));
}

TEST_CASE("scan finds the closed-form exceptional set of exp(r)") {
    const GrowthExpr T = parse_growth("exp(r)");
    const ScanResult sr = scan_violations(T, VariantSpec::hayman(2.0), 0.0, 5.0);
    REQUIRE(sr.violations.size() == 1);
    const ClosedInterval iv = sr.violations.intervals()[0];
    CHECK(iv.lo == 0.0);
    CHECK(iv.hi == Catch::Approx(kLn2Inv).margin(1e-9));
    CHECK(measure(sr.violations) == Catch::Approx(kLn2Inv).margin(1e-9));
}

TEST_CASE("the sharpened inequality admits no violations for exp(r)") {
    const GrowthExpr T = parse_growth("exp(r)");
    const ScanResult sr = scan_violations(T, VariantSpec::hanliu(2.0), 0.0, 5.0);
    CHECK(sr.violations.empty());
}

TEST_CASE("identity growth admits no exp-step violations") {
    const GrowthExpr T = parse_growth("r");
    const ScanResult sr = scan_violations(T, VariantSpec::fernandez_arias(), 1.0, 20.0);
    CHECK(sr.violations.empty());
}

TEST_CASE("log-step variant on exp(r): single boundary point and its cover") {
    const GrowthExpr T = parse_growth("exp(r)");
    const VariantSpec v = VariantSpec::borel(2.0);
    // The inequality reverses exactly at r = 1 (where 1/r >= r flips).
    const ScanResult sr = scan_violations(T, v, 1.0, 5.0);
    REQUIRE(sr.violations.size() == 1);
    CHECK(sr.violations.intervals()[0].lo == 1.0);
    CHECK(measure(sr.violations) <= 1e-6);
    CHECK_FALSE(sr.warnings.empty());  // the degenerate width is flagged

    const CoverSequence cover = build_cover(T, v, 1.0, 5.0);
    REQUIRE(cover.steps.size() == 1);
    CHECK(cover.steps[0].r == 1.0);
    CHECK(cover.steps[0].r_prime == Catch::Approx(2.0).margin(1e-9));
    CHECK(cover.steps[0].threshold_value ==
          Catch::Approx(std::exp(2.0)).epsilon(1e-12));
    CHECK(cover.steps[0].certified_length_bound == 1.0);
    CHECK(cover.exhausted);
    CHECK(sr.violations.uncovered_length(cover.as_interval_set()) <= 1e-7);
}

TEST_CASE("1/T-step cover of exp(r) ends at ln 2 and is exhausted") {
    const GrowthExpr T = parse_growth("exp(r)");
    const CoverSequence cover = build_cover(T, VariantSpec::hayman(2.0), 0.0, 5.0);
    REQUIRE(cover.steps.size() == 1);
    CHECK(cover.steps[0].r == 0.0);
    CHECK(cover.steps[0].r_prime == Catch::Approx(std::log(2.0)).margin(1e-9));
    CHECK(cover.exhausted);

    const ScanResult sr = scan_violations(T, VariantSpec::hayman(2.0), 0.0, 5.0);
    CHECK(sr.violations.uncovered_length(cover.as_interval_set()) <= 1e-7);
}

TEST_CASE("chain length bounds follow the proofs") {
    const VariantSpec hay = VariantSpec::hayman(2.0);
    CHECK(chain_length_bound(hay, 1) == 1.0);
    CHECK(chain_length_bound(hay, 2) == 0.5);
    CHECK(chain_length_bound(hay, 5) == Catch::Approx(1.0 / 16.0));

    const VariantSpec nev = VariantSpec::nevanlinna(2.0);
    CHECK(chain_length_bound(nev, 1) == 1.0);
    CHECK(chain_length_bound(nev, 3) == Catch::Approx(1.0 / 9.0));

    const VariantSpec hl = VariantSpec::hanliu(2.0);
    const double tau = 5.8284271247461903;  // (sqrt(2)+1)^2
    CHECK(chain_length_bound(hl, 1, tau) ==
          Catch::Approx(1.0 / 5.8284271247461903).epsilon(1e-13));
    CHECK(chain_length_bound(hl, 2, tau) ==
          Catch::Approx(1.0 / ((2.4142135623730951 + 1) * (2.4142135623730951 + 1)))
              .epsilon(1e-13));

    const VariantSpec fa = VariantSpec::fernandez_arias();
    CHECK(chain_length_bound(fa, 1) == 1.0);
    CHECK(chain_length_bound(fa, 2) == Catch::Approx(std::exp(-1.0)));
    CHECK(chain_length_bound(fa, 3) == Catch::Approx(std::exp(-std::exp(1.0))));
    CHECK(chain_length_bound(fa, 4) ==
          Catch::Approx(2.6217273894613531e-7).epsilon(1e-12));
    CHECK(chain_length_bound(fa, 6) == 0.0);

    // The chain sums toward the certified series bounds.
    double geo = 0.0, zeta_sum = 0.0;
    for (long j = 1; j <= 60; ++j) {
        geo += chain_length_bound(hay, j);
        zeta_sum += chain_length_bound(nev, j);
    }
    CHECK(geo <= measure_bound(hay, 20).hi_double());
    CHECK(zeta_sum <= measure_bound(nev, 20).hi_double());
}

TEST_CASE("measure bounds per variant") {
    const Enclosure hay = measure_bound(VariantSpec::hayman(2.0), 20);
    CHECK(hay.value.contains(2.0));
    CHECK(hay.width() < 1e-18);

    const Enclosure nev = measure_bound(VariantSpec::nevanlinna(2.0), 20);
    CHECK(borel_tests::agrees_with_decimal(nev, "1.644934066848226436472415166646"));

    const mpfr_prec_t p = prec_for_digits(28);
    const Interval tau = pow(add(sqrt(Interval::exact(2L, p)), Interval::exact(1L, p)), 2L);
    const Enclosure hl = measure_bound(VariantSpec::hanliu(2.0), std::optional<Interval>(tau), 20);
    CHECK(hl.value.certainly_le(0.52));
    CHECK(borel_tests::agrees_with_decimal(hl, "0.511479129439542405402810533951"));

    const Enclosure fa = measure_bound(VariantSpec::fernandez_arias(), 20);
    CHECK(borel_tests::agrees_with_decimal(fa, "1.43386773918949380480762150584"));
}

TEST_CASE("blow-up growth exercises non-empty sets for the additive chains") {
    const GrowthExpr T = parse_growth("1 + 1/(3-r)^4");
    for (const VariantSpec v : {VariantSpec::hayman(2.0), VariantSpec::nevanlinna(2.0),
                                VariantSpec::hanliu(2.0)}) {
        const ScanResult sr = scan_violations(T, v, 0.0, 2.0);
        INFO(v.name());
        CHECK_FALSE(sr.violations.empty());
        const Enclosure bound = measure_bound(v, 20);
        CHECK(measure(sr.violations) <= bound.hi_double() + 1e-9);

        const CoverSequence cover = build_cover(T, v, 0.0, 2.0);
        CHECK(sr.violations.uncovered_length(cover.as_interval_set()) <=
              2.0 * sr.grid_step + 1e-7);
        double chain_sum = 0.0;
        for (size_t j = 0; j < cover.steps.size(); ++j) {
            const CoverStep& st = cover.steps[j];
            CHECK(st.r_prime - st.r <= st.certified_length_bound + 1e-9);
            CHECK(st.certified_length_bound ==
                  Catch::Approx(chain_length_bound(v, static_cast<long>(j) + 1)));
            chain_sum += st.certified_length_bound;
        }
        CHECK(chain_sum <= bound.hi_double() + 1e-9);
        // Strict interleaving r_j < r'_j <= r_{j+1}, as in the proofs.
        for (size_t j = 0; j < cover.steps.size(); ++j) {
            CHECK(cover.steps[j].r < cover.steps[j].r_prime);
            if (j + 1 < cover.steps.size()) {
                CHECK(cover.steps[j].r_prime <= cover.steps[j + 1].r);
            }
        }
        // Inductive growth: T at the next anchor has passed the threshold.
        for (size_t j = 0; j + 1 < cover.steps.size(); ++j) {
            CHECK(T(cover.steps[j + 1].r) >= cover.steps[j].threshold_value * (1 - 1e-9));
        }
    }
}

TEST_CASE("start_T refines the additive chain to the shifted series") {
    // Start the cover where T has already reached tau = (sqrt(2)+1)^2; the
    // chain then certifies 1/(sqrt(2)+j)^2 per step and sums to the shifted
    // series bound instead of zeta(2).
    const GrowthExpr T = parse_growth("1 + 1/(3-r)^4");
    const double tau = 5.8284271247461903;
    // Solve T(r0) = tau.
    double lo = 0.0, hi = 2.5;
    for (int i = 0; i < 100; ++i) {
        const double m = 0.5 * (lo + hi);
        (T(m) >= tau ? hi : lo) = m;
    }
    const double r0 = hi;
    REQUIRE(T(r0) >= tau);

    const VariantSpec hl = VariantSpec::hanliu(2.0);
    const CoverSequence cover = build_cover(T, hl, r0, 2.7, 64, 10000, 1e-12, tau);
    REQUIRE_FALSE(cover.steps.empty());
    const mpfr_prec_t p = prec_for_digits(28);
    const Interval tau_iv =
        pow(add(sqrt(Interval::exact(2L, p)), Interval::exact(1L, p)), 2L);
    const Enclosure bound = measure_bound(hl, std::optional<Interval>(tau_iv), 20);
    double chain_sum = 0.0;
    for (size_t j = 0; j < cover.steps.size(); ++j) {
        const CoverStep& st = cover.steps[j];
        CHECK(st.certified_length_bound ==
              Catch::Approx(chain_length_bound(hl, static_cast<long>(j) + 1, tau)));
        CHECK(st.r_prime - st.r <= st.certified_length_bound + 1e-9);
        chain_sum += st.certified_length_bound;
    }
    CHECK(chain_sum <= bound.hi_double() + 1e-9);
    // The refined chain is strictly tighter than the unshifted one.
    CHECK(chain_length_bound(hl, 1, tau) < chain_length_bound(hl, 1));
}

TEST_CASE("a fast tabulated spline triggers the exp-step variant") {
    const MonotoneSpline spline({0.0, 1.0, 1.5, 1.6, 2.0, 3.0},
                                {0.0, 0.5, 1.0, 4.0, 20.0, 21.0});
    const GrowthFn T = [&spline](double r) { return spline(r); };
    const VariantSpec fa = VariantSpec::fernandez_arias();
    const ScanResult sr = scan_violations(T, fa, 0.0, 2.5);
    CHECK_FALSE(sr.violations.empty());
    CHECK(measure(sr.violations) <= measure_bound(fa, 20).hi_double() + 1e-9);

    const CoverSequence cover = build_cover(T, fa, 0.0, 2.5);
    CHECK_FALSE(cover.steps.empty());
    CHECK(sr.violations.uncovered_length(cover.as_interval_set()) <=
          2.0 * sr.grid_step + 1e-7);
}

TEST_CASE("scan rejects bad inputs") {
    const GrowthExpr T = parse_growth("exp(r)");
    const VariantSpec v = VariantSpec::hayman(2.0);
    CHECK_THROWS_AS(scan_violations(T, v, 0.0, 5.0, 50), std::invalid_argument);
    CHECK_THROWS_AS(scan_violations(T, v, 5.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scan_violations(T, v, 0.0, 5.0, 1000, 0.0), std::invalid_argument);
    // Floor violation at r0.
    CHECK_THROWS_AS(scan_violations(T, VariantSpec::borel(2.0), 0.0, 5.0), std::domain_error);
    // Decreasing growth.
    CHECK_THROWS_AS(scan_violations(parse_growth("exp(-r)"), v, 0.0, 5.0), std::domain_error);
    // Double overflow across the horizon.
    CHECK_THROWS_AS(scan_violations(parse_growth("exp(exp(r))"), v, 0.0, 7.0), EvalError);
}

TEST_CASE("variant names round-trip") {
    for (VariantKind k : {VariantKind::Borel, VariantKind::Nevanlinna, VariantKind::Hayman,
                          VariantKind::HanLiu, VariantKind::FernandezArias}) {
        CHECK(variant_from_name(variant_name(k)) == k);
    }
    CHECK_FALSE(variant_from_name("weierstrass").has_value());
}
