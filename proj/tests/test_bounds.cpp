#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "borel/bounds.hpp"

using namespace borel;

TEST_CASE("log_plus clamps at one") {
    CHECK(log_plus(0.2) == 0.0);
    CHECK(log_plus(1.0) == 0.0);
    CHECK(log_plus(std::exp(2.0)) == Catch::Approx(2.0));
}

TEST_CASE("error term direct evaluations") {
    const GrowthExpr T = parse_growth("exp(r)");
    CHECK(eq4_term(T, 1.0, 2.0) == Catch::Approx(2.0 + std::log(2.0)).epsilon(1e-14));

    const GrowthFn small = [](double) { return 0.1; };
    CHECK(eq4_term(small, 1.0, 2.0) == 0.0);  // argument below 1 clamps

    const double R = 10.0 + std::exp(-10.0);
    CHECK(eq4_term(T, 10.0, R) == Catch::Approx(20.000049939912).margin(1e-9));

    CHECK_THROWS_AS(eq4_term(T, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eq4_term(T, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("log-step bound values") {
    CHECK(bound_borel(100.0, 10.0, 2.0) == Catch::Approx(10.7590).margin(5e-5));
    const double e = std::exp(1.0);
    CHECK(bound_borel(e, 1.0, 2.0) == Catch::Approx(2.0 + std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bound_borel(1.0, 1.0, 2.0), std::domain_error);
}

TEST_CASE("power-step bound values") {
    CHECK(bound_nevanlinna(100.0, 10.0, 2.0) == Catch::Approx(13.8255).margin(5e-5));
    CHECK(bound_nevanlinna(1.0, 1.0, 2.0) == Catch::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("1/T-step bound values and the s-shift identity") {
    CHECK(bound_hayman(100.0, 10.0, 2.0) == Catch::Approx(9.9045).margin(5e-5));
    CHECK(bound_hayman(1.0, 1.0, 2.0) == Catch::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    // Only the middle term depends on s: the difference is exactly ln(s2/s1).
    for (double t : {1.0, 7.0, 1e4, 1e8}) {
        for (double r : {0.5, 1.0, 10.0}) {
            const double diff = bound_hayman(t, r, 3.0) - bound_hayman(t, r, 1.5);
            CHECK(diff == Catch::Approx(std::log(2.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sharpened bound values and the crossover identity") {
    CHECK(bound_hanliu(100.0, 10.0, 2.0) == Catch::Approx(9.4020).margin(5e-5));
    CHECK(bound_hanliu(1.0, 1.0, 2.0) == Catch::Approx(3.0 * std::log(2.0)).epsilon(1e-12));
    // At T = (sqrt(2)+1)^2 and s = 2 the middle terms agree: 2 ln(sqrt 2) = ln 2.
    const double tau = 5.8284271247461903;
    for (double r : {0.5, 1.0, 10.0}) {
        CHECK(bound_hanliu(tau, r, 2.0) ==
              Catch::Approx(bound_hayman(tau, r, 2.0)).epsilon(1e-13));
    }
}

TEST_CASE("exp-step bound values") {
    const double e = std::exp(1.0);
    CHECK(bound_fa(e, 1.0, 0.5) == Catch::Approx(5.12204).margin(5e-5));
    CHECK(bound_fa(1.0, 1.0, 0.5) == Catch::Approx(3.0 + std::log1p(std::exp(-1.0))).epsilon(1e-12));
    // Coefficient (sigma+1)/sigma at sigma = 1/4 is 5.
    CHECK(bound_fa(1.0, 1e9, 0.25) == Catch::Approx(5.0).margin(1e-8));
    CHECK_THROWS_AS(bound_fa(e, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bound_fa(e, 1.0, 1.0), std::domain_error);
}

TEST_CASE("crossover threshold") {
    CHECK(crossover_threshold(2.0) == Catch::Approx(5.8284271247461903).epsilon(1e-13));
    CHECK(crossover_threshold(4.0) == Catch::Approx(33.970562748477141).epsilon(1e-13));
    CHECK_THROWS_AS(crossover_threshold(1.0), std::domain_error);

    // Above the threshold the sharpened bound wins; below, the classical one.
    for (double s : {1.3, 2.0, 3.0, 5.0}) {
        const double thr = crossover_threshold(s);
        for (double factor : {1.01, 2.0, 100.0}) {
            CHECK(bound_hanliu(thr * factor, 1.0, s) <= bound_hayman(thr * factor, 1.0, s));
            if (thr / factor >= 1.0) {
                CHECK(bound_hanliu(thr / factor, 1.0, s) >= bound_hayman(thr / factor, 1.0, s));
            }
        }
        CHECK(bound_hanliu(thr, 1.0, s) == Catch::Approx(bound_hayman(thr, 1.0, s)).margin(1e-10));
    }
}

TEST_CASE("dominance reports outside the violation set") {
    const GrowthExpr T = parse_growth("exp(r)");
    const GrowthFn fn = growth_fn(T);

    const BoundReport hay = dominance_report(fn, VariantSpec::hayman(2.0), 1.0);
    CHECK(hay.dominated);
    CHECK(hay.T_at_r == Catch::Approx(std::exp(1.0)));
    CHECK(hay.R == Catch::Approx(1.0 + std::exp(-1.0)));
    // Log-space assembly matches the direct quotient here.
    CHECK(hay.lhs_eq4 == Catch::Approx(eq4_term(fn, 1.0, hay.R)).margin(1e-9));
    CHECK(hay.lhs_eq4 >= 0.0);

    const BoundReport bor = dominance_report(fn, VariantSpec::borel(2.0), 1.5);
    CHECK(bor.dominated);

    const BoundReport fa = dominance_report_fa(fn, 0.5, 2.0);
    CHECK(fa.dominated);
    CHECK(fa.bound_value == Catch::Approx(bound_fa(std::exp(2.0), 2.0, 0.5)));

    CHECK_THROWS_AS(dominance_report(fn, VariantSpec::fernandez_arias(), 1.0),
                    std::invalid_argument);
}

TEST_CASE("ordering report sorts the four bounds") {
    const OrderingReport at_large = ordering_report(2.0, 100.0, 10.0);
    REQUIRE(at_large.ascending.size() == 4);
    CHECK(at_large.ascending[0].variant == VariantKind::HanLiu);
    CHECK(at_large.ascending[0].value == Catch::Approx(9.4020).margin(5e-5));
    CHECK(at_large.ascending[1].variant == VariantKind::Hayman);
    CHECK(at_large.ascending[2].variant == VariantKind::Borel);
    CHECK(at_large.ascending[3].variant == VariantKind::Nevanlinna);
    CHECK_FALSE(at_large.asymptotic_regime);

    const OrderingReport small_s = ordering_report(1.5, 1e6, 10.0);
    REQUIRE(small_s.ascending.size() == 4);
    CHECK(small_s.ascending[0].variant == VariantKind::Borel);
    CHECK(small_s.ascending[1].variant == VariantKind::HanLiu);
    CHECK(small_s.ascending[2].variant == VariantKind::Hayman);
    CHECK(small_s.ascending[3].variant == VariantKind::Nevanlinna);
    CHECK(small_s.asymptotic_regime);

    // Below the log-step floor only three bounds apply, and two coincide.
    const OrderingReport at_one = ordering_report(2.0, 1.0, 1.0);
    CHECK(at_one.ascending.size() == 3);
    CHECK(at_one.has_ties);
    CHECK_FALSE(at_one.asymptotic_regime);
}
