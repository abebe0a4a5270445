#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "borel/tower.hpp"

#include "helpers.hpp"

using namespace borel;

namespace {
bool inside_open(const Enclosure& e, const char* lo, const char* hi) {
    const mpfr_prec_t p = e.value.prec();
    const Interval l = Interval::from_decimal(lo, p);
    const Interval h = Interval::from_decimal(hi, p);
    return mpfr_cmp(e.value.lo(), l.hi()) > 0 && mpfr_cmp(e.value.hi(), h.lo()) < 0;
}
}  // namespace

TEST_CASE("tower terms carry the right representations") {
    const auto terms = tower_terms(5);
    REQUIRE(terms.size() == 6);

    CHECK(terms[0].value == 1.0);
    CHECK(terms[0].reciprocal_log10 == 0.0);

    REQUIRE(terms[1].value.has_value());
    CHECK(*terms[1].value == Catch::Approx(2.718281828459045).epsilon(1e-15));

    REQUIRE(terms[2].value.has_value());
    CHECK(*terms[2].value == Catch::Approx(15.154262241479264).epsilon(1e-14));

    REQUIRE(terms[3].value.has_value());
    CHECK(*terms[3].value == Catch::Approx(3814279.1047602206).epsilon(1e-13));

    // a_4 only fits as its natural log.
    CHECK_FALSE(terms[4].value.has_value());
    REQUIRE(terms[4].log_value.has_value());
    CHECK(*terms[4].log_value == Catch::Approx(3814279.1047602206).epsilon(1e-13));
    CHECK(terms[4].iterated_log_depth == 1);
    CHECK(terms[4].reciprocal_log10 == Catch::Approx(-1656520.3676362392).epsilon(1e-12));

    // a_5 does not even fit as a log.
    CHECK(terms[5].iterated_log_depth == 2);

    // Reciprocal magnitudes drop strictly (super-exponentially).
    for (int n = 0; n < 4; ++n) {
        CHECK(terms[n + 1].reciprocal_log10 < terms[n].reciprocal_log10);
    }
}

TEST_CASE("partial reciprocal sums match independent digits") {
    // 1 + 1/e + e^(-e)
    const Enclosure s3 = tower_partial_Se(3, 20);
    CHECK(borel_tests::agrees_with_decimal(s3, "1.43386747701675485867231395776"));

    // The n = 3 term alone: e^(-e^e).
    const Enclosure s4 = tower_partial_Se(4, 20);
    const Interval term3 = sub(s4.value, to_prec(s3.value, s4.value.prec()));
    CHECK(borel_tests::agrees_with_decimal(term3, "0.000000262172738946135307548080227"));
}

TEST_CASE("five-term sum sits inside the published bracket") {
    const Enclosure s4 = tower_partial_Se(5, 12);
    CHECK(inside_open(s4, "1.43386773918", "1.43386773919"));
    const Enclosure s4_hi = tower_partial_Se(5, 40);
    CHECK(inside_open(s4_hi, "1.43386773918", "1.43386773919"));
    CHECK(borel_tests::agrees_with_decimal(s4_hi, "1.43386773918949380480762150584"));
}

TEST_CASE("full constant enclosure lands in the ten-digit window") {
    for (int digits : {12, 20, 30, 50}) {
        const Enclosure se = tower_constant_Se(digits);
        CHECK(inside_open(se, "1.4338677391", "1.4338677392"));
        CHECK(se.meets_width_contract());
    }
    CHECK_THROWS_AS(tower_constant_Se(51), std::invalid_argument);
}

TEST_CASE("the constant exceeds its five-term truncation by at most the tail bracket") {
    const Enclosure se = tower_constant_Se(30);
    const Enclosure s4 = tower_partial_Se(5, 30);
    CHECK(mpfr_cmp(se.value.hi(), s4.value.lo()) >= 0);
    const Interval excess = sub(se.value, to_prec(s4.value, se.value.prec()));
    // The difference resolves down to the head widths (about 1e-50 at these
    // digits); the genuine tail is far below that.
    Real cap(se.value.prec());
    mpfr_set_str(cap.raw(), "1e-40", 10, MPFR_RNDN);
    CHECK(mpfr_cmp(excess.hi(), cap.raw()) <= 0);
}

TEST_CASE("doubling-tower tail bound") {
    // 2/b_2 = 2/4
    CHECK(tower_tail_bound_log10(2) == Catch::Approx(std::log10(0.5)).epsilon(1e-14));
    // b_4 = 65536 exactly: bound log10(2) * (1 - 16)
    CHECK(tower_tail_bound_log10(4) ==
          Catch::Approx(-15.0 * 0.30102999566398120).epsilon(1e-14));
    // The headline exponent.
    const double lg5 = tower_tail_bound_log10(5);
    CHECK(lg5 <= -19728.0);
    CHECK(lg5 == Catch::Approx(-19728.000765839008).epsilon(1e-12));
    // Beyond the representable range the bound honestly saturates.
    CHECK(tower_tail_bound_log10(6) == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(tower_tail_bound_log10(1), std::invalid_argument);
}

TEST_CASE("exponential tower dominates the doubling tower") {
    // ln a_n > ln b_n for n = 1..4.
    const auto terms = tower_terms(4);
    const double ln2 = std::log(2.0);
    double log2_b = 1.0;  // log2(b_1)
    for (int n = 1; n <= 4; ++n) {
        const double ln_b = log2_b * ln2;
        REQUIRE(terms[static_cast<size_t>(n)].log_value.has_value());
        CHECK(*terms[static_cast<size_t>(n)].log_value > ln_b);
        log2_b = std::exp2(log2_b);
    }
}
