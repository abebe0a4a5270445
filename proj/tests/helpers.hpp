#ifndef BOREL_TESTS_HELPERS_HPP
#define BOREL_TESTS_HELPERS_HPP

#include <algorithm>
#include <string>

#include "borel/interval.hpp"

namespace borel_tests {

// True when the certified interval is consistent with a reference decimal
// that is accurate to its printed digits: the decimal, inflated by one unit
// in its last significant digit, must meet the interval. Both contain the
// true value when correct, so an empty intersection flags a real defect.
inline bool agrees_with_decimal(const borel::Interval& v, const std::string& dec) {
    int sig = 0;
    bool seen_nonzero = false;
    for (char c : dec) {
        if (c == 'e' || c == 'E') break;
        if (c >= '0' && c <= '9') {
            if (c != '0') seen_nonzero = true;
            if (seen_nonzero) ++sig;
        }
    }
    sig = std::max(sig, 2);
    const mpfr_prec_t p = std::max<mpfr_prec_t>(v.prec(), 128);
    const borel::Interval d = borel::Interval::from_decimal(dec, p);
    const borel::Interval ulp =
        borel::mul(borel::abs(d),
                   borel::Interval::from_decimal("1e-" + std::to_string(sig - 1), p));
    borel::Real lo(p), hi(p);
    mpfr_sub(lo.raw(), d.lo(), ulp.hi(), MPFR_RNDD);
    mpfr_add(hi.raw(), d.hi(), ulp.hi(), MPFR_RNDU);
    const borel::Interval band = borel::Interval::from_endpoints(std::move(lo), std::move(hi));
    return band.intersects(v);
}

inline bool agrees_with_decimal(const borel::Enclosure& e, const std::string& dec) {
    return agrees_with_decimal(e.value, dec);
}

// |mid(q) - (mid(g) - mid(z))| <= width(q) + width(g) + width(z), evaluated
// in MPFR so double rounding cannot mask agreement at tiny widths.
inline bool mids_agree(const borel::Enclosure& q, const borel::Enclosure& g,
                       const borel::Enclosure& z) {
    const mpfr_prec_t p =
        std::max({q.value.prec(), g.value.prec(), z.value.prec(), mpfr_prec_t{128}});
    borel::Real mq = q.value.mid(), mg = g.value.mid(), mz = z.value.mid();
    borel::Real delta(p);
    mpfr_sub(delta.raw(), mg.raw(), mz.raw(), MPFR_RNDN);
    mpfr_sub(delta.raw(), mq.raw(), delta.raw(), MPFR_RNDN);
    mpfr_abs(delta.raw(), delta.raw(), MPFR_RNDN);

    borel::Real w(p), t(p);
    mpfr_sub(w.raw(), q.value.hi(), q.value.lo(), MPFR_RNDU);
    mpfr_sub(t.raw(), g.value.hi(), g.value.lo(), MPFR_RNDU);
    mpfr_add(w.raw(), w.raw(), t.raw(), MPFR_RNDU);
    mpfr_sub(t.raw(), z.value.hi(), z.value.lo(), MPFR_RNDU);
    mpfr_add(w.raw(), w.raw(), t.raw(), MPFR_RNDU);
    return mpfr_cmp(delta.raw(), w.raw()) <= 0;
}

}  // namespace borel_tests

#endif  // BOREL_TESTS_HELPERS_HPP
