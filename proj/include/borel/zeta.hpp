#ifndef BOREL_ZETA_HPP
#define BOREL_ZETA_HPP

// Certified evaluation of the series constants that bound the exceptional
// sets: the geometric-progression sum s/(s-1), the Riemann and Hurwitz
// zeta functions for real s > 1, and the sawtooth integral that separates
// the two.
//
// zeta(s,a) uses Euler-Maclaurin summation: a direct sum of the first N
// terms, the integral and half-term at the cut, and Bernoulli corrections.
// For the completely monotone summand (x+a)^(-s) the truncation remainder
// is bounded in magnitude by the first omitted correction term, which is
// folded into the enclosure as a symmetric bracket.

#include <cmath>
#include <optional>
#include <stdexcept>

#include "borel/bernoulli.hpp"
#include "borel/interval.hpp"

namespace borel {

// s/(s-1), exact closed form. The geometric-progression sum diverges
// linearly at s = 1, hence the hard precondition.
inline double gamma_series(double s) {
    if (!(s > 1.0)) {
        throw std::domain_error("gamma_series: requires s > 1 (linear divergence at s = 1)");
    }
    return s / (s - 1.0);
}

inline Enclosure gamma_series_enclosure(double s, int digits) {
    if (!(s > 1.0)) {
        throw std::domain_error("gamma_series: requires s > 1 (linear divergence at s = 1)");
    }
    const mpfr_prec_t p = prec_for_digits(digits + 8);
    const Interval si = Interval::exact(s, p);
    const Interval one = Interval::exact(1L, p);
    return Enclosure::certify(div(si, sub(si, one)), digits);
}

namespace detail {

inline std::optional<Interval> euler_maclaurin_attempt(const Interval& s, const Interval& a,
                                                       long n_cut, const Real& target,
                                                       mpfr_prec_t p) {
    const BernoulliTable& table = BernoulliTable::instance();
    const Interval one = Interval::exact(1L, p);
    const Interval neg_s = neg(s);

    Interval direct = Interval::exact(0L, p);
    for (long n = 0; n < n_cut; ++n) {
        direct = add(direct, pow(add(a, Interval::exact(n, p)), neg_s));
    }

    const Interval x = add(a, Interval::exact(n_cut, p));
    const Interval integral = div(pow(x, sub(one, s)), sub(s, one));
    const Interval x_pow_neg_s = pow(x, neg_s);
    const Interval half_term = div(x_pow_neg_s, Interval::exact(2L, p));

    Interval corrections = Interval::exact(0L, p);
    Interval rising = s;                                 // (s)_{2k-1}, starts at (s)_1
    Interval xfac = div(x_pow_neg_s, x);                 // x^{-s-2k+1}, starts at k = 1
    const Interval x_sq_inv = div(one, mul(x, x));

    for (int k = 1; k + 1 <= BernoulliTable::max_k; ++k) {
        const Interval qk = Interval::from_mpq(table.coefficient(k).get_mpq_t(), p);
        corrections = add(corrections, mul(qk, mul(rising, xfac)));

        rising = mul(rising, mul(add(s, Interval::exact(2L * k - 1, p)),
                                 add(s, Interval::exact(2L * k, p))));
        xfac = mul(xfac, x_sq_inv);
        const Interval qnext = Interval::from_mpq(table.coefficient(k + 1).get_mpq_t(), p);
        const Interval next_term = mul(qnext, mul(rising, xfac));
        Real next_mag(p);
        mpfr_set(next_mag.raw(), abs(next_term).hi(), MPFR_RNDU);
        if (mpfr_cmp(next_mag.raw(), target.raw()) <= 0) {
            Interval total = add(add(direct, integral), add(half_term, corrections));
            return add(total, symmetric_bracket(next_mag, p));
        }
    }
    return std::nullopt;
}

inline Interval hurwitz_zeta_core(const Interval& s_in, const Interval& a_in, int digits) {
    if (!s_in.certainly_greater(1.0)) {
        throw std::domain_error("hurwitz_zeta: requires s > 1");
    }
    if (!a_in.is_positive()) {
        throw std::domain_error("hurwitz_zeta: requires a > 0");
    }
    const mpfr_prec_t p = prec_for_digits(digits + 8);
    const Interval s = to_prec(s_in, p);
    const Interval a = to_prec(a_in, p);

    Real target(p);
    mpfr_set_si(target.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(target.raw(), target.raw(), -(digits + 4), MPFR_RNDD);

    long n_cut = std::max<long>(static_cast<long>(std::ceil(digits * 1.5)),
                                static_cast<long>(std::ceil(s.hi_double())) + 10);
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (auto r = euler_maclaurin_attempt(s, a, n_cut, target, p)) {
            return *r;
        }
        n_cut *= 2;
    }
    throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin tail did not converge");
}

}  // namespace detail

inline Enclosure hurwitz_zeta(const Interval& s, const Interval& a, int digits) {
    return Enclosure::certify(detail::hurwitz_zeta_core(s, a, digits), digits);
}

inline Enclosure hurwitz_zeta(double s, double a, int digits) {
    const mpfr_prec_t p = prec_for_digits(digits + 8);
    return hurwitz_zeta(Interval::exact(s, p), Interval::exact(a, p), digits);
}

inline Enclosure riemann_zeta(const Interval& s, int digits) {
    return hurwitz_zeta(s, Interval::exact(1L, prec_for_digits(digits + 8)), digits);
}

inline Enclosure riemann_zeta(double s, int digits) {
    return riemann_zeta(Interval::exact(s, prec_for_digits(digits + 8)), digits);
}

// s * integral over [1, inf) of (t - [t]) / t^(s+1), evaluated unit interval
// by unit interval with the exact antiderivative t^(1-s)/(1-s) + n t^(-s)/s,
// plus the bracket [0, integral_N^inf t^(-s) dt] for the tail. Convergence
// is only polynomial, so the achieved width (recorded on the enclosure)
// may fall short of the request when s is close to 1.
inline Enclosure zeta_gap_quadrature(double s, int digits, long max_unit_intervals = 100000) {
    if (!(s > 1.0)) {
        throw std::domain_error("zeta_gap_quadrature: requires s > 1");
    }
    const mpfr_prec_t p = prec_for_digits(digits + 8);
    const Interval si = Interval::exact(s, p);
    const Interval one = Interval::exact(1L, p);
    const Interval neg_s = neg(si);
    const Interval s_minus_1 = sub(si, one);
    const Interval one_minus_s = sub(one, si);

    // Smallest N with N^(1-s)/(s-1) <= 10^(-digits), clamped.
    double log10_n = (digits - std::log10(s - 1.0)) / (s - 1.0);
    long n_intervals = max_unit_intervals;
    if (log10_n < std::log10(static_cast<double>(max_unit_intervals))) {
        n_intervals = static_cast<long>(std::ceil(std::pow(10.0, log10_n)));
    }
    n_intervals = std::max<long>(n_intervals, 100);

    Interval acc = Interval::exact(0L, p);
    Interval p_prev = one;  // 1^(-s)
    for (long n = 1; n < n_intervals; ++n) {
        const Interval ni = Interval::exact(n, p);
        const Interval p_next = pow(Interval::exact(n + 1, p), neg_s);
        const Interval a_part =
            div(sub(mul(Interval::exact(n + 1, p), p_next), mul(ni, p_prev)), one_minus_s);
        const Interval b_part = div(mul(ni, sub(p_next, p_prev)), si);
        acc = add(acc, add(a_part, b_part));
        p_prev = p_next;
    }

    const Interval tail_hi = div(pow(Interval::exact(n_intervals, p), one_minus_s), s_minus_1);
    Real zero(p), thi(p);
    mpfr_set_zero(zero.raw(), 1);
    mpfr_set(thi.raw(), tail_hi.hi(), MPFR_RNDU);
    const Interval tail = Interval::from_endpoints(std::move(zero), std::move(thi));

    Interval result = mul(si, add(acc, tail));
    if (!result.is_positive()) {
        throw std::runtime_error("zeta_gap_quadrature: lower bound failed to stay positive");
    }
    return Enclosure::certify(std::move(result), digits);
}

}  // namespace borel

#endif  // BOREL_ZETA_HPP
