#ifndef BOREL_TOWER_HPP
#define BOREL_TOWER_HPP

// The exponential tower a_0 = 1, a_1 = e, a_n = e^(a_{n-1}), whose
// reciprocal sum S_e bounds the exceptional set of the exp-step lemma
// variant, together with the doubling tower b_n = 2^(b_{n-1}) used to
// bound the tail. MPFR's huge exponent range lets a_4^(-1) = e^(-a_3)
// (about 10^(-1656520)) be computed directly; anything past that is
// carried as the certified bracket [0, 2^(-65535)].

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "borel/interval.hpp"

namespace borel {

struct TowerTerm {
    int n = 0;
    std::optional<double> value;       // a_n when it fits a double
    std::optional<double> log_value;   // ln a_n when only that fits
    int iterated_log_depth = 0;        // how many ln's were applied to fit
    double reciprocal_log10 = 0.0;     // log10(1 / a_n)
};

// Terms a_0 .. a_{n_max}, n_max <= 5.
inline std::vector<TowerTerm> tower_terms(int n_max) {
    if (n_max < 0 || n_max > 5) {
        throw std::invalid_argument("tower_terms: supported range is 0 <= n_max <= 5");
    }
    const double log10_e = 0.4342944819032518;
    std::vector<TowerTerm> out;
    double ln_a = 0.0;  // ln a_n, finite through n = 4
    for (int n = 0; n <= n_max; ++n) {
        TowerTerm t;
        t.n = n;
        if (n > 0) {
            ln_a = std::exp(ln_a);  // ln a_n = a_{n-1}
        }
        if (std::isfinite(ln_a)) {
            t.log_value = ln_a;
            t.reciprocal_log10 = -ln_a * log10_e;
            const double a_n = std::exp(ln_a);
            if (std::isfinite(a_n)) {
                t.value = a_n;
            } else {
                t.iterated_log_depth = 1;
            }
        } else {
            // Even ln a_n overflows a double (first happens at n = 5).
            t.iterated_log_depth = 2;
            t.reciprocal_log10 = -std::numeric_limits<double>::infinity();
        }
        out.push_back(t);
    }
    return out;
}

// Sum of the first `terms` reciprocals 1/a_0 + ... + 1/a_{terms-1},
// computed directly in interval arithmetic. terms <= 5.
inline Enclosure tower_partial_Se(int terms, int digits) {
    if (terms < 1 || terms > 5) {
        throw std::invalid_argument("tower_partial_Se: supported range is 1 <= terms <= 5");
    }
    const mpfr_prec_t p = prec_for_digits(digits + 8);
    Interval ln_a = Interval::exact(0L, p);  // ln a_0
    Interval sum = Interval::exact(1L, p);   // 1/a_0
    for (int n = 1; n < terms; ++n) {
        ln_a = exp(ln_a);          // ln a_n = a_{n-1}
        sum = add(sum, exp(neg(ln_a)));
    }
    return Enclosure::certify(std::move(sum), digits);
}

// log10 of the tail bound 2 / b_{n_start} = gamma(2) / b_{n_start}; the
// doubling-tower exponent log2(b_n) is exact through n = 5 (b_4 = 65536).
inline double tower_tail_bound_log10(int n_start) {
    if (n_start < 2) {
        throw std::invalid_argument("tower_tail_bound_log10: requires n_start >= 2");
    }
    const double log10_2 = 0.30102999566398120;
    double log2_b = 1.0;  // log2(b_1)
    for (int n = 1; n < n_start; ++n) {
        log2_b = std::exp2(log2_b);  // log2(b_{n+1}) = b_n
        if (!std::isfinite(log2_b)) {
            return -std::numeric_limits<double>::infinity();
        }
    }
    return log10_2 * (1.0 - log2_b);
}

// S_e = sum of all reciprocals: the five computable terms plus the
// certified tail bracket [0, 2^(-65535)] from comparing against the
// doubling tower term by term.
inline Enclosure tower_constant_Se(int digits) {
    if (digits > 50) {
        throw std::invalid_argument(
            "tower_constant_Se: digits > 50 adds nothing beyond the tail bracket");
    }
    const mpfr_prec_t p = prec_for_digits(digits + 8);
    const Enclosure head = tower_partial_Se(5, digits);

    Real zero(p), tail_hi(p);
    mpfr_set_zero(zero.raw(), 1);
    mpfr_set_ui_2exp(tail_hi.raw(), 1, -65535, MPFR_RNDU);  // exact in MPFR
    const Interval tail = Interval::from_endpoints(std::move(zero), std::move(tail_hi));

    return Enclosure::certify(add(to_prec(head.value, p), tail), digits);
}

}  // namespace borel

#endif  // BOREL_TOWER_HPP
