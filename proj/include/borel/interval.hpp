#ifndef BOREL_INTERVAL_HPP
#define BOREL_INTERVAL_HPP

// Directed-rounding interval arithmetic over MPFR. Every operation rounds
// the lower endpoint down and the upper endpoint up, so an Interval that
// starts out containing a mathematical value keeps containing it through
// any chain of operations. Enclosure is the user-facing certified result:
// an interval plus the decimal resolution it certifies.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace borel {

inline mpfr_prec_t prec_for_digits(int digits) {
    if (digits < 1) {
        throw std::invalid_argument("prec_for_digits: digits must be >= 1");
    }
    // log2(10) per decimal digit plus guard bits for accumulated rounding.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 64;
}

// Value-semantic wrapper around a single mpfr_t.
class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real() : Real(64) {}
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

private:
    mpfr_t v_;
};

// Decimal rendering with a chosen rounding direction, so that the printed
// string stays on the certified side of the value.
inline std::string to_decimal_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    if (mpfr_nan_p(x)) return "nan";
    if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(x)) return "0";
    const int nd = std::max(digits, 2);
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(nd), x, rnd);
    if (raw == nullptr) throw std::runtime_error("mpfr_get_str failed");
    std::string m(raw);
    mpfr_free_str(raw);
    std::string out;
    if (!m.empty() && m[0] == '-') {
        out += '-';
        m.erase(0, 1);
    }
    // value = 0.m * 10^e; render positionally when the point lands nearby.
    const long point = static_cast<long>(e);
    if (point > -4 && point <= static_cast<long>(m.size())) {
        if (point <= 0) {
            out += "0.";
            out.append(static_cast<size_t>(-point), '0');
            out += m;
        } else {
            out += m.substr(0, static_cast<size_t>(point));
            if (static_cast<size_t>(point) < m.size()) {
                out += '.';
                out += m.substr(static_cast<size_t>(point));
            }
        }
        return out;
    }
    out += m.substr(0, 1);
    if (m.size() > 1) {
        out += '.';
        out += m.substr(1);
    }
    const long ee = point - 1;
    if (ee != 0) {
        out += 'e';
        out += std::to_string(ee);
    }
    return out;
}

class Interval {
public:
    Interval() : lo_(64), hi_(64) {}

    static Interval from_endpoints(Real lo, Real hi) {
        if (mpfr_nan_p(lo.raw()) || mpfr_nan_p(hi.raw())) {
            throw std::invalid_argument("Interval: NaN endpoint");
        }
        if (mpfr_cmp(lo.raw(), hi.raw()) > 0) {
            throw std::invalid_argument("Interval: lo > hi");
        }
        Interval r;
        r.lo_ = std::move(lo);
        r.hi_ = std::move(hi);
        return r;
    }

    // A double is a binary rational: it converts exactly.
    static Interval exact(double x, mpfr_prec_t prec) {
        if (!std::isfinite(x)) throw std::invalid_argument("Interval::exact: non-finite");
        Real lo(prec), hi(prec);
        mpfr_set_d(lo.raw(), x, MPFR_RNDD);
        mpfr_set_d(hi.raw(), x, MPFR_RNDU);
        return from_endpoints(std::move(lo), std::move(hi));
    }

    static Interval exact(long x, mpfr_prec_t prec) {
        Real lo(prec), hi(prec);
        mpfr_set_si(lo.raw(), x, MPFR_RNDD);
        mpfr_set_si(hi.raw(), x, MPFR_RNDU);
        return from_endpoints(std::move(lo), std::move(hi));
    }

    // Interprets the decimal literally (e.g. "1.556" means 1556/1000) and
    // brackets it with one rounding step each way.
    static Interval from_decimal(std::string_view text, mpfr_prec_t prec) {
        const std::string s(text);
        Real lo(prec), hi(prec);
        if (mpfr_set_str(lo.raw(), s.c_str(), 10, MPFR_RNDD) != 0) {
            throw std::invalid_argument("Interval::from_decimal: cannot parse '" + s + "'");
        }
        mpfr_set_str(hi.raw(), s.c_str(), 10, MPFR_RNDU);
        return from_endpoints(std::move(lo), std::move(hi));
    }

    static Interval from_mpq(mpq_srcptr q, mpfr_prec_t prec) {
        Real lo(prec), hi(prec);
        mpfr_set_q(lo.raw(), q, MPFR_RNDD);
        mpfr_set_q(hi.raw(), q, MPFR_RNDU);
        return from_endpoints(std::move(lo), std::move(hi));
    }

    static Interval pi(mpfr_prec_t prec) {
        Real lo(prec), hi(prec);
        mpfr_const_pi(lo.raw(), MPFR_RNDD);
        mpfr_const_pi(hi.raw(), MPFR_RNDU);
        return from_endpoints(std::move(lo), std::move(hi));
    }

    static Interval euler_e(mpfr_prec_t prec) {
        Real one(prec), lo(prec), hi(prec);
        mpfr_set_si(one.raw(), 1, MPFR_RNDN);
        mpfr_exp(lo.raw(), one.raw(), MPFR_RNDD);
        mpfr_exp(hi.raw(), one.raw(), MPFR_RNDU);
        return from_endpoints(std::move(lo), std::move(hi));
    }

    mpfr_srcptr lo() const { return lo_.raw(); }
    mpfr_srcptr hi() const { return hi_.raw(); }
    Real& lo_ref() { return lo_; }
    Real& hi_ref() { return hi_; }
    mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }

    double lo_double() const { return mpfr_get_d(lo_.raw(), MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_.raw(), MPFR_RNDU); }
    double mid_double() const {
        Real m(prec());
        mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
        mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
        return m.to_double();
    }
    Real mid() const {
        Real m(prec());
        mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
        mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
        return m;
    }

    double width_double() const {
        Real w(prec());
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return w.to_double(MPFR_RNDU);
    }

    bool is_positive() const { return mpfr_sgn(lo_.raw()) > 0; }
    bool contains_zero() const {
        return mpfr_sgn(lo_.raw()) <= 0 && mpfr_sgn(hi_.raw()) >= 0;
    }
    bool contains(double x) const {
        return mpfr_cmp_d(lo_.raw(), x) <= 0 && mpfr_cmp_d(hi_.raw(), x) >= 0;
    }
    bool contains(const Interval& o) const {
        return mpfr_cmp(lo_.raw(), o.lo()) <= 0 && mpfr_cmp(hi_.raw(), o.hi()) >= 0;
    }
    bool intersects(const Interval& o) const {
        return mpfr_cmp(lo_.raw(), o.hi()) <= 0 && mpfr_cmp(o.lo(), hi_.raw()) <= 0;
    }
    // Certain comparisons: true only when every point of *this relates to
    // every point of the argument.
    bool certainly_less(const Interval& o) const { return mpfr_cmp(hi_.raw(), o.lo()) < 0; }
    bool certainly_less(double x) const { return mpfr_cmp_d(hi_.raw(), x) < 0; }
    bool certainly_greater(double x) const { return mpfr_cmp_d(lo_.raw(), x) > 0; }
    bool certainly_le(double x) const { return mpfr_cmp_d(hi_.raw(), x) <= 0; }
    bool certainly_ge(double x) const { return mpfr_cmp_d(lo_.raw(), x) >= 0; }

    std::string lo_string(int digits) const { return to_decimal_string(lo_.raw(), digits, MPFR_RNDD); }
    std::string hi_string(int digits) const { return to_decimal_string(hi_.raw(), digits, MPFR_RNDU); }

private:
    Real lo_, hi_;
};

namespace detail {

inline mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
    return std::max(a.prec(), b.prec());
}

}  // namespace detail

// Re-embeds an interval at a (usually higher) working precision. Endpoint
// copies round outward, so containment is preserved either way.
inline Interval to_prec(const Interval& x, mpfr_prec_t p) {
    Real lo(p), hi(p);
    mpfr_set(lo.raw(), x.lo(), MPFR_RNDD);
    mpfr_set(hi.raw(), x.hi(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval add(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = detail::join_prec(a, b);
    Real lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi(), b.hi(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval sub(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = detail::join_prec(a, b);
    Real lo(p), hi(p);
    mpfr_sub(lo.raw(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi(), b.lo(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval neg(const Interval& a) {
    const mpfr_prec_t p = a.prec();
    Real lo(p), hi(p);
    mpfr_neg(lo.raw(), a.hi(), MPFR_RNDD);
    mpfr_neg(hi.raw(), a.lo(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval mul(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = detail::join_prec(a, b);
    Real lo(p), hi(p), t(p);
    mpfr_mul(lo.raw(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(t.raw(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);

    mpfr_mul(hi.raw(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_mul(t.raw(), a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval div(const Interval& a, const Interval& b) {
    if (b.contains_zero()) {
        throw std::domain_error("interval division: denominator contains zero");
    }
    const mpfr_prec_t p = detail::join_prec(a, b);
    Real lo(p), hi(p), t(p);
    mpfr_div(lo.raw(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_div(t.raw(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_div(t.raw(), a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_div(t.raw(), a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);

    mpfr_div(hi.raw(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_div(t.raw(), a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_div(t.raw(), a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_div(t.raw(), a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

inline Interval exp(const Interval& a) {
    const mpfr_prec_t p = a.prec();
    Real lo(p), hi(p);
    mpfr_exp(lo.raw(), a.lo(), MPFR_RNDD);
    mpfr_exp(hi.raw(), a.hi(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval log(const Interval& a) {
    if (!a.is_positive()) {
        throw std::domain_error("interval log: argument not certainly positive");
    }
    const mpfr_prec_t p = a.prec();
    Real lo(p), hi(p);
    mpfr_log(lo.raw(), a.lo(), MPFR_RNDD);
    mpfr_log(hi.raw(), a.hi(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo()) < 0) {
        throw std::domain_error("interval sqrt: argument not certainly nonnegative");
    }
    const mpfr_prec_t p = a.prec();
    Real lo(p), hi(p);
    mpfr_sqrt(lo.raw(), a.lo(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), a.hi(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval abs(const Interval& a) {
    const mpfr_prec_t p = a.prec();
    if (mpfr_sgn(a.lo()) >= 0) return a;
    Real lo(p), hi(p), t(p);
    if (mpfr_sgn(a.hi()) <= 0) {
        mpfr_neg(lo.raw(), a.hi(), MPFR_RNDD);
        mpfr_neg(hi.raw(), a.lo(), MPFR_RNDU);
    } else {
        mpfr_set_zero(lo.raw(), 1);
        mpfr_neg(t.raw(), a.lo(), MPFR_RNDU);
        mpfr_max(hi.raw(), t.raw(), a.hi(), MPFR_RNDU);
    }
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

// x^y over a box with x > 0: for each fixed x the map is monotone in y and
// for each fixed y monotone in x, so the extremes sit on corners.
inline Interval pow(const Interval& x, const Interval& y) {
    if (!x.is_positive()) {
        throw std::domain_error("interval pow: base not certainly positive");
    }
    const mpfr_prec_t p = detail::join_prec(x, y);
    Real lo(p), hi(p), t(p);
    mpfr_pow(lo.raw(), x.lo(), y.lo(), MPFR_RNDD);
    mpfr_pow(t.raw(), x.lo(), y.hi(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_pow(t.raw(), x.hi(), y.lo(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_pow(t.raw(), x.hi(), y.hi(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);

    mpfr_pow(hi.raw(), x.lo(), y.lo(), MPFR_RNDU);
    mpfr_pow(t.raw(), x.lo(), y.hi(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_pow(t.raw(), x.hi(), y.lo(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_pow(t.raw(), x.hi(), y.hi(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval pow(const Interval& x, long n) {
    const mpfr_prec_t p = x.prec();
    if (n >= 0 && mpfr_sgn(x.lo()) >= 0) {
        Real lo(p), hi(p);
        mpfr_pow_si(lo.raw(), x.lo(), n, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), x.hi(), n, MPFR_RNDU);
        return Interval::from_endpoints(std::move(lo), std::move(hi));
    }
    if (n < 0 && mpfr_sgn(x.lo()) > 0) {
        Real lo(p), hi(p);
        mpfr_pow_si(lo.raw(), x.hi(), n, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), x.lo(), n, MPFR_RNDU);
        return Interval::from_endpoints(std::move(lo), std::move(hi));
    }
    if (n >= 0) {
        // General integer power with a possibly signed base.
        if (n % 2 == 0) {
            Interval a = abs(x);
            Real lo(p), hi(p);
            mpfr_pow_si(lo.raw(), a.lo(), n, MPFR_RNDD);
            mpfr_pow_si(hi.raw(), a.hi(), n, MPFR_RNDU);
            return Interval::from_endpoints(std::move(lo), std::move(hi));
        }
        Real lo(p), hi(p);
        mpfr_pow_si(lo.raw(), x.lo(), n, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), x.hi(), n, MPFR_RNDU);
        return Interval::from_endpoints(std::move(lo), std::move(hi));
    }
    throw std::domain_error("interval pow: negative power of interval touching zero");
}

// [-m, m] where m is an upper bound for a remainder magnitude.
inline Interval symmetric_bracket(const Real& magnitude, mpfr_prec_t prec) {
    Real lo(prec), hi(prec);
    mpfr_set(hi.raw(), magnitude.raw(), MPFR_RNDU);
    mpfr_neg(lo.raw(), magnitude.raw(), MPFR_RNDD);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

// Certified result: the true value lies in `value`, and the width obeys
// width <= 10^(-digits+2).
struct Enclosure {
    Interval value;
    int digits = 0;

    double lo_double() const { return value.lo_double(); }
    double hi_double() const { return value.hi_double(); }
    double mid_double() const { return value.mid_double(); }
    double width() const { return value.width_double(); }
    std::string lo_string() const { return value.lo_string(digits); }
    std::string hi_string() const { return value.hi_string(digits); }

    // Largest digit count d with width <= 10^(-d+2), capped at `requested`.
    static Enclosure certify(Interval v, int requested) {
        const double w = v.width_double();
        int d = requested;
        if (w > 0) {
            const int achieved = static_cast<int>(std::floor(2.0 - std::log10(w)));
            d = std::min(requested, achieved);
        }
        d = std::max(d, 1);
        return Enclosure{std::move(v), d};
    }

    bool meets_width_contract() const {
        return width() <= std::pow(10.0, -digits + 2);
    }
};

}  // namespace borel

#endif  // BOREL_INTERVAL_HPP
