#ifndef BOREL_MONOTONE_SPLINE_HPP
#define BOREL_MONOTONE_SPLINE_HPP

// Monotone cubic interpolation (Fritsch-Carlson tangent limiting) through
// tabulated nondecreasing data, with linear extrapolation outside the
// knots. Used as a tabulated growth function for the lemma engine.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace borel {

class MonotoneSpline {
public:
    MonotoneSpline(std::vector<double> xs, std::vector<double> ys)
        : x_(std::move(xs)), y_(std::move(ys)) {
        const size_t n = x_.size();
        if (n < 2 || y_.size() != n) {
            throw std::invalid_argument("MonotoneSpline: need >= 2 matching knots");
        }
        for (size_t i = 0; i + 1 < n; ++i) {
            if (!(x_[i] < x_[i + 1])) {
                throw std::invalid_argument("MonotoneSpline: x must be strictly increasing");
            }
            if (y_[i + 1] < y_[i]) {
                throw std::invalid_argument("MonotoneSpline: y must be nondecreasing");
            }
        }

        std::vector<double> d(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) {
            d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        }
        m_.assign(n, 0.0);
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (size_t i = 1; i + 1 < n; ++i) {
            m_[i] = (d[i - 1] + d[i]) / 2.0;
        }
        for (size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                m_[i] = 0.0;
                m_[i + 1] = 0.0;
                continue;
            }
            const double a = m_[i] / d[i];
            const double b = m_[i + 1] / d[i];
            const double k = a * a + b * b;
            if (k > 9.0) {
                const double tau = 3.0 / std::sqrt(k);
                m_[i] = tau * a * d[i];
                m_[i + 1] = tau * b * d[i];
            }
        }
    }

    double operator()(double r) const {
        if (r <= x_.front()) return y_.front() + m_.front() * (r - x_.front());
        if (r >= x_.back()) return y_.back() + m_.back() * (r - x_.back());
        const size_t i =
            static_cast<size_t>(std::upper_bound(x_.begin(), x_.end(), r) - x_.begin()) - 1;
        const double h = x_[i + 1] - x_[i];
        const double t = (r - x_[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] +
               (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * m_[i + 1];
    }

private:
    std::vector<double> x_, y_, m_;
};

}  // namespace borel

#endif  // BOREL_MONOTONE_SPLINE_HPP
