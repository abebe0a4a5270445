#ifndef BOREL_BERNOULLI_HPP
#define BOREL_BERNOULLI_HPP

// Exact Bernoulli coefficients B_{2k}/(2k)! as GMP rationals, for the
// Euler-Maclaurin correction terms. Computed once via the defining
// recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace borel {

class BernoulliTable {
public:
    static constexpr int max_k = 64;  // B_0 .. B_130

    static const BernoulliTable& instance() {
        static const BernoulliTable table;
        return table;
    }

    // B_{2k}/(2k)!
    const mpq_class& coefficient(int k) const {
        if (k < 0 || k > max_k) {
            throw std::out_of_range("BernoulliTable: k out of range");
        }
        return coeff_[static_cast<size_t>(k)];
    }

private:
    BernoulliTable() {
        const int m_max = 2 * max_k + 2;
        std::vector<mpq_class> b(static_cast<size_t>(m_max) + 1);
        b[0] = 1;
        mpz_class binom;
        for (int m = 1; m <= m_max; ++m) {
            mpq_class acc = 0;
            for (int j = 0; j < m; ++j) {
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned>(m + 1),
                             static_cast<unsigned>(j));
                acc += mpq_class(binom) * b[static_cast<size_t>(j)];
            }
            b[static_cast<size_t>(m)] = -acc / (m + 1);
        }
        coeff_.reserve(max_k + 1);
        mpz_class fact = 1;
        for (int k = 0; k <= max_k; ++k) {
            if (k > 0) {
                fact *= 2 * k - 1;
                fact *= 2 * k;
            }
            coeff_.push_back(b[static_cast<size_t>(2 * k)] / mpq_class(fact));
        }
    }

    std::vector<mpq_class> coeff_;
};

}  // namespace borel

#endif  // BOREL_BERNOULLI_HPP
