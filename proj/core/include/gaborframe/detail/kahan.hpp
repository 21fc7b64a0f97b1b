/**
 * @file kahan.hpp
 * @brief Compensated (Kahan) summation helpers.
 *
 * @details All pairwise reductions in the library (Gram sums, quadrature,
 * norm accumulations) use compensated summation so results are insensitive
 * to reduction order at the 1e-12 level demanded by the reproducibility
 * requirements.
 */

#pragma once

#include <complex>

namespace gf::detail {

/** @brief Kahan-compensated accumulator for doubles. */
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/** @brief Componentwise-compensated accumulator for complex doubles. */
class KahanComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_;
    KahanSum im_;
};

} // namespace gf::detail
