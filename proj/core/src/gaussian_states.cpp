/**
 * @file gaussian_states.cpp
 * @brief Closed forms for coherent states and their pairwise integrals.
 */

#include "gaborframe/gaussian_states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gf {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(const FrameParams& params, std::size_t got, const char* what) {
    if (static_cast<int>(got) != params.d) {
        throw ConfigError(std::string(what) + ": expected length d = " +
                          std::to_string(params.d) + ", got " +
                          std::to_string(got));
    }
}

/** i^(e mod 4) as an exact complex unit. */
Complex unit_power_of_i(std::int64_t e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

} // namespace

Complex DerivativePolynomial::operator()(Complex z) const {
    Complex acc(0.0, 0.0);
    for (std::size_t i = coefficients.size(); i-- > 0;) {
        acc = acc * z + coefficients[i];
    }
    return acc;
}

Complex evaluate_state(const GaussianState& state, std::span<const double> x) {
    const FrameParams& params = state.params;
    params.validate();
    check_dim(params, x.size(), "evaluate_state");

    const double spacing = std::sqrt(kPi / params.k);
    double quad = 0.0;  // |x - x^{k,m}|^2
    double phase = 0.0; // k (x - x^{k,m}) . xi^{k,n}
    for (int j = 0; j < params.d; ++j) {
        const double dx = x[j] - spacing * state.idx.m[j];
        quad += dx * dx;
        phase += params.k * dx * spacing * state.idx.n[j];
    }
    const double amp = std::pow(params.k / kPi, 0.25 * params.d) *
                       std::exp(-0.5 * params.k * quad);
    return amp * Complex(std::cos(phase), std::sin(phase));
}

DerivativePolynomial derivative_polynomial(int p) {
    if (p < 0) {
        throw ConfigError("derivative_polynomial: p must be >= 0");
    }
    if (p > kDerivativeOrderMax) {
        throw ConfigError("derivative_polynomial: p = " + std::to_string(p) +
                          " exceeds maximum " +
                          std::to_string(kDerivativeOrderMax) +
                          " (coefficients grow factorially)");
    }
    // Q_0 = 1; Q_{p+1}(z) = z Q_p(z) - Q_p'(z)  (probabilists' Hermite He_p).
    std::vector<double> q{1.0};
    for (int step = 0; step < p; ++step) {
        std::vector<double> next(q.size() + 1, 0.0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            next[i + 1] += q[i]; // z * Q_p
            if (i >= 1) {
                next[i - 1] -= static_cast<double>(i) * q[i]; // - Q_p'
            }
        }
        q = std::move(next);
    }
    DerivativePolynomial poly;
    poly.degree = p;
    poly.coefficients = std::move(q);
    return poly;
}

Complex evaluate_state_derivative(const GaussianState& state,
                                  std::span<const int> a,
                                  std::span<const double> x) {
    const FrameParams& params = state.params;
    params.validate();
    check_dim(params, a.size(), "evaluate_state_derivative (multi-index)");
    check_dim(params, x.size(), "evaluate_state_derivative (point)");

    int order = 0;
    for (int aj : a) {
        if (aj < 0) throw ConfigError("evaluate_state_derivative: negative order");
        order += aj;
    }
    if (order > kDerivativeOrderMax) {
        throw ConfigError("evaluate_state_derivative: [a] = " +
                          std::to_string(order) + " exceeds maximum " +
                          std::to_string(kDerivativeOrderMax));
    }

    const double spacing = std::sqrt(kPi / params.k);
    const double sqrt_k = std::sqrt(params.k);
    Complex prefactor = std::pow(sqrt_k, order);
    for (int j = 0; j < params.d; ++j) {
        if (a[j] == 0) continue;
        const Complex z(sqrt_k * (spacing * state.idx.m[j] - x[j]),
                        sqrt_k * spacing * state.idx.n[j]);
        prefactor *= derivative_polynomial(a[j])(z);
    }
    return prefactor * evaluate_state(state, x);
}

Complex state_inner_product(const FrameParams& params,
                            const LatticeIndex& a,
                            const LatticeIndex& b) {
    params.validate();
    std::int64_t e = 0;    // phase exponent: sum_j (m'_j - m_j)(n_j + n'_j)
    std::int64_t dist2 = 0;
    for (int j = 0; j < params.d; ++j) {
        const std::int64_t dm = a.m[j] - b.m[j];
        const std::int64_t dn = a.n[j] - b.n[j];
        e += (-dm) * (a.n[j] + b.n[j]);
        dist2 += dm * dm + dn * dn;
    }
    return unit_power_of_i(e) * std::exp(-0.25 * kPi * static_cast<double>(dist2));
}

double hermite_h(int ell, double t) {
    // Physicists' Hermite: H_0 = 1, H_1 = 2t, H_{l+1} = 2t H_l - 2l H_{l-1}.
    double h_prev = 1.0;
    if (ell == 0) return h_prev;
    double h = 2.0 * t;
    for (int l = 1; l < ell; ++l) {
        const double h_next = 2.0 * t * h - 2.0 * l * h_prev;
        h_prev = h;
        h = h_next;
    }
    return h;
}

Complex monomial_shift_inner_product(const FrameParams& params,
                                     const LatticeIndex& a,
                                     const LatticeIndex& b,
                                     int axis,
                                     int ell) {
    params.validate();
    if (axis < 0 || axis >= params.d) {
        throw ConfigError("monomial_shift_inner_product: axis out of range");
    }
    if (ell < 0 || ell > kDerivativeOrderMax) {
        throw ConfigError("monomial_shift_inner_product: order out of range");
    }
    const Complex base = state_inner_product(params, a, b);
    if (ell == 0) return base;

    const double dn = static_cast<double>(a.n[axis] - b.n[axis]);
    const double hermite = hermite_h(ell, 0.5 * std::sqrt(kPi) * dn);
    const Complex scale =
        std::pow(Complex(0.0, -0.5 / std::sqrt(params.k)), ell);
    return base * scale * hermite;
}

FourierImage fourier_transform_state(const FrameParams& params,
                                     const LatticeIndex& idx) {
    params.validate();
    std::int64_t mn = 0;
    FourierImage out;
    for (int j = 0; j < params.d; ++j) {
        mn += static_cast<std::int64_t>(idx.m[j]) * idx.n[j];
        out.image.m[j] = idx.n[j];
        out.image.n[j] = -idx.m[j];
    }
    out.phase = (mn % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
    return out;
}

} // namespace gf
