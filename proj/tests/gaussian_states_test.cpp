/**
 * @file gaussian_states_test.cpp
 * @brief Closed-form state evaluation, derivatives, Gram entries and
 *        Fourier images, validated against quadrature and finite
 *        differences that never touch the closed forms under test.
 */

#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "gaborframe/core_lattice.hpp"
#include "gaborframe/errors.hpp"
#include "gaborframe/gaussian_states.hpp"

using namespace gf;

namespace {

constexpr double kPi = std::numbers::pi;

/**
 * Trapezoid quadrature of f over [-L, L]^d with step h. For integrands of
 * Gaussian type the trapezoid rule converges faster than any power of h
 * (Euler-Maclaurin: all boundary terms vanish), so with L generous and
 * h ~ 5e-3 the oracle is accurate to well below 1e-12 -- independent of
 * every closed form in the module under test.
 */
template <typename F>
Complex trapezoid_1d(F&& f, double L, double h) {
    const auto steps = static_cast<long>(std::ceil(2.0 * L / h));
    Complex acc(0.0, 0.0);
    for (long i = 0; i <= steps; ++i) {
        const double x = -L + (2.0 * L) * static_cast<double>(i) /
                                  static_cast<double>(steps);
        Complex v = f(x);
        if (i == 0 || i == steps) v *= 0.5;
        acc += v;
    }
    return acc * (2.0 * L / static_cast<double>(steps));
}

template <typename F>
Complex trapezoid_2d(F&& f, double L, double h) {
    const auto steps = static_cast<long>(std::ceil(2.0 * L / h));
    const double dx = 2.0 * L / static_cast<double>(steps);
    Complex acc(0.0, 0.0);
    for (long i = 0; i <= steps; ++i) {
        const double x0 = -L + dx * static_cast<double>(i);
        Complex row(0.0, 0.0);
        for (long j = 0; j <= steps; ++j) {
            const double x1 = -L + dx * static_cast<double>(j);
            Complex v = f(x0, x1);
            if (j == 0 || j == steps) v *= 0.5;
            row += v;
        }
        if (i == 0 || i == steps) row *= 0.5;
        acc += row;
    }
    return acc * (dx * dx);
}

/** (u, v) = integral of u conj(v): quadrature oracle for d = 1 pairs. */
Complex quad_inner_product_1d(const FrameParams& params, const LatticeIndex& a,
                              const LatticeIndex& b) {
    const GaussianState sa{params, a};
    const GaussianState sb{params, b};
    const double spacing = std::sqrt(kPi / params.k);
    const double reach =
        spacing * std::max({std::abs(a.m[0]), std::abs(b.m[0]), 1});
    const double L = reach + 14.0 / std::sqrt(params.k);
    return trapezoid_1d(
        [&](double x) {
            const std::array<double, 1> pt{x};
            return evaluate_state(sa, pt) * std::conj(evaluate_state(sb, pt));
        },
        L, 0.005);
}

} // namespace

TEST_SUITE("gaussian_states") {

TEST_CASE("evaluate_state matches the defining formula pointwise") {
    const FrameParams params{4.0, 1};
    const double spacing = std::sqrt(kPi / 4.0);

    // Peak of the ground state: (k/pi)^{d/4} at the center.
    const GaussianState ground{params, LatticeIndex::d1(0, 0)};
    const std::array<double, 1> origin{0.0};
    CHECK(evaluate_state(ground, origin).real() ==
          doctest::Approx(std::pow(4.0 / kPi, 0.25)).epsilon(1e-15));
    CHECK(evaluate_state(ground, origin).imag() == 0.0);

    // Generic index: modulus and phase assembled by hand.
    const GaussianState state{params, LatticeIndex::d1(2, -1)};
    const std::array<double, 1> x{0.7};
    const double dx = 0.7 - 2.0 * spacing;
    const double amp =
        std::pow(4.0 / kPi, 0.25) * std::exp(-0.5 * 4.0 * dx * dx);
    const double phase = 4.0 * dx * (-1.0) * spacing;
    const Complex expected = amp * Complex(std::cos(phase), std::sin(phase));
    const Complex got = evaluate_state(state, x);
    CHECK(std::abs(got - expected) <= 1e-14);

    // Unit norm is k-independent: quadrature of |Psi|^2 equals 1.
    for (const double k : {1.0, 4.0}) {
        const FrameParams pk{k, 1};
        const GaussianState s{pk, LatticeIndex::d1(1, 2)};
        const Complex nrm = quad_inner_product_1d(pk, s.idx, s.idx);
        CHECK(nrm.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(nrm.imag()) <= 1e-12);
    }
}

TEST_CASE("derivative_polynomial produces probabilists' Hermite") {
    // Q_{p+1} = z Q_p - Q_p': Q_0 = 1, Q_1 = z, Q_2 = z^2 - 1, Q_3 = z^3 - 3z.
    const auto q0 = derivative_polynomial(0);
    CHECK(q0.degree == 0);
    CHECK(q0.coefficients == std::vector<double>{1.0});

    const auto q1 = derivative_polynomial(1);
    CHECK(q1.coefficients == std::vector<double>{0.0, 1.0});

    const auto q2 = derivative_polynomial(2);
    CHECK(q2.coefficients == std::vector<double>{-1.0, 0.0, 1.0});

    const auto q3 = derivative_polynomial(3);
    CHECK(q3.coefficients == std::vector<double>{0.0, -3.0, 0.0, 1.0});

    // Q_4 = z^4 - 6 z^2 + 3.
    const auto q4 = derivative_polynomial(4);
    CHECK(q4.coefficients == std::vector<double>{3.0, 0.0, -6.0, 0.0, 1.0});

    // Horner evaluation: Q_3(2 + i) = (2+i)^3 - 3(2+i) = -4 + 8i.
    const Complex v = q3(Complex(2.0, 1.0));
    CHECK(v.real() == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(8.0).epsilon(1e-15));

    CHECK_THROWS_AS(derivative_polynomial(kDerivativeOrderMax + 1), ConfigError);
    CHECK_THROWS_AS(derivative_polynomial(-1), ConfigError);
}

TEST_CASE("evaluate_state_derivative agrees with central differences") {
    // Chain: compare order-a against a symmetric difference of order-(a-e_j),
    // which pins both the polynomial recursion and the sign convention.
    const FrameParams params{4.0, 2};
    const GaussianState state{params, LatticeIndex::d2(1, -1, 0, 2)};
    const double h = 1e-4 / std::sqrt(params.k);
    const std::array<double, 2> base{0.31, -0.57};

    const std::vector<std::array<int, 2>> orders = {
        {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}, {3, 1}};
    for (const auto& a : orders) {
        const int axis = (a[0] > 0) ? 0 : 1;
        std::array<int, 2> lower = a;
        lower[axis] -= 1;

        std::array<double, 2> plus = base;
        std::array<double, 2> minus = base;
        plus[axis] += h;
        minus[axis] -= h;
        const Complex fd = (evaluate_state_derivative(state, lower, plus) -
                            evaluate_state_derivative(state, lower, minus)) /
                           (2.0 * h);
        const Complex ana = evaluate_state_derivative(state, a, base);
        CHECK(std::abs(fd - ana) <= 1e-6 * std::max(1.0, std::abs(ana)));
    }
}

TEST_CASE("evaluate_state_derivative rejects bad requests") {
    const FrameParams params{1.0, 1};
    const GaussianState state{params, LatticeIndex::d1(0, 0)};
    const std::array<double, 1> x{0.0};
    const std::array<int, 1> too_high{kDerivativeOrderMax + 1};
    CHECK_THROWS_AS(evaluate_state_derivative(state, too_high, x), ConfigError);
    const std::array<int, 1> negative{-1};
    CHECK_THROWS_AS(evaluate_state_derivative(state, negative, x), ConfigError);
    const std::array<int, 2> wrong_dim{1, 0};
    CHECK_THROWS_AS(evaluate_state_derivative(state, wrong_dim, x), ConfigError);
}

TEST_CASE("state_inner_product: worked example and exact structure") {
    const FrameParams params{1.0, 1};

    // ((m,n) = (1,1) against the ground state): -i e^{-pi/2}. The value
    // -0.20787957635076193 is e^{-pi/2} evaluated directly.
    const Complex g = state_inner_product(params, LatticeIndex::d1(1, 1),
                                          LatticeIndex::d1(0, 0));
    CHECK(g.real() == doctest::Approx(0.0));
    CHECK(g.imag() == doctest::Approx(-0.20787957635076193).epsilon(1e-15));

    // Normalization and Hermitian symmetry.
    const LatticeIndex a = LatticeIndex::d1(2, -1);
    const LatticeIndex b = LatticeIndex::d1(-1, 3);
    CHECK(state_inner_product(params, a, a) == Complex(1.0, 0.0));
    CHECK(state_inner_product(params, a, b) ==
          std::conj(state_inner_product(params, b, a)));

    // Modulus depends only on the index distance.
    const double dist2 = static_cast<double>(index_dist2(a, b));
    CHECK(std::abs(state_inner_product(params, a, b)) ==
          doctest::Approx(std::exp(-0.25 * kPi * dist2)).epsilon(1e-14));

    // The Gram matrix is exactly k-independent (bit-for-bit).
    const FrameParams scaled{7.25, 1};
    CHECK(state_inner_product(params, a, b) ==
          state_inner_product(scaled, a, b));
}

TEST_CASE("state_inner_product matches quadrature in d = 1") {
    const std::vector<std::pair<LatticeIndex, LatticeIndex>> pairs = {
        {LatticeIndex::d1(1, 1), LatticeIndex::d1(0, 0)},
        {LatticeIndex::d1(0, 0), LatticeIndex::d1(1, 1)},
        {LatticeIndex::d1(2, -1), LatticeIndex::d1(0, 1)},
        {LatticeIndex::d1(-1, 2), LatticeIndex::d1(1, -1)},
        {LatticeIndex::d1(3, 0), LatticeIndex::d1(0, 0)},
        {LatticeIndex::d1(0, 3), LatticeIndex::d1(0, -2)},
    };
    for (const double k : {1.0, 4.0}) {
        const FrameParams params{k, 1};
        for (const auto& [a, b] : pairs) {
            const Complex closed = state_inner_product(params, a, b);
            const Complex quad = quad_inner_product_1d(params, a, b);
            CHECK(std::abs(closed - quad) <= 1e-11);
        }
    }
}

TEST_CASE("state_inner_product matches quadrature in d = 2") {
    const FrameParams params{1.0, 2};
    const LatticeIndex a = LatticeIndex::d2(1, 0, 0, 1);
    const LatticeIndex b = LatticeIndex::d2(0, 1, 1, 0);
    const GaussianState sa{params, a};
    const GaussianState sb{params, b};
    const double L = std::sqrt(kPi) + 13.0;
    const Complex quad = trapezoid_2d(
        [&](double x0, double x1) {
            const std::array<double, 2> pt{x0, x1};
            return evaluate_state(sa, pt) * std::conj(evaluate_state(sb, pt));
        },
        L, 0.02);
    CHECK(std::abs(state_inner_product(params, a, b) - quad) <= 1e-10);
}

TEST_CASE("hermite_h satisfies the explicit low orders") {
    const double t = 0.7;
    CHECK(hermite_h(0, t) == 1.0);
    CHECK(hermite_h(1, t) == doctest::Approx(2.0 * t).epsilon(1e-15));
    CHECK(hermite_h(2, t) ==
          doctest::Approx(4.0 * t * t - 2.0).epsilon(1e-15));
    CHECK(hermite_h(3, t) ==
          doctest::Approx(8.0 * t * t * t - 12.0 * t).epsilon(1e-15));
    CHECK(hermite_h(4, t) ==
          doctest::Approx(16.0 * std::pow(t, 4) - 48.0 * t * t + 12.0)
              .epsilon(1e-14));
}

TEST_CASE("monomial_shift_inner_product: diagonal moments and quadrature") {
    // Diagonal, ell = 2: ((x - center)^2 weight) = 1/(2k), the variance of
    // a Gaussian of width k^{-1/2}.
    for (const double k : {1.0, 4.0}) {
        const FrameParams params{k, 1};
        const LatticeIndex o = LatticeIndex::d1(0, 0);
        const Complex m2 = monomial_shift_inner_product(params, o, o, 0, 2);
        CHECK(m2.real() == doctest::Approx(0.5 / k).epsilon(1e-14));
        // (-i/(2 sqrt k))^2 is computed via complex pow (exp/log), which
        // leaves ~1e-16 of imaginary roundoff; it is not bit-exact zero.
        CHECK(std::abs(m2.imag()) <= 1e-15);
        // Odd moments vanish on the diagonal.
        CHECK(std::abs(monomial_shift_inner_product(params, o, o, 0, 1)) ==
              0.0);
        CHECK(std::abs(monomial_shift_inner_product(params, o, o, 0, 3)) ==
              0.0);
    }

    // Off-diagonal orders 0..3 against the defining integral
    // ((tbar - x)^ell Psi_a, Psi_b), tbar the midpoint of the centers.
    const FrameParams params{1.0, 1};
    const LatticeIndex a = LatticeIndex::d1(2, -1);
    const LatticeIndex b = LatticeIndex::d1(0, 1);
    const GaussianState sa{params, a};
    const GaussianState sb{params, b};
    const double spacing = std::sqrt(kPi);
    const double tbar = 0.5 * spacing * (a.m[0] + b.m[0]);
    for (int ell = 0; ell <= 3; ++ell) {
        const Complex quad = trapezoid_1d(
            [&](double x) {
                const std::array<double, 1> pt{x};
                return std::pow(tbar - x, ell) * evaluate_state(sa, pt) *
                       std::conj(evaluate_state(sb, pt));
            },
            2.0 * spacing + 14.0, 0.005);
        const Complex closed =
            monomial_shift_inner_product(params, a, b, 0, ell);
        CHECK(std::abs(closed - quad) <= 1e-11);
    }

    CHECK_THROWS_AS(monomial_shift_inner_product(params, a, b, 1, 1),
                    ConfigError);
    CHECK_THROWS_AS(
        monomial_shift_inner_product(params, a, b, 0, kDerivativeOrderMax + 1),
        ConfigError);
}

TEST_CASE("fourier_transform_state: index swap, phase, and quadrature") {
    const FrameParams params{1.0, 1};

    // F_k Psi_{m,n} = (-1)^{m n} Psi_{n,-m}.
    const FourierImage img = fourier_transform_state(params, LatticeIndex::d1(1, 2));
    CHECK(img.image == LatticeIndex::d1(2, -1));
    CHECK(img.phase == Complex(1.0, 0.0)); // (-1)^2

    const FourierImage odd = fourier_transform_state(params, LatticeIndex::d1(1, 1));
    CHECK(odd.image == LatticeIndex::d1(1, -1));
    CHECK(odd.phase == Complex(-1.0, 0.0));

    // Applying the transform twice is the parity operator: index (-m, -n),
    // accumulated phase (+1) since (-1)^{mn} (-1)^{n(-m)} = 1.
    const LatticeIndex start = LatticeIndex::d2(2, -1, 3, 1);
    const FrameParams p2{1.0, 2};
    const FourierImage once = fourier_transform_state(p2, start);
    const FourierImage twice = fourier_transform_state(p2, once.image);
    CHECK(twice.image == LatticeIndex::d2(-2, 1, -3, -1));
    CHECK(once.phase * twice.phase == Complex(1.0, 0.0));

    // Defining integral F_k v(xi) = (k/2pi)^{1/2} int v(x) e^{-ik x xi} dx,
    // checked at a few frequencies against the claimed image state.
    const LatticeIndex idx = LatticeIndex::d1(1, 2);
    const FourierImage image = fourier_transform_state(params, idx);
    const GaussianState source{params, idx};
    const GaussianState target{params, image.image};
    for (const double xi : {0.0, 0.9, -1.7}) {
        const Complex direct =
            std::sqrt(1.0 / (2.0 * kPi)) *
            trapezoid_1d(
                [&](double x) {
                    const std::array<double, 1> pt{x};
                    return evaluate_state(source, pt) *
                           Complex(std::cos(x * xi), -std::sin(x * xi));
                },
                std::sqrt(kPi) + 14.0, 0.005);
        const std::array<double, 1> xpt{xi};
        const Complex claimed = image.phase * evaluate_state(target, xpt);
        CHECK(std::abs(direct - claimed) <= 1e-11);
    }
}

} // TEST_SUITE
