/**
 * @file sobolev_norms_test.cpp
 * @brief Weighted and plain Sobolev norms against Gaussian closed forms,
 *        coordinate-weighted mixtures, and the Fourier-side cross-check.
 */

#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "gaborframe/core_lattice.hpp"
#include "gaborframe/errors.hpp"
#include "gaborframe/function_rep.hpp"
#include "gaborframe/sobolev_norms.hpp"

using namespace gf;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("sobolev_norms") {

TEST_CASE("NormSpec validation") {
    NormSpec spec;
    spec.p = 0;
    CHECK_NOTHROW(spec.validate());
    spec.p = kSobolevOrderMax;
    CHECK_NOTHROW(spec.validate());
    spec.p = kSobolevOrderMax + 1;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec.p = -1;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("weighted norm of the ground state: Gaussian closed forms") {
    /*
     * For u = Psi_{k,0,0} (d = 1) every contribution is a Gaussian moment:
     *   ||u||^2 = 1,  || x u ||^2 = 1/(2k),  k^{-2} ||u'||^2 = 1/(2k),
     * so ||u||_{H^1_k hat}^2 = 1 + 1/k. At order 2 the new terms
     * (x^2 u, x u', u'') sum to 9/(4 k^2):
     *   ||u||_{H^2_k hat}^2 = 1 + 1/k + 9/(4 k^2)   (= 4.25 at k = 1).
     */
    for (const double k : {1.0, 4.0}) {
        const FrameParams params{k, 1};
        const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));

        const double h0 = weighted_sobolev_norm(u, default_norm_spec(u, 0));
        CHECK(h0 == doctest::Approx(1.0).epsilon(1e-12));

        const double h1 = weighted_sobolev_norm(u, default_norm_spec(u, 1));
        CHECK(h1 == doctest::Approx(std::sqrt(1.0 + 1.0 / k)).epsilon(1e-12));

        const double h2 = weighted_sobolev_norm(u, default_norm_spec(u, 2));
        CHECK(h2 ==
              doctest::Approx(std::sqrt(1.0 + 1.0 / k + 2.25 / (k * k)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("weighted norm of a shifted state picks up the center") {
    // u = Psi_{k,m,0}: || x u ||^2 = x_m^2 + 1/(2k) with x_m = sqrt(pi/k) m,
    // so ||u||_{H^1_k hat}^2 = 1 + x_m^2 + 1/k.
    for (const double k : {1.0, 4.0}) {
        const FrameParams params{k, 1};
        const auto u = GaussianMixture::single(params, LatticeIndex::d1(3, 0));
        const double xm = std::sqrt(kPi / k) * 3.0;
        const double h1 = weighted_sobolev_norm(u, default_norm_spec(u, 1));
        CHECK(h1 ==
              doctest::Approx(std::sqrt(1.0 + xm * xm + 1.0 / k))
                  .epsilon(1e-12));
    }
}

TEST_CASE("plain Sobolev norm is the q = 0 part") {
    // ||Psi_00||_{H^1_k}^2 = 1 + k^{-2} ||u'||^2 = 1 + 1/(2k).
    for (const double k : {1.0, 4.0}) {
        const FrameParams params{k, 1};
        const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));
        const double h1 = sobolev_norm(u, default_norm_spec(u, 1));
        CHECK(h1 ==
              doctest::Approx(std::sqrt(1.0 + 0.5 / k)).epsilon(1e-12));
        // The plain norm is dominated by the weighted one.
        CHECK(h1 <= weighted_sobolev_norm(u, default_norm_spec(u, 1)) + 1e-12);
    }
}

TEST_CASE("weighted norm in d = 2 separates into axis contributions") {
    // Psi_00 in d = 2 at order 1: ||u||^2 = 1; || |x| u ||^2 = 2 * 1/(2k)
    // (two axes); two derivative terms of 1/(2k) each:
    // total = 1 + 2/k.
    const FrameParams params{1.0, 2};
    const auto u = GaussianMixture::single(params, LatticeIndex::d2(0, 0, 0, 0));
    const double h1 = weighted_sobolev_norm(u, default_norm_spec(u, 1));
    CHECK(h1 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("CoordinateMixture represents x * u exactly") {
    const FrameParams params{1.0, 1};
    const auto u = GaussianMixture::single(params, LatticeIndex::d1(1, -2));
    const CoordinateMixture xu = multiply_by_coordinate(u, 0);

    // Pointwise: evaluate(xu, x) = x * u(x).
    for (const double x : {-0.3, 0.0, 1.9}) {
        const std::array<double, 1> pt{x};
        CHECK(std::abs(evaluate(xu, pt) - x * u.evaluate(pt)) <= 1e-14);
    }

    // Norm at p = 0: || x Psi_00 || = 1/sqrt(2k) for the centered state.
    for (const double k : {1.0, 4.0}) {
        const FrameParams pk{k, 1};
        const auto ground = GaussianMixture::single(pk, LatticeIndex::d1(0, 0));
        const CoordinateMixture xg = multiply_by_coordinate(ground, 0);
        const double n0 =
            weighted_sobolev_norm(xg, default_norm_spec(ground, 0));
        CHECK(n0 == doctest::Approx(1.0 / std::sqrt(2.0 * k)).epsilon(1e-12));
    }

    // H^1_k hat of x * Psi_00 at k = 1: moments give
    // ||xu||^2 = 1/2, ||x^2 u||^2 = 3/4, ||d(xu)||^2 = ||u + x u'||^2 = 3/4
    // (weighted by k^{-2} = 1): total 2 -> sqrt(2).
    const FrameParams pk{1.0, 1};
    const auto ground = GaussianMixture::single(pk, LatticeIndex::d1(0, 0));
    const CoordinateMixture xg = multiply_by_coordinate(ground, 0);
    const double n1 = weighted_sobolev_norm(xg, default_norm_spec(ground, 1));
    CHECK(n1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    CHECK_THROWS_AS(multiply_by_coordinate(u, 1), ConfigError); // axis >= d
}

TEST_CASE("Fourier-side norm agrees with the space side") {
    for (const double k : {1.0, 4.0}) {
        const FrameParams params{k, 1};
        GaussianMixture u(params);
        u.set_term(LatticeIndex::d1(0, 0), Complex(0.8, 0.0));
        u.set_term(LatticeIndex::d1(1, 1), Complex(0.0, -0.6));
        const auto grid = sample_to_grid(u, default_grid_spec(u));
        for (int p = 0; p <= 2; ++p) {
            const FourierNormResult fr = sobolev_norm_fourier(grid, p);
            CHECK_FALSE(fr.aliasing_warning);
            CHECK(fr.tail_fraction <= 1e-8);
            const double space = sobolev_norm(u, default_norm_spec(u, p));
            CHECK(fr.value == doctest::Approx(space).epsilon(1e-8));
        }
    }

    // Ground state at k = 1, p = 1: H^1_k norm is sqrt(3/2) exactly.
    const FrameParams params{1.0, 1};
    const auto g = GaussianMixture::single(params, LatticeIndex::d1(0, 0));
    const auto grid = sample_to_grid(g, default_grid_spec(g));
    CHECK(sobolev_norm_fourier(grid, 1).value ==
          doctest::Approx(std::sqrt(1.5)).epsilon(1e-10));
}

TEST_CASE("coarse grids trigger the aliasing warning") {
    // 2 nodes per unit cannot resolve a Gaussian of width 1: most of the
    // spectral mass aliases into the outer band and the warning fires.
    const FrameParams params{1.0, 1};
    const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));
    const auto coarse = sample_to_grid(u, GridSpec{12.0, 25});
    const FourierNormResult fr = sobolev_norm_fourier(coarse, 0);
    CHECK(fr.aliasing_warning);
    CHECK(fr.tail_fraction > 1e-8);
}

TEST_CASE("guard band violations surface through norm evaluation") {
    const FrameParams params{1.0, 1};
    const auto far = GaussianMixture::single(params, LatticeIndex::d1(6, 0));
    NormSpec spec;
    spec.p = 0;
    spec.quadrature = GridSpec{8.0, 65}; // center at 6 sqrt(pi) ~ 10.6
    CHECK_THROWS_AS(weighted_sobolev_norm(far, spec), GuardBandError);
}

} // TEST_SUITE
