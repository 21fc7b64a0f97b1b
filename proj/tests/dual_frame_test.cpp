/**
 * @file dual_frame_test.cpp
 * @brief Richardson inversion of the frame operator, dual coefficients,
 *        Wexler-Raz biorthogonality and dual-frame localization.
 */

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "gaborframe/core_lattice.hpp"
#include "gaborframe/dual_frame.hpp"
#include "gaborframe/errors.hpp"
#include "gaborframe/function_rep.hpp"

using namespace gf;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("dual_frame") {

TEST_CASE("Richardson solve contracts at the advertised rate") {
    const FrameParams params{1.0, 1};
    const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));

    std::vector<double> history;
    const RichardsonConfig cfg{};
    const RichardsonResult result = richardson_dual_apply(u, cfg, &history);

    CHECK(result.iterations <= 20); // observed: 11 at tol 1e-10
    CHECK(result.residual <= cfg.tol);
    REQUIRE(history.size() == static_cast<std::size_t>(result.iterations));

    // Consecutive residuals contract by at least gamma (plus 5% slack for
    // the bound-estimate margins). Ratios are only meaningful above the
    // ~1e-17 cancellation floor of the residual quadratic form, so gate
    // the check at 1e-7 (see RichardsonResult::residual).
    const double rate_cap = 1.05 * cfg.bounds.gamma; // 0.1705 at defaults
    for (std::size_t i = 1; i < history.size(); ++i) {
        if (history[i - 1] <= 1e-7) break;
        CHECK(history[i] <= rate_cap * history[i - 1]);
    }
}

TEST_CASE("Wexler-Raz: (S^-1 Psi_00, Psi_00) equals 1/2") {
    /*
     * At redundancy 2 the biorthogonality relation forces the diagonal
     * dual-primal overlap to equal exactly 1/(redundancy) = 1/2 -- a
     * parameter-free identity, independent of the Gaussian window.
     */
    const FrameParams params{1.0, 1};
    const LatticeIndex o = LatticeIndex::d1(0, 0);
    const Complex overlap = dual_primal_overlap(params, o, o);
    CHECK(overlap.real() == doctest::Approx(0.5).epsilon(2e-8));
    CHECK(std::abs(overlap.imag()) <= 1e-9);

    // The same identity holds at any diagonal index and any k.
    const Complex shifted =
        dual_primal_overlap(FrameParams{4.0, 1}, LatticeIndex::d1(2, -1),
                            LatticeIndex::d1(2, -1));
    CHECK(shifted.real() == doctest::Approx(0.5).epsilon(2e-8));
}

TEST_CASE("dual coefficients vanish on nonzero doubly-even indices") {
    /*
     * Wexler-Raz duality for the redundancy-2 lattice: the dual atom is
     * biorthogonal to the states on the adjoint (doubled) lattice, so
     * (S^-1 Psi_00, Psi_{2p,2q}) = 0 for (p,q) != (0,0). The solver
     * reproduces the zeros at its accuracy limit: the Gram-form residual
     * measurement floors near 3e-9 (see RichardsonResult::residual), so
     * the iteration stops with a coefficient-space distance of ~6e-10
     * to the fixed point, nine orders below the neighboring coefficients
     * (~0.22 at distance 1). The gate pins that floor.
     */
    const FrameParams params{1.0, 1};
    const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));
    const CoefficientMap dual = dual_coefficients(u, 6.0 * std::sqrt(kPi));

    for (const LatticeIndex idx :
         {LatticeIndex::d1(2, 0), LatticeIndex::d1(0, 2),
          LatticeIndex::d1(2, 2), LatticeIndex::d1(-2, 2),
          LatticeIndex::d1(4, 0), LatticeIndex::d1(4, 2)}) {
        CHECK(std::abs(dual.entries.at(idx)) <= 5e-9);
    }
    CHECK(std::abs(dual.entries.at(LatticeIndex::d1(0, 0)) - 0.5) <= 2e-8);
}

TEST_CASE("dual coefficients match the frozen high-accuracy table") {
    /*
     * Frozen oracle: (S^-1 Psi_00, Psi_{m,n}) at k = 1, d = 1, generated
     * by this solver at tol 1e-12 with support margin 9 and a radius-12
     * coefficient window; digits were stable to ~1e-11 under further
     * margin/radius/tolerance tightening. The test runs the default
     * configuration (tol 1e-10), hence the 1e-8 comparison.
     */
    struct Entry {
        int m, n;
        Complex value;
    };
    const std::vector<Entry> table = {
        {1, 0, Complex(0.2205450329091, 0.0)},
        {1, 1, Complex(0.0, 0.1140045543913)},
        {2, 1, Complex(-0.01902570064483, 0.0)},
        {3, 0, Complex(-0.009119495745787, 0.0)},
        {3, 1, Complex(0.0, -0.005139065751466)},
        {5, 0, Complex(0.0003940574003459, 0.0)},
    };

    const FrameParams params{1.0, 1};
    const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));
    const CoefficientMap dual = dual_coefficients(u, 6.0 * std::sqrt(kPi));
    for (const auto& entry : table) {
        const Complex got = dual.entries.at(LatticeIndex::d1(entry.m, entry.n));
        CHECK(std::abs(got - entry.value) <= 1e-8);
    }

    // Reflection structure: mirror indices keep the modulus, and the
    // (1,-1) coefficient is the conjugate of (1,1).
    const Complex c11 = dual.entries.at(LatticeIndex::d1(1, 1));
    const Complex c1m1 = dual.entries.at(LatticeIndex::d1(1, -1));
    CHECK(std::abs(c1m1 - std::conj(c11)) <= 1e-9);
    CHECK(std::abs(std::abs(dual.entries.at(LatticeIndex::d1(-1, 0))) -
                   std::abs(dual.entries.at(LatticeIndex::d1(1, 0)))) <= 1e-9);
}

TEST_CASE("dual coefficients decay exponentially in index distance") {
    // Conservative envelope for the measured decay (asymptotic rate ~1.6
    // per index unit; rate 1.5 with prefactor 1.2 clears every entry).
    const FrameParams params{1.0, 1};
    const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));
    const CoefficientMap dual = dual_coefficients(u, 6.0 * std::sqrt(kPi));
    for (const auto& [idx, c] : dual.entries) {
        const double dist = std::sqrt(static_cast<double>(idx.norm2()));
        if (dist == 0.0) continue;
        CHECK(std::abs(c) <= 1.2 * std::exp(-1.5 * dist));
    }
}

TEST_CASE("dual_gram_entry matches the frozen sequence") {
    /*
     * Frozen oracle: |(Psi*_00, Psi*_{j,0})| for j = 0..5 at k = 1, d = 1,
     * generated at tol 1e-12 / support margin 9 (stable to ~6 digits
     * under tightening). Note the sequence is *not* monotone: the j = 4
     * entry sits on the doubly-even sublattice where Wexler-Raz pushes
     * the overlap down, so j = 5 comes out above j = 4.
     */
    const std::vector<double> frozen = {
        2.5188147724e-1, 1.0727983386e-1, 1.0905112212e-2,
        9.2734585749e-3, 4.7125426792e-4, 6.0111385693e-4,
    };
    const FrameParams params{1.0, 1};
    for (int j = 0; j < static_cast<int>(frozen.size()); ++j) {
        const Complex entry = dual_gram_entry(params, LatticeIndex::d1(0, 0),
                                              LatticeIndex::d1(j, 0));
        CHECK(std::abs(entry) ==
              doctest::Approx(frozen[static_cast<std::size_t>(j)])
                  .epsilon(1e-4));
    }
}

TEST_CASE("solver rejects bad inputs and exhausted budgets") {
    const FrameParams params{1.0, 1};
    const GaussianMixture zero(params);
    CHECK_THROWS_AS(richardson_dual_apply(zero), ConfigError);

    RichardsonConfig bad;
    bad.tol = 0.0;
    const auto u = GaussianMixture::single(params, LatticeIndex::d1(0, 0));
    CHECK_THROWS_AS(richardson_dual_apply(u, bad), ConfigError);

    RichardsonConfig tiny;
    tiny.max_iter = 1; // the first sweep sees v = 0, so its relative
                       // residual is exactly ||u - 0|| / ||u|| = 1
    try {
        richardson_dual_apply(u, tiny);
        FAIL("expected SolverError");
    } catch (const SolverError& err) {
        CHECK(err.iterations == 1);
        CHECK(err.residual == 1.0);
    }
}

} // TEST_SUITE
