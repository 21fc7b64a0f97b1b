/**
 * @file dual_frame.hpp
 * @brief Application of \f$ S_k = (T_k^* T_k)^{-1} \f$ by Richardson
 *        iteration, dual-frame coefficients and dual Gram entries.
 *
 * @details The canonical dual frame is \f$ \Psi^*_a = S_k \Psi_a \f$; dual
 * coefficients \f$ (u, \Psi^*_a) = (S_k u, \Psi_a) \f$ drive the truncated
 * projector. No closed form exists for \f$\Psi^*\f$, so dual objects are
 * only ever materialized through \f$S_k\f$ applications. \f$S_k\f$ is
 * applied by the relaxed Richardson iteration
 * \f[
 *     v_{j+1} = v_j + \tau\,(u - T_k^* T_k\, v_j), \qquad
 *     \tau = \frac{2}{0.95\,\alpha^2_{\mathrm{est}}
 *                   + 1.05\,\beta^2_{\mathrm{est}}},
 * \f]
 * whose error operator has norm \f$ \le \gamma =
 * (\beta^2-\alpha^2)/(\beta^2+\alpha^2) < 1 \f$; the 5% margins keep the
 * contraction valid although the bounds are themselves estimates.
 */

#pragma once

#include "gaborframe/frame_ops.hpp"

namespace gf {

/**
 * @brief Frozen frame-bound estimates used as the config default.
 *
 * @details Output of estimate_frame_bounds(radius 8, 300 iterations),
 * which is k-independent; memoized on first use. Callers running many
 * solves can also compute bounds once and place them in the config.
 */
const FrameBounds& default_frame_bounds();

/** @brief Tuning of the Richardson frame-operator inversion. */
struct RichardsonConfig {
    /** Frame-bound estimates feeding the relaxation parameter. */
    FrameBounds bounds = default_frame_bounds();
    /** Relative residual target \f$\|u - T^*T v\| / \|u\|\f$. */
    double tol = 1e-10;
    /** Iteration budget before SolverError. */
    int max_iter = 500;
    /**
     * Index radius of the solver's internal frame applications, and the
     * per-iteration support growth cap. The default R_gram + 2 keeps the
     * internally truncated frame operator positive to ~1e-15 (at the
     * plain R_gram the truncation makes it slightly indefinite and the
     * residual stalls near 1e-6, out of reach of the 1e-10 target).
     */
    int support_margin = kRGramDefault + 2;

    /** @brief Throws ConfigError on invalid settings. */
    void validate() const;
};

/** @brief Result of a Richardson solve. */
struct RichardsonResult {
    GaussianMixture dual;  ///< \f$ v \approx S_k u \f$, pruned
    /**
     * Achieved relative residual, measured by the Gram quadratic form of
     * the residual mixture. Caveat: near convergence the residual's
     * coefficient representation retains O(1) canceling entries (the
     * redundancy null space of the frame), so the form carries ~1e-17
     * absolute roundoff and the measured functional residual floors at
     * ~3e-9. A value of exactly 0 therefore means "below the measurement
     * floor", not an exact solve; contraction ratios are meaningful only
     * while the residual exceeds ~1e-7.
     */
    double residual = 0.0;
    int iterations = 0;    ///< Sweeps performed (first sweep sees v = 0)
};

/**
 * @brief Solve \f$ T_k^* T_k\, v = u \f$ for \f$ v \approx S_k u \f$.
 *
 * @details The support of v grows by at most cfg.support_margin index
 * units per iteration (the analysis window is the current support dilated
 * by that margin) and is pruned at 1e-16 after each update, so the work
 * per iteration stays proportional to the essential support of the dual.
 *
 * @param[in]  u                nonzero input mixture
 * @param[in]  cfg              solver configuration
 * @param[out] residual_history optional per-iteration relative residuals
 * @throws SolverError on max_iter exhaustion (carries the final residual).
 * @throws ConfigError for zero input or invalid bounds.
 */
RichardsonResult richardson_dual_apply(
    const GaussianMixture& u, const RichardsonConfig& cfg = RichardsonConfig{},
    std::vector<double>* residual_history = nullptr);

/**
 * @brief Dual coefficients \f$ (u, \Psi^*_a) = (S_k u, \Psi_a) \f$ for all
 *        indices in the phase-space ball of radius D.
 * @throws BallEmptyError when \f$ k^{1/2} D < \sqrt{\pi} \f$; solver
 *         errors propagate.
 */
CoefficientMap dual_coefficients(const GaussianMixture& u, double D,
                                 const RichardsonConfig& cfg = RichardsonConfig{});

/**
 * @brief Dual Gram entry \f$ (\Psi^*_a, \Psi^*_b) \f$, computed as the
 *        inner product of two Richardson solves.
 */
Complex dual_gram_entry(const FrameParams& params, const LatticeIndex& a,
                        const LatticeIndex& b,
                        const RichardsonConfig& cfg = RichardsonConfig{});

/**
 * @brief Dual-primal overlap \f$ (\Psi^*_a, \Psi_b) = (S_k\Psi_a, \Psi_b) \f$.
 */
Complex dual_primal_overlap(const FrameParams& params, const LatticeIndex& a,
                            const LatticeIndex& b,
                            const RichardsonConfig& cfg = RichardsonConfig{});

} // namespace gf
