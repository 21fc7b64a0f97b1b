/**
 * @file frame_ops.hpp
 * @brief Analysis operator \f$T_k\f$, synthesis operator \f$T_k^*\f$, the
 *        frame operator \f$T_k^* T_k\f$, and frame-bound estimation.
 *
 * @details The coherent states on the \f$\sqrt{\pi/k}\f$ lattice form a
 * frame: there are constants \f$ 0 < \alpha \le \beta \f$ with
 * \f[
 *   \alpha^2 \|u\|^2 \;\le\; \sum_a |(u, \Psi_a)|^2 \;\le\; \beta^2\|u\|^2 .
 * \f]
 * The bounds depend only on d (never on k: the Gram matrix is a function
 * of integer index differences alone). This module estimates them by
 * extremal Rayleigh quotients of the frame operator compressed to a ball
 * of lattice indices.
 */

#pragma once

#include <limits>
#include <map>
#include <vector>

#include "gaborframe/function_rep.hpp"

namespace gf {

/** @brief Sparse coefficient sequence \f$ (T_k u)_a = (u, \Psi_a) \f$. */
struct CoefficientMap {
    FrameParams params;
    std::map<LatticeIndex, Complex> entries;

    /** @brief \f$\ell^2\f$ norm of the entries. */
    double l2_norm() const;

    /** @brief Remove entries with |value| <= eps. */
    void prune(double eps = kPruneEps);
};

/** @brief Frame-bound estimates and the derived contraction factor. */
struct FrameBounds {
    double alpha_sq = 0.0; ///< Lower bound \f$\alpha^2\f$
    double beta_sq = 0.0;  ///< Upper bound \f$\beta^2\f$
    double gamma = 1.0;    ///< \f$(\beta^2-\alpha^2)/(\beta^2+\alpha^2)\f$

    /** @brief Throws ConfigError unless \f$0 < \alpha^2 \le \beta^2\f$, gamma < 1. */
    void validate() const;
};

/**
 * @brief Analysis on a finite window: entry at idx = \f$(u, \Psi_{idx})\f$.
 *
 * @details Entries are computed by closed-form mixture inner products with
 * Gram truncation radius @p r_gram.
 */
CoefficientMap analysis(const GaussianMixture& u,
                        const std::vector<LatticeIndex>& window,
                        int r_gram = kRGramDefault);

/**
 * @brief Quadrature fallback of analysis for sampled (non-mixture) data:
 *        entries by grid inner products against sampled states.
 * @throws GuardBandError if the grid cannot resolve a window state.
 */
CoefficientMap analysis_grid(const QuadratureGrid& u,
                             const std::vector<LatticeIndex>& window);

/** @brief Synthesis \f$ T_k^* c = \sum_a c_a \Psi_a \f$ (exact weights). */
GaussianMixture synthesis(const CoefficientMap& c);

/**
 * @brief Truncated frame operator
 *        \f$ (T_k^* T_k) u = \sum_a (u, \Psi_a)\,\Psi_a \f$.
 *
 * @details The analysis window is the support of u dilated by
 * @p window_margin index units, intersected with the integer ball of
 * radius @p support_radius (a caller-chosen cap on support growth; pass
 * the default to leave growth uncapped). Truncation is a documented
 * approximation, not an error.
 *
 * @param[in] u              input mixture
 * @param[in] support_radius cap on the integer index norm of the window
 * @param[in] window_margin  dilation radius around u's support (index units)
 * @param[in] r_gram         Gram truncation radius for the inner products
 */
GaussianMixture frame_apply(
    const GaussianMixture& u,
    double support_radius = std::numeric_limits<double>::infinity(),
    int window_margin = kRGramDefault,
    int r_gram = kRGramDefault);

/**
 * @brief Frame bounds by extremal Rayleigh quotients on a lattice ball.
 *
 * @details Compresses the frame operator to mixtures supported on
 * \f$ \{a : |[m,n]| \le \mathrm{radius}\} \f$: with rectangular Gram
 * \f$ G_r \f$ (rows: ball dilated by R_gram+1, columns: ball) and square
 * Gram \f$ G \f$, the quotient is
 * \f$ \theta(w) = (w^* G_r^* G_r w)/(w^* G w) \f$. The near-null
 * redundancy modes of \f$G\f$ are removed by canonical orthogonalization
 * (Hermitian eigendecomposition, relative cutoff 1e-8), then \f$\beta^2\f$
 * is obtained by power iteration and \f$\alpha^2\f$ by power iteration on
 * the shifted operator \f$ \beta^2_{\mathrm{est}} I - M \f$ — no linear
 * solves. Results are exactly k-independent (the Gram depends only on
 * index differences); params.k participates in validation only.
 *
 * @throws NonConvergenceError if the Rayleigh quotient fails to stagnate
 *         within @p iterations (carries the last quotient gap).
 */
FrameBounds estimate_frame_bounds(const FrameParams& params, int lattice_radius,
                                  int iterations);

} // namespace gf
