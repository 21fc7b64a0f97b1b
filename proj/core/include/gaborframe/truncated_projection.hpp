/**
 * @file truncated_projection.hpp
 * @brief Truncated frame projector \f$ \Pi_D \f$ and its approximation error.
 *
 * @details The projector keeps only the coherent states whose phase-space
 * center lies inside the ball of radius D:
 * \f[
 *   \Pi_D u \;=\; \sum_{|(x^{k,m},\,\xi^{k,n})| \le D}
 *       \big(u,\, S^{-1}\Psi_{k,m,n}\big)\, \Psi_{k,m,n},
 * \f]
 * with the dual coefficients obtained from a Richardson inversion of the
 * frame operator S. For u concentrated well inside the ball the error
 * decays like \f$ D^{-r} \f$ in \f$ \hat H^p_k \f$ norms, uniformly in k —
 * up to the reach of the dual window's own spatial decay.
 */

#pragma once

#include "gaborframe/dual_frame.hpp"
#include "gaborframe/sobolev_norms.hpp"

namespace gf {

/** @brief Truncation radius and solver settings of a projector. */
struct ProjectionSpec {
    double D = 5.0;            ///< Phase-space truncation radius
    RichardsonConfig solver{}; ///< Frame-operator inversion settings

    /**
     * @brief Throws ConfigError / BallEmptyError if D is non-positive or
     *        the ball \f$ |(x^{k,m},\xi^{k,n})| \le D \f$ contains no
     *        lattice point for the given parameters.
     */
    void validate(const FrameParams& params) const;
};

/**
 * @brief Apply \f$ \Pi_D \f$: dual coefficients on the D-ball, then
 *        synthesis over the same ball.
 *
 * @details The inversion itself runs on an adaptively grown support that
 * extends well beyond the ball (see RichardsonConfig::support_margin), so
 * truncation happens only at the final coefficient read-off.
 */
GaussianMixture project(const GaussianMixture& u, const ProjectionSpec& spec);

/**
 * @brief \f$ \|u - \Pi_D u\|_{\hat H^p_k} \f$ on the default quadrature
 *        grid of the difference.
 */
double approximation_error(const GaussianMixture& u, const ProjectionSpec& spec,
                           int p);

} // namespace gf
