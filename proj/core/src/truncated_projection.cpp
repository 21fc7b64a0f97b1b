/**
 * @file truncated_projection.cpp
 * @brief Truncated projector via dual coefficients + synthesis.
 */

#include "gaborframe/truncated_projection.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaborframe/errors.hpp"

namespace gf {

void ProjectionSpec::validate(const FrameParams& params) const {
    params.validate();
    solver.validate();
    if (!(D > 0.0)) {
        throw ConfigError("ProjectionSpec: D must be positive, got " +
                          std::to_string(D));
    }
    if (std::sqrt(params.k) * D < std::sqrt(std::numbers::pi) * (1.0 - 1e-12)) {
        throw BallEmptyError(
            "ProjectionSpec: no nonzero lattice point inside radius D = " +
            std::to_string(D) + " at k = " + std::to_string(params.k) +
            " (need k^{1/2} D >= pi^{1/2})");
    }
}

GaussianMixture project(const GaussianMixture& u, const ProjectionSpec& spec) {
    spec.validate(u.params());
    return synthesis(dual_coefficients(u, spec.D, spec.solver));
}

double approximation_error(const GaussianMixture& u, const ProjectionSpec& spec,
                           int p) {
    const GaussianMixture diff =
        mixture_combine(Complex(1.0, 0.0), u, Complex(-1.0, 0.0),
                        project(u, spec));
    if (diff.empty()) return 0.0;
    // The grid must resolve both u and the projection; the difference's
    // own support already spans the union of the two.
    return weighted_sobolev_norm(diff, default_norm_spec(diff, p));
}

} // namespace gf
