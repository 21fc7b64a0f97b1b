/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by all gaborframe modules.
 *
 * @details Every error thrown by the library derives from gf::Error so
 * callers can catch one base type. The split into ConfigError and
 * SolverError mirrors the exit codes of the gfbench driver:
 * invalid input/configuration (exit 2) versus numerical non-convergence
 * (exit 3). ThresholdError backs the CI mode (exit 4).
 */

#pragma once

#include <stdexcept>
#include <string>

namespace gf {

/** @brief Base class of all gaborframe exceptions. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** @brief Invalid parameters, dimensions or experiment configuration. */
class ConfigError : public Error {
public:
    using Error::Error;
};

/**
 * @brief The index ball contains no point besides the origin.
 *
 * @details Thrown when \f$ k^{1/2} D < \sqrt{\pi} \f$, i.e. the truncation
 * radius lies below the lattice spacing and the summation set degenerates.
 */
class BallEmptyError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/**
 * @brief A mixture center lies too close to the grid boundary.
 *
 * @details Grids carry a guard band of @f$ 8 k^{-1/2} @f$ (eight Gaussian
 * widths) inside the domain edge; sampling a state whose center violates it
 * would silently truncate its tails, so we refuse instead.
 */
class GuardBandError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/** @brief An iterative solver failed to reach its target. */
class SolverError : public Error {
public:
    SolverError(const std::string& what, double residual, int iterations)
            : Error(what)
            , residual(residual)
            , iterations(iterations) {}

    double residual; ///< Last relative residual before giving up
    int iterations;  ///< Number of iterations performed
};

/**
 * @brief Power iteration failed to stagnate within the allowed iterations.
 *
 * @details Carries the last Rayleigh-quotient residual gap
 * \f$ \|Mv - \theta v\| / \theta \f$ for diagnosis. Note that with
 * near-degenerate extremal eigenvalues the quotient converges long before
 * the eigenvector does; stagnation of the quotient is the criterion.
 */
class NonConvergenceError : public SolverError {
public:
    NonConvergenceError(const std::string& what, double gap, int iterations)
            : SolverError(what, gap, iterations)
            , rayleigh_gap(gap) {}

    double rayleigh_gap; ///< Last per-step relative drift of the quotient
};

/** @brief A user-requested acceptance threshold was violated (CI mode). */
class ThresholdError : public Error {
public:
    using Error::Error;
};

} // namespace gf
