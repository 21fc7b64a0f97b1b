/**
 * @file experiments.hpp
 * @brief Desk-scale numerical experiments: convergence sweeps, coefficient
 *        and dual-coefficient decay tables, sharpness probes and
 *        frame-bound tables.
 *
 * @details Every experiment is deterministic given its configuration:
 * test functions come from named constructors (single states, seeded
 * random mixtures, a deliberately distant state), all reductions are
 * compensated, and output rows are ordered by the sweep parameter
 * regardless of the parallel completion order.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaborframe/truncated_projection.hpp"

namespace gf {

/** @brief Full description of a convergence sweep. */
struct SweepConfig {
    FrameParams params{};
    std::vector<double> D_values;  ///< Ascending truncation radii
    int p = 0;                     ///< Error norm order
    /** Named test-function constructor: "state", "mixture" or "distant". */
    std::string test_function = "state";
    LatticeIndex state_index{};    ///< Index for "state"
    std::uint64_t seed = 1;        ///< RNG seed for "mixture"
    double distant_radius = 3.0;   ///< Reference radius for "distant"
    RichardsonConfig solver{};
    std::string output_path;       ///< Optional sink used by the CLI ("" = none)

    /**
     * @brief Throws ConfigError unless D_values has at least 3 ascending
     *        entries of which at least one admits a nonempty lattice ball,
     *        p is in range and the constructor name is known.
     */
    void validate() const;
};

/** @brief One sweep cell. Invalid cells keep NaN metrics and ok = false. */
struct ReportRow {
    double D = 0.0;
    double error = 0.0;         ///< \f$ \|u - \Pi_D u\|_{\hat H^p_k} \f$
    double norm_ratio = 0.0;    ///< error / \f$\|u\|_{\hat H^p_k}\f$
    double slope_running = 0.0; ///< log-log fit over valid rows up to here
    double wall_time_ms = 0.0;
    bool ok = true;
    std::string note;           ///< Failure reason when !ok
};

/** @brief Sweep result: per-D rows plus the upper-half slope fit. */
struct SweepReport {
    std::vector<ReportRow> rows;
    double slope = 0.0;     ///< Fit over the last ceil(n/2) valid rows
    double r_squared = 0.0; ///< Coefficient of determination of that fit
    double base_norm = 0.0; ///< \f$\|u\|_{\hat H^p_k}\f$ of the test function
};

/**
 * @brief Per-D approximation errors with a log-log rate fit.
 *
 * @details Cells run on an independent parallel work pool; a cell whose D
 * yields an empty ball or whose solve fails is recorded (ok = false, NaN
 * metrics, note set) and excluded from fits and the running slope — the
 * sweep always continues. The headline slope is fitted on the upper half
 * of the valid D values to suppress preasymptotic contamination.
 */
SweepReport run_convergence_sweep(const SweepConfig& cfg);

/** @brief One order of a coefficient-decay table. */
struct DecayRow {
    int p = 0;
    double weighted_sum = 0.0; ///< \f$ S_p = \sum_a (|x^{k,m}|^2+|\xi^{k,n}|^2)^p |c_a|^2 \f$
    double sobolev_norm = 0.0; ///< \f$ \|u\|_{\hat H^p_k} \f$
    double ratio = 0.0;        ///< \f$ S_p / \|u\|_{\hat H^p_k}^2 \f$
};

/** @brief Decay table plus the lattice window used for the sums. */
struct DecayReport {
    std::vector<DecayRow> rows;    ///< p = 0 .. p_max
    double window_radius = 0.0;    ///< Integer index radius of the window
};

/**
 * @brief Weighted sums of analysis coefficients,
 *        \f$ S_p = \sum (|x^{k,m}|^2+|\xi^{k,n}|^2)^p\, |(u,\Psi_a)|^2 \f$,
 *        for p = 0..p_max, with the Sobolev ratios \f$ S_p/\|u\|^2_{\hat H^p_k} \f$.
 *
 * @details The phase-space weight reduces to \f$ (\pi/k)^p |[m,n]|^{2p} \f$
 * on the lattice. The window is the integer ball of radius
 * max(8, max index norm of u + 6), beyond which coefficients of the test
 * functions are below 1e-12 of the total mass.
 */
DecayReport run_coefficient_decay(const GaussianMixture& u, int p_max);

/**
 * @brief As run_coefficient_decay, but with dual coefficients
 *        \f$ c^*_a = (u, S^{-1}\Psi_a) = (S^{-1}u, \Psi_a) \f$ —
 *        one Richardson solve, then windowed analysis of the dual.
 */
DecayReport run_dual_decay(const GaussianMixture& u, int p_max,
                           const RichardsonConfig& solver = RichardsonConfig{});

/** @brief Sharpness probe quantities for the distant state. */
struct SharpnessReport {
    int p = 0;               ///< Error norm order
    int r = 1;               ///< Probed rate exponent
    double D = 0.0;          ///< Truncation radius
    LatticeIndex m_star;     ///< Position index of the probe state
    double u_norm = 0.0;     ///< \f$ \|u\|_{\hat H^p_k} \f$
    double proj_norm = 0.0;  ///< \f$ \|\Pi_D u\|_{\hat H^p_k} \f$
    double error = 0.0;      ///< \f$ \|u - \Pi_D u\|_{\hat H^p_k} \f$
    double high_norm = 0.0;  ///< \f$ \|u\|_{\hat H^{p+r}_k} \f$
    double ratio = 0.0;      ///< error * D^r / high_norm
};

/**
 * @brief Rate-sharpness probe: u = \f$ \Psi_{k,m^*,0} \f$ with
 *        \f$ m^* = (2\lceil k^{1/2} D\rceil, 0, \dots) \f$ sits just
 *        outside the reach of \f$\Pi_D\f$, so the error stays comparable
 *        to \f$\|u\|\f$ while \f$ \|u\|_{\hat H^{p+r}_k} \f$ grows like
 *        \f$ |x^{k,m^*}|^{p+r} \f$ — pinning the \f$D^{-r}\f$ exponent
 *        from below.
 */
SharpnessReport run_sharpness(int p, int r, double D, const FrameParams& params,
                              const RichardsonConfig& solver = RichardsonConfig{});

/** @brief Frame-bound estimates per lattice radius. */
struct FrameBoundsRow {
    int radius = 0;
    FrameBounds bounds{};
};

/** @brief estimate_frame_bounds for each radius in the list. */
std::vector<FrameBoundsRow> run_frame_bounds(const FrameParams& params,
                                             std::span<const int> radii,
                                             int iterations = 300);

/**
 * @brief Seeded random unit mixture: term count in 1..max_terms, distinct
 *        indices drawn from the integer index ball of radius ball_radius,
 *        complex Gaussian weights, normalized to \f$\|u\|_{L^2} = 1\f$.
 *
 * @details The generator is a fixed 64-bit Mersenne Twister with an
 * explicit Box-Muller transform, so draws are identical across standard
 * libraries and platforms.
 */
GaussianMixture random_mixture(const FrameParams& params, std::uint64_t seed,
                               int max_terms = 5, int ball_radius = 2);

/** @brief Integer index ball \f$\{a : |[m,n]| \le \mathrm{radius}\}\f$. */
std::vector<LatticeIndex> index_window(int d, double radius);

/** @brief Construct the test function named by cfg.test_function. */
GaussianMixture make_test_function(const SweepConfig& cfg);

} // namespace gf
