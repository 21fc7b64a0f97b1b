/**
 * @file function_rep.hpp
 * @brief Representations of test functions: closed-form Gaussian mixtures
 *        and sampled quadrature grids, with inner products between them.
 *
 * @details A GaussianMixture \f$ u = \sum_a w_a \Psi_a \f$ is the native
 * function class of the library: it is closed under the analysis/synthesis
 * operators and admits exact inner products through the Gram closed form.
 * QuadratureGrid is the oracle substrate — a uniformly sampled tensor grid
 * used for quadrature cross-checks, Sobolev norms and Fourier-side checks.
 */

#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "gaborframe/core_lattice.hpp"
#include "gaborframe/gaussian_states.hpp"

namespace gf {

/**
 * @brief Default Gram truncation radius in index units.
 *
 * @details Pairs with squared index distance \f$ > R_{\mathrm{gram}}^2 \f$
 * contribute \f$ \le e^{-\pi/4\cdot 26} \approx 1.4\cdot 10^{-9} \f$ per
 * pair and are dropped from mixture inner products. Iterative solvers use
 * a larger radius (see RichardsonConfig::support_margin): at radius 7 the
 * dropped pairs are \f$ \le e^{-\pi/4\cdot 50} \approx 10^{-17} \f$, which
 * keeps the truncated frame operator positive to working precision.
 */
inline constexpr int kRGramDefault = 5;

/** @brief Pruning threshold: mixture terms below this modulus are dropped. */
inline constexpr double kPruneEps = 1e-16;

/**
 * @brief A finite linear combination of coherent states,
 *        \f$ u = \sum_a w_a \Psi_a \f$, stored as a sparse sorted map.
 */
class GaussianMixture {
public:
    using TermMap = std::map<LatticeIndex, Complex>;

    explicit GaussianMixture(FrameParams params);

    /** @brief The single state \f$ w\,\Psi_{\mathrm{idx}} \f$. */
    static GaussianMixture single(FrameParams params, const LatticeIndex& idx,
                                  Complex weight = Complex(1.0, 0.0));

    const FrameParams& params() const { return params_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /** @brief Weight of a state (zero if absent). */
    Complex coefficient(const LatticeIndex& idx) const;

    /** @brief Insert or overwrite a term. */
    void set_term(const LatticeIndex& idx, Complex weight);

    /** @brief Accumulate into a term (inserting it if absent). */
    void add_term(const LatticeIndex& idx, Complex weight);

    /** @brief Remove all terms with |weight| <= eps. */
    void prune(double eps = kPruneEps);

    /** @brief Largest integer index norm \f$|[m,n]|\f$ over terms (0 if empty). */
    double max_index_norm() const;

    /** @brief Pointwise evaluation \f$ \sum_a w_a \Psi_a(x) \f$. */
    Complex evaluate(std::span<const double> x) const;

    /** @brief Pointwise derivative \f$ \sum_a w_a \partial^a\Psi_a(x) \f$. */
    Complex evaluate_derivative(std::span<const int> a,
                                std::span<const double> x) const;

private:
    FrameParams params_;
    TermMap terms_;
};

/** @brief Termwise \f$ \alpha u + \beta v \f$ with pruning. */
GaussianMixture mixture_combine(Complex alpha, const GaussianMixture& u,
                                Complex beta, const GaussianMixture& v);

/**
 * @brief Exact bilinear inner product
 *        \f$ (u, v) = \sum_{a,b} w^u_a\, \overline{w^v_b}\, (\Psi_a,\Psi_b) \f$
 *        with Gram truncation.
 *
 * @details Pairs with squared index distance \f$ > r_{\mathrm{gram}}^2 \f$
 * are dropped (their Gram entries are below \f$ e^{-\pi r_{\mathrm{gram}}^2/4} \f$).
 * Summation is Kahan-compensated, so the result is reduction-order
 * insensitive to ~1e-16.
 */
Complex mixture_inner_product(const GaussianMixture& u, const GaussianMixture& v,
                              int r_gram = kRGramDefault);

/** @brief \f$ \sqrt{\mathrm{Re}\,(u,u)} \f$ with the same truncation. */
double mixture_norm(const GaussianMixture& u, int r_gram = kRGramDefault);

/** @brief Geometry of a uniform symmetric tensor grid on \f$[-L, L]^d\f$. */
struct GridSpec {
    double half_width = 10.0; ///< L
    int nodes_per_axis = 81;  ///< >= 2; spacing h = 2L/(nodes-1)

    double spacing() const { return 2.0 * half_width / (nodes_per_axis - 1); }
};

/**
 * @brief Grid spec resolving a given mixture: the domain covers every
 *        center plus an \f$ 8k^{-1/2} \f$ guard band, and the spacing
 *        resolves both the Gaussian width and the fastest modulation.
 *
 * @details \f$ h \le k^{-1/2}\min\big(1/4,\; 2\pi/(\sqrt{\pi}(2 n_{\max}{+}1)
 * + 16)\big) \f$: by Poisson summation the trapezoid error for
 * Gaussian-times-oscillation integrands is then \f$ O(e^{-64}) \f$, i.e.
 * the grid is exact to machine precision for every pairing of terms.
 */
GridSpec default_grid_spec(const GaussianMixture& u);

/** @brief Samples of a function on a uniform tensor grid. */
struct QuadratureGrid {
    FrameParams params;
    GridSpec spec;
    std::vector<Complex> samples; ///< row-major, axis 0 slowest

    /** @brief Coordinate of node i along one axis. */
    double node(int i) const {
        return -spec.half_width + i * spec.spacing();
    }
    /** @brief Total node count \f$ \mathrm{nodes}^d \f$. */
    std::size_t total_nodes() const;
};

/**
 * @brief Pointwise sampling of a mixture.
 * @throws GuardBandError if a center lies within \f$ 8k^{-1/2} \f$ of the
 *         domain edge (its tail would be truncated).
 */
QuadratureGrid sample_to_grid(const GaussianMixture& u, const GridSpec& spec);

/** @brief Composite trapezoid approximation of \f$ \int f\,\bar g \f$. */
Complex grid_inner_product(const QuadratureGrid& f, const QuadratureGrid& g);

/** @brief Grid \f$L^2\f$ norm \f$\sqrt{\mathrm{Re}\,(f,f)}\f$. */
double grid_norm(const QuadratureGrid& f);

} // namespace gf
