/**
 * @file core_lattice.hpp
 * @brief Index arithmetic and enumeration for the \f$\sqrt{\pi/k}\f$
 *        phase-space lattice.
 *
 * @details The lattice underlying every object in this library is
 * \f[
 *     x^{k,m} = \sqrt{\pi/k}\, m, \qquad
 *     \xi^{k,n} = \sqrt{\pi/k}\, n, \qquad m, n \in \mathbb{Z}^d .
 * \f]
 * At this density (redundancy 2) the Gaussian coherent states attached to
 * the lattice points form a frame of \f$ L^2(\mathbb{R}^d) \f$. All radii
 * and distances between indices are Euclidean (\f$\ell^2\f$) norms of the
 * concatenated integer vector \f$[m, n] \in \mathbb{Z}^{2d}\f$; the
 * corresponding phase-space norm is \f$\sqrt{\pi/k}\,|[m,n]|\f$.
 */

#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <vector>

#include "gaborframe/errors.hpp"

namespace gf {

/** @brief Largest supported space dimension. */
inline constexpr int kMaxDim = 3;

/**
 * @brief Scaling parameter and dimension; fixes the lattice and all norms.
 *
 * @details k plays the role of a semiclassical/wavenumber parameter: the
 * lattice spacing \f$\sqrt{\pi/k}\f$ and the Gaussian width
 * \f$ k^{-1/2} \f$ shrink together, which is what makes the frame bounds
 * and all decay estimates uniform in k.
 */
struct FrameParams {
    double k = 1.0; ///< Scaling, dimensionless, >= 1
    int d = 1;      ///< Space dimension, 1 <= d <= kMaxDim

    /** @brief Throws ConfigError unless k >= 1 and 1 <= d <= kMaxDim. */
    void validate() const;

    friend bool operator==(const FrameParams&, const FrameParams&) = default;
};

/**
 * @brief A lattice index \f$a = [m, n]\f$ (position and frequency offsets).
 *
 * @details Components beyond the ambient dimension d must stay zero; this
 * keeps comparison, hashing and enumeration independent of d and gives
 * cheap value semantics (no heap allocation). The ordering is
 * lexicographic on the concatenation (m, n), which fixes a deterministic
 * total order used for map iteration and ball enumeration.
 */
struct LatticeIndex {
    std::array<int, kMaxDim> m{0, 0, 0}; ///< Position multi-index
    std::array<int, kMaxDim> n{0, 0, 0}; ///< Frequency multi-index

    /** @brief Convenience constructor for d = 1. */
    static LatticeIndex d1(int m0, int n0) {
        LatticeIndex idx;
        idx.m[0] = m0;
        idx.n[0] = n0;
        return idx;
    }

    /** @brief Convenience constructor for d = 2. */
    static LatticeIndex d2(int m0, int m1, int n0, int n1) {
        LatticeIndex idx;
        idx.m = {m0, m1, 0};
        idx.n = {n0, n1, 0};
        return idx;
    }

    /** @brief Squared integer norm \f$|m|^2 + |n|^2\f$. */
    std::int64_t norm2() const {
        std::int64_t s = 0;
        for (int j = 0; j < kMaxDim; ++j) {
            s += static_cast<std::int64_t>(m[j]) * m[j];
            s += static_cast<std::int64_t>(n[j]) * n[j];
        }
        return s;
    }

    friend auto operator<=>(const LatticeIndex&, const LatticeIndex&) = default;
};

/** @brief Squared integer distance \f$|[m,n]_a - [m,n]_b|^2\f$. */
inline std::int64_t index_dist2(const LatticeIndex& a, const LatticeIndex& b) {
    std::int64_t s = 0;
    for (int j = 0; j < kMaxDim; ++j) {
        const std::int64_t dm = a.m[j] - b.m[j];
        const std::int64_t dn = a.n[j] - b.n[j];
        s += dm * dm + dn * dn;
    }
    return s;
}

/** @brief A point \f$(x, \xi)\f$ of phase space. */
struct PhasePoint {
    std::array<double, kMaxDim> x{0.0, 0.0, 0.0};  ///< Position
    std::array<double, kMaxDim> xi{0.0, 0.0, 0.0}; ///< Frequency
};

/**
 * @brief Lattice point attached to an index:
 *        \f$ x^{k,m} = \sqrt{\pi/k}\,m,\ \xi^{k,n} = \sqrt{\pi/k}\,n \f$.
 */
PhasePoint lattice_point(const FrameParams& params, const LatticeIndex& idx);

/**
 * @brief Phase-space norm of a lattice point,
 *        \f$ |(x^{k,m}, \xi^{k,n})| = \sqrt{\pi/k}\,|[m,n]| \f$.
 */
double index_norm(const FrameParams& params, const LatticeIndex& idx);

/**
 * @brief All indices with \f$ |(x^{k,m}, \xi^{k,n})| \le D \f$, sorted.
 *
 * @details The summation set of the truncated projector \f$\Pi_D\f$.
 * Enumeration order is ascending lexicographic on (m, n) so that runs are
 * reproducible bit-for-bit. The boundary is treated inclusively with a
 * 1e-12 relative slack so that radii hitting lattice shells exactly
 * (e.g. \f$ D = \sqrt{\pi} \f$ at k = 1) include the shell.
 *
 * @throws BallEmptyError when \f$ k^{1/2} D < \sqrt{\pi} \f$, i.e. the
 *         ball holds no point besides the origin.
 */
std::vector<LatticeIndex> enumerate_ball(const FrameParams& params, double D);

} // namespace gf
