/**
 * @file gaussian_states.hpp
 * @brief Gaussian coherent states: evaluation, derivatives, Fourier images
 *        and analytic inner products.
 *
 * @details The state attached to a lattice index \f$(m, n)\f$ is
 * \f[
 *     \Psi_{k,m,n}(x) = \Big(\frac{k}{\pi}\Big)^{d/4}
 *         e^{-k|x - x^{k,m}|^2/2}\,
 *         e^{i k (x - x^{k,m})\cdot \xi^{k,n}},
 * \f]
 * a unit-norm Gaussian wave packet centered at \f$x^{k,m}\f$ with
 * frequency \f$\xi^{k,n}\f$. Everything in this module is closed-form:
 * no quadrature is performed here (quadrature appears only in the test
 * oracles that validate these formulas).
 */

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gaborframe/core_lattice.hpp"

namespace gf {

using Complex = std::complex<double>;

/** @brief Highest derivative/moment order with safely sized coefficients. */
inline constexpr int kDerivativeOrderMax = 8;

/** @brief A coherent state \f$\Psi_{k,m,n}\f$ identified by its index. */
struct GaussianState {
    FrameParams params;
    LatticeIndex idx;
};

/**
 * @brief The polynomial \f$Q_p\f$ of the derivative formula, stored as
 *        coefficients in ascending powers.
 *
 * @details \f$Q_p\f$ has degree exactly p, leading coefficient 1, and the
 * parity of p (coefficients of opposite parity vanish).
 */
struct DerivativePolynomial {
    int degree = 0;
    std::vector<double> coefficients; ///< size degree+1, ascending powers

    /** @brief Horner evaluation at a complex argument. */
    Complex operator()(Complex z) const;
};

/** @brief Pointwise evaluation of \f$\Psi_{k,m,n}(x)\f$. */
Complex evaluate_state(const GaussianState& state, std::span<const double> x);

/**
 * @brief The polynomial \f$Q_p\f$ with
 *        \f$ \partial_x^p\,e^{-z(x)^2/2+\dots} \f$-type structure:
 *        \f$ Q_0 = 1,\ Q_{p+1}(z) = z\,Q_p(z) - Q_p'(z) \f$.
 *
 * @details This is the probabilists' Hermite polynomial
 * \f$\mathrm{He}_p\f$ (e.g. \f$Q_2 = z^2 - 1\f$, \f$Q_3 = z^3 - 3z\f$).
 * The minus sign on \f$Q_p'\f$ comes from the chain rule: each
 * \f$\partial_{x_j}\f$ acts on the argument
 * \f$ z_j = k^{1/2}(x^{k,m}_j - x_j + i\xi^{k,n}_j) \f$ with
 * \f$ \partial_{x_j} z_j = -k^{1/2} \f$. The recursion is validated
 * against a finite-difference oracle in the tests, which pins the sign.
 *
 * @throws ConfigError if p exceeds kDerivativeOrderMax (coefficients grow
 *         factorially; beyond order 8 extended precision would be needed).
 */
DerivativePolynomial derivative_polynomial(int p);

/**
 * @brief Analytic partial derivative
 * \f[
 *   \partial^a \Psi_{k,m,n}(x) = k^{[a]/2}
 *   \prod_j Q_{a_j}\!\big(k^{1/2}(x^{k,m}_j - x_j + i\,\xi^{k,n}_j)\big)
 *   \cdot \Psi_{k,m,n}(x),
 * \f]
 * where \f$[a] = \sum_j a_j\f$.
 *
 * @param[in] state the coherent state
 * @param[in] a     multi-index of length d (order per axis)
 * @param[in] x     evaluation point of length d
 * @throws ConfigError on dimension mismatch or \f$[a] >\f$ maximum order.
 */
Complex evaluate_state_derivative(const GaussianState& state,
                                  std::span<const int> a,
                                  std::span<const double> x);

/**
 * @brief Closed-form inner product \f$(\Psi_a, \Psi_b)\f$.
 *
 * @details With \f$\Delta m = m - m'\f$, \f$\Delta n = n - n'\f$ for
 * \f$a = (m,n)\f$, \f$b = (m',n')\f$,
 * \f[
 *    (\Psi_a, \Psi_b) = i^{\,e \bmod 4}\;
 *        e^{-\frac{\pi}{4}\left(|\Delta m|^2 + |\Delta n|^2\right)},
 *    \qquad e = \sum_j (m'_j - m_j)(n_j + n'_j).
 * \f]
 * The modulus \f$ e^{-\frac{\pi}{4}|[m,n]-[m',n']|^2} \f$ is exact and
 * k-independent; the phase is an exact integer power of i, derived from
 * the Gaussian product identity
 * \f$ \tfrac12(|x-y|^2 + |x-z|^2) = |x - \tfrac{y+z}{2}|^2
 *     + |\tfrac{y-z}{2}|^2 \f$
 * and the Gaussian Fourier transform, and validated against an adaptive
 * Gauss-Hermite quadrature oracle in the tests.
 */
Complex state_inner_product(const FrameParams& params,
                            const LatticeIndex& a,
                            const LatticeIndex& b);

/**
 * @brief Gaussian-moment formula
 * \f$ \big((\bar t_j - x_j)^\ell\, \Psi_a, \Psi_b\big) \f$ where
 * \f$\bar t = (x^{k,m} + x^{k,m'})/2\f$ is the midpoint of the two
 * position centers.
 *
 * @details Closed form:
 * \f[
 *   (\Psi_a,\Psi_b)\cdot\Big(\frac{-i}{2\sqrt{k}}\Big)^{\!\ell}
 *      H_\ell\!\Big(\frac{\sqrt{\pi}\,(n_j - n'_j)}{2}\Big),
 * \f]
 * with \f$H_\ell\f$ the physicists' Hermite polynomial. These moments are
 * the building blocks of coefficient-decay sums: monomial weights against
 * Gaussian pairs never require quadrature.
 *
 * @throws ConfigError for axis out of range or order beyond maximum.
 */
Complex monomial_shift_inner_product(const FrameParams& params,
                                     const LatticeIndex& a,
                                     const LatticeIndex& b,
                                     int axis,
                                     int ell);

/** @brief Physicists' Hermite polynomial \f$H_\ell(t)\f$ (real argument). */
double hermite_h(int ell, double t);

/** @brief Result of the exact Fourier transform of a state. */
struct FourierImage {
    Complex phase;      ///< Unit modulus, equals \f$(-1)^{m\cdot n}\f$
    LatticeIndex image; ///< The index (n, -m)
};

/**
 * @brief Exact action of the scaled Fourier transform on a state:
 * \f$ \mathcal{F}_k \Psi_{k,m,n} = e^{-i\pi m\cdot n}\, \Psi_{k,n,-m} \f$.
 *
 * @details \f$\mathcal{F}_k v(\xi) = (k/2\pi)^{d/2}\int v(x)
 * e^{-ikx\cdot\xi}\,dx\f$ maps the lattice to itself, swapping position
 * and frequency indices. Since \f$ k\,x^{k,m}\cdot\xi^{k,n} = \pi\,
 * m\cdot n \f$, the phase is exactly \f$(-1)^{m\cdot n}\f$.
 */
FourierImage fourier_transform_state(const FrameParams& params,
                                     const LatticeIndex& idx);

} // namespace gf
