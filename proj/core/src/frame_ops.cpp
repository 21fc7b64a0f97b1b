/**
 * @file frame_ops.cpp
 * @brief Analysis/synthesis operators and the frame-bound pencil estimator.
 */

#include "gaborframe/frame_ops.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "gaborframe/detail/kahan.hpp"

namespace gf {

namespace {

constexpr double kPi = std::numbers::pi;

/** Ball of integer indices |[m,n]| <= radius, sorted. */
std::vector<LatticeIndex> integer_ball(int d, int radius) {
    FrameParams params{1.0, d};
    // D = radius * sqrt(pi) at k=1 gives exactly |[m,n]| <= radius.
    return enumerate_ball(params, radius * std::sqrt(kPi));
}

} // namespace

double CoefficientMap::l2_norm() const {
    detail::KahanSum acc;
    for (const auto& [idx, c] : entries) acc.add(std::norm(c));
    return std::sqrt(acc.value());
}

void CoefficientMap::prune(double eps) {
    for (auto it = entries.begin(); it != entries.end();) {
        if (std::abs(it->second) <= eps) {
            it = entries.erase(it);
        } else {
            ++it;
        }
    }
}

void FrameBounds::validate() const {
    if (!(alpha_sq > 0.0) || !(beta_sq >= alpha_sq)) {
        throw ConfigError("FrameBounds: need 0 < alpha_sq <= beta_sq");
    }
    if (!(gamma < 1.0)) {
        throw ConfigError("FrameBounds: gamma must be < 1 (contraction)");
    }
}

CoefficientMap analysis(const GaussianMixture& u,
                        const std::vector<LatticeIndex>& window, int r_gram) {
    CoefficientMap out{u.params(), {}};
    for (const auto& idx : window) {
        const GaussianMixture probe =
            GaussianMixture::single(u.params(), idx);
        out.entries[idx] = mixture_inner_product(u, probe, r_gram);
    }
    return out;
}

CoefficientMap analysis_grid(const QuadratureGrid& u,
                             const std::vector<LatticeIndex>& window) {
    CoefficientMap out{u.params, {}};
    for (const auto& idx : window) {
        const QuadratureGrid state_grid = sample_to_grid(
            GaussianMixture::single(u.params, idx), u.spec);
        out.entries[idx] = grid_inner_product(u, state_grid);
    }
    return out;
}

GaussianMixture synthesis(const CoefficientMap& c) {
    GaussianMixture out(c.params);
    for (const auto& [idx, w] : c.entries) out.set_term(idx, w);
    return out;
}

GaussianMixture frame_apply(const GaussianMixture& u, double support_radius,
                            int window_margin, int r_gram) {
    u.params().validate();
    GaussianMixture out(u.params());
    if (u.empty()) return out;

    const int d = u.params().d;
    const std::int64_t cap2 =
        std::isinf(support_radius)
            ? std::numeric_limits<std::int64_t>::max()
            : static_cast<std::int64_t>(support_radius * support_radius *
                                        (1.0 + 1e-12));

    // Window: supp(u) dilated by window_margin, capped at |idx| <= cap.
    std::set<LatticeIndex> window;
    const std::vector<LatticeIndex> dilation = integer_ball(d, window_margin);
    for (const auto& [center, w] : u.terms()) {
        for (const auto& delta : dilation) {
            LatticeIndex idx;
            for (int j = 0; j < d; ++j) {
                idx.m[j] = center.m[j] + delta.m[j];
                idx.n[j] = center.n[j] + delta.n[j];
            }
            if (idx.norm2() <= cap2) window.insert(idx);
        }
    }

    for (const auto& idx : window) {
        const GaussianMixture probe = GaussianMixture::single(u.params(), idx);
        const Complex coeff = mixture_inner_product(u, probe, r_gram);
        if (std::abs(coeff) > kPruneEps) out.set_term(idx, coeff);
    }
    return out;
}

FrameBounds estimate_frame_bounds(const FrameParams& params, int lattice_radius,
                                  int iterations) {
    params.validate();
    if (lattice_radius < 4) {
        throw ConfigError("estimate_frame_bounds: lattice_radius must be >= 4");
    }
    if (iterations < 50) {
        throw ConfigError("estimate_frame_bounds: iterations must be >= 50");
    }

    const int d = params.d;
    const std::vector<LatticeIndex> cols = integer_ball(d, lattice_radius);
    const std::vector<LatticeIndex> rows =
        integer_ball(d, lattice_radius + kRGramDefault + 1);
    const auto nc = static_cast<Eigen::Index>(cols.size());
    const auto nr = static_cast<Eigen::Index>(rows.size());

    // Rectangular Gram G_r (analysis of ball states over the dilated
    // window) and square Gram G (mass matrix of the ball states).
    Eigen::MatrixXcd Gr(nr, nc);
    for (Eigen::Index i = 0; i < nr; ++i) {
        for (Eigen::Index j = 0; j < nc; ++j) {
            Gr(i, j) = state_inner_product(params, cols[j], rows[i]);
        }
    }
    Eigen::MatrixXcd G(nc, nc);
    for (Eigen::Index i = 0; i < nc; ++i) {
        for (Eigen::Index j = 0; j < nc; ++j) {
            G(i, j) = state_inner_product(params, cols[j], cols[i]);
        }
    }
    const Eigen::MatrixXcd A = Gr.adjoint() * Gr;

    // Canonical orthogonalization: drop the near-null redundancy modes of
    // the overcomplete ball family, then compress A to the retained span.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    if (es.info() != Eigen::Success) {
        throw SolverError("estimate_frame_bounds: eigendecomposition failed",
                          0.0, 0);
    }
    const Eigen::VectorXd evals = es.eigenvalues();
    const double cutoff = 1e-8 * evals(nc - 1);
    Eigen::Index first_kept = 0;
    while (first_kept < nc && evals(first_kept) <= cutoff) ++first_kept;
    const Eigen::Index kept = nc - first_kept;
    Eigen::MatrixXcd basis(nc, kept);
    for (Eigen::Index j = 0; j < kept; ++j) {
        basis.col(j) = es.eigenvectors().col(first_kept + j) /
                       std::sqrt(evals(first_kept + j));
    }
    Eigen::MatrixXcd M = basis.adjoint() * A * basis;
    M = 0.5 * (M + Eigen::MatrixXcd(M.adjoint())); // enforce Hermitian

    // Power iteration judged by Rayleigh-quotient drift, not eigenvector
    // residuals: the extremal eigenvalues sit in near-degenerate symmetry
    // clusters (relative spread ~3e-5 at radius 8), so no eigenvector ever
    // converges, but the quotient lands inside the cluster once the modes
    // outside it die and then creeps at a vanishing per-step rate. The
    // cluster width — far below the percent-level stability tolerances this
    // estimate feeds — is the attainable accuracy.
    const auto power_top = [iterations, kept](const Eigen::MatrixXcd& op,
                                              const char* label) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Ones(kept);
        v.normalize();
        double theta = 0.0;
        double drift = 1.0;
        int settled = 0;
        for (int it = 1; it <= iterations; ++it) {
            const Eigen::VectorXcd w = op * v;
            const double theta_next = std::real(v.dot(w));
            drift = std::abs(theta_next - theta) /
                    std::max(std::abs(theta_next), 1e-300);
            theta = theta_next;
            settled = drift <= 1e-9 ? settled + 1 : 0;
            if (settled >= 5) return theta;
            const double norm = w.norm();
            if (norm == 0.0) {
                throw SolverError(std::string("estimate_frame_bounds: zero "
                                              "iterate in ") + label, 0.0, it);
            }
            v = w / norm;
        }
        // Budget exhausted: accept if the quotient has effectively settled.
        // Measured drifts at 300 iterations are 1e-7..7e-7 for radii 6-8
        // while the estimates are already within 4e-4 of the dense-solver
        // extremes, so 1e-6 separates "band-edge creep" from genuine
        // non-convergence with an order of magnitude to spare.
        if (drift <= 1e-6) return theta;
        throw NonConvergenceError(
            std::string("estimate_frame_bounds: Rayleigh quotient of ") +
                label + " still drifting after the iteration budget; "
                "last per-step relative drift = " + std::to_string(drift),
            drift, iterations);
    };

    const double beta_sq = power_top(M, "T*T");
    const Eigen::MatrixXcd shifted =
        beta_sq * Eigen::MatrixXcd::Identity(kept, kept) - M;
    const double spread = power_top(shifted, "beta^2 I - T*T");

    FrameBounds bounds;
    bounds.beta_sq = beta_sq;
    bounds.alpha_sq = beta_sq - spread;
    bounds.gamma =
        (bounds.beta_sq - bounds.alpha_sq) / (bounds.beta_sq + bounds.alpha_sq);
    bounds.validate();
    return bounds;
}

} // namespace gf
