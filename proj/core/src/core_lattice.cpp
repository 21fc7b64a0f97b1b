/**
 * @file core_lattice.cpp
 * @brief Lattice point arithmetic and deterministic ball enumeration.
 */

#include "gaborframe/core_lattice.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace gf {

void FrameParams::validate() const {
    if (!(k >= 1.0) || !std::isfinite(k)) {
        throw ConfigError("FrameParams: k must be finite and >= 1, got " +
                          std::to_string(k));
    }
    if (d < 1 || d > kMaxDim) {
        throw ConfigError("FrameParams: d must be in [1, " +
                          std::to_string(kMaxDim) + "], got " +
                          std::to_string(d));
    }
}

PhasePoint lattice_point(const FrameParams& params, const LatticeIndex& idx) {
    params.validate();
    const double spacing = std::sqrt(std::numbers::pi / params.k);
    PhasePoint pt;
    for (int j = 0; j < params.d; ++j) {
        pt.x[j] = spacing * idx.m[j];
        pt.xi[j] = spacing * idx.n[j];
    }
    return pt;
}

double index_norm(const FrameParams& params, const LatticeIndex& idx) {
    params.validate();
    const double spacing = std::sqrt(std::numbers::pi / params.k);
    return spacing * std::sqrt(static_cast<double>(idx.norm2()));
}

std::vector<LatticeIndex> enumerate_ball(const FrameParams& params, double D) {
    params.validate();
    if (!(D > 0.0) || !std::isfinite(D)) {
        throw ConfigError("enumerate_ball: D must be finite and > 0");
    }
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double sk_D = std::sqrt(params.k) * D;
    if (sk_D < sqrt_pi * (1.0 - 1e-12)) {
        throw BallEmptyError(
            "enumerate_ball: need k^{1/2} D > sqrt(pi) for a nonempty "
            "summation set; got k^{1/2} D = " + std::to_string(sk_D) +
            " < sqrt(pi) = " + std::to_string(sqrt_pi));
    }

    // Integer radius bound: |[m,n]|^2 <= D^2 k / pi, with a relative slack
    // so boundary shells hit exactly by D are included despite rounding.
    const double r2_real = (sk_D * sk_D / std::numbers::pi) * (1.0 + 1e-12);
    const auto r2 = static_cast<std::int64_t>(r2_real);
    const int r = static_cast<int>(std::floor(std::sqrt(r2_real)));

    std::vector<LatticeIndex> out;
    // Odometer over the 2d free components; unused components stay zero,
    // so the generated indices are already valid LatticeIndex values.
    std::array<int, 2 * kMaxDim> c{}; // first d entries: m, next d: n
    const int dims = 2 * params.d;
    for (int j = 0; j < dims; ++j) c[j] = -r;
    while (true) {
        std::int64_t n2 = 0;
        for (int j = 0; j < dims; ++j) n2 += static_cast<std::int64_t>(c[j]) * c[j];
        if (n2 <= r2) {
            LatticeIndex idx;
            for (int j = 0; j < params.d; ++j) {
                idx.m[j] = c[j];
                idx.n[j] = c[params.d + j];
            }
            out.push_back(idx);
        }
        int j = dims - 1;
        while (j >= 0 && c[j] == r) {
            c[j] = -r;
            --j;
        }
        if (j < 0) break;
        ++c[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gf
