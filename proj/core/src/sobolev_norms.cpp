/**
 * @file sobolev_norms.cpp
 * @brief Weighted Sobolev norms by analytic derivatives + grid quadrature,
 *        and a naive-DFT Fourier-side cross-check.
 */

#include "gaborframe/sobolev_norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "gaborframe/detail/kahan.hpp"
#include "gaborframe/errors.hpp"

namespace gf {

namespace {

constexpr double kPi = std::numbers::pi;

/** All multi-indices a in N^d with [a] <= p, in lexicographic order. */
std::vector<std::array<int, kMaxDim>> multi_indices_up_to(int d, int p) {
    std::vector<std::array<int, kMaxDim>> out;
    std::array<int, kMaxDim> a{};
    while (true) {
        int total = 0;
        for (int j = 0; j < d; ++j) total += a[j];
        if (total <= p) out.push_back(a);
        int j = d - 1;
        while (j >= 0 && a[j] == p) {
            a[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++a[j];
    }
    return out;
}

int order_of(const std::array<int, kMaxDim>& a, int d) {
    int total = 0;
    for (int j = 0; j < d; ++j) total += a[j];
    return total;
}

/** Same guard rule as sample_to_grid: tails must fit inside the domain. */
void check_guard_band(const GaussianMixture& u, const GridSpec& spec,
                      const char* what) {
    const double guard = 8.0 / std::sqrt(u.params().k);
    const double spacing = std::sqrt(kPi / u.params().k);
    // Same slack as sample_to_grid: centers exactly on the guard line pass.
    const double slack = 1e-9 * std::max(1.0, spec.half_width);
    for (const auto& [idx, w] : u.terms()) {
        for (int j = 0; j < u.params().d; ++j) {
            if (std::abs(spacing * idx.m[j]) > spec.half_width - guard + slack) {
                throw GuardBandError(
                    std::string(what) + ": mixture center at |x| = " +
                    std::to_string(std::abs(spacing * idx.m[j])) +
                    " violates the guard band L - 8 k^{-1/2} = " +
                    std::to_string(spec.half_width - guard));
            }
        }
    }
}

using DerivativeSampler =
    std::function<Complex(std::span<const int>, std::span<const double>)>;

/**
 * Shared accumulation core: for every multi-index [a] <= p, sample the
 * derivative once over the grid and fold the |x|^{2q} weights for all
 * admissible q in the same pass.
 */
double norm_impl(const FrameParams& params, const NormSpec& spec, bool weighted,
                 const DerivativeSampler& sample) {
    spec.validate();
    params.validate();
    const int d = params.d;
    const int n = spec.quadrature.nodes_per_axis;
    if (n < 2) throw ConfigError("sobolev norm: nodes_per_axis must be >= 2");
    const double h = spec.quadrature.spacing();

    std::size_t total_nodes = 1;
    for (int j = 0; j < d; ++j) total_nodes *= static_cast<std::size_t>(n);

    const auto indices = multi_indices_up_to(d, spec.p);
    detail::KahanSum norm2;
    std::array<int, kMaxDim> c{};
    std::array<double, kMaxDim> x{};
    for (const auto& a : indices) {
        const int order = order_of(a, d);
        const int q_max = weighted ? spec.p - order : 0;
        const double k_weight = std::pow(params.k, -2.0 * order);
        std::vector<detail::KahanSum> by_q(static_cast<std::size_t>(q_max) + 1);
        for (std::size_t flat = 0; flat < total_nodes; ++flat) {
            std::size_t rem = flat;
            double weight = 1.0;
            for (int j = d - 1; j >= 0; --j) {
                c[j] = static_cast<int>(rem % n);
                rem /= n;
                weight *= (c[j] == 0 || c[j] == n - 1) ? 0.5 * h : h;
            }
            double r2 = 0.0;
            for (int j = 0; j < d; ++j) {
                x[j] = -spec.quadrature.half_width + c[j] * h;
                r2 += x[j] * x[j];
            }
            const Complex s = sample(std::span<const int>(a.data(), d),
                                     std::span<const double>(x.data(), d));
            const double base = weight * std::norm(s);
            double radial = 1.0;
            for (int q = 0; q <= q_max; ++q) {
                by_q[static_cast<std::size_t>(q)].add(base * radial);
                radial *= r2;
            }
        }
        for (const auto& acc : by_q) norm2.add(k_weight * acc.value());
    }
    return std::sqrt(std::max(0.0, norm2.value()));
}

} // namespace

void NormSpec::validate() const {
    if (p < 0 || p > kSobolevOrderMax) {
        throw ConfigError("NormSpec: p must lie in [0, " +
                          std::to_string(kSobolevOrderMax) + "], got " +
                          std::to_string(p));
    }
}

NormSpec default_norm_spec(const GaussianMixture& u, int p) {
    NormSpec spec;
    spec.p = p;
    spec.quadrature = default_grid_spec(u);
    spec.validate();
    return spec;
}

double weighted_sobolev_norm(const GaussianMixture& u, const NormSpec& spec) {
    check_guard_band(u, spec.quadrature, "weighted_sobolev_norm");
    return norm_impl(u.params(), spec, /*weighted=*/true,
                     [&u](std::span<const int> a, std::span<const double> x) {
                         return u.evaluate_derivative(a, x);
                     });
}

double sobolev_norm(const GaussianMixture& u, const NormSpec& spec) {
    check_guard_band(u, spec.quadrature, "sobolev_norm");
    return norm_impl(u.params(), spec, /*weighted=*/false,
                     [&u](std::span<const int> a, std::span<const double> x) {
                         return u.evaluate_derivative(a, x);
                     });
}

CoordinateMixture multiply_by_coordinate(const GaussianMixture& u, int axis) {
    if (axis < 0 || axis >= u.params().d) {
        throw ConfigError("multiply_by_coordinate: axis out of range");
    }
    return CoordinateMixture{u, axis};
}

Complex evaluate(const CoordinateMixture& xu, std::span<const double> x) {
    return x[static_cast<std::size_t>(xu.axis)] * xu.base.evaluate(x);
}

double weighted_sobolev_norm(const CoordinateMixture& xu, const NormSpec& spec) {
    check_guard_band(xu.base, spec.quadrature, "weighted_sobolev_norm(x_j u)");
    const int axis = xu.axis;
    const GaussianMixture& u = xu.base;
    // Leibniz: d^a (x_j u) = x_j d^a u + a_j d^{a - e_j} u, both closed form.
    return norm_impl(
        u.params(), spec, /*weighted=*/true,
        [&u, axis](std::span<const int> a, std::span<const double> x) {
            Complex s = x[static_cast<std::size_t>(axis)] *
                        u.evaluate_derivative(a, x);
            if (a[static_cast<std::size_t>(axis)] > 0) {
                std::array<int, kMaxDim> lower{};
                for (std::size_t j = 0; j < a.size(); ++j) lower[j] = a[j];
                lower[static_cast<std::size_t>(axis)] -= 1;
                s += static_cast<double>(a[static_cast<std::size_t>(axis)]) *
                     u.evaluate_derivative(
                         std::span<const int>(lower.data(), a.size()), x);
            }
            return s;
        });
}

FourierNormResult sobolev_norm_fourier(const QuadratureGrid& grid, int p) {
    grid.params.validate();
    if (p < 0 || p > kSobolevOrderMax) {
        throw ConfigError("sobolev_norm_fourier: p out of range");
    }
    const int d = grid.params.d;
    const int n = grid.spec.nodes_per_axis;
    const double h = grid.spec.spacing();
    const double k = grid.params.k;
    const double half_width = grid.spec.half_width;
    if (grid.samples.size() != grid.total_nodes()) {
        throw ConfigError("sobolev_norm_fourier: sample count mismatch");
    }

    // Centered frequency ladder l in [-n/2, ...]; xi_l = 2 pi l / (k n h).
    const int l_min = -(n / 2);
    const double d_xi = 2.0 * kPi / (k * n * h);

    // Successive naive DFTs along each axis (axis 0 slowest in memory):
    //   out[l] = e^{2 pi i l L / (n h)} sum_m in[m] e^{-2 pi i l m / n},
    // which is exactly sum_m in[m] e^{-i k x_m xi_l}. O(n^2) per line is
    // deliberate: this routine is an oracle, not a fast path.
    std::vector<Complex> data = grid.samples;
    std::vector<Complex> line_in(static_cast<std::size_t>(n));
    std::vector<Complex> line_out(static_cast<std::size_t>(n));
    for (int axis = 0; axis < d; ++axis) {
        std::size_t stride = 1;
        for (int j = axis + 1; j < d; ++j) stride *= static_cast<std::size_t>(n);
        const std::size_t block = stride * static_cast<std::size_t>(n);
        std::size_t outer_count = 1;
        for (int j = 0; j < axis; ++j) outer_count *= static_cast<std::size_t>(n);
        for (std::size_t outer = 0; outer < outer_count; ++outer) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                const std::size_t base2 = outer * block + inner;
                for (int m = 0; m < n; ++m) {
                    line_in[static_cast<std::size_t>(m)] =
                        data[base2 + static_cast<std::size_t>(m) * stride];
                }
                for (int t = 0; t < n; ++t) {
                    const int l = l_min + t;
                    detail::KahanComplexSum acc;
                    for (int m = 0; m < n; ++m) {
                        const double phase =
                            -2.0 * kPi * static_cast<double>(l) *
                            static_cast<double>(m) / static_cast<double>(n);
                        acc.add(line_in[static_cast<std::size_t>(m)] *
                                Complex(std::cos(phase), std::sin(phase)));
                    }
                    const double edge_phase = 2.0 * kPi * static_cast<double>(l) *
                                              half_width /
                                              (static_cast<double>(n) * h);
                    line_out[static_cast<std::size_t>(t)] =
                        acc.value() *
                        Complex(std::cos(edge_phase), std::sin(edge_phase));
                }
                for (int t = 0; t < n; ++t) {
                    data[base2 + static_cast<std::size_t>(t) * stride] =
                        line_out[static_cast<std::size_t>(t)];
                }
            }
        }
    }
    const double front = std::pow(k / (2.0 * kPi), 0.5 * d) * std::pow(h, d);
    for (auto& z : data) z *= front;

    // Per-axis tables xi^{2a} for a = 0..p.
    std::vector<std::vector<double>> xi_pow(
        static_cast<std::size_t>(n),
        std::vector<double>(static_cast<std::size_t>(p) + 1, 1.0));
    for (int t = 0; t < n; ++t) {
        const double xi = d_xi * static_cast<double>(l_min + t);
        for (int a = 1; a <= p; ++a) {
            xi_pow[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)] =
                xi_pow[static_cast<std::size_t>(t)][static_cast<std::size_t>(a) - 1] *
                xi * xi;
        }
    }
    const auto indices = multi_indices_up_to(d, p);

    double cell = 1.0;
    for (int j = 0; j < d; ++j) cell *= d_xi;
    const int edge = static_cast<int>(std::floor(0.9 * (n / 2)));

    detail::KahanSum value2;
    detail::KahanSum mass;
    detail::KahanSum tail;
    std::array<int, kMaxDim> t{};
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        std::size_t rem = flat;
        bool near_edge = false;
        for (int j = d - 1; j >= 0; --j) {
            t[j] = static_cast<int>(rem % n);
            rem /= n;
            if (std::abs(l_min + t[j]) >= edge) near_edge = true;
        }
        const double power = std::norm(data[flat]) * cell;
        mass.add(power);
        if (near_edge) tail.add(power);
        double weight = 0.0;
        for (const auto& a : indices) {
            double w = 1.0;
            for (int j = 0; j < d; ++j) {
                w *= xi_pow[static_cast<std::size_t>(t[j])]
                           [static_cast<std::size_t>(a[j])];
            }
            weight += w;
        }
        value2.add(weight * power);
    }

    FourierNormResult result;
    result.value = std::sqrt(std::max(0.0, value2.value()));
    result.tail_fraction =
        mass.value() > 0.0 ? tail.value() / mass.value() : 0.0;
    result.aliasing_warning = result.tail_fraction > 1e-8;
    return result;
}

} // namespace gf
