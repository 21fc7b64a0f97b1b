/**
 * @file function_rep.cpp
 * @brief Mixture algebra, truncated Gram inner products and grid sampling.
 */

#include "gaborframe/function_rep.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "gaborframe/detail/kahan.hpp"

namespace gf {

namespace {

constexpr double kPi = std::numbers::pi;

void check_same_params(const FrameParams& a, const FrameParams& b,
                       const char* what) {
    if (!(a == b)) {
        throw ConfigError(std::string(what) + ": FrameParams mismatch");
    }
}

/**
 * All integer offsets delta in Z^{2d} with |delta|^2 <= r^2, cached per
 * (d, r). Iterating offsets around each term of the smaller operand keeps
 * truncated Gram sums linear in the mixture size.
 */
const std::vector<LatticeIndex>& pair_offsets(int d, int r) {
    static std::map<std::pair<int, int>, std::vector<LatticeIndex>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({d, r});
    if (it != cache.end()) return it->second;

    std::vector<LatticeIndex> offsets;
    const std::int64_t r2 = static_cast<std::int64_t>(r) * r;
    std::array<int, 2 * kMaxDim> c{};
    const int dims = 2 * d;
    for (int j = 0; j < dims; ++j) c[j] = -r;
    while (true) {
        std::int64_t n2 = 0;
        for (int j = 0; j < dims; ++j) n2 += static_cast<std::int64_t>(c[j]) * c[j];
        if (n2 <= r2) {
            LatticeIndex idx;
            for (int j = 0; j < d; ++j) {
                idx.m[j] = c[j];
                idx.n[j] = c[d + j];
            }
            offsets.push_back(idx);
        }
        int j = dims - 1;
        while (j >= 0 && c[j] == r) {
            c[j] = -r;
            --j;
        }
        if (j < 0) break;
        ++c[j];
    }
    std::sort(offsets.begin(), offsets.end());
    return cache.emplace(std::make_pair(d, r), std::move(offsets))
        .first->second;
}

LatticeIndex shifted(const LatticeIndex& base, const LatticeIndex& delta, int d) {
    LatticeIndex out;
    for (int j = 0; j < d; ++j) {
        out.m[j] = base.m[j] + delta.m[j];
        out.n[j] = base.n[j] + delta.n[j];
    }
    return out;
}

} // namespace

GaussianMixture::GaussianMixture(FrameParams params) : params_(params) {
    params_.validate();
}

GaussianMixture GaussianMixture::single(FrameParams params,
                                        const LatticeIndex& idx,
                                        Complex weight) {
    GaussianMixture u(params);
    u.set_term(idx, weight);
    return u;
}

Complex GaussianMixture::coefficient(const LatticeIndex& idx) const {
    const auto it = terms_.find(idx);
    return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void GaussianMixture::set_term(const LatticeIndex& idx, Complex weight) {
    terms_[idx] = weight;
}

void GaussianMixture::add_term(const LatticeIndex& idx, Complex weight) {
    terms_[idx] += weight;
}

void GaussianMixture::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

double GaussianMixture::max_index_norm() const {
    std::int64_t worst = 0;
    for (const auto& [idx, w] : terms_) {
        worst = std::max(worst, idx.norm2());
    }
    return std::sqrt(static_cast<double>(worst));
}

Complex GaussianMixture::evaluate(std::span<const double> x) const {
    detail::KahanComplexSum acc;
    for (const auto& [idx, w] : terms_) {
        acc.add(w * evaluate_state(GaussianState{params_, idx}, x));
    }
    return acc.value();
}

Complex GaussianMixture::evaluate_derivative(std::span<const int> a,
                                             std::span<const double> x) const {
    detail::KahanComplexSum acc;
    for (const auto& [idx, w] : terms_) {
        acc.add(w * evaluate_state_derivative(GaussianState{params_, idx}, a, x));
    }
    return acc.value();
}

GaussianMixture mixture_combine(Complex alpha, const GaussianMixture& u,
                                Complex beta, const GaussianMixture& v) {
    check_same_params(u.params(), v.params(), "mixture_combine");
    GaussianMixture out(u.params());
    for (const auto& [idx, w] : u.terms()) out.add_term(idx, alpha * w);
    for (const auto& [idx, w] : v.terms()) out.add_term(idx, beta * w);
    out.prune();
    return out;
}

Complex mixture_inner_product(const GaussianMixture& u, const GaussianMixture& v,
                              int r_gram) {
    check_same_params(u.params(), v.params(), "mixture_inner_product");
    if (r_gram < 0) throw ConfigError("mixture_inner_product: r_gram < 0");
    const int d = u.params().d;
    const auto& offsets = pair_offsets(d, r_gram);

    // Iterate over the smaller operand and probe the larger one; the Gram
    // closed form makes each surviving pair O(1).
    detail::KahanComplexSum acc;
    if (u.size() <= v.size()) {
        for (const auto& [a, wa] : u.terms()) {
            for (const auto& delta : offsets) {
                const LatticeIndex b = shifted(a, delta, d);
                const auto it = v.terms().find(b);
                if (it == v.terms().end()) continue;
                acc.add(wa * std::conj(it->second) *
                        state_inner_product(u.params(), a, b));
            }
        }
    } else {
        for (const auto& [b, wb] : v.terms()) {
            for (const auto& delta : offsets) {
                const LatticeIndex a = shifted(b, delta, d);
                const auto it = u.terms().find(a);
                if (it == u.terms().end()) continue;
                acc.add(it->second * std::conj(wb) *
                        state_inner_product(u.params(), a, b));
            }
        }
    }
    return acc.value();
}

double mixture_norm(const GaussianMixture& u, int r_gram) {
    return std::sqrt(std::max(0.0, mixture_inner_product(u, u, r_gram).real()));
}

GridSpec default_grid_spec(const GaussianMixture& u) {
    const double k = u.params().k;
    const double spacing = std::sqrt(kPi / k);
    double max_center = 0.0;
    int n_max = 0;
    for (const auto& [idx, w] : u.terms()) {
        for (int j = 0; j < u.params().d; ++j) {
            max_center = std::max(max_center, std::abs(spacing * idx.m[j]));
            n_max = std::max(n_max, std::abs(idx.n[j]));
        }
    }
    GridSpec spec;
    spec.half_width = max_center + 8.0 / std::sqrt(k);
    // Resolve the Gaussian width and the fastest pair modulation; see header.
    const double h_target =
        std::min(0.25, 2.0 * kPi / (std::sqrt(kPi) * (2.0 * n_max + 1.0) + 16.0)) /
        std::sqrt(k);
    spec.nodes_per_axis =
        static_cast<int>(std::ceil(2.0 * spec.half_width / h_target)) + 1;
    return spec;
}

std::size_t QuadratureGrid::total_nodes() const {
    std::size_t total = 1;
    for (int j = 0; j < params.d; ++j) {
        total *= static_cast<std::size_t>(spec.nodes_per_axis);
    }
    return total;
}

QuadratureGrid sample_to_grid(const GaussianMixture& u, const GridSpec& spec) {
    u.params().validate();
    if (spec.nodes_per_axis < 2) {
        throw ConfigError("sample_to_grid: nodes_per_axis must be >= 2");
    }
    const double guard = 8.0 / std::sqrt(u.params().k);
    const double spacing = std::sqrt(kPi / u.params().k);
    // Slack admits centers exactly on the guard line (the default grid
    // places the outermost center there by construction).
    const double slack = 1e-9 * std::max(1.0, spec.half_width);
    for (const auto& [idx, w] : u.terms()) {
        for (int j = 0; j < u.params().d; ++j) {
            if (std::abs(spacing * idx.m[j]) > spec.half_width - guard + slack) {
                throw GuardBandError(
                    "sample_to_grid: mixture center at |x| = " +
                    std::to_string(std::abs(spacing * idx.m[j])) +
                    " violates the guard band L - 8 k^{-1/2} = " +
                    std::to_string(spec.half_width - guard));
            }
        }
    }

    QuadratureGrid grid{u.params(), spec, {}};
    grid.samples.resize(grid.total_nodes());
    const int d = u.params().d;
    const int n = spec.nodes_per_axis;
    std::array<double, kMaxDim> x{};
    std::array<int, kMaxDim> c{};
    for (std::size_t flat = 0; flat < grid.samples.size(); ++flat) {
        std::size_t rem = flat;
        for (int j = d - 1; j >= 0; --j) {
            c[j] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int j = 0; j < d; ++j) x[j] = grid.node(c[j]);
        grid.samples[flat] = u.evaluate(std::span<const double>(x.data(), d));
    }
    return grid;
}

Complex grid_inner_product(const QuadratureGrid& f, const QuadratureGrid& g) {
    check_same_params(f.params, g.params, "grid_inner_product");
    if (f.spec.half_width != g.spec.half_width ||
        f.spec.nodes_per_axis != g.spec.nodes_per_axis) {
        throw ConfigError("grid_inner_product: grid geometry mismatch");
    }
    const int d = f.params.d;
    const int n = f.spec.nodes_per_axis;
    const double h = f.spec.spacing();

    detail::KahanComplexSum acc;
    std::array<int, kMaxDim> c{};
    for (std::size_t flat = 0; flat < f.samples.size(); ++flat) {
        std::size_t rem = flat;
        double weight = 1.0;
        for (int j = d - 1; j >= 0; --j) {
            c[j] = static_cast<int>(rem % n);
            rem /= n;
            weight *= (c[j] == 0 || c[j] == n - 1) ? 0.5 * h : h;
        }
        acc.add(weight * f.samples[flat] * std::conj(g.samples[flat]));
    }
    return acc.value();
}

double grid_norm(const QuadratureGrid& f) {
    return std::sqrt(std::max(0.0, grid_inner_product(f, f).real()));
}

} // namespace gf
