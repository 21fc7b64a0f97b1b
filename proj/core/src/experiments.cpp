/**
 * @file experiments.cpp
 * @brief Sweeps, decay tables, sharpness probes and frame-bound tables.
 */

#include "gaborframe/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "gaborframe/detail/kahan.hpp"
#include "gaborframe/errors.hpp"
#include "gaborframe/frame_ops.hpp"

namespace gf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool ball_nonempty(const FrameParams& params, double D) {
    return std::sqrt(params.k) * D >= std::sqrt(kPi) * (1.0 - 1e-12);
}

/** Uniform draw in (0, 1) from the top 53 bits of the generator. */
double uniform01(std::mt19937_64& gen) {
    while (true) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

/** Explicit Box-Muller pair — identical across standard libraries. */
Complex complex_gaussian(std::mt19937_64& gen) {
    const double u1 = uniform01(gen);
    const double u2 = uniform01(gen);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return Complex(radius * std::cos(2.0 * kPi * u2),
                   radius * std::sin(2.0 * kPi * u2));
}

struct LineFit {
    double slope = kNaN;
    double intercept = kNaN;
    double r_squared = kNaN;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    LineFit fit;
    const std::size_t n = x.size();
    if (n < 2) return fit;
    detail::KahanSum sx, sy;
    for (std::size_t i = 0; i < n; ++i) {
        sx.add(x[i]);
        sy.add(y[i]);
    }
    const double mx = sx.value() / static_cast<double>(n);
    const double my = sy.value() / static_cast<double>(n);
    detail::KahanSum sxx, sxy;
    for (std::size_t i = 0; i < n; ++i) {
        sxx.add((x[i] - mx) * (x[i] - mx));
        sxy.add((x[i] - mx) * (y[i] - my));
    }
    if (sxx.value() <= 0.0) return fit;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = my - fit.slope * mx;
    detail::KahanSum ss_res, ss_tot;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = fit.intercept + fit.slope * x[i];
        ss_res.add((y[i] - pred) * (y[i] - pred));
        ss_tot.add((y[i] - my) * (y[i] - my));
    }
    fit.r_squared =
        ss_tot.value() > 0.0 ? 1.0 - ss_res.value() / ss_tot.value() : 1.0;
    return fit;
}

LatticeIndex distant_index(const FrameParams& params, double radius) {
    LatticeIndex idx{};
    idx.m[0] = 2 * static_cast<int>(std::ceil(std::sqrt(params.k) * radius));
    return idx;
}

} // namespace

void SweepConfig::validate() const {
    params.validate();
    solver.validate();
    if (D_values.size() < 3) {
        throw ConfigError("SweepConfig: need at least 3 D values, got " +
                          std::to_string(D_values.size()));
    }
    for (std::size_t i = 1; i < D_values.size(); ++i) {
        if (!(D_values[i] > D_values[i - 1])) {
            throw ConfigError("SweepConfig: D_values must be strictly ascending");
        }
    }
    bool any_valid = false;
    for (const double D : D_values) {
        if (D > 0.0 && ball_nonempty(params, D)) any_valid = true;
    }
    if (!any_valid) {
        throw ConfigError(
            "SweepConfig: no D value admits a nonempty lattice ball");
    }
    if (p < 0 || p > kSobolevOrderMax) {
        throw ConfigError("SweepConfig: p out of range");
    }
    if (test_function != "state" && test_function != "mixture" &&
        test_function != "distant") {
        throw ConfigError("SweepConfig: unknown test function '" +
                          test_function + "' (state|mixture|distant)");
    }
}

std::vector<LatticeIndex> index_window(int d, double radius) {
    if (d < 1 || d > kMaxDim) throw ConfigError("index_window: bad dimension");
    if (radius < 0.0) throw ConfigError("index_window: negative radius");
    const double r2 = radius * radius * (1.0 + 1e-12);
    const int r = static_cast<int>(std::floor(radius + 1e-9));
    std::vector<LatticeIndex> out;
    std::array<int, 2 * kMaxDim> c{};
    const int dims = 2 * d;
    for (int j = 0; j < dims; ++j) c[j] = -r;
    while (true) {
        double n2 = 0.0;
        for (int j = 0; j < dims; ++j) {
            n2 += static_cast<double>(c[j]) * static_cast<double>(c[j]);
        }
        if (n2 <= r2) {
            LatticeIndex idx;
            for (int j = 0; j < d; ++j) {
                idx.m[j] = c[j];
                idx.n[j] = c[d + j];
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

GaussianMixture random_mixture(const FrameParams& params, std::uint64_t seed,
                               int max_terms, int ball_radius) {
    params.validate();
    if (max_terms < 1) throw ConfigError("random_mixture: max_terms < 1");
    const auto ball = index_window(params.d, static_cast<double>(ball_radius));
    std::mt19937_64 gen(seed);
    const int count =
        1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_terms));
    std::set<std::size_t> picked;
    while (picked.size() < static_cast<std::size_t>(count)) {
        picked.insert(static_cast<std::size_t>(gen() % ball.size()));
    }
    GaussianMixture u(params);
    for (const std::size_t slot : picked) {
        u.set_term(ball[slot], complex_gaussian(gen));
    }
    const double norm = mixture_norm(u);
    if (norm <= 0.0) return u;
    GaussianMixture scaled(params);
    for (const auto& [idx, w] : u.terms()) scaled.set_term(idx, w / norm);
    return scaled;
}

GaussianMixture make_test_function(const SweepConfig& cfg) {
    if (cfg.test_function == "state") {
        return GaussianMixture::single(cfg.params, cfg.state_index);
    }
    if (cfg.test_function == "mixture") {
        return random_mixture(cfg.params, cfg.seed);
    }
    if (cfg.test_function == "distant") {
        return GaussianMixture::single(cfg.params,
                                       distant_index(cfg.params, cfg.distant_radius));
    }
    throw ConfigError("make_test_function: unknown test function '" +
                      cfg.test_function + "'");
}

SweepReport run_convergence_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const GaussianMixture u = make_test_function(cfg);
    const double base_norm =
        weighted_sobolev_norm(u, default_norm_spec(u, cfg.p));

    SweepReport report;
    report.base_norm = base_norm;
    report.rows.resize(cfg.D_values.size());

    // Independent work pool: one cell per D. Cells only read shared state;
    // each failure is recorded in its row and the sweep continues.
    std::atomic<std::size_t> cursor{0};
    auto run_cell = [&](std::size_t i) {
        ReportRow row;
        row.D = cfg.D_values[i];
        row.error = kNaN;
        row.norm_ratio = kNaN;
        row.slope_running = kNaN;
        const auto start = std::chrono::steady_clock::now();
        try {
            ProjectionSpec spec{row.D, cfg.solver};
            row.error = approximation_error(u, spec, cfg.p);
            row.norm_ratio = base_norm > 0.0 ? row.error / base_norm : kNaN;
            row.ok = true;
        } catch (const SolverError& err) {
            row.ok = false;
            row.note = err.what();
        } catch (const ConfigError& err) {
            row.ok = false;
            row.note = err.what();
        }
        row.wall_time_ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        report.rows[i] = std::move(row);
    };
    auto worker = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < cfg.D_values.size();
             i = cursor.fetch_add(1)) {
            run_cell(i);
        }
    };
    const unsigned pool = std::max(
        1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                               static_cast<unsigned>(cfg.D_values.size())));
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    // Running slope over the valid prefix; headline fit over the upper
    // half of the valid rows (preasymptotic suppression).
    std::vector<double> log_d, log_err;
    for (auto& row : report.rows) {
        if (row.ok && std::isfinite(row.error) && row.error > 0.0) {
            log_d.push_back(std::log(row.D));
            log_err.push_back(std::log(row.error));
            row.slope_running = fit_line(log_d, log_err).slope;
        } // invalid rows keep NaN metrics and are excluded from fits
    }
    const std::size_t valid = log_d.size();
    if (valid >= 2) {
        const std::size_t take = std::max<std::size_t>(2, (valid + 1) / 2);
        const std::size_t from = valid - take;
        const auto fit = fit_line(
            std::span<const double>(log_d).subspan(from),
            std::span<const double>(log_err).subspan(from));
        report.slope = fit.slope;
        report.r_squared = fit.r_squared;
    } else {
        report.slope = kNaN;
        report.r_squared = kNaN;
    }
    return report;
}

namespace {

DecayReport decay_table(const GaussianMixture& u, const CoefficientMap& coeffs,
                        int p_max, double window_radius) {
    DecayReport report;
    report.window_radius = window_radius;
    const double cell = kPi / u.params().k; // |x|^2+|xi|^2 = (pi/k) |[m,n]|^2
    for (int p = 0; p <= p_max; ++p) {
        DecayRow row;
        row.p = p;
        detail::KahanSum sum;
        for (const auto& [idx, c] : coeffs.entries) {
            const double weight =
                std::pow(cell * static_cast<double>(idx.norm2()),
                         static_cast<double>(p));
            sum.add(weight * std::norm(c));
        }
        row.weighted_sum = sum.value();
        row.sobolev_norm =
            u.empty() ? 0.0 : weighted_sobolev_norm(u, default_norm_spec(u, p));
        row.ratio = row.sobolev_norm > 0.0
                        ? row.weighted_sum / (row.sobolev_norm * row.sobolev_norm)
                        : 0.0;
        report.rows.push_back(row);
    }
    return report;
}

double decay_window_radius(const GaussianMixture& u) {
    return std::max(8.0, u.max_index_norm() + 6.0);
}

} // namespace

DecayReport run_coefficient_decay(const GaussianMixture& u, int p_max) {
    if (p_max < 0 || p_max > kSobolevOrderMax) {
        throw ConfigError("run_coefficient_decay: p_max out of range");
    }
    const double radius = decay_window_radius(u);
    const auto window = index_window(u.params().d, radius);
    return decay_table(u, analysis(u, window), p_max, radius);
}

DecayReport run_dual_decay(const GaussianMixture& u, int p_max,
                           const RichardsonConfig& solver) {
    if (p_max < 0 || p_max > kSobolevOrderMax) {
        throw ConfigError("run_dual_decay: p_max out of range");
    }
    const double radius = decay_window_radius(u);
    const auto window = index_window(u.params().d, radius);
    // (u, S^{-1} Psi_a) = (S^{-1} u, Psi_a): one solve, then analysis.
    const RichardsonResult solve = richardson_dual_apply(u, solver);
    return decay_table(u, analysis(solve.dual, window), p_max, radius);
}

SharpnessReport run_sharpness(int p, int r, double D, const FrameParams& params,
                              const RichardsonConfig& solver) {
    params.validate();
    solver.validate();
    if (p < 0 || r < 1 || p + r > kSobolevOrderMax) {
        throw ConfigError("run_sharpness: need p >= 0, r >= 1, p + r <= " +
                          std::to_string(kSobolevOrderMax));
    }
    if (!(D * std::sqrt(params.k) >= 1.0)) {
        throw ConfigError("run_sharpness: need D >= k^{-1/2}");
    }
    SharpnessReport report;
    report.p = p;
    report.r = r;
    report.D = D;
    report.m_star = distant_index(params, D);
    const GaussianMixture u = GaussianMixture::single(params, report.m_star);

    ProjectionSpec spec{D, solver};
    const GaussianMixture proj = project(u, spec);
    const GaussianMixture diff =
        mixture_combine(Complex(1.0, 0.0), u, Complex(-1.0, 0.0), proj);

    report.u_norm = weighted_sobolev_norm(u, default_norm_spec(u, p));
    report.proj_norm =
        proj.empty() ? 0.0
                     : weighted_sobolev_norm(proj, default_norm_spec(proj, p));
    report.error =
        diff.empty() ? 0.0
                     : weighted_sobolev_norm(diff, default_norm_spec(diff, p));
    report.high_norm = weighted_sobolev_norm(u, default_norm_spec(u, p + r));
    report.ratio = report.high_norm > 0.0
                       ? report.error * std::pow(D, r) / report.high_norm
                       : kNaN;
    return report;
}

std::vector<FrameBoundsRow> run_frame_bounds(const FrameParams& params,
                                             std::span<const int> radii,
                                             int iterations) {
    std::vector<FrameBoundsRow> rows;
    rows.reserve(radii.size());
    for (const int radius : radii) {
        rows.push_back({radius, estimate_frame_bounds(params, radius, iterations)});
    }
    return rows;
}

} // namespace gf
