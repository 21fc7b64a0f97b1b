/**
 * @file gf_benchmarks.cpp
 * @brief Microbenchmarks for the hot paths: closed-form Gram evaluation,
 *        mixture inner products, frame-operator application, Richardson
 *        dual solves, frame-bound estimation, truncated projection and
 *        weighted Sobolev norms.
 */

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "gaborframe/core_lattice.hpp"
#include "gaborframe/dual_frame.hpp"
#include "gaborframe/experiments.hpp"
#include "gaborframe/frame_ops.hpp"
#include "gaborframe/function_rep.hpp"
#include "gaborframe/gaussian_states.hpp"
#include "gaborframe/sobolev_norms.hpp"
#include "gaborframe/truncated_projection.hpp"

namespace {

const gf::FrameParams kParams{1.0, 1};

/** Line mixture with @p terms unit-weight states at (j, -j). */
gf::GaussianMixture line_mixture(int terms) {
    auto u = gf::GaussianMixture::single(kParams, gf::LatticeIndex::d1(0, 0));
    for (int j = 1; j < terms; ++j) {
        u.add_term(gf::LatticeIndex::d1(j, -j), gf::Complex(1.0, 0.5));
    }
    return u;
}

void BM_StateInnerProduct(benchmark::State& state) {
    const auto a = gf::LatticeIndex::d1(2, -1);
    const auto b = gf::LatticeIndex::d1(-1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf::state_inner_product(kParams, a, b));
    }
}
BENCHMARK(BM_StateInnerProduct);

void BM_StateEvaluateDerivative(benchmark::State& state) {
    const gf::GaussianState psi{kParams, gf::LatticeIndex::d1(1, -2)};
    const std::array<int, 1> order{static_cast<int>(state.range(0))};
    const std::array<double, 1> x{0.37};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            gf::evaluate_state_derivative(psi, order, x));
    }
}
BENCHMARK(BM_StateEvaluateDerivative)->DenseRange(0, 8, 2);

void BM_MixtureInnerProduct(benchmark::State& state) {
    const auto u = line_mixture(static_cast<int>(state.range(0)));
    const auto v = line_mixture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf::mixture_inner_product(u, v));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MixtureInnerProduct)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_FrameApply(benchmark::State& state) {
    const auto u = line_mixture(3);
    const int margin = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            gf::frame_apply(u, /*support_radius=*/margin + 6.0, margin));
    }
}
BENCHMARK(BM_FrameApply)->DenseRange(3, 7, 2);

void BM_RichardsonDualApply(benchmark::State& state) {
    const auto u =
        gf::GaussianMixture::single(kParams, gf::LatticeIndex::d1(0, 0));
    gf::RichardsonConfig cfg; // tol 1e-10, 500 iteration budget
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf::richardson_dual_apply(u, cfg));
    }
}
BENCHMARK(BM_RichardsonDualApply);

void BM_DualCoefficients(benchmark::State& state) {
    const auto u =
        gf::GaussianMixture::single(kParams, gf::LatticeIndex::d1(0, 0));
    const double D = state.range(0) * std::sqrt(std::numbers::pi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf::dual_coefficients(u, D));
    }
}
BENCHMARK(BM_DualCoefficients)->DenseRange(3, 6);

void BM_EstimateFrameBounds(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            gf::estimate_frame_bounds(kParams, radius, 300));
    }
}
BENCHMARK(BM_EstimateFrameBounds)->DenseRange(4, 8, 2)
    ->Unit(benchmark::kMillisecond);

void BM_Project(benchmark::State& state) {
    const auto u = gf::random_mixture(kParams, 7);
    gf::ProjectionSpec spec;
    spec.D = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf::project(u, spec));
    }
}
BENCHMARK(BM_Project)->DenseRange(3, 9, 3)->Unit(benchmark::kMillisecond);

void BM_WeightedSobolevNorm(benchmark::State& state) {
    const auto u = line_mixture(3);
    const int p = static_cast<int>(state.range(0));
    const gf::NormSpec spec = gf::default_norm_spec(u, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf::weighted_sobolev_norm(u, spec));
    }
}
BENCHMARK(BM_WeightedSobolevNorm)->DenseRange(0, 2);

} // namespace

BENCHMARK_MAIN();
