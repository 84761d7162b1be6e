#include <benchmark/benchmark.h>

#include "thetacount/multiplication.hpp"
#include "thetacount/ppav.hpp"
#include "thetacount/rng.hpp"

using namespace theta;

namespace {

CVector sample_point(const RiemannMatrix& tau, Rng& rng) {
    const int g = tau.g();
    RVector s(g), t(g);
    for (int i = 0; i < g; ++i) s[i] = rng.next_double();
    for (int i = 0; i < g; ++i) t[i] = rng.next_double();
    return s.cast<Complex>() + tau.tau() * t.cast<Complex>();
}

void BM_theta_eval(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const RiemannMatrix tau = random_ppav(g, 1);
    Rng rng(7);
    const CVector z = sample_point(tau, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta::theta(z, tau, 1e-9).value);
    }
}
BENCHMARK(BM_theta_eval)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_theta_eval_characteristic(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const RiemannMatrix tau = random_ppav(g, 2);
    const Characteristic c = characteristic_at(g, count_characteristics(g) - 1);
    const CVector z = CVector::Zero(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta::theta(z, tau, c, 1e-9).value);
    }
}
BENCHMARK(BM_theta_eval_characteristic)->Arg(1)->Arg(2)->Arg(3);

void BM_theta2_count(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const RiemannMatrix tau = random_ppav(g, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta2_count(tau).theta_n);
    }
}
BENCHMARK(BM_theta2_count)->Arg(1)->Arg(2)->Arg(3);

void BM_verify_kempf_g2(benchmark::State& state) {
    const RiemannMatrix tau = random_ppav(2, 4);
    Rng rng(9);
    const CVector x = sample_point(tau, rng);
    const CVector y = sample_point(tau, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_kempf(tau, x, y).numerical_rank);
    }
}
BENCHMARK(BM_verify_kempf_g2);

void BM_numerical_rank(benchmark::State& state) {
    const RiemannMatrix tau = random_ppav(2, 5);
    Rng rng(10);
    const CMatrix m =
        product_evaluation_matrix(tau, sample_point(tau, rng), sample_point(tau, rng), 48, 1, 1e-9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(numerical_rank(m, 1e-8).numerical_rank);
    }
}
BENCHMARK(BM_numerical_rank);

}  // namespace

BENCHMARK_MAIN();
