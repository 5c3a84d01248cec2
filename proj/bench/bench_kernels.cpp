// Serial reference vs OpenMP variant of each numeric kernel.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rhpwn/kernels.hpp"
#include "rhpwn/processes.hpp"

using namespace rhpwn;

namespace {

std::vector<StepFunction> family(int n, int count) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> len(1, 6), val(-3, 3);
    const Rational scale = n == 1 ? Rational(1) : ratio(1, 8L * n * n * n);
    std::vector<StepFunction> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Piece> pieces;
        int cursor = 1;
        for (int j = 0; j < 4; ++j) {
            const int hi = cursor + len(rng);
            pieces.push_back({ratio(cursor, 4), ratio(hi, 4), ComplexRational(Rational(val(rng) * scale), Rational(val(rng) * scale))});
            cursor = hi + 1;
        }
        out.emplace_back(std::move(pieces));
    }
    return out;
}

std::vector<double> grid(int count) {
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) xs[i] = -30 + 60.0 * i / (count - 1);
    return xs;
}

void BM_GramSerial(benchmark::State& st) {
    const auto fs = family(3, int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::gram_matrix_serial(3, fs));
}
void BM_GramParallel(benchmark::State& st) {
    const auto fs = family(3, int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::gram_matrix_parallel(3, fs));
}

void BM_DensitySerial(benchmark::State& st) {
    const auto xs = grid(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::density_grid_serial(2.0, xs));
}
void BM_DensityParallel(benchmark::State& st) {
    const auto xs = grid(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::density_grid_parallel(2.0, xs));
}

void BM_CellMassesSerial(benchmark::State& st) {
    const auto xs = grid(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::cell_masses_serial(2.0, xs));
}
void BM_CellMassesParallel(benchmark::State& st) {
    const auto xs = grid(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::cell_masses_parallel(2.0, xs));
}

const kernels::Integrand weighted = [](double x) { return std::exp(0.75 * x) * density_p(2.0, x); };

void BM_PanelsSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::integrate_panels_serial(weighted, -60, 60, int(st.range(0))));
}
void BM_PanelsParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::integrate_panels_parallel(weighted, -60, 60, int(st.range(0))));
}

}  // namespace

BENCHMARK(BM_GramSerial)->Arg(16)->Arg(64);
BENCHMARK(BM_GramParallel)->Arg(16)->Arg(64);
BENCHMARK(BM_DensitySerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_DensityParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_CellMassesSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_CellMassesParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_PanelsSerial)->Arg(8)->Arg(32);
BENCHMARK(BM_PanelsParallel)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
