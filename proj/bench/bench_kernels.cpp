// Compares the OpenMP kernels against the serial reference on the shapes
// the cocycle solvers actually produce (tall sparse-ish systems and square
// products). Run with OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "leibniz/rowreduce.hpp"

using namespace leibniz;

namespace {

Matrix random_matrix(std::uint64_t seed, std::size_t r, std::size_t c, const Field& F) {
    std::mt19937_64 rng(seed);
    Matrix m(r, c, F);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (rng() % 3) continue; // keep it sparse like a triple system
            if (F.kind() == Field::Kind::Prime)
                m.set(i, j, Scalar((long)(rng() % F.characteristic())));
            else
                m.set(i, j, Scalar((long)(rng() % 9) - 4));
        }
    return m;
}

Field field_for(int tag) { return tag == 0 ? Field::rationals() : Field::prime(5); }

void BM_RowReduceParallel(benchmark::State& state) {
    Matrix m = random_matrix(42, state.range(0), state.range(1), field_for(state.range(2)));
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m).rank);
}

void BM_RowReduceSerial(benchmark::State& state) {
    Matrix m = random_matrix(42, state.range(0), state.range(1), field_for(state.range(2)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::row_reduce(m).rank);
}

void BM_MultiplyParallel(benchmark::State& state) {
    Field F = field_for(state.range(1));
    Matrix a = random_matrix(7, state.range(0), state.range(0), F);
    Matrix b = random_matrix(8, state.range(0), state.range(0), F);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

void BM_MultiplySerial(benchmark::State& state) {
    Field F = field_for(state.range(1));
    Matrix a = random_matrix(7, state.range(0), state.range(0), F);
    Matrix b = random_matrix(8, state.range(0), state.range(0), F);
    for (auto _ : state) benchmark::DoNotOptimize(serial::multiply(a, b));
}

} // namespace

BENCHMARK(BM_RowReduceParallel)
    ->Args({216, 72, 0})
    ->Args({216, 72, 1})
    ->Args({512, 144, 0})
    ->Args({512, 144, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduceSerial)
    ->Args({216, 72, 0})
    ->Args({216, 72, 1})
    ->Args({512, 144, 0})
    ->Args({512, 144, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Args({96, 0})->Args({96, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplySerial)->Args({96, 0})->Args({96, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
