#include <benchmark/benchmark.h>

#include <random>

#include "abh/linalg.hpp"

using namespace abh;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 17);
  for (auto _ : state) {
    Matrix copy = m;
    benchmark::DoNotOptimize(rref(copy));
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n / 2, n, 23);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_kernel)->Arg(16)->Arg(32);

void BM_rowspace_insert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 31);
  for (auto _ : state) {
    RowSpace s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(m.row(i));
    benchmark::DoNotOptimize(s.dim());
  }
}
BENCHMARK(BM_rowspace_insert)->Arg(16)->Arg(28);

}  // namespace
