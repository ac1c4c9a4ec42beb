#include <benchmark/benchmark.h>

#include "abh/catalog.hpp"
#include "abh/kform.hpp"
#include "abh/lie_algebra.hpp"

using namespace abh;

namespace {

KForm dense_two_form(int dim) {
  KFormBuilder b(dim, 2);
  int c = 1;
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) b.add({i, j}, Rational(c++ % 7 - 3));
  return b.take();
}

void BM_wedge_two_forms(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const KForm a = dense_two_form(dim);
  const KForm b = dense_two_form(dim);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_wedge_two_forms)->Arg(8)->Arg(12);

void BM_fundamental_power(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HermitianStructure h = HermitianStructure::adapted(LieAlgebra::abelian(2 * n));
  for (auto _ : state) benchmark::DoNotOptimize(wedge_power(h.fundamental_form(), n - 1));
}
BENCHMARK(BM_fundamental_power)->Arg(3)->Arg(5)->Arg(6);

void BM_differential(benchmark::State& state) {
  const HermitianStructure h = named_structure("step3");
  const KForm a = dense_two_form(8);
  for (auto _ : state) benchmark::DoNotOptimize(differential(a, h.alg()));
}
BENCHMARK(BM_differential);

}  // namespace
