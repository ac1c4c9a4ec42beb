#include <benchmark/benchmark.h>

#include "abh/catalog.hpp"
#include "abh/connection.hpp"
#include "abh/holonomy.hpp"

using namespace abh;

namespace {

void BM_bismut_forms_s6(benchmark::State& state) {
  const HermitianStructure h = named_structure("s6");
  for (auto _ : state) benchmark::DoNotOptimize(bismut_forms(h));
}
BENCHMARK(BM_bismut_forms_s6);

void BM_curvature_s6(benchmark::State& state) {
  const HermitianStructure h = named_structure("s6");
  const ConnectionForms sigma = bismut_forms(h);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_forms(sigma, h.alg()));
}
BENCHMARK(BM_curvature_s6);

void BM_holonomy(benchmark::State& state) {
  const std::string name = state.range(0) == 0 ? "s6" : state.range(0) == 1 ? "g3" : "step3";
  const HermitianStructure h = named_structure(name);
  for (auto _ : state) benchmark::DoNotOptimize(holonomy_algebra(h));
  state.SetLabel(name);
}
BENCHMARK(BM_holonomy)->Arg(0)->Arg(1)->Arg(2);

void BM_holonomy_heisenberg12(benchmark::State& state) {
  const HermitianStructure h = heisenberg(3, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(holonomy_algebra(h));
}
BENCHMARK(BM_holonomy_heisenberg12);

void BM_scalar_curvature(benchmark::State& state) {
  const HermitianStructure h = named_structure("aff_B2", {{"lambda", Rational(2)}});
  for (auto _ : state) benchmark::DoNotOptimize(riemannian_scalar_curvature(h));
}
BENCHMARK(BM_scalar_curvature);

}  // namespace
