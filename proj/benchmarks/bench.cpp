#include <benchmark/benchmark.h>

#include "cremona/classification.hpp"

using namespace cremona;

namespace {

const ExponentMatrix kDegreeFive = ExponentMatrix::parse("0,0,5;4,1,0;3,1,1");

void BM_Multidegree(benchmark::State& state) {
  auto map = MonomialMap::from(kDegreeFive);
  for (auto _ : state) benchmark::DoNotOptimize(multidegree(map));
}
BENCHMARK(BM_Multidegree);

void BM_Triangulate(benchmark::State& state) {
  auto n = newton_polyhedron(MonomialMap::from(kDegreeFive));
  for (auto _ : state) benchmark::DoNotOptimize(triangulate_default(n));
}
BENCHMARK(BM_Triangulate);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(kDegreeFive));
}
BENCHMARK(BM_Classify);

void BM_Enumerate(benchmark::State& state) {
  const Int delta = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cremona(delta));
}
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(48)->Arg(97);

void BM_Inverse(benchmark::State& state) {
  auto map = MonomialMap::from(kDegreeFive);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(map));
}
BENCHMARK(BM_Inverse);

void BM_DegreeSequence(benchmark::State& state) {
  auto map = MonomialMap::from(kDegreeFive);
  for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(map, 20));
}
BENCHMARK(BM_DegreeSequence);

}  // namespace

BENCHMARK_MAIN();
