// Copyright 2026 The dehn Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <string>

#include "dehn/census.hpp"
#include "dehn/conversions.hpp"
#include "dehn/gluing_io.hpp"
#include "dehn/signature.hpp"
#include "dehn/surface2d.hpp"

namespace dehn {
namespace {

IdealCubulation fixture_cubulation(const char* name) {
  return read_cubulation_file(std::string(DEHN_FIXTURE_DIR) + "/" + name);
}

void BM_SignatureTwoCubes(benchmark::State& state) {
  auto c = fixture_cubulation("t3_two_cubes.cub");
  for (auto _ : state) benchmark::DoNotOptimize(isomorphism_signature(c));
}
BENCHMARK(BM_SignatureTwoCubes);

void BM_SignatureFromTriangulation(benchmark::State& state) {
  // 8 cubes from the cusped 2-tetrahedron fixture.
  auto t = read_triangulation_file(std::string(DEHN_FIXTURE_DIR) + "/cusped_torus_n2.tri");
  auto c = triangulation_to_cubulation(t);
  for (auto _ : state) benchmark::DoNotOptimize(isomorphism_signature(c));
}
BENCHMARK(BM_SignatureFromTriangulation);

void BM_CensusOneCube(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cubulation_signatures({1, 0, 1}));
}
BENCHMARK(BM_CensusOneCube)->Unit(benchmark::kMillisecond);

void BM_OptimizeOrientations(benchmark::State& state) {
  auto t = read_triangulation_file(std::string(DEHN_FIXTURE_DIR) + "/cusped_torus_n2.tri");
  auto c = triangulation_to_cubulation(t);
  OptimizeOptions opts;
  opts.exhaustive_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_orientations(c, opts));
}
// 8 cubes: exhaustive sweep versus local search.
BENCHMARK(BM_OptimizeOrientations)->Arg(20)->Arg(0);

// Repeated searches hit the per-process enumeration cache.
void BM_BruteForceLcCached(benchmark::State& state) {
  int max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_lc(surfaces::kKleinBottle, max));
}
BENCHMARK(BM_BruteForceLcCached)->Arg(2)->Arg(3);

void BM_ThickenAll(benchmark::State& state) {
  auto diagrams = enumerate_loop_diagrams(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& d : diagrams) benchmark::DoNotOptimize(thicken(d));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(diagrams.size()));
}
BENCHMARK(BM_ThickenAll)->Arg(2)->Arg(3);

void BM_EnumerateLoopDiagrams(benchmark::State& state) {
  int c = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_loop_diagrams(c));
}
BENCHMARK(BM_EnumerateLoopDiagrams)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dehn

BENCHMARK_MAIN();
