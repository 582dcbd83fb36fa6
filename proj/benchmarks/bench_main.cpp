// Copyright 2026 The ksctx developers
//
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

#include <random>

#include <benchmark/benchmark.h>

#include "ksctx/coloring.hpp"
#include "ksctx/connection.hpp"
#include "ksctx/corpus.hpp"

using namespace ksctx;

namespace {

RadScalar random_value(std::mt19937_64& rng) {
  static const std::uint64_t square_free[] = {1, 2, 3, 5, 6, 7, 10};
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 50);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(square_free) - 1);
  RadScalar out;
  for (int i = 0; i < 3; ++i)
    out += RadScalar(Rational(num(rng), den(rng)), square_free[pick(rng)]);
  return out;
}

}  // namespace

static void BM_RadScalarMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  RadScalar a = random_value(rng);
  RadScalar b = random_value(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RadScalarMul);

static void BM_RadScalarSign(benchmark::State& state) {
  std::mt19937_64 rng(2);
  RadScalar a = random_value(rng);
  if (a.is_zero()) a += RadScalar(1);
  for (auto _ : state) benchmark::DoNotOptimize(a.sign());
}
BENCHMARK(BM_RadScalarSign);

static void BM_RayDot(benchmark::State& state) {
  Ray a = Ray::from_sqmag({1, -1, 4});
  Ray b = Ray::from_sqmag({-1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(dot(a, b));
}
BENCHMARK(BM_RayDot);

static void BM_ClosureYuOh13(benchmark::State& state) {
  RaySet base = corpus_get("yu-oh-13").rays;
  for (auto _ : state) benchmark::DoNotOptimize(triad_closure(base));
}
BENCHMARK(BM_ClosureYuOh13);

static void BM_ClosurePeres33(benchmark::State& state) {
  RaySet base = corpus_get("peres-33").rays;
  for (auto _ : state) benchmark::DoNotOptimize(triad_closure(base));
}
BENCHMARK(BM_ClosurePeres33);

static void BM_BuildGraphPeres57(benchmark::State& state) {
  RaySet base = corpus_get("peres-57").rays;
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(base));
}
BENCHMARK(BM_BuildGraphPeres57);

static void BM_KsColorYuOh25(benchmark::State& state) {
  OrthoGraph g = build_graph(corpus_get("yu-oh-25").rays);
  for (auto _ : state) benchmark::DoNotOptimize(ks_colorable(g));
}
BENCHMARK(BM_KsColorYuOh25);

static void BM_KsColorPeres33(benchmark::State& state) {
  OrthoGraph g = build_graph(corpus_get("peres-33").rays);
  for (auto _ : state) benchmark::DoNotOptimize(ks_colorable(g));
}
BENCHMARK(BM_KsColorPeres33);

static void BM_ThreeColorPeres57(benchmark::State& state) {
  OrthoGraph g = build_graph(corpus_get("peres-57").rays);
  for (auto _ : state) benchmark::DoNotOptimize(three_colorable(g));
}
BENCHMARK(BM_ThreeColorPeres57);

static void BM_ConnectionSearchTwoTriads(benchmark::State& state) {
  OrthoGraph g = build_graph(corpus_get("two-triads").rays);
  ContextPoset p = build_poset(g);
  for (auto _ : state) benchmark::DoNotOptimize(connection_search(p, g));
}
BENCHMARK(BM_ConnectionSearchTwoTriads);

static void BM_BruteForceKsYuOh13(benchmark::State& state) {
  OrthoGraph g = build_graph(corpus_get("yu-oh-13").rays);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ks(g));
}
BENCHMARK(BM_BruteForceKsYuOh13);

BENCHMARK_MAIN();
