/*
 *   Copyright 2026 The sbawb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "sba/artheory.hpp"
#include "sba/classify.hpp"
#include "sba/decomp.hpp"
#include "sba/poly.hpp"

using namespace sba;

namespace {

PresentationRef fixture(const char* name) {
  return std::make_shared<const Presentation>(
      load_presentation(std::string(SBAWB_FIXTURES) + "/" + name + ".sba"));
}

Matrix random_square(std::size_t n, std::uint64_t seed) {
  const PrimeField f;
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % f.order();
  return m;
}

void BM_Rank(benchmark::State& state) {
  const Matrix m = random_square(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(32)->Arg(128)->Arg(256);

void BM_CharPolyFactors(benchmark::State& state) {
  const Matrix m = random_square(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_factors(m));
}
BENCHMARK(BM_CharPolyFactors)->Arg(16)->Arg(64);

void BM_BandEndomorphisms(benchmark::State& state) {
  const auto p = fixture("gp");
  const Walk w = parse_walk(p->quiver(), "a b a b^-1");
  const Representation b = band_module(p, w, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(b, b));
}
BENCHMARK(BM_BandEndomorphisms)->Arg(1)->Arg(4)->Arg(8);

void BM_DecomposeSum(benchmark::State& state) {
  const auto p = fixture("a3nr");
  std::vector<Representation> parts;
  for (const Walk& w : enumerate_words(*p, 3))
    for (long k = 0; k < state.range(0); ++k) parts.push_back(string_module(p, w));
  const Representation m = direct_sum(parts);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m).summand_count());
}
BENCHMARK(BM_DecomposeSum)->Arg(1)->Arg(2)->Arg(3);

void BM_ClassifyGp(benchmark::State& state) {
  const auto p = fixture("gp");
  for (auto _ : state) benchmark::DoNotOptimize(classify(*p).verdict);
}
BENCHMARK(BM_ClassifyGp);

void BM_DegenerationSurvey(benchmark::State& state) {
  const auto p = fixture("a3nr");
  const Catalog cat = enumerate_indecomposables(p, 8);
  const ARTable table = ar_table(cat);
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(survey_degenerations(cat, table, dim).ok);
}
BENCHMARK(BM_DegenerationSurvey)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
