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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sba/decomp.hpp"
#include "sba/error.hpp"

using namespace sba;

namespace {

DimensionVector sum_dims(const std::vector<Representation>& parts, std::size_t vertices) {
  DimensionVector d(vertices, 0);
  for (const auto& m : parts)
    for (std::size_t v = 0; v < vertices; ++v) d[v] += m.dim(v);
  return d;
}

}  // namespace

TEST_CASE("decompose agrees with the hom-matrix solve on random sums") {
  const auto p = fixture::load("a3nr");
  std::vector<Representation> cat;
  for (const Walk& w : enumerate_words(*p, 3)) cat.push_back(string_module(p, w));
  REQUIRE(cat.size() == 6);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    std::vector<Representation> parts;
    std::vector<std::size_t> mult(cat.size(), 0);
    const std::size_t k = 1 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = rng() % cat.size();
      ++mult[j];
      parts.push_back(cat[j]);
    }
    const Representation m = direct_sum(parts);
    const DecompositionReport r = decompose(m);
    CHECK(r.summand_count() == k);
    CHECK(sum_dims(r.summands, 3) == m.dims());
    for (const auto& s : r.summands) CHECK(oracle::hom_dim(s, s) >= 1);
    CHECK(catalog_decompose(m, cat) == mult);
  }
}

TEST_CASE("band modules stay indecomposable and split by eigenvalue") {
  const auto p = fixture::over(fixture::load("kronecker"), 13);
  const Walk w = parse_walk(p->quiver(), "a b^-1");
  for (std::size_t n = 1; n <= 3; ++n) CHECK(decompose(band_module(p, w, 4, n)).summand_count() == 1);
  const Representation two = direct_sum(band_module(p, w, 4, 1), band_module(p, w, 9, 1));
  const DecompositionReport r = decompose(two);
  CHECK(r.summand_count() == 2);
  CHECK_FALSE(r.witnesses.empty());
  const Representation same = direct_sum(band_module(p, w, 4, 2), band_module(p, w, 4, 1));
  CHECK(decompose(same).summand_count() == 2);
}

TEST_CASE("primary components and Fitting split") {
  const auto p = fixture::load("a3nr");
  const Representation m = direct_sum(simple(p, 0), simple(p, 0));
  Morphism f = identity_morphism(m);
  f.components[0](1, 1) = 2;
  const auto comps = primary_components(m, f);
  CHECK(comps.size() == 2);
  const auto split = fitting_split(m, f);
  REQUIRE(split);
  CHECK(split->first.module.total_dim() + split->second.module.total_dim() == 2);
  CHECK_FALSE(fitting_split(m, identity_morphism(m)));
  CHECK_THROWS_AS(primary_components(m, zero_morphism(m, simple(p, 0))), PreconditionError);
}

TEST_CASE("decompose is reproducible and handles zero") {
  const auto p = fixture::load("gp");
  const Quiver& q = p->quiver();
  const Representation m =
      direct_sum(string_module(p, parse_walk(q, "a b^-1")), string_module(p, parse_walk(q, "b")));
  const DecompositionReport a = decompose(m, {20, 99}), b = decompose(m, {20, 99});
  CHECK(a.summand_count() == 2);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i].source == b.witnesses[i].source);
  CHECK(decompose(zero_module(p)).summand_count() == 0);
}

TEST_CASE("catalog_decompose rejects incomplete catalogs") {
  const std::vector<std::vector<std::size_t>> singular{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(catalog_decompose(singular, {1, 1}), PreconditionError);
  const std::vector<std::vector<std::size_t>> id{{1, 0}, {0, 2}};
  CHECK_THROWS_AS(catalog_decompose(id, {1, 1}), PreconditionError);
  CHECK(catalog_decompose(id, {3, 4}) == std::vector<std::size_t>{3, 2});
}
