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
#include "sba/error.hpp"
#include "sba/homalg.hpp"

using namespace sba;

namespace {

std::vector<Representation> string_modules(const PresentationRef& p, std::size_t len) {
  std::vector<Representation> out;
  for (const Walk& w : enumerate_words(*p, len)) out.push_back(string_module(p, w));
  return out;
}

}  // namespace

TEST_CASE("hom dimensions agree with the dense oracle") {
  for (const char* name : {"a3", "a3nr", "gp", "kronecker"}) {
    const auto p = fixture::over(fixture::load(name), 7);
    auto mods = string_modules(p, 4);
    if (std::string(name) == "kronecker") {
      const Walk w = parse_walk(p->quiver(), "a b^-1");
      for (Residue l = 1; l < 3; ++l)
        for (std::size_t n = 1; n <= 2; ++n) mods.push_back(band_module(p, w, l, n));
    }
    for (const auto& m : mods)
      for (const auto& n : mods) {
        const HomSpace h = hom_space(m, n);
        CHECK(h.dim() == oracle::hom_dim(m, n));
        for (const auto& f : h.basis) CHECK(is_intertwiner(m, n, f));
      }
  }
}

TEST_CASE("hom coordinates reconstruct morphisms") {
  const auto p = fixture::load("gp");
  const Representation m = string_module(p, parse_walk(p->quiver(), "a b^-1 a"));
  const HomSpace h = hom_space(m, m);
  std::mt19937_64 rng(4);
  Vector c(h.dim());
  for (auto& x : c) x = rng() % p->field().order();
  CHECK(h.coordinates(combine(h.basis, c)) == c);
}

TEST_CASE("Ext^1 obeys the Euler form on hereditary fixtures") {
  for (const char* name : {"a3nr", "kronecker"}) {
    const auto p = fixture::over(fixture::load(name), 5);
    auto mods = string_modules(p, 3);
    if (std::string(name) == "kronecker")
      mods.push_back(band_module(p, parse_walk(p->quiver(), "a b^-1"), 2, 2));
    for (const auto& m : mods)
      for (const auto& n : mods) {
        const auto h = static_cast<std::int64_t>(oracle::hom_dim(m, n));
        CHECK(h - static_cast<std::int64_t>(ext1_dim(m, n)) == oracle::euler_form(m, n));
      }
  }
}

TEST_CASE("Ext^1 with a relation") {
  const auto p = fixture::load("a3");
  CHECK(ext1_dim(simple(p, 0), simple(p, 1)) == 1);
  CHECK(ext1_dim(simple(p, 1), simple(p, 2)) == 1);
  CHECK(ext1_dim(simple(p, 0), simple(p, 2)) == 0);
  CHECK(ext1_dim(projective(p, 0), simple(p, 1)) == 0);
}

TEST_CASE("projective covers and syzygies") {
  const auto p = fixture::load("gp");
  for (const Representation& m : string_modules(p, 4)) {
    const Syzygy s = syzygy(m);
    CHECK(s.cover.p0.total_dim() == m.total_dim() + s.omega.total_dim());
    CHECK(is_intertwiner(s.cover.p0, m, s.cover.epi));
    CHECK(is_projective(s.cover.p0));
  }
  CHECK(is_projective(projective(p, 0)));
  CHECK_FALSE(is_projective(simple(p, 0)));
  CHECK_THROWS_AS(projective_cover(zero_module(p)), PreconditionError);
}

TEST_CASE("extensions are exact and classes pull back") {
  const auto p = fixture::over(fixture::load("gp"), 5);
  const Quiver& q = p->quiver();
  const Representation m = string_module(p, parse_walk(q, "a"));
  const Representation n = string_module(p, parse_walk(q, "b"));
  const ExtSpace ext(m, n);
  REQUIRE(ext.dim() > 0);
  for (const Vector& line : projective_lines(p->field(), ext.dim())) {
    const ShortExactSequence s = ext.extension(line);
    CHECK(is_exact(s));
    CHECK(s.middle.total_dim() == m.total_dim() + n.total_dim());
    CHECK(ext.coordinates(ext.cocycle(line)) == line);
    CHECK(ext.pullback(line, identity_morphism(m)) == line);
  }
  const Vector zero(ext.dim(), 0);
  const ShortExactSequence split = ext.extension(zero);
  CHECK(oracle::hom_dim(split.middle, split.middle) == oracle::hom_dim(direct_sum(m, n), direct_sum(m, n)));
}

TEST_CASE("projective lines and the census cap") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u})
    for (std::size_t k = 1; k <= 3; ++k) {
      std::size_t expect = 0, pw = 1;
      for (std::size_t i = 0; i < k; ++i) {
        expect += pw;
        pw *= q;
      }
      CHECK(projective_lines(PrimeField(q), k).size() == expect);
    }
  CHECK(census_within_cap(1, 32003));
  CHECK(census_within_cap(3, 7));
  CHECK_FALSE(census_within_cap(2, 11));
  CHECK_FALSE(census_within_cap(4, 2));
}

TEST_CASE("census on the D4 example") {
  const auto p = fixture::load("d4sub");
  const Representation m = load_representation(p, fixture::path("d4sub_m.mod"));
  const Representation s0 = load_representation(p, fixture::path("d4sub_s0.mod"));
  const Census c = middle_census(m, s0);
  CHECK(c.ext_dim == 2);
  CHECK(c.lines.size() == 6);
  CHECK(c.histogram.at(2) == 3);
  CHECK(c.histogram.at(3) == 3);
  const auto big = fixture::over(p, 11);
  const Representation mb = load_representation(big, fixture::path("d4sub_m.mod"));
  const Representation sb = load_representation(big, fixture::path("d4sub_s0.mod"));
  CHECK_THROWS_AS(middle_census(mb, sb), PreconditionError);
  CensusOptions open;
  open.enforce_cap = false;
  CHECK(middle_census(mb, sb, open).lines.size() == 12);
}
