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

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sba/artheory.hpp"
#include "sba/error.hpp"

using namespace sba;

TEST_CASE("catalogs of the finite fixtures") {
  const auto a3 = enumerate_indecomposables(fixture::load("a3"), 6);
  CHECK(a3.complete);
  CHECK(a3.size() == 5);
  const auto a3nr = enumerate_indecomposables(fixture::load("a3nr"), 6);
  CHECK(a3nr.complete);
  CHECK(a3nr.size() == 6);
  std::size_t projectives = 0;
  for (const auto& e : a3nr.entries) {
    projectives += e.projective;
    CHECK(e.projective == is_projective(e.module));
  }
  CHECK(projectives == 3);
  for (std::size_t i = 0; i < a3nr.size(); ++i)
    for (std::size_t j = 0; j < a3nr.size(); ++j)
      CHECK(a3nr.hom[i][j] == oracle::hom_dim(a3nr.entries[i].module, a3nr.entries[j].module));
  CHECK_FALSE(enumerate_indecomposables(fixture::load("a3nr"), 2).complete);
  CHECK(a3nr.find("a b"));
  CHECK(a3nr.index_of(a3nr.entries[3].module) == 3);
}

TEST_CASE("catalog refusal when bands exist") {
  const auto k = enumerate_indecomposables(fixture::load("kronecker"), 4);
  CHECK(k.refused());
  CHECK(k.entries.empty());
  REQUIRE(k.band_witness);
  CHECK(k.bands.size() == 1);
  CHECK_THROWS_AS(enumerate_indecomposables(fixture::load("d4sub"), 4), PreconditionError);
}

TEST_CASE("almost split sequences are certified") {
  for (const char* name : {"a3", "a3nr"}) {
    const Catalog cat = enumerate_indecomposables(fixture::load(name), 6);
    const ARTable table = ar_table(cat);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (cat.entries[i].projective) {
        CHECK_FALSE(table[i]);
        CHECK_THROWS_AS(ar_sequence(cat, *cat.entries[i].word), PreconditionError);
        continue;
      }
      REQUIRE(table[i]);
      const ARSequence& s = *table[i];
      CHECK(s.certified);
      CHECK(is_exact(s.sequence));
      CHECK(s.middle_summand_count <= 2);
      CHECK(s.middle_summand_count == s.middle_words.size());
      for (std::size_t u = 0; u < cat.size(); ++u) CHECK(s.defect[u] == (u == i ? 1 : 0));
    }
  }
}

TEST_CASE("word surgery on a3nr") {
  const auto p = fixture::load("a3nr");
  const Quiver& q = p->quiver();
  const Catalog cat = enumerate_indecomposables(p, 6);
  const ARSequence s1 = ar_sequence(cat, parse_walk(q, "e(1)"));
  CHECK(format_walk(q, s1.tau_word) == "e(2)");
  REQUIRE(s1.middle_words.size() == 1);
  CHECK(format_walk(q, s1.middle_words[0]) == "a");
  const ARSequence s2 = ar_sequence(cat, parse_walk(q, "a"));
  CHECK(s2.middle_summand_count == 2);
  const auto right = right_surgery(*p, {parse_walk(q, "e(1)"), 1});
  const auto left = left_surgery(*p, {parse_walk(q, "e(1)"), 1});
  CHECK((right || left));
}

TEST_CASE("hom order, delta formula and Riedtmann witness") {
  const auto p = fixture::load("a3nr");
  const Quiver& q = p->quiver();
  const Catalog cat = enumerate_indecomposables(p, 6);
  const ARTable table = ar_table(cat);
  const Representation m = string_module(p, parse_walk(q, "a b"));
  const Representation n = direct_sum(string_module(p, parse_walk(q, "a")),
                                      string_module(p, parse_walk(q, "e(3)")));
  CHECK(hom_leq(cat, m, n).leq);
  CHECK_FALSE(hom_leq(cat, n, m).leq);
  CHECK(delta_count_formula(cat, table, m, n) == 1);
  const RiedtmannWitness w = riedtmann_witness(cat, table, m, n);
  CHECK(w.verified);
  CHECK(static_cast<long long>(w.x_count + w.z_count) - static_cast<long long>(w.y_count) == 1);
  CHECK_THROWS_AS(delta_count_formula(cat, table, n, m), PreconditionError);
  const Catalog open = enumerate_indecomposables(p, 2);
  CHECK_THROWS_AS(hom_leq(open, m, n), PreconditionError);
}

TEST_CASE("surveys over small catalogs") {
  const Catalog cat = enumerate_indecomposables(fixture::load("a3"), 6);
  const auto sums = catalog_sums(cat, 2);
  // monomials of degree 1 or 2 in e(1), e(2), e(3) plus a and b
  CHECK(sums.size() == 3 + 6 + 2);
  const DegenerationSurvey s = survey_degenerations(cat, ar_table(cat), 4);
  CHECK(s.ok);
  CHECK(s.pairs.size() > s.modules.size());
  const MainTheoremReport r = verify_main_theorem(cat);
  CHECK(r.holds);
  CHECK(r.max_summands == 1);
}

TEST_CASE("main theorem check on a hand-made catalog") {
  const auto p = fixture::load("d4sub");
  const Catalog cat = catalog_from_modules(
      p, {{"indec", load_representation(p, fixture::path("d4sub_indec.mod"))},
          {"s0", load_representation(p, fixture::path("d4sub_s0.mod"))}});
  CHECK_FALSE(cat.complete);
  const MainTheoremReport r = verify_main_theorem(cat);
  CHECK_FALSE(r.holds);
  CHECK(r.max_summands == 3);
}
