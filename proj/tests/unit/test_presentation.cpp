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

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "sba/error.hpp"
#include "sba/presentation.hpp"

using namespace sba;

namespace {

/// Paths avoiding every relation, counted by breadth-first extension up to a
/// length cap; returns -1 if paths of the cap length still survive.
long count_paths(const Presentation& p, std::size_t cap) {
  const Quiver& q = p.quiver();
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) layer.push_back({a});
  long total = static_cast<long>(q.vertex_count());
  for (std::size_t len = 1; len <= cap && !layer.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& path : layer) {
      bool dead = false;
      for (const auto& r : p.relations())
        for (std::size_t i = 0; i + r.size() <= path.size(); ++i)
          dead = dead || std::equal(r.begin(), r.end(), path.begin() + i);
      if (dead) continue;
      ++total;
      for (std::size_t b = 0; b < q.arrow_count(); ++b)
        if (q.arrow(b).source == q.arrow(path.back()).target) {
          auto ext = path;
          ext.push_back(b);
          next.push_back(ext);
        }
    }
    layer = std::move(next);
  }
  return layer.empty() ? total : -1;
}

}  // namespace

TEST_CASE("fixtures parse and round-trip through serialize") {
  for (const char* name : {"a3", "a3nr", "kronecker", "gp", "d4sub"}) {
    const auto p = fixture::load(name);
    CHECK(parse_presentation(serialize(*p)) == *p);
  }
  const auto d4 = fixture::load("d4sub");
  CHECK(d4->field().order() == 5);
  CHECK(fixture::load("gp")->field().order() == PrimeField::kDefaultOrder);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("vertices: 1 2\narrow: a 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices: 1\narrow: a 1 1\nrelation: a b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices: 1\nfield: 12\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("vertices: 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("bogus: x\n"), ParseError);
  try {
    parse_presentation("vertices: 1 2\n\narrow: a 1 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(
      parse_presentation("vertices: 1 2 3\narrow: a 1 2\narrow: b 2 3\nrelation: b a\n"),
      ParseError);
}

TEST_CASE("string axioms on the fixtures") {
  for (const char* name : {"a3", "a3nr", "kronecker", "gp"}) {
    const AxiomReport r = validate_axioms(*fixture::load(name));
    CHECK(r.is_string());
    CHECK(r.violations.empty());
  }
  const AxiomReport d4 = validate_axioms(*fixture::load("d4sub"));
  CHECK_FALSE(d4.s1);
  REQUIRE(d4.violations.size() == 1);
  CHECK(d4.violations[0].rfind("S1 violated at vertex 0", 0) == 0);
}

TEST_CASE("S2 detects two continuations") {
  const auto p = fixture::parse(
      "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\n");
  const AxiomReport r = validate_axioms(*p);
  CHECK(r.s1);
  CHECK_FALSE(r.s2);
  const auto fixed = fixture::parse(
      "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\nrelation: a c\n");
  CHECK(validate_axioms(*fixed).is_string());
}

TEST_CASE("finite dimension agrees with path counting") {
  for (const char* name : {"a3", "a3nr", "kronecker", "gp", "d4sub"}) {
    const auto p = fixture::load(name);
    const FiniteDimensionReport r = check_finite_dimensional(*p);
    CHECK(r.finite);
    CHECK(static_cast<long>(r.surviving_paths.size()) == count_paths(*p, 40));
  }
  const auto loop = fixture::parse("vertices: 1\narrow: a 1 1\n");
  const FiniteDimensionReport r = check_finite_dimensional(*loop);
  CHECK_FALSE(r.finite);
  CHECK_FALSE(r.cycle.empty());
  CHECK(count_paths(*loop, 40) == -1);
  const auto nil = fixture::parse("vertices: 1\narrow: a 1 1\nrelation: a a a\n");
  CHECK(check_finite_dimensional(*nil).surviving_paths.size() == 3);
}

TEST_CASE("with_field keeps the quiver and relations") {
  const auto p = fixture::load("gp");
  const Presentation q = p->with_field(PrimeField(23));
  CHECK(q.field().order() == 23);
  CHECK(q.quiver() == p->quiver());
  CHECK(q.relations() == p->relations());
}
