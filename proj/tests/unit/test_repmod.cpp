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
#include "sba/error.hpp"
#include "sba/representation.hpp"

using namespace sba;

namespace {

std::size_t nonzeros(const Matrix& m) {
  std::size_t n = 0;
  for (Residue x : m.data()) n += x != 0;
  return n;
}

std::size_t occurrences(const Walk& w, std::size_t arrow) {
  std::size_t n = 0;
  for (const auto& l : w.letters()) n += l.arrow == arrow;
  return n;
}

}  // namespace

TEST_CASE("string modules count vertex visits and letters") {
  const auto p = fixture::load("gp");
  const Quiver& q = p->quiver();
  for (const Walk& w : enumerate_words(*p, 5)) {
    const Representation m = string_module(p, w);
    CHECK(m.total_dim() == w.length() + 1);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) CHECK(nonzeros(m.map(a)) == occurrences(w, a));
    const Representation mi = string_module(p, inverse(q, w));
    CHECK(oracle::hom_dim(m, mi) == oracle::hom_dim(m, m));
    CHECK(oracle::hom_dim(mi, m) == oracle::hom_dim(m, m));
  }
}

TEST_CASE("string module letters act along the walk") {
  const auto p = fixture::load("a3nr");
  const Quiver& q = p->quiver();
  const Representation m = string_module(p, parse_walk(q, "a b"));
  CHECK(m.dims() == DimensionVector{1, 1, 1});
  const std::vector<std::size_t> ab{0, 1};
  CHECK_FALSE(m.path_action(ab).is_zero());
  const auto a3 = fixture::load("a3");
  const Representation s = string_module(a3, parse_walk(a3->quiver(), "a"));
  const std::vector<std::size_t> a{0};
  CHECK(s.path_action(a)(0, 0) != 0);
}

TEST_CASE("relations must act as zero") {
  const auto p = fixture::load("a3");
  Matrix one(p->field(), 1, 1);
  one(0, 0) = 1;
  CHECK_THROWS_AS(Representation(p, {1, 1, 1}, {one, one}), PreconditionError);
  CHECK_THROWS_AS(Representation(p, {1, 2, 1}, {one, one}), DimensionError);
  const auto a3nr = fixture::load("a3nr");
  CHECK_NOTHROW(Representation(a3nr, {1, 1, 1}, {one, one}));
}

TEST_CASE("band modules") {
  const auto p = fixture::load("kronecker");
  const Quiver& q = p->quiver();
  const Walk w = parse_walk(q, "a b^-1");
  for (std::size_t n = 1; n <= 3; ++n) {
    const Representation b = band_module(p, w, 5, n);
    CHECK(b.dims() == DimensionVector{n, n});
    CHECK(oracle::hom_dim(b, b) == n);
  }
  CHECK(oracle::hom_dim(band_module(p, w, 5, 1), band_module(p, w, 6, 1)) == 0);
  CHECK_THROWS_AS(band_module(p, w, 0, 1), PreconditionError);
  CHECK_THROWS_AS(band_module(p, power(q, w, 2), 1, 1), PreconditionError);
  const auto gp = fixture::load("gp");
  CHECK_THROWS_AS(band_module(gp, parse_walk(gp->quiver(), "a b"), 1, 1), PreconditionError);
}

TEST_CASE("projectives and simples") {
  const auto p = fixture::load("a3");
  CHECK(projective(p, 0).dims() == DimensionVector{1, 1, 0});
  CHECK(projective(p, 2).dims() == DimensionVector{0, 0, 1});
  CHECK(simple(p, 1).dims() == DimensionVector{0, 1, 0});
  const auto gp = fixture::load("gp");
  CHECK(projective(gp, 0).total_dim() == 7);
}

TEST_CASE("direct sums, submodules and quotients") {
  const auto p = fixture::load("a3nr");
  const Quiver& q = p->quiver();
  const Representation ab = string_module(p, parse_walk(q, "a b"));
  const Representation s = direct_sum(ab, simple(p, 1));
  CHECK(s.dims() == DimensionVector{1, 2, 1});
  CHECK(oracle::hom_dim(s, s) == 2);
  // socle of M(a b) is the simple at vertex 3
  std::vector<Matrix> spans{Matrix(p->field(), 0, 1), Matrix(p->field(), 0, 1),
                            Matrix::identity(p->field(), 1)};
  const SubmoduleResult sub = submodule(ab, spans);
  CHECK(sub.module.dims() == DimensionVector{0, 0, 1});
  const QuotientResult quo = quotient(ab, spans);
  CHECK(quo.module.dims() == DimensionVector{1, 1, 0});
  CHECK(is_intertwiner(ab, quo.module, quo.projection));
  std::vector<Matrix> bad{Matrix(p->field(), 0, 1), Matrix::identity(p->field(), 1),
                          Matrix(p->field(), 0, 1)};
  CHECK_THROWS_AS(submodule(ab, bad), PreconditionError);
  const SubmoduleResult ker = kernel(ab, quo.projection);
  CHECK(ker.module.dims() == sub.module.dims());
  const SubmoduleResult im = image(quo.module, quo.projection);
  CHECK(im.module.dims() == quo.module.dims());
}

TEST_CASE("module literals round-trip") {
  const auto p = fixture::load("d4sub");
  for (const char* name : {"d4sub_m", "d4sub_indec", "d4sub_s0"}) {
    const Representation m = load_representation(p, fixture::path(std::string(name) + ".mod"));
    const Representation back = parse_representation(p, serialize(m));
    CHECK(back.dims() == m.dims());
    CHECK(back.maps() == m.maps());
  }
  const Representation m = load_representation(p, fixture::path("d4sub_m.mod"));
  CHECK(m.dims() == DimensionVector{2, 1, 1, 1});
  CHECK_THROWS_AS(parse_representation(p, "module\ndim: 0=1\nmap: q 1\n"), ParseError);
}
