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
#include "oracles.hpp"
#include "sba/error.hpp"
#include "sba/linalg.hpp"
#include "sba/poly.hpp"

using namespace sba;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng,
                     unsigned sparsity = 0) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<Residue> d(0, f.order() - 1);
  std::uniform_int_distribution<unsigned> keep(0, sparsity);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = keep(rng) == 0 ? d(rng) : 0;
  return m;
}

}  // namespace

TEST_CASE("field arithmetic agrees with integer arithmetic") {
  const PrimeField f(101);
  for (std::int64_t a = -150; a < 150; a += 7) {
    const Residue r = f.from_int(a);
    CHECK(r == oracle::mod(a, 101));
    if (r) CHECK(f.mul(r, f.inv(r)) == 1);
    CHECK(f.add(r, f.neg(r)) == 0);
    CHECK(oracle::mod(f.to_symmetric(r), 101) == r);
  }
  CHECK(f.pow(3, 100) == 1);
  CHECK_THROWS_AS(PrimeField(100), PreconditionError);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("rank matches textbook elimination") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 5u, 32003u})
    for (int t = 0; t < 40; ++t) {
      const PrimeField f(q);
      const Matrix a = random_matrix(f, 1 + rng() % 7, 1 + rng() % 7, rng, t % 3);
      CHECK(rank(a) == oracle::rank(oracle::to_dense(a), q));
    }
}

TEST_CASE("kernels, solves and row spaces are consistent") {
  std::mt19937_64 rng(11);
  const PrimeField f(13);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_matrix(f, 2 + rng() % 5, 2 + rng() % 5, rng, 1);
    const auto ker = kernel_basis(a);
    CHECK(ker.size() == a.cols() - rank(a));
    for (const auto& k : ker) {
      const Vector y = k * a.transposed();
      for (Residue x : y) CHECK(x == 0);
    }
    const Matrix lk = left_kernel(a);
    CHECK(lk.rows() == a.rows() - rank(a));
    if (lk.rows()) CHECK((lk * a).is_zero());
    Vector x(a.rows());
    for (auto& v : x) v = rng() % 13;
    const Vector b = x * a;
    const auto sol = solve_left(a, b);
    REQUIRE(sol);
    CHECK(*sol * a == b);
    CHECK(rank(row_space(a)) == rank(a));
  }
}

TEST_CASE("determinant matches the Leibniz expansion") {
  std::mt19937_64 rng(3);
  const PrimeField f(31);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = random_matrix(f, n, n, rng, t % 2);
    CHECK(determinant(a) == oracle::det(oracle::to_dense(a), 31));
  }
}

TEST_CASE("characteristic polynomial evaluates to det(xI - A)") {
  std::mt19937_64 rng(5);
  const PrimeField f(17);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix a = random_matrix(f, n, n, rng, t % 3);
    const Polynomial p = char_poly(a);
    CHECK(p.degree() == static_cast<long>(n));
    CHECK(p.leading() == 1);
    for (Residue x = 0; x < 17; ++x) {
      auto d = oracle::to_dense(a);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = (i == j ? x : 0) - d[i][j];
      CHECK(p.evaluate(x) == oracle::det(d, 17));
    }
    CHECK(p.evaluate(a).is_zero());
  }
}

TEST_CASE("factorization multiplies back and has irreducible factors") {
  std::mt19937_64 rng(9);
  const PrimeField f(7);
  for (int t = 0; t < 30; ++t) {
    Vector c(2 + rng() % 7);
    for (auto& x : c) x = rng() % 7;
    c.back() = 1;
    const Polynomial p(f, c);
    Polynomial back = Polynomial::constant(f, 1);
    for (const auto& pf : factor(p)) {
      back = back * pow(pf.factor, pf.multiplicity);
      CHECK(pf.factor.leading() == 1);
      if (pf.factor.degree() >= 2)
        for (Residue x = 0; x < 7; ++x) CHECK(pf.factor.evaluate(x) != 0);
    }
    CHECK(back == p.monic());
  }
  // X^11 + 1 splits into linear factors over F_23.
  Vector c(12, 0);
  c[0] = 1;
  c[11] = 1;
  const auto fs = factor(Polynomial(PrimeField(23), c));
  CHECK(fs.size() == 11);
  for (const auto& pf : fs) CHECK(pf.factor.degree() == 1);
}

TEST_CASE("polynomial division identities") {
  const PrimeField f(11);
  const Polynomial a(f, {3, 0, 5, 1, 7}), b(f, {1, 2, 1});
  const DivMod qr = divmod(a, b);
  CHECK(qr.quotient * b + qr.remainder == a);
  CHECK(qr.remainder.degree() < b.degree());
  CHECK(gcd(a * b, b * b) == b.monic());
  CHECK(powmod(a, 5, b) == pow(a, 5) % b);
}

TEST_CASE("sparse system kernel matches dense elimination") {
  std::mt19937_64 rng(21);
  const PrimeField f(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    const Matrix a = random_matrix(f, rows, cols, rng, 2);
    SparseSystem s(f, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<SparseSystem::Term> terms;
      for (std::size_t j = 0; j < cols; ++j)
        if (a(i, j)) terms.emplace_back(j, a(i, j));
      s.add_equation(terms);
    }
    CHECK(s.rank() == oracle::rank(oracle::to_dense(a), 5));
    const auto ker = s.kernel_basis();
    CHECK(ker.size() == cols - s.rank());
    for (const auto& k : ker) {
      const Vector y = k * a.transposed();
      for (Residue x : y) CHECK(x == 0);
    }
  }
}
