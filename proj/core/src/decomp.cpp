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

#include "sba/decomp.hpp"

#include <numeric>
#include <random>

#include "sba/error.hpp"
#include "sba/homalg.hpp"

namespace sba {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Matrix matrix_power(Matrix base, std::size_t e) {
  Matrix acc = Matrix::identity(base.field(), base.rows());
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Polynomial total_char_poly(const Morphism& f, const PrimeField& field) {
  Polynomial p = Polynomial::constant(field, 1);
  for (const auto& c : f.components)
    if (c.rows() > 0) p = p * char_poly(c);
  return p;
}

SubmoduleResult whole(const Representation& m) {
  return {m, identity_morphism(m)};
}

}  // namespace

std::vector<SubmoduleResult> primary_components(const Representation& m, const Morphism& f) {
  if (!is_intertwiner(m, m, f)) throw PreconditionError("not an endomorphism");
  if (m.is_zero()) return {whole(m)};
  const auto factors = factor(total_char_poly(f, m.field()));
  if (factors.size() < 2) return {whole(m)};
  std::vector<SubmoduleResult> out;
  for (const auto& pf : factors) {
    std::vector<Matrix> spans;
    for (const auto& c : f.components) {
      if (c.rows() == 0) {
        spans.emplace_back(m.field(), 0, 0);
        continue;
      }
      spans.push_back(left_kernel(matrix_power(pf.factor.evaluate(c), pf.multiplicity)));
    }
    out.push_back(submodule(m, spans));
  }
  return out;
}

std::optional<std::pair<SubmoduleResult, SubmoduleResult>> fitting_split(
    const Representation& m, const Morphism& f) {
  auto comps = primary_components(m, f);
  if (comps.size() < 2) return std::nullopt;
  std::vector<Matrix> rest;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Matrix rows(m.field(), 0, m.dim(v));
    for (std::size_t i = 1; i < comps.size(); ++i)
      rows = vstack(rows, comps[i].inclusion.components[v]);
    rest.push_back(std::move(rows));
  }
  return std::make_pair(std::move(comps[0]), submodule(m, rest));
}

namespace {

struct Splitter {
  const DecomposeOptions& opts;
  DecompositionReport& report;

  bool try_split(const Representation& m, const Morphism& f, const std::string& source,
                 std::uint64_t seed) {
    auto comps = primary_components(m, f);
    if (comps.size() < 2) return false;
    SplitWitness w{source, {}, {}};
    for (const auto& pf : factor(total_char_poly(f, m.field()))) w.factors.push_back(pf.factor);
    for (const auto& c : comps) w.pieces.push_back(c.module.dims());
    report.witnesses.push_back(std::move(w));
    for (std::size_t i = 0; i < comps.size(); ++i) run(comps[i].module, splitmix(seed ^ (i + 1)));
    return true;
  }

  void run(const Representation& m, std::uint64_t seed) {
    if (m.total_dim() <= 1) {
      report.summands.push_back(m);
      return;
    }
    const HomSpace end = hom_space(m, m);
    if (end.dim() <= 1) {
      report.summands.push_back(m);
      return;
    }
    for (std::size_t i = 0; i < end.dim(); ++i)
      if (try_split(m, end.basis[i], "basis[" + std::to_string(i) + "]", seed)) return;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> coeff(0, m.field().order() - 1);
    Vector c(end.dim());
    for (std::size_t t = 0; t < opts.trials; ++t) {
      for (auto& x : c) x = coeff(rng);
      if (try_split(m, combine(end.basis, c), "random[" + std::to_string(t) + "]", seed))
        return;
    }
    report.summands.push_back(m);
  }
};

}  // namespace

DecompositionReport decompose(const Representation& m, const DecomposeOptions& opts) {
  DecompositionReport report;
  report.trials = opts.trials;
  report.seed = opts.seed;
  if (m.is_zero()) return report;
  Splitter{opts, report}.run(m, splitmix(opts.seed));
  return report;
}

// --- catalog oracle ------------------------------------------------------------

namespace {

__extension__ using Wide = __int128;

struct Rational {
  Wide num = 0;
  Wide den = 1;

  static Wide gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    return a;
  }
  Rational normalized() const {
    Rational r = *this;
    if (r.den < 0) {
      r.num = -r.num;
      r.den = -r.den;
    }
    const Wide g = gcd(r.num, r.den);
    if (g > 1) {
      r.num /= g;
      r.den /= g;
    }
    return r;
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational{a.num * b.den - b.num * a.den, a.den * b.den}.normalized();
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational{a.num * b.num, a.den * b.den}.normalized();
  }
  friend Rational operator/(Rational a, Rational b) {
    return Rational{a.num * b.den, a.den * b.num}.normalized();
  }
  bool zero() const { return num == 0; }
};

}  // namespace

std::vector<std::size_t> catalog_decompose(const std::vector<std::vector<std::size_t>>& hom_matrix,
                                           const std::vector<std::size_t>& profile) {
  const std::size_t n = hom_matrix.size();
  if (profile.size() != n) throw DimensionError("profile length must match the catalog");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (hom_matrix[i].size() != n) throw DimensionError("hom matrix must be square");
    for (std::size_t j = 0; j < n; ++j) a[i][j].num = static_cast<Wide>(hom_matrix[i][j]);
    a[i][n].num = static_cast<Wide>(profile[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].zero()) ++p;
    if (p == n) throw PreconditionError("hom matrix is singular; the catalog is incomplete");
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].zero()) continue;
      const Rational factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] = a[i][j] - factor * a[c][j];
    }
  }
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = a[i][n] / a[i][i];
    if (x.den != 1 || x.num < 0)
      throw PreconditionError("catalog multiplicities are not nonnegative integers");
    out[i] = static_cast<std::size_t>(x.num);
  }
  return out;
}

std::vector<std::size_t> catalog_decompose(const Representation& m,
                                           std::span<const Representation> catalog) {
  std::vector<std::vector<std::size_t>> h(catalog.size());
  std::vector<std::size_t> profile;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (const auto& v : catalog) h[i].push_back(hom_dim(catalog[i], v));
    profile.push_back(hom_dim(catalog[i], m));
  }
  return catalog_decompose(h, profile);
}

}  // namespace sba
