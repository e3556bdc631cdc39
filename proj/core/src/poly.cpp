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

#include "sba/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sba/error.hpp"

namespace sba {

Polynomial::Polynomial(PrimeField field, Vector coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.order();
  trim();
}

Polynomial Polynomial::constant(PrimeField field, Residue c) {
  return Polynomial(field, Vector{c});
}

Polynomial Polynomial::linear(PrimeField field, Residue root) {
  return Polynomial(field, Vector{field.neg(root), 1});
}

Polynomial Polynomial::monomial(PrimeField field, std::size_t degree) {
  Vector c(degree + 1, 0);
  c[degree] = 1;
  return Polynomial(field, std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Residue inv = field_.inv(leading());
  Vector c = coeffs_;
  for (auto& x : c) x = field_.mul(x, inv);
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_, {});
  Vector c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    c[i - 1] = field_.mul(coeffs_[i], static_cast<Residue>(i % field_.order()));
  }
  return Polynomial(field_, std::move(c));
}

Residue Polynomial::evaluate(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x), *it);
  }
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& a) const {
  if (a.rows() != a.cols()) throw DimensionError("p(A) needs a square matrix");
  Matrix acc(a.field(), a.rows(), a.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.rows(); ++i)
      acc(i, i) = field_.add(acc(i, i), *it);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Residue c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (c != 1 || k == 0) out << c;
    if (k >= 1) out << "X";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(),
                                      b.coeffs_.rbegin(), b.coeffs_.rend());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const PrimeField& f = a.is_zero() ? b.field() : a.field();
  Vector c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const PrimeField& f = a.is_zero() ? b.field() : a.field();
  Vector c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const PrimeField& f = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial(f, {});
  const std::uint64_t q = f.order();
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::uint64_t ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] = (acc[i + j] + ai * b.coeffs()[j]) % q;
    }
  }
  Vector c(acc.begin(), acc.end());
  return Polynomial(f, std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const PrimeField& f = b.field();
  if (a.degree() < b.degree()) return {Polynomial(f, {}), a};
  Vector rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  Vector quot(rem.size() - db, 0);
  const Residue inv_lead = f.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Residue c = f.mul(rem[k], inv_lead);
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).remainder;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial pow(const Polynomial& base, std::uint64_t e) {
  Polynomial result = Polynomial::constant(base.field(), 1);
  Polynomial b = base;
  while (e != 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return result;
}

Polynomial powmod(const Polynomial& base, std::uint64_t e,
                  const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
  Polynomial b = base % modulus;
  while (e != 0) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e != 0) b = (b * b) % modulus;
  }
  return result;
}

Polynomial char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("characteristic polynomial of non-square matrix");
  }
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // similarity transform to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const Residue inv = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      const Residue u = f.mul(h(k, j), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r)
        h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  // p_m = (X - h_mm) p_{m-1} - sum_i h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
  auto at = [&](std::size_t i, std::size_t j) { return h(i - 1, j - 1); };
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(f, 1));
  const Polynomial x = Polynomial::monomial(f, 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial pm = (x - Polynomial::constant(f, at(m, m))) * p[m - 1];
    Residue t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, at(i + 1, i));
      if (t == 0) break;
      const Residue coef = f.mul(at(i, m), t);
      if (coef != 0) pm = pm - Polynomial::constant(f, coef) * p[i - 1];
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

namespace {

using FactorList = std::vector<PolynomialFactor>;

// f(X) = g(X^q) -> g(X); valid in characteristic q over the prime field.
Polynomial qth_root(const Polynomial& f) {
  const std::size_t q = f.field().order();
  Vector c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += q) c.push_back(f.coeffs()[i]);
  return Polynomial(f.field(), std::move(c));
}

void square_free(const Polynomial& f, std::size_t scale, FactorList& out) {
  const PrimeField& field = f.field();
  const Polynomial one = Polynomial::constant(field, 1);
  std::size_t i = 1;
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = divmod(f, c).quotient;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = divmod(w, y).quotient;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = divmod(c, y).quotient;
  }
  if (c.degree() > 0) square_free(qth_root(c), scale * field.order(), out);
}

// Splits a squarefree monic polynomial by degree of its irreducible factors.
std::vector<std::pair<Polynomial, std::size_t>> distinct_degree(Polynomial f) {
  const PrimeField& field = f.field();
  const Polynomial x = Polynomial::monomial(field, 1);
  std::vector<std::pair<Polynomial, std::size_t>> out;
  Polynomial h = x % f;
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(f.degree()); ++d) {
    h = powmod(h, field.order(), f);
    Polynomial g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g).quotient;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<std::size_t>(f.degree()));
  return out;
}

void equal_degree(const Polynomial& f, std::size_t d, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
  const PrimeField& field = f.field();
  if (static_cast<std::size_t>(f.degree()) == d) {
    out.push_back(f.monic());
    return;
  }
  std::uniform_int_distribution<Residue> coeff(0, field.order() - 1);
  const std::uint64_t q = field.order();
  for (;;) {
    Vector rc(static_cast<std::size_t>(f.degree()));
    for (auto& c : rc) c = coeff(rng);
    Polynomial r(field, std::move(rc));
    if (r.degree() < 1) continue;
    Polynomial candidate;
    if (q == 2) {
      // trace to F_2: r + r^2 + ... + r^(2^(d-1))
      Polynomial t = r % f;
      Polynomial acc = t;
      for (std::size_t i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      candidate = acc;
    } else {
      // r^((q^d-1)/2) = (r^(1+q+...+q^(d-1)))^((q-1)/2)
      Polynomial t = r % f;
      Polynomial norm = t;
      for (std::size_t i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        norm = (norm * t) % f;
      }
      candidate = powmod(norm, (q - 1) / 2, f) - Polynomial::constant(field, 1);
    }
    Polynomial g = gcd(candidate, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).quotient, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolynomialFactor> factor(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  FactorList sqf;
  square_free(p.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  FactorList out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.factor < b.factor;
  });
  // Merge repeated irreducibles that arrived from different squarefree parts.
  FactorList merged;
  for (auto& fct : out) {
    if (!merged.empty() && merged.back().factor == fct.factor) {
      merged.back().multiplicity += fct.multiplicity;
    } else {
      merged.push_back(std::move(fct));
    }
  }
  return merged;
}

std::vector<PolynomialFactor> char_poly_factors(const Matrix& a) {
  if (a.rows() == 0) return {};
  return factor(char_poly(a));
}

}  // namespace sba
