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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sba/field.hpp"
#include "sba/linalg.hpp"

namespace sba {

/// Univariate polynomial over F_q, coefficients from the constant term up.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(PrimeField field, Vector coeffs);

  static Polynomial constant(PrimeField field, Residue c);
  /// X - root
  static Polynomial linear(PrimeField field, Residue root);
  static Polynomial monomial(PrimeField field, std::size_t degree);

  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Residue coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  Residue leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const Vector& coeffs() const noexcept { return coeffs_; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Residue evaluate(Residue x) const;
  /// p(A) for a square matrix A.
  Matrix evaluate(const Matrix& a) const;
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  /// Degree first, then coefficients from the top; used to sort factors.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void trim();

  PrimeField field_;
  Vector coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial pow(const Polynomial& base, std::uint64_t e);
Polynomial powmod(const Polynomial& base, std::uint64_t e,
                  const Polynomial& modulus);

/// Characteristic polynomial det(X*I - A), via Hessenberg reduction.
Polynomial char_poly(const Matrix& a);

struct PolynomialFactor {
  Polynomial factor;  // monic irreducible
  std::size_t multiplicity;
};

/// Factorization of a nonzero polynomial into monic irreducibles, sorted by
/// (degree, coefficients). The unit is dropped. `seed` drives the random
/// splitting step; any seed yields the same factorization.
std::vector<PolynomialFactor> factor(const Polynomial& p,
                                     std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Factors of the characteristic polynomial of a square matrix.
std::vector<PolynomialFactor> char_poly_factors(const Matrix& a);

}  // namespace sba
