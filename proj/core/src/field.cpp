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

#include "sba/field.hpp"

#include <string>

#include "sba/error.hpp"

namespace sba {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 31) || !is_prime(q)) {
    throw PreconditionError("field order " + std::to_string(q) +
                            " is not a prime below 2^31");
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % q_;
  Residue base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw PreconditionError("inverse of zero in F_q");
  // extended Euclid on (a, q)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

Residue PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t m = v % static_cast<std::int64_t>(q_);
  if (m < 0) m += q_;
  return static_cast<Residue>(m);
}

std::int64_t PrimeField::to_symmetric(Residue a) const noexcept {
  return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_
                    : static_cast<std::int64_t>(a);
}

}  // namespace sba
