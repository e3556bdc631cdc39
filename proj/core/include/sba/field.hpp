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
#include <vector>

namespace sba {

/// An element of F_q, always stored as its canonical representative in
/// [0, q).
using Residue = std::uint32_t;

using Vector = std::vector<Residue>;

bool is_prime(std::uint64_t n);

/// The prime field F_q. Cheap to copy; q is fixed at construction.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultOrder = 32003;

  PrimeField() : PrimeField(kDefaultOrder) {}
  /// Throws PreconditionError unless q is a prime below 2^31.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }

  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const;

  /// Reduces an arbitrary integer into [0, q).
  Residue from_int(std::int64_t v) const noexcept;
  /// The representative in (-q/2, q/2].
  std::int64_t to_symmetric(Residue a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

}  // namespace sba
