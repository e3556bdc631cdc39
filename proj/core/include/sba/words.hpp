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

// Letters, walks and words of a quiver with monomial relations.
//
// A letter is an arrow or the formal inverse of one; a walk is a composable
// sequence of letters (or a single vertex). A word is a walk without a
// factor l l^-1 such that neither it nor its inverse contains a relation.

#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sba/presentation.hpp"

namespace sba {

enum class Direction : std::uint8_t { Direct = 0, Inverse = 1 };

struct Letter {
  std::size_t arrow = 0;
  Direction dir = Direction::Direct;

  bool direct() const noexcept { return dir == Direction::Direct; }
  Letter inverse() const noexcept {
    return {arrow, direct() ? Direction::Inverse : Direction::Direct};
  }
  /// Arrows in declaration order; a direct letter before its inverse.
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

std::size_t letter_source(const Quiver& q, Letter l);
std::size_t letter_target(const Quiver& q, Letter l);

class Walk {
 public:
  Walk() = default;
  static Walk trivial(std::size_t vertex);
  /// Throws PreconditionError if the letters do not compose or are empty.
  static Walk from_letters(const Quiver& q, std::vector<Letter> letters);

  bool is_trivial() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }
  std::size_t start() const noexcept { return start_; }
  std::size_t end() const noexcept { return end_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Walk&, const Walk&) = default;
  /// Shortlex: length first, trivial walks by vertex, then letter by letter.
  friend std::strong_ordering operator<=>(const Walk& a, const Walk& b);

 private:
  std::size_t start_ = 0;
  std::size_t end_ = 0;
  std::vector<Letter> letters_;
};

Walk inverse(const Quiver& q, const Walk& w);
/// Throws PreconditionError unless u ends where v starts.
Walk concat(const Quiver& q, const Walk& u, const Walk& v);
/// w repeated r >= 1 times; w must be closed unless r == 1.
Walk power(const Quiver& q, const Walk& w, std::size_t r);
/// Letters [from, from+count) of a nontrivial walk.
Walk subwalk(const Quiver& q, const Walk& w, std::size_t from, std::size_t count);
/// Rotation starting at letter k of a closed walk.
Walk rotate(const Quiver& q, const Walk& w, std::size_t k);

bool is_direct(const Walk& w);
bool is_inverse(const Walk& w);
bool is_serial(const Walk& w);

struct WordCheck {
  bool ok = true;
  /// Offending factor as [position, position+length) in the walk.
  std::size_t position = 0;
  std::size_t length = 0;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

WordCheck is_word(const Presentation& p, const Walk& w);
/// Whether appending `next` to the word `w` keeps it a word; only the new
/// factors are inspected.
bool extends_word(const Presentation& p, std::span<const Letter> word, Letter next);

/// A walk certified to be a word at construction.
class Word {
 public:
  /// Throws PreconditionError describing the violation otherwise.
  Word(const Presentation& p, Walk w);
  const Walk& walk() const noexcept { return walk_; }
  operator const Walk&() const noexcept { return walk_; }

 private:
  Walk walk_;
};

/// Non-serial, closed, and its square is again a word.
bool is_cyclic(const Presentation& p, const Walk& w);

struct PrimitiveCheck {
  bool primitive = true;
  Walk root;
  std::size_t exponent = 1;
};

/// Smallest root v with w = v^r; primitive iff r == 1.
PrimitiveCheck is_primitive(const Quiver& q, const Walk& w);

/// Least element, in letter order, among the rotations of w and of w^-1.
Walk canonical_cyclic(const Quiver& q, const Walk& w);

/// All words of length <= max_len, one per pair {w, w^-1} (the smaller
/// one), in shortlex order.
std::vector<Walk> enumerate_words(const Presentation& p, std::size_t max_len);

/// "a b^-1 c" or "e(v)".
std::string format_walk(const Quiver& q, const Walk& w);
Walk parse_walk(const Quiver& q, std::string_view text);

// --- periodicity ------------------------------------------------------------

enum class FineWolfVerdict { ForcedCommonRoot, Inconclusive };

/// Whether a common left factor of length `prefix_len` of powers of two
/// sequences of lengths n and m forces them to be powers of one sequence:
/// the threshold is n + m - gcd(n, m).
FineWolfVerdict fine_wolf_common_power(std::size_t x_len, std::size_t y_len,
                                       std::size_t prefix_len);

template <class T>
FineWolfVerdict fine_wolf_common_power(std::span<const T> x, std::span<const T> y,
                                       std::size_t prefix_len) {
  return fine_wolf_common_power(x.size(), y.size(), prefix_len);
}

/// Length of the longest common left factor of x^k and y^k for large k,
/// capped at `limit`. Both sequences must be nonempty.
template <class T>
std::size_t common_power_prefix(std::span<const T> x, std::span<const T> y,
                                std::size_t limit) {
  std::size_t n = 0;
  while (n < limit && x[n % x.size()] == y[n % y.size()]) ++n;
  return n;
}

}  // namespace sba
