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

#include "sba/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sba/error.hpp"

namespace sba {

std::size_t letter_source(const Quiver& q, Letter l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.direct() ? a.source : a.target;
}

std::size_t letter_target(const Quiver& q, Letter l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.direct() ? a.target : a.source;
}

Walk Walk::trivial(std::size_t vertex) {
  Walk w;
  w.start_ = w.end_ = vertex;
  return w;
}

Walk Walk::from_letters(const Quiver& q, std::vector<Letter> letters) {
  if (letters.empty()) throw PreconditionError("walk needs at least one letter");
  for (const Letter& l : letters) {
    if (l.arrow >= q.arrow_count()) throw PreconditionError("letter out of range");
  }
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letter_target(q, letters[i - 1]) != letter_source(q, letters[i])) {
      throw PreconditionError("letters " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + " do not compose");
    }
  }
  Walk w;
  w.start_ = letter_source(q, letters.front());
  w.end_ = letter_target(q, letters.back());
  w.letters_ = std::move(letters);
  return w;
}

std::strong_ordering operator<=>(const Walk& a, const Walk& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (a.is_trivial()) return a.start_ <=> b.start_;
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
}

Walk inverse(const Quiver& q, const Walk& w) {
  if (w.is_trivial()) return w;
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Walk::from_letters(q, std::move(out));
}

Walk concat(const Quiver& q, const Walk& u, const Walk& v) {
  if (u.end() != v.start()) {
    throw PreconditionError("cannot concatenate: walk ends at " +
                            q.vertex_id(u.end()) + ", next starts at " +
                            q.vertex_id(v.start()));
  }
  if (u.is_trivial()) return v;
  if (v.is_trivial()) return u;
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Walk::from_letters(q, std::move(out));
}

Walk power(const Quiver& q, const Walk& w, std::size_t r) {
  if (r == 0) throw PreconditionError("power exponent must be positive");
  Walk out = w;
  for (std::size_t i = 1; i < r; ++i) out = concat(q, out, w);
  return out;
}

Walk subwalk(const Quiver& q, const Walk& w, std::size_t from,
             std::size_t count) {
  if (count == 0 || from + count > w.length())
    throw PreconditionError("subwalk out of range");
  return Walk::from_letters(
      q, std::vector<Letter>(w.letters().begin() + static_cast<long>(from),
                             w.letters().begin() + static_cast<long>(from + count)));
}

Walk rotate(const Quiver& q, const Walk& w, std::size_t k) {
  if (w.is_trivial() || k % w.length() == 0) return w;
  if (w.start() != w.end()) throw PreconditionError("rotation of an open walk");
  std::vector<Letter> out(w.letters().begin() + static_cast<long>(k % w.length()),
                          w.letters().end());
  out.insert(out.end(), w.letters().begin(),
             w.letters().begin() + static_cast<long>(k % w.length()));
  return Walk::from_letters(q, std::move(out));
}

bool is_direct(const Walk& w) {
  return !w.is_trivial() && std::all_of(w.letters().begin(), w.letters().end(),
                                        [](Letter l) { return l.direct(); });
}

bool is_inverse(const Walk& w) {
  return !w.is_trivial() && std::none_of(w.letters().begin(), w.letters().end(),
                                         [](Letter l) { return l.direct(); });
}

bool is_serial(const Walk& w) { return is_direct(w) || is_inverse(w); }

namespace {

/// Whether letters [i, i+r.size()) spell relation r directly or inversely.
bool spells_relation(std::span<const Letter> w, std::size_t i,
                     const std::vector<std::size_t>& r, bool inverse_reading) {
  const std::size_t n = r.size();
  if (i + n > w.size()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const Letter& l = w[i + k];
    if (inverse_reading) {
      if (l.direct() || l.arrow != r[n - 1 - k]) return false;
    } else {
      if (!l.direct() || l.arrow != r[k]) return false;
    }
  }
  return true;
}

std::string describe(const Quiver& q, std::span<const Letter> w, std::size_t i,
                     std::size_t n) {
  std::vector<Letter> part(w.begin() + static_cast<long>(i),
                           w.begin() + static_cast<long>(i + n));
  return format_walk(q, Walk::from_letters(q, std::move(part)));
}

}  // namespace

WordCheck is_word(const Presentation& p, const Walk& w) {
  const auto& letters = w.letters();
  const Quiver& q = p.quiver();
  WordCheck check;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i + 1] == letters[i].inverse()) {
      check.ok = false;
      check.position = i;
      check.length = 2;
      check.reason = "factor l l^-1: " + describe(q, letters, i, 2);
      return check;
    }
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (const auto& r : p.relations()) {
      for (bool inv : {false, true}) {
        if (spells_relation(letters, i, r, inv)) {
          check.ok = false;
          check.position = i;
          check.length = r.size();
          check.reason = std::string(inv ? "inverse of relation: " : "relation: ") +
                         describe(q, letters, i, r.size());
          return check;
        }
      }
    }
  }
  return check;
}

bool extends_word(const Presentation& p, std::span<const Letter> word,
                  Letter next) {
  if (!word.empty() && word.back() == next.inverse()) return false;
  std::vector<Letter> tail;
  const std::size_t keep =
      std::min(word.size(), p.max_relation_length() > 0 ? p.max_relation_length() - 1 : 0);
  tail.assign(word.end() - static_cast<long>(keep), word.end());
  tail.push_back(next);
  for (const auto& r : p.relations()) {
    if (r.size() > tail.size()) continue;
    const std::size_t i = tail.size() - r.size();
    if (spells_relation(tail, i, r, false) || spells_relation(tail, i, r, true))
      return false;
  }
  return true;
}

Word::Word(const Presentation& p, Walk w) : walk_(std::move(w)) {
  if (WordCheck c = is_word(p, walk_); !c) throw PreconditionError("not a word: " + c.reason);
}

bool is_cyclic(const Presentation& p, const Walk& w) {
  if (w.is_trivial() || is_serial(w) || w.start() != w.end()) return false;
  return is_word(p, w).ok && is_word(p, concat(p.quiver(), w, w)).ok;
}

PrimitiveCheck is_primitive(const Quiver& q, const Walk& w) {
  PrimitiveCheck out;
  out.root = w;
  const std::size_t n = w.length();
  if (n == 0) return out;
  const auto& l = w.letters();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = l[i] == l[i - d];
    if (periodic) {
      out.primitive = false;
      out.root = subwalk(q, w, 0, d);
      out.exponent = n / d;
      return out;
    }
  }
  return out;
}

Walk canonical_cyclic(const Quiver& q, const Walk& w) {
  if (w.is_trivial()) return w;
  Walk best = w;
  const Walk winv = inverse(q, w);
  for (std::size_t k = 0; k < w.length(); ++k) {
    for (const Walk* base : {&w, &winv}) {
      Walk r = rotate(q, *base, k);
      if (r < best) best = std::move(r);
    }
  }
  return best;
}

std::vector<Walk> enumerate_words(const Presentation& p, std::size_t max_len) {
  const Quiver& q = p.quiver();
  std::vector<Walk> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.push_back(Walk::trivial(v));
  if (max_len == 0) return out;

  std::vector<Letter> alphabet;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    alphabet.push_back({a, Direction::Direct});
    alphabet.push_back({a, Direction::Inverse});
  }

  std::vector<Letter> stack;
  auto visit = [&](auto&& self) -> void {
    std::vector<Letter> inv(stack.rbegin(), stack.rend());
    for (Letter& l : inv) l = l.inverse();
    if (!std::lexicographical_compare(inv.begin(), inv.end(), stack.begin(), stack.end()))
      out.push_back(Walk::from_letters(q, stack));
    if (stack.size() == max_len) return;
    const std::size_t at = letter_target(q, stack.back());
    for (Letter l : alphabet) {
      if (letter_source(q, l) != at || !extends_word(p, stack, l)) continue;
      stack.push_back(l);
      self(self);
      stack.pop_back();
    }
  };
  for (Letter l : alphabet) {
    stack.assign(1, l);
    visit(visit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_walk(const Quiver& q, const Walk& w) {
  if (w.is_trivial()) return "e(" + q.vertex_id(w.start()) + ")";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s += ' ';
    s += q.arrow(w[i].arrow).id;
    if (!w[i].direct()) s += "^-1";
  }
  return s;
}

Walk parse_walk(const Quiver& q, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto fail = [&](std::size_t col, const std::string& what) -> ParseError {
    return ParseError(1, col + 1, what);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    if (tok.starts_with("e(") && tok.ends_with(")")) {
      if (!letters.empty() || text.find_first_not_of(" \t", j) != std::string_view::npos)
        throw fail(i, "a trivial walk stands alone");
      auto v = q.find_vertex(tok.substr(2, tok.size() - 3));
      if (!v) throw fail(i + 2, "unknown vertex '" + std::string(tok.substr(2, tok.size() - 3)) + "'");
      return Walk::trivial(*v);
    }
    Direction dir = Direction::Direct;
    if (tok.ends_with("^-1")) {
      dir = Direction::Inverse;
      tok.remove_suffix(3);
    }
    auto a = q.find_arrow(tok);
    if (!a) throw fail(i, "unknown arrow '" + std::string(tok) + "'");
    letters.push_back({*a, dir});
    i = j;
  }
  if (letters.empty()) throw fail(0, "empty walk");
  try {
    return Walk::from_letters(q, std::move(letters));
  } catch (const PreconditionError& e) {
    throw fail(0, e.what());
  }
}

FineWolfVerdict fine_wolf_common_power(std::size_t x_len, std::size_t y_len,
                                       std::size_t prefix_len) {
  if (x_len == 0 || y_len == 0)
    throw PreconditionError("periodicity test needs nonempty sequences");
  const std::size_t bound = x_len + y_len - std::gcd(x_len, y_len);
  return prefix_len >= bound ? FineWolfVerdict::ForcedCommonRoot
                             : FineWolfVerdict::Inconclusive;
}

}  // namespace sba
