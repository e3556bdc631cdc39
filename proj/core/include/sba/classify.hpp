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

// Representation type of string algebras: bands, the semigroups N(alpha) of
// cyclic words starting with alpha and ending with an inverse letter, and the
// glued extension of two band modules whose middle term has many summands.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sba/homalg.hpp"
#include "sba/words.hpp"

namespace sba {

/// States are the words of a fixed window length (one less than the longest
/// relation, at least one); s -> s' when s' drops the first letter of s and
/// appends a letter that keeps s followed by it a word.
class LetterAutomaton {
 public:
  explicit LetterAutomaton(const Presentation& p);

  std::size_t window() const noexcept { return window_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  const std::vector<Letter>& state(std::size_t i) const { return states_.at(i); }
  const std::vector<std::size_t>& successors(std::size_t i) const { return next_.at(i); }

  /// The letters read around some cycle of the automaton. Over a
  /// finite-dimensional algebra this is a cyclic word.
  std::optional<Walk> find_cycle() const;
  bool acyclic() const { return !find_cycle(); }

 private:
  const Quiver* quiver_;
  std::size_t window_;
  std::vector<std::vector<Letter>> states_;
  std::vector<std::vector<std::size_t>> next_;
};

/// Canonical forms of the primitive cyclic words of length <= max_len.
std::vector<Walk> find_bands(const Presentation& p, std::size_t max_len);

struct GeneratorSearch {
  std::vector<Walk> generators;
  /// False when the node budget ran out before max_len was exhausted.
  bool complete = true;
  std::size_t nodes = 0;
};

/// Elements of N(alpha) of length <= max_len that do not factor as a product
/// of two elements of N(alpha).
GeneratorSearch n_alpha_search(const Presentation& p, std::size_t alpha,
                               std::size_t max_len, std::size_t node_budget = 2'000'000);
std::vector<Walk> n_alpha_generators(const Presentation& p, std::size_t alpha,
                                     std::size_t max_len);

enum class Verdict { Finite, Domestic, NonDomestic, Unknown };
std::string verdict_name(Verdict v);

struct ClassificationCertificate {
  Verdict verdict = Verdict::Unknown;
  std::size_t automaton_states = 0;
  /// Length bound used by the generator search (0 for Finite).
  std::size_t bound = 0;
  /// A band read off an automaton cycle; empty when Finite.
  std::optional<Walk> band_witness;
  /// Canonical bands up to the bound (Domestic only).
  std::vector<Walk> bands;
  /// Generators found per arrow, in arrow order.
  std::vector<std::vector<Walk>> generators;
  /// NonDomestic: the arrow and two generators with different roots.
  std::size_t alpha = 0;
  std::vector<Walk> evidence;
  std::vector<Walk> evidence_roots;
  std::size_t common_prefix = 0;
  FineWolfVerdict fine_wolf = FineWolfVerdict::Inconclusive;
  bool search_complete = true;
};

/// bound == 0 selects 4 x (automaton states). Throws PreconditionError
/// unless p is a finite-dimensional string presentation.
ClassificationCertificate classify(const Presentation& p, std::size_t bound = 0);

struct WitnessTriple {
  Walk x, y, z;
};

struct TripleCheck {
  bool ok = true;
  std::string reason;
};

/// All conditions on (x, y, z) the witness construction relies on, including
/// the relations beta delta and alpha gamma forced by special biseriality.
TripleCheck check_witness_triple(const Presentation& p, const WitnessTriple& t);

/// Smallest valid triple (by total length, then x, y, z) with each word of
/// length <= search_len. Throws PreconditionError unless classify says
/// NonDomestic.
std::optional<WitnessTriple> find_witness_triple(const Presentation& p,
                                                 std::size_t search_len = 6);

struct WitnessExtension {
  std::size_t prime = 0;
  std::size_t n = 0;
  Walk u, v;
  Representation band_u, band_v, glued;
  ShortExactSequence sequence;
  /// Row indices of i1, i2 (in band_v) and j1, j2 (in band_u) at their vertex.
  std::size_t i1 = 0, i2 = 0, j1 = 0, j2 = 0;
  /// Letter offsets of the chosen factors delta^-1 x gamma in u and
  /// beta x alpha^-1 in v (first occurrences).
  std::size_t u_factor = 0, v_factor = 0;
  /// The cyclic word traced by the strands of the middle term.
  Walk crossed_word;
};

/// u = (xyxz)^n xy and v = xz(xyxz)^n with prime = 2n + 1; glues B(u) and
/// B(v) by i1.beta = i2 + j1 and i2.delta = -j2 at the first factors
/// beta x alpha^-1 of v and delta^-1 x gamma of u. Requires prime >= 11,
/// prime != char and q = 1 mod 2 prime.
WitnessExtension build_witness(PresentationRef p, const WitnessTriple& t, std::size_t prime);

}  // namespace sba
