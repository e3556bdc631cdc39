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

// Catalogs of indecomposables, almost split sequences by word surgery, the
// hom order and the delta bookkeeping that compares summand counts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sba/decomp.hpp"
#include "sba/homalg.hpp"
#include "sba/words.hpp"

namespace sba {

struct CatalogEntry {
  std::string id;
  /// The defining word; empty for modules supplied by hand.
  std::optional<Walk> word;
  Representation module;
  bool projective = false;
};

struct Catalog {
  PresentationRef presentation;
  std::size_t max_dim = 0;
  std::vector<CatalogEntry> entries;
  /// Every indecomposable is listed (no word reaches max_dim letters).
  bool complete = false;
  /// Set when a band exists; the enumeration is then refused and empty.
  std::optional<Walk> band_witness;
  /// Canonical bands of length <= max_dim, reported alongside a refusal.
  std::vector<Walk> bands;
  /// hom[i][j] = hom_dim(entries[i], entries[j]).
  std::vector<std::vector<std::size_t>> hom;

  bool refused() const noexcept { return band_witness.has_value(); }
  std::size_t size() const noexcept { return entries.size(); }
  std::vector<Representation> modules() const;
  /// hom_dim(entries[i], m) for all i.
  std::vector<std::size_t> profile(const Representation& m) const;
  /// Catalog index of an indecomposable isomorphic to m, if listed.
  std::optional<std::size_t> index_of(const Representation& m) const;
  std::optional<std::size_t> find(const std::string& id) const;
};

/// String modules of dimension <= max_dim, one per word up to inversion.
/// Throws PreconditionError unless p is a finite-dimensional string
/// presentation.
Catalog enumerate_indecomposables(PresentationRef p, std::size_t max_dim);

/// A catalog of explicitly given modules (for presentations that are not
/// string); never marked complete.
Catalog catalog_from_modules(PresentationRef p,
                             std::vector<std::pair<std::string, Representation>> modules);

// --- almost split sequences -------------------------------------------------------

/// A word together with a side, which only matters for trivial words.
struct SidedWord {
  Walk walk;
  int side = 1;
};

/// Hook added on the right of C if possible, otherwise the cohook removed;
/// empty when neither applies.
std::optional<SidedWord> right_surgery(const Presentation& p, const SidedWord& c);
/// The mirror image: inverse of right_surgery on the inverse word.
std::optional<SidedWord> left_surgery(const Presentation& p, const SidedWord& c);

struct ARSequence {
  Walk v_word;
  Walk tau_word;
  std::vector<Walk> middle_words;
  ShortExactSequence sequence;  // 0 -> tau V -> E_V -> V -> 0
  std::size_t middle_summand_count = 0;
  /// hom_dim(U, tau V) - hom_dim(U, E_V) + hom_dim(U, V) per catalog entry.
  std::vector<long long> defect;
  /// defect is the indicator of V.
  bool certified = false;
};

/// Throws PreconditionError on a refused catalog, a word outside the
/// catalog, or a projective V.
ARSequence ar_sequence(const Catalog& cat, const Walk& v_word);

/// Almost split sequences of the non-projective catalog members, indexed
/// like the catalog.
using ARTable = std::vector<std::optional<ARSequence>>;
ARTable ar_table(const Catalog& cat);

// --- hom order and delta -----------------------------------------------------------

struct DeltaProfile {
  /// delta[i] = hom_dim(V_i, N) - hom_dim(V_i, M).
  std::vector<long long> delta;
};

struct HomOrder {
  bool leq = false;
  DeltaProfile profile;
};

/// M <= N iff the dimension vectors agree and every delta is >= 0. Throws
/// PreconditionError unless the catalog is complete.
HomOrder hom_leq(const Catalog& cat, const Representation& m, const Representation& n);

struct RiedtmannWitness {
  Representation x, y, z;
  /// Summand counts |X|, |Y|, |Z| read off the almost split sequences.
  std::size_t x_count = 0, y_count = 0, z_count = 0;
  bool verified = false;
};

/// X, Y, Z are the sums of tau V, E_V and V with multiplicity delta(V) over
/// non-projective V; verified when M + X + Z and N + Y have equal hom
/// profiles. Throws PreconditionError unless M <= N.
RiedtmannWitness riedtmann_witness(const Catalog& cat, const ARTable& table,
                                   const Representation& m, const Representation& n);

/// Sum of delta(V) (2 - |E_V|) over non-projective V. Throws
/// PreconditionError unless M <= N.
long long delta_count_formula(const Catalog& cat, const ARTable& table,
                              const Representation& m, const Representation& n);

// --- surveys over a catalog ----------------------------------------------------------

struct CatalogSum {
  std::vector<std::size_t> multiplicity;
  std::string id;  // "a+e(2)+e(2)"
  Representation module;
};

/// Nonzero direct sums of catalog members of total dimension <= max_dim, in
/// lexicographic order of multiplicity vectors.
std::vector<CatalogSum> catalog_sums(const Catalog& cat, std::size_t max_dim);

struct DegenerationPair {
  std::size_t m = 0, n = 0;  // indices into DegenerationSurvey::modules
  bool leq = false;
  std::size_t count_m = 0, count_n = 0;
  /// Filled when leq holds.
  long long delta_formula = 0;
  bool riedtmann_verified = false;
  /// |X| + |Z| - |Y| from the Riedtmann witness.
  long long riedtmann_count = 0;
  /// For leq pairs: |M| <= |N|, the delta formula equals |N| - |M|, and the
  /// witness is verified with matching summand counts.
  bool ok = true;
};

struct DegenerationSurvey {
  std::vector<CatalogSum> modules;
  std::vector<std::size_t> counts;  // decompose(module).summand_count()
  std::vector<DegenerationPair> pairs;
  bool ok = true;
};

/// Every ordered pair of catalog sums with equal dimension vectors.
DegenerationSurvey survey_degenerations(const Catalog& cat, const ARTable& table,
                                        std::size_t max_dim,
                                        const DecomposeOptions& opts = {},
                                        std::size_t jobs = 1);

struct ExtensionPairCensus {
  std::size_t m = 0, n = 0;  // catalog indices; extensions 0 -> N -> E -> M -> 0
  Census census;
};

struct MainTheoremReport {
  std::vector<ExtensionPairCensus> pairs;
  std::size_t max_summands = 0;
  /// No middle term has more than two summands.
  bool holds = true;
};

/// Census of every ordered pair of catalog members with nonzero Ext^1.
MainTheoremReport verify_main_theorem(const Catalog& cat, const CensusOptions& opts = {});

}  // namespace sba
