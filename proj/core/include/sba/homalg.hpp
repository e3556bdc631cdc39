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

// Hom spaces, projective covers, Ext^1 and extensions by pushout.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sba/representation.hpp"

namespace sba {

/// Entries of all components, vertex by vertex, each row-major.
Vector flatten(const Morphism& f);

/// Basis of Hom(M, N), normalized so that basis element i is 1 at flattened
/// entry free_positions[i] and 0 at the other free positions.
struct HomSpace {
  std::vector<Morphism> basis;
  std::vector<std::size_t> free_positions;

  std::size_t dim() const noexcept { return basis.size(); }
  /// Coordinates of an element of the space.
  Vector coordinates(const Morphism& f) const;
};

/// Throws PreconditionError if the modules live over different algebras.
HomSpace hom_space(const Representation& m, const Representation& n);
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// hom_dim(u, m) for each probe u.
std::vector<std::size_t> hom_profile(std::span<const Representation> probes,
                                     const Representation& m);

struct ProjectiveCover {
  Representation p0;
  Morphism epi;
  /// Summand k of p0 is e_v A for v = generator_vertex[k]; its generator is
  /// row generator_row[k] of p0 at v and maps to generator_image[k].
  std::vector<std::size_t> generator_vertex;
  std::vector<std::size_t> generator_row;
  std::vector<Vector> generator_image;
  /// For each vertex and row of p0 there: owning summand and path.
  std::vector<std::vector<std::pair<std::size_t, std::vector<std::size_t>>>> row_paths;
};

/// Throws PreconditionError on the zero module.
ProjectiveCover projective_cover(const Representation& m);

/// The morphism p0 -> n sending generator k to images[k].
Morphism map_from_cover(const ProjectiveCover& c, const Representation& n,
                        const std::vector<Vector>& images);

/// A lift p0 -> p0 of f: m -> m along the cover.
Morphism lift_endomorphism(const ProjectiveCover& c, const Representation& m,
                           const Morphism& f);

bool is_projective(const Representation& m);

struct Syzygy {
  ProjectiveCover cover;
  Representation omega;
  Morphism inclusion;  // omega -> p0
};

Syzygy syzygy(const Representation& m);

/// 0 -> left -> middle -> right -> 0.
struct ShortExactSequence {
  Representation left;
  Representation middle;
  Representation right;
  Morphism inclusion;
  Morphism projection;
};

/// Intertwiners, injective, surjective, composite zero and additive
/// dimensions (which together force image = kernel).
bool is_exact(const ShortExactSequence& s);

/// Ext^1(M, N) as Hom(Omega M, N) modulo restrictions of Hom(P0, N).
class ExtSpace {
 public:
  ExtSpace(const Representation& m, const Representation& n);

  const Representation& left() const noexcept { return n_; }
  const Representation& right() const noexcept { return m_; }
  const Syzygy& syzygy() const noexcept { return syz_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  /// Cocycles Omega M -> N representing a basis of Ext^1.
  const std::vector<Morphism>& basis() const noexcept { return basis_; }

  Morphism cocycle(std::span<const Residue> coords) const;
  /// Class of a cocycle in the basis above.
  Vector coordinates(const Morphism& c) const;
  /// Pullback of the class along an endomorphism f of M.
  Vector pullback(std::span<const Residue> coords, const Morphism& f) const;

  ShortExactSequence extension(std::span<const Residue> coords) const;

 private:
  Representation m_, n_;
  Syzygy syz_;
  HomSpace cocycles_;
  Matrix boundary_;  // echelon rows, in cocycle coordinates
  std::vector<std::size_t> boundary_pivots_;
  std::vector<std::size_t> ext_slots_;  // non-pivot cocycle coordinates
  std::vector<Morphism> basis_;
};

std::vector<Morphism> ext1_basis(const Representation& m, const Representation& n);
std::size_t ext1_dim(const Representation& m, const Representation& n);

/// Pushout of the syzygy along c: 0 -> N -> E -> M -> 0. Throws
/// PreconditionError unless c is an intertwiner Omega M -> N.
ShortExactSequence extension_from_cocycle(const Syzygy& s, const Representation& m,
                                          const Representation& n, const Morphism& c);

/// Lines of F_q^k: vectors whose first nonzero entry is 1, in lexicographic
/// order of coordinates.
std::vector<Vector> projective_lines(const PrimeField& f, std::size_t k);

/// Whether a census over k-dimensional Ext in characteristic q is within the
/// desk-scale cap (k <= 1, or k <= 3 with q <= 7).
bool census_within_cap(std::size_t k, std::uint32_t q);

struct CensusOptions {
  std::size_t jobs = 1;
  std::size_t trials = 50;
  std::uint64_t seed = 0x5b0a5eedULL;
  bool enforce_cap = true;
};

struct CensusLine {
  Vector line;
  std::size_t summands = 0;
  DimensionVector middle_dims;
};

struct Census {
  std::size_t ext_dim = 0;
  std::vector<CensusLine> lines;
  std::map<std::size_t, std::size_t> histogram;
};

/// One middle term per line of P(Ext^1(M, N)), decomposed and counted.
Census middle_census(const Representation& m, const Representation& n,
                     const CensusOptions& opts = {});

}  // namespace sba
