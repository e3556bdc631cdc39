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

// Krull-Schmidt decomposition by Fitting splitting, and an exact oracle that
// reads multiplicities off hom dimensions against a complete catalog.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sba/poly.hpp"
#include "sba/representation.hpp"

namespace sba {

/// Decomposition of m into the generalized eigenspaces of f, one per
/// distinct irreducible factor of its characteristic polynomial, in factor
/// order. Throws PreconditionError unless f is an endomorphism.
std::vector<SubmoduleResult> primary_components(const Representation& m, const Morphism& f);

/// The first primary component and the sum of the others; empty if the
/// characteristic polynomial of f is a power of one irreducible.
std::optional<std::pair<SubmoduleResult, SubmoduleResult>> fitting_split(
    const Representation& m, const Morphism& f);

struct DecomposeOptions {
  /// Random endomorphisms tried after the basis before declaring a piece
  /// indecomposable.
  std::size_t trials = 50;
  std::uint64_t seed = 0x5b0a5eedULL;
};

struct SplitWitness {
  /// Which endomorphism split the piece: "basis[i]" or "random[i]".
  std::string source;
  std::vector<Polynomial> factors;
  std::vector<DimensionVector> pieces;
};

struct DecompositionReport {
  std::vector<Representation> summands;
  std::vector<SplitWitness> witnesses;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  std::size_t summand_count() const noexcept { return summands.size(); }
};

DecompositionReport decompose(const Representation& m, const DecomposeOptions& opts = {});

/// Multiplicity of each catalog module in m, from H x = h with
/// H[U][V] = hom_dim(U, V) and h[U] = hom_dim(U, m), solved over the
/// rationals. Throws PreconditionError if the system is singular or the
/// solution is not a vector of nonnegative integers.
std::vector<std::size_t> catalog_decompose(const Representation& m,
                                           std::span<const Representation> catalog);

/// Same with the hom matrix H precomputed.
std::vector<std::size_t> catalog_decompose(const std::vector<std::vector<std::size_t>>& hom_matrix,
                                           const std::vector<std::size_t>& profile);

}  // namespace sba
