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

// Finite-dimensional right modules over kQ/I, stored as representations.
//
// Vertex v carries F_q^{d_v}; arrow a: s -> t carries a d_s x d_t matrix
// acting on row vectors, so that m.(ab) = (m.a).b.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sba/linalg.hpp"
#include "sba/presentation.hpp"
#include "sba/words.hpp"

namespace sba {

using DimensionVector = std::vector<std::size_t>;

/// "(1,1,0)"
std::string format_dimvec(const DimensionVector& d);

class Representation {
 public:
  Representation() = default;
  /// Throws DimensionError on shape mismatches and PreconditionError if a
  /// relation does not act as zero.
  Representation(PresentationRef p, DimensionVector dims, std::vector<Matrix> maps);

  const PresentationRef& presentation_ref() const noexcept { return p_; }
  const Presentation& presentation() const noexcept { return *p_; }
  const Quiver& quiver() const noexcept { return p_->quiver(); }
  const PrimeField& field() const noexcept { return p_->field(); }

  const DimensionVector& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const noexcept { return total_; }
  bool is_zero() const noexcept { return total_ == 0; }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  /// Action of a nonempty composable path.
  Matrix path_action(std::span<const std::size_t> arrows) const;

 private:
  PresentationRef p_;
  DimensionVector dims_;
  std::vector<Matrix> maps_;
  std::size_t total_ = 0;
};

inline DimensionVector dimension_vector(const Representation& m) { return m.dims(); }

/// A family of matrices f_v : M_v -> N_v (d_M(v) x d_N(v)).
struct Morphism {
  std::vector<Matrix> components;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

bool is_intertwiner(const Representation& m, const Representation& n,
                    const Morphism& f);
Morphism zero_morphism(const Representation& m, const Representation& n);
Morphism identity_morphism(const Representation& m);
/// f followed by g.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, Residue s);
/// sum_i c_i f_i over a nonempty family.
Morphism combine(std::span<const Morphism> family, std::span<const Residue> coeffs);
bool is_zero(const Morphism& f);

/// Basis positions of a walk: position i sits at vertex `vertex` with index
/// `index` among that vertex's basis vectors (block index for bands).
struct WalkPosition {
  std::size_t vertex;
  std::size_t index;
};

/// Positions 0..length of a string module, or 0..length-1 of a band.
std::vector<WalkPosition> walk_positions(const Quiver& q, const Walk& w, bool closed);

/// M(w). Throws PreconditionError unless w is a word.
Representation string_module(PresentationRef p, const Walk& w);

/// B(w, lambda, n): n-dimensional blocks per position; the last letter of w
/// carries the Jordan block J_n(lambda) (lambda on the diagonal, ones just
/// above it). Refuses imprimitive or non-cyclic w and lambda = 0.
Representation band_module(PresentationRef p, const Walk& w, Residue lambda,
                           std::size_t n);

/// The band recipe without the primitivity gate.
Representation module_from_cyclic_word_unrestricted(PresentationRef p,
                                                    const Walk& w,
                                                    Residue lambda,
                                                    std::size_t n);

/// e_v A: one basis vector per path from v avoiding the relations, in the
/// order of Presentation::paths_from; e_v itself is vector 0 at v.
Representation projective(PresentationRef p, std::size_t v);
Representation simple(PresentationRef p, std::size_t v);
Representation zero_module(PresentationRef p);

Representation direct_sum(std::span<const Representation> parts);
Representation direct_sum(const Representation& a, const Representation& b);

struct SubmoduleResult {
  Representation module;
  Morphism inclusion;
};

/// The submodule spanned by the given rows at each vertex (any spanning set).
/// Throws PreconditionError if the span is not closed under the arrows.
SubmoduleResult submodule(const Representation& m, const std::vector<Matrix>& spans);

struct QuotientResult {
  Representation module;
  Morphism projection;
  /// Per vertex, rows lifting the quotient basis back into m.
  std::vector<Matrix> section;
};

/// m / U for a submodule U given by spanning rows at each vertex.
QuotientResult quotient(const Representation& m, const std::vector<Matrix>& spans);

/// Image of a morphism as a submodule of its target.
SubmoduleResult image(const Representation& n, const Morphism& f);
/// Kernel of a morphism as a submodule of its source.
SubmoduleResult kernel(const Representation& m, const Morphism& f);

/// Literal format: "module", "dim: v=n ...", "map: a r1;r2;...", '#' comments.
Representation parse_representation(PresentationRef p, std::string_view text);
Representation load_representation(PresentationRef p, const std::string& path);
std::string serialize(const Representation& m);

}  // namespace sba
