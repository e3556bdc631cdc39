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

// Quivers with monomial relations.
//
// Paths are read left to right: in the path "a b" the arrow a ends where b
// starts. Relations are such paths of length at least two.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sba/field.hpp"

namespace sba {

struct Arrow {
  std::string id;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  /// Adds a vertex; throws PreconditionError on duplicates or bad ids.
  std::size_t add_vertex(std::string id);
  /// Adds an arrow between existing vertices.
  std::size_t add_arrow(std::string id, std::size_t source, std::size_t target);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_arrow(std::string_view id) const;

  std::vector<std::size_t> arrows_out(std::size_t v) const;
  std::vector<std::size_t> arrows_in(std::size_t v) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A sequence of composable arrows. Length-zero paths carry their vertex.
struct QuiverPath {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  friend bool operator==(const QuiverPath&, const QuiverPath&) = default;
};

/// The algebra kQ/I with I generated by finitely many paths.
class Presentation {
 public:
  Presentation(Quiver quiver, std::vector<std::vector<std::size_t>> relations,
               PrimeField field = PrimeField());

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<std::vector<std::size_t>>& relations() const noexcept {
    return relations_;
  }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t max_relation_length() const noexcept { return max_relation_; }

  /// Same quiver and relations over another prime field.
  Presentation with_field(PrimeField field) const;

  /// True if some relation occurs as a consecutive factor of the arrows.
  bool contains_relation(std::span<const std::size_t> arrows) const;
  /// True if some relation is a suffix of the arrows.
  bool ends_with_relation(std::span<const std::size_t> arrows) const;
  /// Path of positive length; all arrows composable.
  bool composable(std::span<const std::size_t> arrows) const;

  /// Paths from v avoiding the relations, in depth-first order with the
  /// trivial path first. Requires finite dimension.
  std::vector<QuiverPath> paths_from(std::size_t v) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Quiver quiver_;
  std::vector<std::vector<std::size_t>> relations_;
  PrimeField field_;
  std::size_t max_relation_ = 0;
};

using PresentationRef = std::shared_ptr<const Presentation>;

/// Parses the line-oriented presentation grammar; throws ParseError.
Presentation parse_presentation(std::string_view text);
/// Canonical text form; parse_presentation inverts it exactly.
std::string serialize(const Presentation& p);
Presentation load_presentation(const std::string& path);

struct FiniteDimensionReport {
  bool finite = false;
  /// Every path avoiding the relations (trivial paths included); empty when
  /// the algebra is infinite dimensional.
  std::vector<QuiverPath> surviving_paths;
  /// A closed path that can be repeated forever without meeting a relation.
  std::vector<std::size_t> cycle;
};

FiniteDimensionReport check_finite_dimensional(const Presentation& p);

struct AxiomReport {
  bool s1 = true;
  bool s2 = true;
  bool s3 = true;
  std::vector<std::string> violations;

  bool is_string() const noexcept { return s1 && s2 && s3; }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

AxiomReport validate_axioms(const Presentation& p);

}  // namespace sba
