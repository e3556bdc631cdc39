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

#include "sba/homalg.hpp"

#include <string>

#include "sba/decomp.hpp"
#include "sba/error.hpp"
#include "sba/parallel.hpp"

namespace sba {

namespace {

void require_same_algebra(const Representation& m, const Representation& n) {
  if (m.presentation_ref() != n.presentation_ref() &&
      !(m.presentation() == n.presentation()))
    throw PreconditionError("modules over different presentations");
}

std::vector<std::size_t> block_offsets(const Representation& m, const Representation& n) {
  std::vector<std::size_t> off(m.dims().size() + 1, 0);
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    off[v + 1] = off[v] + m.dim(v) * n.dim(v);
  return off;
}

Morphism unflatten(const Representation& m, const Representation& n,
                   const std::vector<std::size_t>& off, const Vector& x) {
  Morphism f;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Matrix c(m.field(), m.dim(v), n.dim(v));
    std::copy(x.begin() + static_cast<long>(off[v]),
              x.begin() + static_cast<long>(off[v + 1]), c.row(0).data());
    f.components.push_back(std::move(c));
  }
  return f;
}

/// Intertwiner equations M_a f_t - f_s N_a = 0, one per entry.
SparseSystem intertwiner_system(const Representation& m, const Representation& n,
                                const std::vector<std::size_t>& off) {
  const Quiver& q = m.quiver();
  const PrimeField& f = m.field();
  SparseSystem sys(f, off.back());
  std::vector<SparseSystem::Term> terms;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    std::vector<std::vector<std::pair<std::size_t, Residue>>> mrow(ma.rows()), ncol(na.cols());
    for (std::size_t i = 0; i < ma.rows(); ++i)
      for (std::size_t k = 0; k < ma.cols(); ++k)
        if (ma(i, k)) mrow[i].emplace_back(k, ma(i, k));
    for (std::size_t k = 0; k < na.rows(); ++k)
      for (std::size_t j = 0; j < na.cols(); ++j)
        if (na(k, j)) ncol[j].emplace_back(k, na(k, j));
    const std::size_t dnt = n.dim(t), dns = n.dim(s);
    for (std::size_t i = 0; i < m.dim(s); ++i) {
      for (std::size_t j = 0; j < dnt; ++j) {
        terms.clear();
        for (auto [k, val] : mrow[i]) terms.emplace_back(off[t] + k * dnt + j, val);
        for (auto [k, val] : ncol[j]) terms.emplace_back(off[s] + i * dns + k, f.neg(val));
        if (!terms.empty()) sys.add_equation(terms);
      }
    }
  }
  return sys;
}

/// Coordinates of the rows of y in the echelon basis of a submodule.
Matrix submodule_coordinates(const Matrix& basis, const Matrix& y) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t c = 0;
    while (basis(r, c) == 0) ++c;
    piv.push_back(c);
  }
  Matrix x(y.field(), y.rows(), piv.size());
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t i = 0; i < piv.size(); ++i) x(r, i) = y(r, piv[i]);
  if (!(x * basis == y)) throw VerificationError("vector outside the submodule");
  return x;
}

}  // namespace

Vector flatten(const Morphism& f) {
  Vector out;
  for (const auto& c : f.components) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

Vector HomSpace::coordinates(const Morphism& f) const {
  const Vector flat = flatten(f);
  Vector x(free_positions.size());
  for (std::size_t i = 0; i < free_positions.size(); ++i) x[i] = flat.at(free_positions[i]);
  return x;
}

HomSpace hom_space(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const auto off = block_offsets(m, n);
  SparseSystem sys = intertwiner_system(m, n, off);
  HomSpace h;
  h.free_positions = sys.free_columns();
  for (const auto& x : sys.kernel_basis()) h.basis.push_back(unflatten(m, n, off, x));
  return h;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  return hom_space(m, n).basis;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const auto off = block_offsets(m, n);
  return off.back() - intertwiner_system(m, n, off).rank();
}

std::vector<std::size_t> hom_profile(std::span<const Representation> probes,
                                     const Representation& m) {
  std::vector<std::size_t> out;
  for (const auto& u : probes) out.push_back(hom_dim(u, m));
  return out;
}

// --- projective covers ---------------------------------------------------------

ProjectiveCover projective_cover(const Representation& m) {
  if (m.is_zero()) throw PreconditionError("projective cover of the zero module");
  const Quiver& q = m.quiver();
  const PrimeField& f = m.field();
  ProjectiveCover c;
  std::vector<Representation> parts;
  std::vector<std::vector<QuiverPath>> paths(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    Matrix rad(f, 0, m.dim(v));
    for (std::size_t a : q.arrows_in(v)) rad = vstack(rad, m.map(a));
    const auto piv = row_reduce(rad);
    std::vector<bool> is_pivot(m.dim(v), false);
    for (auto p : piv) is_pivot[p] = true;
    for (std::size_t col = 0; col < m.dim(v); ++col) {
      if (is_pivot[col]) continue;
      Vector g(m.dim(v), 0);
      g[col] = 1;
      c.generator_vertex.push_back(v);
      c.generator_image.push_back(std::move(g));
      parts.push_back(projective(m.presentation_ref(), v));
      if (paths[v].empty()) paths[v] = m.presentation().paths_from(v);
    }
  }
  c.p0 = direct_sum(parts);
  c.row_paths.assign(q.vertex_count(), {});
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::size_t v = c.generator_vertex[k];
    c.generator_row.push_back(c.row_paths[v].size());
    for (const auto& path : paths[v]) {
      const std::size_t end = path.arrows.empty() ? v : q.arrow(path.arrows.back()).target;
      c.row_paths[end].emplace_back(k, path.arrows);
    }
  }
  c.epi = map_from_cover(c, m, c.generator_image);
  if (!is_intertwiner(c.p0, m, c.epi)) throw VerificationError("cover map is not a morphism");
  return c;
}

Morphism map_from_cover(const ProjectiveCover& c, const Representation& n,
                        const std::vector<Vector>& images) {
  if (images.size() != c.generator_vertex.size())
    throw DimensionError("one image per generator expected");
  Morphism f;
  for (std::size_t u = 0; u < c.row_paths.size(); ++u) {
    Matrix comp(n.field(), c.row_paths[u].size(), n.dim(u));
    for (std::size_t r = 0; r < c.row_paths[u].size(); ++r) {
      const auto& [k, arrows] = c.row_paths[u][r];
      Vector x = images[k];
      if (x.size() != n.dim(c.generator_vertex[k])) throw DimensionError("image has wrong length");
      for (std::size_t a : arrows) x = x * n.map(a);
      std::copy(x.begin(), x.end(), comp.row(r).begin());
    }
    f.components.push_back(std::move(comp));
  }
  return f;
}

Morphism lift_endomorphism(const ProjectiveCover& c, const Representation& m,
                           const Morphism& f) {
  std::vector<Vector> images;
  for (std::size_t k = 0; k < c.generator_vertex.size(); ++k) {
    const std::size_t v = c.generator_vertex[k];
    const Vector target = c.generator_image[k] * f.components[v];
    auto x = solve_left(c.epi.components[v], target);
    if (!x) throw VerificationError("cover map is not surjective");
    images.push_back(std::move(*x));
  }
  (void)m;
  return map_from_cover(c, c.p0, images);
}

bool is_projective(const Representation& m) {
  if (m.is_zero()) return true;
  return projective_cover(m).p0.total_dim() == m.total_dim();
}

Syzygy syzygy(const Representation& m) {
  ProjectiveCover c = projective_cover(m);
  SubmoduleResult k = kernel(c.p0, c.epi);
  return {std::move(c), std::move(k.module), std::move(k.inclusion)};
}

// --- exact sequences -------------------------------------------------------------

bool is_exact(const ShortExactSequence& s) {
  if (!is_intertwiner(s.left, s.middle, s.inclusion) ||
      !is_intertwiner(s.middle, s.right, s.projection))
    return false;
  for (std::size_t v = 0; v < s.middle.dims().size(); ++v) {
    if (s.middle.dim(v) != s.left.dim(v) + s.right.dim(v)) return false;
    if (rank(s.inclusion.components[v]) != s.left.dim(v)) return false;
    if (rank(s.projection.components[v]) != s.right.dim(v)) return false;
    if (!(s.inclusion.components[v] * s.projection.components[v]).is_zero()) return false;
  }
  return true;
}

ShortExactSequence extension_from_cocycle(const Syzygy& s, const Representation& m,
                                          const Representation& n, const Morphism& c) {
  if (!is_intertwiner(s.omega, n, c))
    throw PreconditionError("cocycle is not a morphism from the syzygy");
  const PrimeField& f = m.field();
  const Representation w = direct_sum(s.cover.p0, n);
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    spans.push_back(hstack(s.inclusion.components[v], c.components[v].scaled(f.neg(1))));
  }
  QuotientResult e = quotient(w, spans);
  ShortExactSequence out{n, e.module, m, {}, {}};
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    const std::size_t dp = s.cover.p0.dim(v);
    Matrix into(f, n.dim(v), dp + n.dim(v));
    into.set_block(0, dp, Matrix::identity(f, n.dim(v)));
    out.inclusion.components.push_back(into * e.projection.components[v]);
    Matrix onto(f, dp + n.dim(v), m.dim(v));
    onto.set_block(0, 0, s.cover.epi.components[v]);
    out.projection.components.push_back(e.section[v] * onto);
  }
  if (!is_exact(out)) throw VerificationError("pushout sequence is not exact");
  return out;
}

// --- Ext ---------------------------------------------------------------------------

ExtSpace::ExtSpace(const Representation& m, const Representation& n) : m_(m), n_(n) {
  require_same_algebra(m, n);
  const PrimeField& f = m.field();
  if (m.is_zero()) return;
  syz_ = sba::syzygy(m);
  cocycles_ = hom_space(syz_.omega, n);
  const std::size_t h = cocycles_.dim();
  std::vector<Vector> rows;
  if (h > 0) {
    const auto& gens = syz_.cover.generator_vertex;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (std::size_t j = 0; j < n.dim(gens[k]); ++j) {
        std::vector<Vector> images;
        for (std::size_t l = 0; l < gens.size(); ++l) images.emplace_back(n.dim(gens[l]), 0);
        images[k][j] = 1;
        const Morphism phi = map_from_cover(syz_.cover, n, images);
        rows.push_back(cocycles_.coordinates(compose(syz_.inclusion, phi)));
      }
    }
  }
  boundary_ = Matrix::from_rows(f, h, rows);
  boundary_pivots_ = row_reduce(boundary_);
  boundary_ = boundary_.block(0, 0, boundary_pivots_.size(), h);
  std::vector<bool> is_pivot(h, false);
  for (auto p : boundary_pivots_) is_pivot[p] = true;
  for (std::size_t i = 0; i < h; ++i) {
    if (is_pivot[i]) continue;
    ext_slots_.push_back(i);
    basis_.push_back(cocycles_.basis[i]);
  }
}

Morphism ExtSpace::cocycle(std::span<const Residue> coords) const {
  if (coords.size() != basis_.size()) throw DimensionError("wrong number of Ext coordinates");
  if (basis_.empty()) return zero_morphism(syz_.omega, n_);
  return combine(basis_, coords);
}

Vector ExtSpace::coordinates(const Morphism& c) const {
  if (basis_.empty()) return {};
  Vector y = cocycles_.coordinates(c);
  const PrimeField& f = n_.field();
  for (std::size_t i = 0; i < boundary_pivots_.size(); ++i) {
    const Residue a = y[boundary_pivots_[i]];
    if (a == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = f.sub(y[j], f.mul(a, boundary_(i, j)));
  }
  Vector out;
  for (auto s : ext_slots_) out.push_back(y[s]);
  return out;
}

Vector ExtSpace::pullback(std::span<const Residue> coords, const Morphism& f) const {
  if (basis_.empty()) return {};
  const Morphism lift = lift_endomorphism(syz_.cover, m_, f);
  Morphism restricted;
  for (std::size_t v = 0; v < m_.dims().size(); ++v) {
    const Matrix& inc = syz_.inclusion.components[v];
    restricted.components.push_back(
        inc.rows() == 0 ? Matrix(m_.field(), 0, 0)
                        : submodule_coordinates(inc, inc * lift.components[v]));
  }
  return coordinates(compose(restricted, cocycle(coords)));
}

ShortExactSequence ExtSpace::extension(std::span<const Residue> coords) const {
  if (m_.is_zero()) return {n_, n_, m_, identity_morphism(n_), zero_morphism(n_, m_)};
  return extension_from_cocycle(syz_, m_, n_, cocycle(coords));
}

std::vector<Morphism> ext1_basis(const Representation& m, const Representation& n) {
  return ExtSpace(m, n).basis();
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  return ExtSpace(m, n).dim();
}

// --- census ------------------------------------------------------------------------

std::vector<Vector> projective_lines(const PrimeField& f, std::size_t k) {
  std::vector<Vector> out;
  const std::uint64_t q = f.order();
  for (std::size_t lead = k; lead-- > 0;) {
    const std::size_t free = k - 1 - lead;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vector x(k, 0);
      x[lead] = 1;
      std::uint64_t c = code;
      for (std::size_t i = k; i-- > lead + 1;) {
        x[i] = static_cast<Residue>(c % q);
        c /= q;
      }
      out.push_back(std::move(x));
    }
  }
  return out;
}

bool census_within_cap(std::size_t k, std::uint32_t q) {
  return k <= 1 || (k <= 3 && q <= 7);
}

Census middle_census(const Representation& m, const Representation& n,
                     const CensusOptions& opts) {
  const ExtSpace ext(m, n);
  Census census;
  census.ext_dim = ext.dim();
  if (ext.dim() == 0) return census;
  if (opts.enforce_cap && !census_within_cap(ext.dim(), m.field().order())) {
    throw PreconditionError("census over Ext of dimension " + std::to_string(ext.dim()) +
                            " with q=" + std::to_string(m.field().order()) +
                            " exceeds the cap (k<=1, or k<=3 and q<=7)");
  }
  const auto lines = projective_lines(m.field(), ext.dim());
  census.lines.resize(lines.size());
  parallel_for(lines.size(), opts.jobs, [&](std::size_t i) {
    const ShortExactSequence s = ext.extension(lines[i]);
    DecomposeOptions d;
    d.trials = opts.trials;
    d.seed = opts.seed;
    census.lines[i] = {lines[i], decompose(s.middle, d).summand_count(), s.middle.dims()};
  });
  for (const auto& l : census.lines) ++census.histogram[l.summands];
  return census;
}

}  // namespace sba
