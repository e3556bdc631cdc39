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

#include "sba/representation.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "sba/error.hpp"

namespace sba {

std::string format_dimvec(const DimensionVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + ")";
}

Representation::Representation(PresentationRef p, DimensionVector dims,
                               std::vector<Matrix> maps)
    : p_(std::move(p)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = p_->quiver();
  if (dims_.size() != q.vertex_count())
    throw DimensionError("dimension vector has wrong length");
  if (maps_.size() != q.arrow_count())
    throw DimensionError("one matrix per arrow expected");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.source] || maps_[a].cols() != dims_[ar.target]) {
      throw DimensionError("matrix for arrow " + ar.id + " must be " +
                           std::to_string(dims_[ar.source]) + "x" +
                           std::to_string(dims_[ar.target]));
    }
    if (!(maps_[a].field() == p_->field()))
      throw DimensionError("matrix for arrow " + ar.id + " over the wrong field");
  }
  for (auto d : dims_) total_ += d;
  for (const auto& r : p_->relations()) {
    if (!path_action(r).is_zero()) {
      std::string path;
      for (auto a : r) path += (path.empty() ? "" : " ") + q.arrow(a).id;
      throw PreconditionError("relation " + path + " does not act as zero");
    }
  }
}

Matrix Representation::path_action(std::span<const std::size_t> arrows) const {
  if (arrows.empty()) throw PreconditionError("empty path");
  Matrix m = maps_.at(arrows[0]);
  for (std::size_t i = 1; i < arrows.size(); ++i) m = m * maps_.at(arrows[i]);
  return m;
}

// --- morphisms ---------------------------------------------------------------

bool is_intertwiner(const Representation& m, const Representation& n,
                    const Morphism& f) {
  const Quiver& q = m.quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (f.components[v].rows() != m.dim(v) || f.components[v].cols() != n.dim(v))
      return false;
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(m.map(a) * f.components[ar.target] == f.components[ar.source] * n.map(a)))
      return false;
  }
  return true;
}

Morphism zero_morphism(const Representation& m, const Representation& n) {
  Morphism f;
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    f.components.emplace_back(m.field(), m.dim(v), n.dim(v));
  return f;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    f.components.push_back(Matrix::identity(m.field(), m.dim(v)));
  return f;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.components.size() != g.components.size())
    throw DimensionError("composing morphisms of different quivers");
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v)
    h.components.push_back(f.components[v] * g.components[v]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (f.components.size() != g.components.size())
    throw DimensionError("adding morphisms of different quivers");
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v)
    h.components.push_back(f.components[v] + g.components[v]);
  return h;
}

Morphism scale(const Morphism& f, Residue s) {
  Morphism h;
  for (const auto& c : f.components) h.components.push_back(c.scaled(s));
  return h;
}

Morphism combine(std::span<const Morphism> family, std::span<const Residue> coeffs) {
  if (family.empty() || family.size() != coeffs.size())
    throw DimensionError("combination needs one coefficient per morphism");
  Morphism h = scale(family[0], coeffs[0]);
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t v = 0; v < h.components.size(); ++v) {
      Matrix& c = h.components[v];
      const Matrix& d = family[i].components[v];
      const PrimeField& fld = c.field();
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t k = 0; k < c.cols(); ++k)
          c(r, k) = fld.add(c(r, k), fld.mul(coeffs[i], d(r, k)));
    }
  }
  return h;
}

bool is_zero(const Morphism& f) {
  for (const auto& c : f.components)
    if (!c.is_zero()) return false;
  return true;
}

// --- string and band modules -------------------------------------------------

std::vector<WalkPosition> walk_positions(const Quiver& q, const Walk& w, bool closed) {
  std::vector<std::size_t> count(q.vertex_count(), 0);
  std::vector<WalkPosition> pos;
  const std::size_t n = closed ? w.length() : w.length() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = i < w.length() ? letter_source(q, w[i]) : w.end();
    pos.push_back({v, count[v]++});
  }
  return pos;
}

namespace {

Matrix jordan_block(const PrimeField& f, Residue lambda, std::size_t n) {
  Matrix j(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i, i + 1) = 1;
  }
  return j;
}

/// Shared recipe: blocks of size n at each position, letter i joining
/// positions i and i+1 (mod the position count when closed).
Representation walk_recipe(PresentationRef p, const Walk& w, bool closed,
                           Residue lambda, std::size_t n) {
  const Quiver& q = p->quiver();
  const PrimeField& f = p->field();
  const auto pos = walk_positions(q, w, closed);
  DimensionVector dims(q.vertex_count(), 0);
  for (const auto& wp : pos) dims[wp.vertex] += n;
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.emplace_back(f, dims[q.arrow(a).source], dims[q.arrow(a).target]);
  const Matrix one = Matrix::identity(f, n);
  const Matrix twist = jordan_block(f, lambda, n);
  for (std::size_t i = 0; i < w.length(); ++i) {
    const WalkPosition& from = pos[i];
    const WalkPosition& to = pos[(i + 1) % pos.size()];
    const Matrix& block = closed && i + 1 == w.length() ? twist : one;
    const Letter l = w[i];
    Matrix& m = maps[l.arrow];
    if (l.direct()) {
      m.set_block(from.index * n, to.index * n, m.block(from.index * n, to.index * n, n, n) + block);
    } else {
      m.set_block(to.index * n, from.index * n, m.block(to.index * n, from.index * n, n, n) + block);
    }
  }
  return Representation(std::move(p), std::move(dims), std::move(maps));
}

}  // namespace

Representation string_module(PresentationRef p, const Walk& w) {
  if (WordCheck c = is_word(*p, w); !c)
    throw PreconditionError("not a word: " + c.reason);
  return walk_recipe(std::move(p), w, false, 1, 1);
}

Representation module_from_cyclic_word_unrestricted(PresentationRef p,
                                                    const Walk& w,
                                                    Residue lambda,
                                                    std::size_t n) {
  if (!is_cyclic(*p, w))
    throw PreconditionError("not a cyclic word: " + format_walk(p->quiver(), w));
  if (lambda % p->field().order() == 0) throw PreconditionError("lambda must be nonzero");
  if (n == 0) throw PreconditionError("block size must be positive");
  return walk_recipe(std::move(p), w, true, lambda % p->field().order(), n);
}

Representation band_module(PresentationRef p, const Walk& w, Residue lambda,
                           std::size_t n) {
  if (PrimitiveCheck c = is_primitive(p->quiver(), w); !c.primitive) {
    throw PreconditionError("band word must be primitive; " +
                            format_walk(p->quiver(), w) + " is a power of " +
                            format_walk(p->quiver(), c.root));
  }
  return module_from_cyclic_word_unrestricted(std::move(p), w, lambda, n);
}

// --- projectives, simples, sums ----------------------------------------------

Representation projective(PresentationRef p, std::size_t v) {
  const Quiver& q = p->quiver();
  if (v >= q.vertex_count()) throw PreconditionError("unknown vertex");
  const auto paths = p->paths_from(v);
  const PrimeField& f = p->field();
  auto end_of = [&](const QuiverPath& path) {
    return path.arrows.empty() ? path.start : q.arrow(path.arrows.back()).target;
  };
  DimensionVector dims(q.vertex_count(), 0);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (const auto& path : paths) index[path.arrows] = dims[end_of(path)]++;
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.emplace_back(f, dims[q.arrow(a).source], dims[q.arrow(a).target]);
  for (const auto& path : paths) {
    const std::size_t u = end_of(path);
    for (std::size_t a : q.arrows_out(u)) {
      auto longer = path.arrows;
      longer.push_back(a);
      if (auto it = index.find(longer); it != index.end())
        maps[a](index.at(path.arrows), it->second) = 1;
    }
  }
  return Representation(std::move(p), std::move(dims), std::move(maps));
}

Representation simple(PresentationRef p, std::size_t v) {
  if (v >= p->quiver().vertex_count()) throw PreconditionError("unknown vertex");
  return string_module(std::move(p), Walk::trivial(v));
}

Representation zero_module(PresentationRef p) {
  const Quiver& q = p->quiver();
  std::vector<Matrix> maps(q.arrow_count(), Matrix(p->field(), 0, 0));
  return Representation(p, DimensionVector(q.vertex_count(), 0), std::move(maps));
}

Representation direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw PreconditionError("direct sum of nothing");
  const PresentationRef& p = parts[0].presentation_ref();
  const Quiver& q = p->quiver();
  DimensionVector dims(q.vertex_count(), 0);
  for (const auto& m : parts) {
    if (!(m.presentation() == *p)) throw PreconditionError("presentation mismatch");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += m.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix big(p->field(), dims[ar.source], dims[ar.target]);
    std::size_t r = 0, c = 0;
    for (const auto& m : parts) {
      big.set_block(r, c, m.map(a));
      r += m.dim(ar.source);
      c += m.dim(ar.target);
    }
    maps.push_back(std::move(big));
  }
  return Representation(p, std::move(dims), std::move(maps));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  const Representation parts[] = {a, b};
  return direct_sum(parts);
}

// --- submodules and quotients --------------------------------------------------

namespace {

/// Coordinates of the rows of y in an echelon basis e with pivots piv.
/// Throws if some row is outside the span.
Matrix echelon_coordinates(const Matrix& e, const std::vector<std::size_t>& piv,
                           const Matrix& y) {
  Matrix x(y.field(), y.rows(), piv.size());
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t i = 0; i < piv.size(); ++i) x(r, i) = y(r, piv[i]);
  if (!(x * e == y)) throw PreconditionError("span is not closed under the arrows");
  return x;
}

}  // namespace

SubmoduleResult submodule(const Representation& m, const std::vector<Matrix>& spans) {
  const Quiver& q = m.quiver();
  if (spans.size() != q.vertex_count()) throw DimensionError("one span per vertex expected");
  std::vector<Matrix> bases;
  std::vector<std::vector<std::size_t>> pivots;
  DimensionVector dims(q.vertex_count(), 0);
  for (std::size_t v = 0; v < spans.size(); ++v) {
    if (spans[v].cols() != m.dim(v)) throw DimensionError("span width mismatch");
    Matrix r = spans[v];
    auto piv = row_reduce(r);
    dims[v] = piv.size();
    bases.push_back(r.block(0, 0, piv.size(), m.dim(v)));
    pivots.push_back(std::move(piv));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(echelon_coordinates(bases[ar.target], pivots[ar.target],
                                       bases[ar.source] * m.map(a)));
  }
  return {Representation(m.presentation_ref(), std::move(dims), std::move(maps)),
          Morphism{std::move(bases)}};
}

QuotientResult quotient(const Representation& m, const std::vector<Matrix>& spans) {
  const Quiver& q = m.quiver();
  const PrimeField& f = m.field();
  if (spans.size() != q.vertex_count()) throw DimensionError("one span per vertex expected");
  std::vector<Matrix> proj, section;
  DimensionVector dims(q.vertex_count(), 0);
  for (std::size_t v = 0; v < spans.size(); ++v) {
    const std::size_t d = m.dim(v);
    if (spans[v].cols() != d) throw DimensionError("span width mismatch");
    Matrix r = spans[v];
    const auto piv = row_reduce(r);
    std::vector<std::ptrdiff_t> slot(d, -1);
    std::vector<bool> is_pivot(d, false);
    for (auto c : piv) is_pivot[c] = true;
    std::size_t k = 0;
    for (std::size_t c = 0; c < d; ++c)
      if (!is_pivot[c]) slot[c] = static_cast<std::ptrdiff_t>(k++);
    dims[v] = k;
    Matrix pi(f, d, k), sec(f, k, d);
    for (std::size_t c = 0; c < d; ++c) {
      if (slot[c] >= 0) {
        pi(c, static_cast<std::size_t>(slot[c])) = 1;
        sec(static_cast<std::size_t>(slot[c]), c) = 1;
      }
    }
    for (std::size_t i = 0; i < piv.size(); ++i) {
      // e_pivot is congruent to e_pivot - row_i, supported on non-pivots
      for (std::size_t c = 0; c < d; ++c)
        if (slot[c] >= 0 && r(i, c) != 0)
          pi(piv[i], static_cast<std::size_t>(slot[c])) = f.neg(r(i, c));
    }
    proj.push_back(std::move(pi));
    section.push_back(std::move(sec));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(section[ar.source] * m.map(a) * proj[ar.target]);
  }
  Representation quo(m.presentation_ref(), std::move(dims), std::move(maps));
  Morphism projection{std::move(proj)};
  // a span that is not a submodule makes the projection fail to intertwine
  if (!is_intertwiner(m, quo, projection))
    throw PreconditionError("span is not closed under the arrows");
  return {std::move(quo), std::move(projection), std::move(section)};
}

SubmoduleResult image(const Representation& n, const Morphism& f) {
  return submodule(n, f.components);
}

SubmoduleResult kernel(const Representation& m, const Morphism& f) {
  std::vector<Matrix> spans;
  for (const auto& c : f.components) spans.push_back(left_kernel(c));
  return submodule(m, spans);
}

// --- literal files -------------------------------------------------------------

namespace {

std::string strip_comment(std::string line) {
  if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
  return line;
}

}  // namespace

Representation parse_representation(PresentationRef p, std::string_view text) {
  const Quiver& q = p->quiver();
  const PrimeField& f = p->field();
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool header = false, have_dims = false;
  DimensionVector dims(q.vertex_count(), 0);
  std::vector<std::optional<Matrix>> maps(q.arrow_count());
  std::vector<std::pair<std::size_t, std::string>> pending;  // arrow, body
  std::vector<std::size_t> pending_line;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    const std::size_t col = line.find(key) + 1;
    if (!header) {
      if (key != "module") throw ParseError(lineno, col, "expected 'module'");
      header = true;
      continue;
    }
    if (key == "dim:") {
      std::string item;
      while (ls >> item) {
        const auto eq = item.find('=');
        const std::size_t icol = line.find(item) + 1;
        if (eq == std::string::npos) throw ParseError(lineno, icol, "expected <vertex>=<count>");
        auto v = q.find_vertex(item.substr(0, eq));
        if (!v) throw ParseError(lineno, icol, "unknown vertex '" + item.substr(0, eq) + "'");
        try {
          dims[*v] = std::stoul(item.substr(eq + 1));
        } catch (const std::exception&) {
          throw ParseError(lineno, icol + eq + 1, "bad dimension");
        }
      }
      have_dims = true;
    } else if (key == "map:") {
      std::string id;
      if (!(ls >> id)) throw ParseError(lineno, col, "map needs an arrow id");
      auto a = q.find_arrow(id);
      if (!a) throw ParseError(lineno, line.find(id, col) + 1, "unknown arrow '" + id + "'");
      std::string body;
      std::getline(ls, body);
      pending.emplace_back(*a, body);
      pending_line.push_back(lineno);
    } else {
      throw ParseError(lineno, col, "unknown directive '" + key + "'");
    }
  }
  if (!header) throw ParseError(lineno + 1, 1, "missing 'module' header");
  if (!have_dims) throw ParseError(lineno + 1, 1, "missing 'dim:' line");
  for (std::size_t k = 0; k < pending.size(); ++k) {
    const auto& [a, body] = pending[k];
    const Arrow& ar = q.arrow(a);
    std::vector<std::int64_t> entries;
    std::size_t rows = 0;
    std::stringstream rs(body);
    std::string row;
    while (std::getline(rs, row, ';')) {
      std::istringstream es(row);
      std::string tok;
      std::size_t n = 0;
      while (es >> tok) {
        try {
          entries.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          throw ParseError(pending_line[k], 1, "bad matrix entry '" + tok + "'");
        }
        ++n;
      }
      if (n == 0) continue;
      if (n != dims[ar.target])
        throw ParseError(pending_line[k], 1,
                         "row of map " + ar.id + " needs " + std::to_string(dims[ar.target]) + " entries");
      ++rows;
    }
    if (rows != dims[ar.source])
      throw ParseError(pending_line[k], 1,
                       "map " + ar.id + " needs " + std::to_string(dims[ar.source]) + " rows");
    if (maps[a]) throw ParseError(pending_line[k], 1, "duplicate map for " + ar.id);
    maps[a] = Matrix::from_ints(f, rows, dims[ar.target], entries);
  }
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    out.push_back(maps[a] ? *maps[a] : Matrix(f, dims[ar.source], dims[ar.target]));
  }
  return Representation(std::move(p), std::move(dims), std::move(out));
}

Representation load_representation(PresentationRef p, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_representation(std::move(p), ss.str());
}

std::string serialize(const Representation& m) {
  const Quiver& q = m.quiver();
  std::string s = "module\ndim:";
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    s += " " + q.vertex_id(v) + "=" + std::to_string(m.dim(v));
  s += '\n';
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& x = m.map(a);
    if (x.empty()) continue;
    s += "map: " + q.arrow(a).id;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      s += i ? ";" : " ";
      for (std::size_t j = 0; j < x.cols(); ++j) {
        if (j) s += ' ';
        s += std::to_string(x(i, j));
      }
    }
    s += '\n';
  }
  return s;
}

}  // namespace sba
