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

#include "sba/artheory.hpp"

#include <algorithm>
#include <map>

#include "sba/classify.hpp"
#include "sba/decomp.hpp"
#include "sba/error.hpp"
#include "sba/parallel.hpp"
#include "sba/poly.hpp"

namespace sba {

// --- catalogs ---------------------------------------------------------------------

std::vector<Representation> Catalog::modules() const {
  std::vector<Representation> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.module);
  return out;
}

std::vector<std::size_t> Catalog::profile(const Representation& m) const {
  std::vector<std::size_t> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(hom_dim(e.module, m));
  return out;
}

std::optional<std::size_t> Catalog::index_of(const Representation& m) const {
  if (m.is_zero()) return std::nullopt;
  const auto h = profile(m);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].module.dims() != m.dims()) continue;
    bool same = true;
    for (std::size_t j = 0; j < entries.size() && same; ++j) same = hom[j][i] == h[j];
    if (same) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Catalog::find(const std::string& id) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].id == id) return i;
  return std::nullopt;
}

namespace {

void fill_hom(Catalog& cat) {
  const std::size_t n = cat.entries.size();
  cat.hom.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cat.hom[i][j] = hom_dim(cat.entries[i].module, cat.entries[j].module);
}

}  // namespace

Catalog enumerate_indecomposables(PresentationRef p, std::size_t max_dim) {
  const AxiomReport axioms = validate_axioms(*p);
  if (!axioms.is_string())
    throw PreconditionError("not a string presentation: " + axioms.violations.front());
  if (!check_finite_dimensional(*p).finite)
    throw PreconditionError("the algebra is infinite dimensional");
  Catalog cat;
  cat.presentation = p;
  cat.max_dim = max_dim;
  const Quiver& q = p->quiver();
  if (const auto cycle = LetterAutomaton(*p).find_cycle()) {
    cat.band_witness = canonical_cyclic(q, is_primitive(q, *cycle).root);
    cat.bands = find_bands(*p, max_dim);
    return cat;
  }
  if (max_dim == 0) {
    cat.complete = q.vertex_count() == 0;
    return cat;
  }
  const auto words = enumerate_words(*p, max_dim - 1);
  cat.complete = enumerate_words(*p, max_dim).size() == words.size();
  for (const Walk& w : words) {
    Representation m = string_module(p, w);
    const bool proj = is_projective(m);
    cat.entries.push_back({format_walk(q, w), w, std::move(m), proj});
  }
  fill_hom(cat);
  return cat;
}

Catalog catalog_from_modules(PresentationRef p,
                             std::vector<std::pair<std::string, Representation>> modules) {
  Catalog cat;
  cat.presentation = p;
  for (auto& [id, m] : modules) {
    if (m.presentation() != *p) throw PreconditionError("module over another algebra: " + id);
    cat.max_dim = std::max(cat.max_dim, m.total_dim());
    const bool proj = !m.is_zero() && is_projective(m);
    cat.entries.push_back({id, std::nullopt, std::move(m), proj});
  }
  fill_hom(cat);
  return cat;
}

// --- word surgery --------------------------------------------------------------------

namespace {

// Letters leaving a vertex fall on two sides; a word may pass through the
// vertex from one letter to another only when they lie on opposite sides.
int letter_side(const Presentation& p, Letter l) {
  const Quiver& q = p.quiver();
  const std::size_t v = letter_source(q, l);
  const auto out = q.arrows_out(v);
  if (l.direct()) return out.size() > 1 && out[1] == l.arrow ? -1 : 1;
  auto direct_side = [&](std::size_t a) { return out.size() > 1 && out[1] == a ? -1 : 1; };
  auto partner = [&](std::size_t b) -> std::optional<std::size_t> {
    for (std::size_t g : out) {
      const std::size_t path[] = {b, g};
      if (!p.contains_relation(path)) return g;
    }
    return std::nullopt;
  };
  if (auto g = partner(l.arrow)) return -direct_side(*g);
  const int fallback = out.empty() ? 1 : direct_side(out[0]);
  for (std::size_t b : q.arrows_in(v)) {
    if (b == l.arrow) continue;
    if (auto g = partner(b)) return direct_side(*g);
    // neither inverse letter continues: split them by arrow order
    return b < l.arrow ? -fallback : fallback;
  }
  return fallback;
}

SidedWord flip(const Quiver& q, const SidedWord& c) {
  return {inverse(q, c.walk), -c.side};
}

}  // namespace

std::optional<SidedWord> right_surgery(const Presentation& p, const SidedWord& c) {
  const Quiver& q = p.quiver();
  std::vector<Letter> letters = c.walk.letters();
  const std::size_t v = c.walk.end();
  for (std::size_t g : q.arrows_out(v)) {
    const Letter gamma{g, Direction::Direct};
    if (c.walk.is_trivial() ? letter_side(p, gamma) != c.side
                            : !extends_word(p, letters, gamma))
      continue;
    letters.push_back(gamma);
    // the string algebra is finite dimensional, so inverse runs are bounded
    for (std::size_t guard = 0; guard < 4096; ++guard) {
      const std::size_t end = letter_target(q, letters.back());
      bool grown = false;
      for (std::size_t b : q.arrows_in(end)) {
        const Letter inv{b, Direction::Inverse};
        if (extends_word(p, letters, inv)) {
          letters.push_back(inv);
          grown = true;
          break;
        }
      }
      if (!grown) break;
    }
    return SidedWord{Walk::from_letters(q, std::move(letters)), 1};
  }
  auto last_inverse = std::find_if(letters.rbegin(), letters.rend(),
                                   [](const Letter& l) { return !l.direct(); });
  if (last_inverse == letters.rend()) return std::nullopt;
  const std::size_t k = static_cast<std::size_t>(letters.rend() - last_inverse) - 1;
  if (k == 0) {
    const Letter l = letters[0];
    return SidedWord{Walk::trivial(letter_source(q, l)), letter_side(p, l)};
  }
  letters.resize(k);
  return SidedWord{Walk::from_letters(q, std::move(letters)), 1};
}

std::optional<SidedWord> left_surgery(const Presentation& p, const SidedWord& c) {
  const Quiver& q = p.quiver();
  auto r = right_surgery(p, flip(q, c));
  if (!r) return std::nullopt;
  return flip(q, *r);
}

// --- almost split sequences -------------------------------------------------------------

namespace {

// lambda with f - lambda id nilpotent, for f in a local endomorphism ring
Residue scalar_part(const Morphism& f) {
  for (const Matrix& c : f.components) {
    if (c.rows() == 0) continue;
    const auto factors = char_poly_factors(c);
    if (factors.size() != 1 || factors[0].factor.degree() != 1)
      throw VerificationError("endomorphism ring is not local");
    return c.field().neg(factors[0].factor.coeff(0));
  }
  return 0;
}

std::size_t find_word(const Catalog& cat, const Walk& w) {
  const Quiver& q = cat.presentation->quiver();
  const Walk wi = inverse(q, w);
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& e = cat.entries[i].word;
    if (e && (*e == w || *e == wi)) return i;
  }
  throw PreconditionError("word " + format_walk(q, w) + " is not in the catalog");
}

}  // namespace

ARSequence ar_sequence(const Catalog& cat, const Walk& v_word) {
  if (cat.refused())
    throw PreconditionError("catalog refused: the algebra has bands");
  const Presentation& p = *cat.presentation;
  const std::size_t idx = find_word(cat, v_word);
  const CatalogEntry& entry = cat.entries[idx];
  if (entry.projective) throw PreconditionError(entry.id + " is projective");

  ARSequence out;
  out.v_word = v_word;
  const SidedWord c{v_word, 1};
  const auto right = right_surgery(p, c);
  const auto left = left_surgery(p, c);
  for (const auto* w : {&right, &left})
    if (*w) out.middle_words.push_back((*w)->walk);
  std::optional<SidedWord> tau = right ? left_surgery(p, *right)
                                       : (left ? right_surgery(p, *left) : std::nullopt);
  if (!tau) throw VerificationError("word surgery yields no translate for " + entry.id);
  out.tau_word = tau->walk;
  out.middle_summand_count = out.middle_words.size();

  const Representation& v = entry.module;
  const Representation tau_v = string_module(cat.presentation, out.tau_word);
  const ExtSpace ext(v, tau_v);
  if (ext.dim() == 0) throw VerificationError("Ext^1(V, tau V) vanishes for " + entry.id);

  // The almost split class spans the socle of Ext^1(V, tau V) over End(V):
  // the classes killed by pullback along every radical endomorphism.
  std::vector<Morphism> radical;
  const Morphism id = identity_morphism(v);
  for (const Morphism& f : hom_basis(v, v)) {
    Morphism r = add(f, scale(id, v.field().neg(scalar_part(f))));
    if (!is_zero(r)) radical.push_back(std::move(r));
  }
  const PrimeField& field = v.field();
  Matrix action(field, ext.dim(), ext.dim() * radical.size());
  for (std::size_t k = 0; k < ext.dim(); ++k) {
    Vector unit(ext.dim(), 0);
    unit[k] = 1;
    for (std::size_t r = 0; r < radical.size(); ++r) {
      const Vector img = ext.pullback(unit, radical[r]);
      for (std::size_t j = 0; j < ext.dim(); ++j) action(k, r * ext.dim() + j) = img[j];
    }
  }
  const Matrix socle = radical.empty() ? Matrix::identity(field, ext.dim()) : left_kernel(action);
  if (socle.rows() == 0) throw VerificationError("Ext^1(V, tau V) has zero socle");
  out.sequence = ext.extension(socle.row(0));

  // certificate
  const auto h_tau = cat.profile(tau_v);
  const auto h_mid = cat.profile(out.sequence.middle);
  out.defect.resize(cat.size());
  out.certified = true;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    out.defect[i] = static_cast<long long>(h_tau[i]) - static_cast<long long>(h_mid[i]) +
                    static_cast<long long>(cat.hom[i][idx]);
    out.certified = out.certified && out.defect[i] == (i == idx ? 1 : 0);
  }
  // the surgery words must describe the middle term that was built
  std::vector<Representation> parts;
  for (const Walk& w : out.middle_words) parts.push_back(string_module(cat.presentation, w));
  const Representation predicted = parts.empty() ? zero_module(cat.presentation) : direct_sum(parts);
  if (cat.profile(predicted) != h_mid || predicted.dims() != out.sequence.middle.dims())
    throw VerificationError("word surgery disagrees with the extension for " + entry.id);
  return out;
}

ARTable ar_table(const Catalog& cat) {
  ARTable table(cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat.entries[i];
    if (!e.projective && e.word) table[i] = ar_sequence(cat, *e.word);
  }
  return table;
}

// --- hom order -----------------------------------------------------------------------------

HomOrder hom_leq(const Catalog& cat, const Representation& m, const Representation& n) {
  if (!cat.complete) throw PreconditionError("hom order needs a complete catalog");
  HomOrder out;
  const auto hm = cat.profile(m), hn = cat.profile(n);
  out.profile.delta.resize(cat.size());
  bool nonneg = true;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    out.profile.delta[i] = static_cast<long long>(hn[i]) - static_cast<long long>(hm[i]);
    nonneg = nonneg && out.profile.delta[i] >= 0;
  }
  out.leq = m.dims() == n.dims() && nonneg;
  return out;
}

namespace {

DeltaProfile require_leq(const Catalog& cat, const Representation& m, const Representation& n) {
  HomOrder h = hom_leq(cat, m, n);
  if (!h.leq) throw PreconditionError("M is not below N in the hom order");
  return std::move(h.profile);
}

const ARSequence& table_entry(const Catalog& cat, const ARTable& table, std::size_t i) {
  if (i >= table.size() || !table[i])
    throw PreconditionError("no almost split sequence for " + cat.entries[i].id);
  return *table[i];
}

}  // namespace

RiedtmannWitness riedtmann_witness(const Catalog& cat, const ARTable& table,
                                   const Representation& m, const Representation& n) {
  const DeltaProfile delta = require_leq(cat, m, n);
  RiedtmannWitness out;
  std::vector<Representation> xs, ys, zs;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat.entries[i].projective || delta.delta[i] == 0) continue;
    const ARSequence& s = table_entry(cat, table, i);
    for (long long k = 0; k < delta.delta[i]; ++k) {
      xs.push_back(s.sequence.left);
      ys.push_back(s.sequence.middle);
      zs.push_back(s.sequence.right);
    }
    const auto d = static_cast<std::size_t>(delta.delta[i]);
    out.x_count += d;
    out.z_count += d;
    out.y_count += d * s.middle_summand_count;
  }
  auto sum = [&](const std::vector<Representation>& parts) {
    return parts.empty() ? zero_module(cat.presentation) : direct_sum(parts);
  };
  out.x = sum(xs);
  out.y = sum(ys);
  out.z = sum(zs);
  const Representation lhs = direct_sum(direct_sum(m, out.x), out.z);
  const Representation rhs = direct_sum(n, out.y);
  out.verified = lhs.dims() == rhs.dims() && cat.profile(lhs) == cat.profile(rhs);
  return out;
}

long long delta_count_formula(const Catalog& cat, const ARTable& table,
                              const Representation& m, const Representation& n) {
  const DeltaProfile delta = require_leq(cat, m, n);
  long long total = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat.entries[i].projective || delta.delta[i] == 0) continue;
    const ARSequence& s = table_entry(cat, table, i);
    total += delta.delta[i] * (2 - static_cast<long long>(s.middle_summand_count));
  }
  return total;
}

// --- surveys ----------------------------------------------------------------------------------

std::vector<CatalogSum> catalog_sums(const Catalog& cat, std::size_t max_dim) {
  std::vector<CatalogSum> out;
  std::vector<std::size_t> mult(cat.size(), 0);
  auto emit = [&] {
    CatalogSum s{mult, "", {}};
    std::vector<Representation> parts;
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t k = 0; k < mult[i]; ++k) {
        if (!s.id.empty()) s.id += '+';
        s.id += cat.entries[i].id;
        parts.push_back(cat.entries[i].module);
      }
    if (parts.empty()) return;
    s.module = direct_sum(parts);
    out.push_back(std::move(s));
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == cat.size()) {
      emit();
      return;
    }
    const std::size_t d = cat.entries[i].module.total_dim();
    for (mult[i] = 0; used + mult[i] * d <= max_dim; ++mult[i]) {
      self(self, i + 1, used + mult[i] * d);
      if (d == 0) break;
    }
    mult[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

DegenerationSurvey survey_degenerations(const Catalog& cat, const ARTable& table,
                                        std::size_t max_dim, const DecomposeOptions& opts,
                                        std::size_t jobs) {
  DegenerationSurvey out;
  out.modules = catalog_sums(cat, max_dim);
  const std::size_t count = out.modules.size();
  out.counts.resize(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    out.counts[i] = decompose(out.modules[i].module, opts).summand_count();
  });
  std::map<DimensionVector, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < count; ++i) classes[out.modules[i].module.dims()].push_back(i);
  for (const auto& [dims, members] : classes)
    for (std::size_t a : members)
      for (std::size_t b : members) out.pairs.push_back({a, b});
  parallel_for(out.pairs.size(), jobs, [&](std::size_t k) {
    DegenerationPair& pr = out.pairs[k];
    const Representation& m = out.modules[pr.m].module;
    const Representation& n = out.modules[pr.n].module;
    pr.count_m = out.counts[pr.m];
    pr.count_n = out.counts[pr.n];
    pr.leq = hom_leq(cat, m, n).leq;
    if (!pr.leq) return;
    pr.delta_formula = delta_count_formula(cat, table, m, n);
    const RiedtmannWitness w = riedtmann_witness(cat, table, m, n);
    pr.riedtmann_verified = w.verified;
    pr.riedtmann_count = static_cast<long long>(w.x_count + w.z_count) -
                         static_cast<long long>(w.y_count);
    const long long diff = static_cast<long long>(pr.count_n) - static_cast<long long>(pr.count_m);
    pr.ok = pr.count_m <= pr.count_n && pr.delta_formula == diff && pr.riedtmann_verified &&
            pr.riedtmann_count == diff;
  });
  for (const auto& pr : out.pairs) out.ok = out.ok && pr.ok;
  return out;
}

MainTheoremReport verify_main_theorem(const Catalog& cat, const CensusOptions& opts) {
  MainTheoremReport out;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat.size(); ++j)
      if (ext1_dim(cat.entries[i].module, cat.entries[j].module) > 0) out.pairs.push_back({i, j, {}});
  for (auto& pc : out.pairs) {
    pc.census = middle_census(cat.entries[pc.m].module, cat.entries[pc.n].module, opts);
    for (const auto& line : pc.census.lines) out.max_summands = std::max(out.max_summands, line.summands);
  }
  out.holds = out.max_summands <= 2;
  return out;
}

}  // namespace sba
