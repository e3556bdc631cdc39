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

#include "sba/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "sba/error.hpp"

namespace sba {

namespace {

std::vector<Letter> alphabet(const Quiver& q) {
  std::vector<Letter> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    out.push_back({a, Direction::Direct});
    out.push_back({a, Direction::Inverse});
  }
  return out;
}

bool is_word_ok(const Presentation& p, const Walk& w) { return is_word(p, w).ok; }

void require_string_presentation(const Presentation& p) {
  const AxiomReport r = validate_axioms(p);
  if (!r.is_string()) {
    throw PreconditionError("not a string presentation: " +
                            (r.violations.empty() ? std::string("axioms fail") : r.violations.front()));
  }
  if (!check_finite_dimensional(p).finite)
    throw PreconditionError("the algebra is infinite dimensional");
}

}  // namespace

// --- automaton -----------------------------------------------------------------

LetterAutomaton::LetterAutomaton(const Presentation& p)
    : quiver_(&p.quiver()),
      window_(p.max_relation_length() >= 2 ? p.max_relation_length() - 1 : 1) {
  const Quiver& q = p.quiver();
  const auto letters = alphabet(q);
  std::vector<Letter> stack;
  auto grow = [&](auto&& self) -> void {
    if (stack.size() == window_) {
      states_.push_back(stack);
      return;
    }
    for (Letter l : letters) {
      if (!stack.empty() && letter_source(q, l) != letter_target(q, stack.back())) continue;
      if (!extends_word(p, stack, l)) continue;
      stack.push_back(l);
      self(self);
      stack.pop_back();
    }
  };
  grow(grow);
  std::map<std::vector<Letter>, std::size_t> index;
  for (std::size_t i = 0; i < states_.size(); ++i) index[states_[i]] = i;
  next_.resize(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const auto& s = states_[i];
    for (Letter l : letters) {
      if (letter_source(q, l) != letter_target(q, s.back())) continue;
      if (!extends_word(p, s, l)) continue;
      std::vector<Letter> t(s.begin() + 1, s.end());
      t.push_back(l);
      next_[i].push_back(index.at(t));
    }
  }
}

std::optional<Walk> LetterAutomaton::find_cycle() const {
  enum Color : unsigned char { White, Gray, Black };
  std::vector<Color> color(states_.size(), White);
  std::vector<std::size_t> parent(states_.size(), 0);
  for (std::size_t root = 0; root < states_.size(); ++root) {
    if (color[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Gray;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx == next_[u].size()) {
        color[u] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t v = next_[u][idx++];
      if (color[v] == Gray) {
        // cycle v -> ... -> u -> v; each state contributes its last letter
        std::vector<std::size_t> cyc{u};
        for (std::size_t s = u; s != v;) {
          s = parent[s];
          cyc.push_back(s);
        }
        std::reverse(cyc.begin(), cyc.end());  // v ... u
        std::vector<Letter> letters;
        for (std::size_t i = 1; i < cyc.size(); ++i) letters.push_back(states_[cyc[i]].back());
        letters.push_back(states_[v].back());
        return Walk::from_letters(*quiver_, std::move(letters));
      }
      if (color[v] == White) {
        color[v] = Gray;
        parent[v] = u;
        stack.emplace_back(v, 0);
      }
    }
  }
  return std::nullopt;
}

// --- bands and N(alpha) ----------------------------------------------------------

std::vector<Walk> find_bands(const Presentation& p, std::size_t max_len) {
  const Quiver& q = p.quiver();
  const auto letters = alphabet(q);
  std::set<Walk> found;
  std::vector<Letter> stack;
  auto visit = [&](auto&& self) -> void {
    const Walk w = Walk::from_letters(q, stack);
    if (w.start() == w.end() && is_cyclic(p, w) && is_primitive(q, w).primitive)
      found.insert(canonical_cyclic(q, w));
    if (stack.size() == max_len) return;
    for (Letter l : letters) {
      if (letter_source(q, l) != w.end() || !extends_word(p, stack, l)) continue;
      stack.push_back(l);
      self(self);
      stack.pop_back();
    }
  };
  if (max_len == 0) return {};
  for (Letter l : letters) {
    stack.assign(1, l);
    visit(visit);
  }
  return {found.begin(), found.end()};
}

GeneratorSearch n_alpha_search(const Presentation& p, std::size_t alpha,
                               std::size_t max_len, std::size_t node_budget) {
  const Quiver& q = p.quiver();
  const auto letters = alphabet(q);
  GeneratorSearch out;
  if (alpha >= q.arrow_count()) throw PreconditionError("unknown arrow");
  if (max_len == 0) return out;
  const Letter first{alpha, Direction::Direct};
  auto in_n = [&](const Walk& w) {
    return w[0] == first && !w.letters().back().direct() && is_cyclic(p, w);
  };
  std::vector<Letter> stack{first};
  std::vector<bool> prefix_in{false};  // prefix_in[k]: first k+1 letters lie in N(alpha)
  auto visit = [&](auto&& self) -> void {
    if (++out.nodes > node_budget) {
      out.complete = false;
      return;
    }
    const Walk w = Walk::from_letters(q, stack);
    const bool member = in_n(w);
    prefix_in.back() = member;
    if (member) {
      bool factors = false;
      for (std::size_t k = 1; k < stack.size() && !factors; ++k) {
        if (!prefix_in[k - 1] || !(stack[k] == first)) continue;
        factors = in_n(subwalk(q, w, k, stack.size() - k));
      }
      if (!factors) out.generators.push_back(w);
    }
    if (stack.size() == max_len) return;
    for (Letter l : letters) {
      if (!out.complete) return;
      if (letter_source(q, l) != w.end() || !extends_word(p, stack, l)) continue;
      stack.push_back(l);
      prefix_in.push_back(false);
      self(self);
      stack.pop_back();
      prefix_in.pop_back();
    }
  };
  visit(visit);
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

std::vector<Walk> n_alpha_generators(const Presentation& p, std::size_t alpha,
                                     std::size_t max_len) {
  return n_alpha_search(p, alpha, max_len).generators;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::Domestic: return "Domestic";
    case Verdict::NonDomestic: return "NonDomestic";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

ClassificationCertificate classify(const Presentation& p, std::size_t bound) {
  require_string_presentation(p);
  const Quiver& q = p.quiver();
  ClassificationCertificate cert;
  const LetterAutomaton automaton(p);
  cert.automaton_states = automaton.state_count();
  const auto cycle = automaton.find_cycle();
  if (!cycle) {
    cert.verdict = Verdict::Finite;
    return cert;
  }
  if (!is_cyclic(p, *cycle)) throw VerificationError("automaton cycle is not a cyclic word");
  cert.band_witness = canonical_cyclic(q, is_primitive(q, *cycle).root);
  cert.bound = bound ? bound : 4 * automaton.state_count();

  // deepen geometrically so that a non-domestic certificate is found early
  for (std::size_t len = std::min<std::size_t>(4, cert.bound);; len = std::min(2 * len, cert.bound)) {
    cert.generators.assign(q.arrow_count(), {});
    cert.search_complete = true;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      GeneratorSearch s = n_alpha_search(p, a, len);
      cert.search_complete = cert.search_complete && s.complete;
      cert.generators[a] = std::move(s.generators);
      if (cert.generators[a].size() >= 2) {
        cert.verdict = Verdict::NonDomestic;
        cert.alpha = a;
        cert.evidence = {cert.generators[a][0], cert.generators[a][1]};
        break;
      }
    }
    if (cert.verdict == Verdict::NonDomestic || len == cert.bound || !cert.search_complete) break;
  }

  if (cert.verdict == Verdict::NonDomestic) {
    const Walk& g1 = cert.evidence[0];
    const Walk& g2 = cert.evidence[1];
    cert.evidence_roots = {is_primitive(q, g1).root, is_primitive(q, g2).root};
    if (cert.evidence_roots[0] == cert.evidence_roots[1])
      throw VerificationError("generators share a primitive root");
    const std::span<const Letter> x(g1.letters()), y(g2.letters());
    cert.common_prefix = common_power_prefix(x, y, x.size() + y.size());
    cert.fine_wolf = fine_wolf_common_power(x, y, cert.common_prefix);
    if (cert.fine_wolf == FineWolfVerdict::ForcedCommonRoot)
      throw VerificationError("periodicity bound contradicts distinct roots");
    return cert;
  }
  const bool some = std::any_of(cert.generators.begin(), cert.generators.end(),
                                [](const auto& g) { return !g.empty(); });
  if (cert.search_complete && some) {
    cert.verdict = Verdict::Domestic;
    cert.bands = find_bands(p, cert.bound);
  } else {
    cert.verdict = Verdict::Unknown;
  }
  return cert;
}

// --- witness triple ----------------------------------------------------------------

TripleCheck check_witness_triple(const Presentation& p, const WitnessTriple& t) {
  const Quiver& q = p.quiver();
  auto fail = [](std::string why) { return TripleCheck{false, std::move(why)}; };
  for (const Walk* w : {&t.x, &t.y, &t.z}) {
    if (w->is_trivial() || is_serial(*w)) return fail(format_walk(q, *w) + " is serial");
    if (!is_word_ok(p, *w)) return fail(format_walk(q, *w) + " is not a word");
  }
  if (!t.y.letters().front().direct() || !t.y.letters().back().direct())
    return fail("y must start and end with direct letters");
  if (t.z.letters().front().direct() || t.z.letters().back().direct())
    return fail("z must start and end with inverse letters");
  try {
    if (!is_word_ok(p, concat(q, concat(q, t.y, t.x), t.y))) return fail("yxy is not a word");
    if (!is_word_ok(p, concat(q, concat(q, t.z, t.x), t.z))) return fail("zxz is not a word");
    const Walk xy = concat(q, t.x, t.y), xz = concat(q, t.x, t.z);
    const Walk xyxz = concat(q, xy, xz);
    if (!is_cyclic(p, xyxz)) return fail("xyxz is not cyclic");
    if (!is_primitive(q, xyxz).primitive) return fail("xyxz is not primitive");
    const Walk u = concat(q, power(q, xyxz, 3), xy), v = concat(q, xz, power(q, xyxz, 3));
    for (const Walk* w : {&u, &v}) {
      if (!is_cyclic(p, *w) || !is_primitive(q, *w).primitive)
        return fail("(xyxz)^3 xy or xz (xyxz)^3 is not a band");
    }
  } catch (const PreconditionError& e) {
    return fail(e.what());
  }
  const std::size_t gamma = t.y.letters().front().arrow, beta = t.y.letters().back().arrow;
  const std::size_t alpha = t.z.letters().front().arrow, delta = t.z.letters().back().arrow;
  const std::size_t bd[] = {beta, delta}, ag[] = {alpha, gamma};
  if (!p.composable(bd) || !p.contains_relation(bd)) return fail("beta delta is not a relation");
  if (!p.composable(ag) || !p.contains_relation(ag)) return fail("alpha gamma is not a relation");
  return {};
}

std::optional<WitnessTriple> find_witness_triple(const Presentation& p, std::size_t search_len) {
  if (classify(p).verdict != Verdict::NonDomestic)
    throw PreconditionError("witness triples exist only for non-domestic algebras");
  const Quiver& q = p.quiver();
  std::vector<Walk> words;
  for (const Walk& w : enumerate_words(p, search_len)) {
    if (w.is_trivial() || is_serial(w)) continue;
    words.push_back(w);
    words.push_back(inverse(q, w));
  }
  std::sort(words.begin(), words.end());
  std::vector<const Walk*> ys, zs;
  for (const Walk& w : words) {
    const bool first = w.letters().front().direct(), last = w.letters().back().direct();
    if (first && last) ys.push_back(&w);
    if (!first && !last) zs.push_back(&w);
  }
  auto sandwich = [&](const Walk& outer, const Walk& x) {
    return outer.end() == x.start() && x.end() == outer.start() &&
           is_word_ok(p, concat(q, concat(q, outer, x), outer));
  };
  using Key = std::tuple<std::size_t, const Walk*, const Walk*, const Walk*>;
  std::vector<Key> candidates;
  for (const Walk& x : words) {
    std::vector<const Walk*> yy, zz;
    for (const Walk* y : ys)
      if (sandwich(*y, x)) yy.push_back(y);
    for (const Walk* z : zs)
      if (sandwich(*z, x)) zz.push_back(z);
    for (const Walk* y : yy)
      for (const Walk* z : zz)
        candidates.emplace_back(x.length() + y->length() + z->length(), &x, y, z);
  }
  std::sort(candidates.begin(), candidates.end(), [](const Key& a, const Key& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (*std::get<1>(a) != *std::get<1>(b)) return *std::get<1>(a) < *std::get<1>(b);
    if (*std::get<2>(a) != *std::get<2>(b)) return *std::get<2>(a) < *std::get<2>(b);
    return *std::get<3>(a) < *std::get<3>(b);
  });
  for (const auto& [len, x, y, z] : candidates) {
    WitnessTriple t{*x, *y, *z};
    if (check_witness_triple(p, t).ok) return t;
  }
  return std::nullopt;
}

// --- the glued extension -------------------------------------------------------------

namespace {

// First k with w[k], w[k+1], ... (indices mod |w|) spelling the pattern.
std::size_t find_cyclic_factor(const Walk& w, const std::vector<Letter>& pattern) {
  const auto& l = w.letters();
  for (std::size_t k = 0; k < l.size(); ++k) {
    std::size_t i = 0;
    while (i < pattern.size() && l[(k + i) % l.size()] == pattern[i]) ++i;
    if (i == pattern.size()) return k;
  }
  throw VerificationError("expected factor not found");
}

}  // namespace

WitnessExtension build_witness(PresentationRef pref, const WitnessTriple& t, std::size_t prime) {
  const Presentation& p = *pref;
  const Quiver& q = p.quiver();
  const PrimeField& f = p.field();
  const std::uint64_t order = f.order();
  if (!is_prime(prime) || prime < 11) throw PreconditionError("p must be a prime >= 11");
  if (prime == order) throw PreconditionError("p must differ from the characteristic");
  if ((order - 1) % (2 * prime) != 0)
    throw PreconditionError("field order " + std::to_string(order) + " is not 1 mod " +
                            std::to_string(2 * prime));
  if (TripleCheck c = check_witness_triple(p, t); !c.ok)
    throw PreconditionError("invalid witness triple: " + c.reason);

  WitnessExtension out;
  out.prime = prime;
  out.n = (prime - 1) / 2;
  const Walk xy = concat(q, t.x, t.y), xz = concat(q, t.x, t.z);
  const Walk xyxz = concat(q, xy, xz);
  out.u = concat(q, power(q, xyxz, out.n), xy);
  out.v = concat(q, xz, power(q, xyxz, out.n));
  for (const Walk* w : {&out.u, &out.v}) {
    if (!is_cyclic(p, *w) || !is_primitive(q, *w).primitive)
      throw VerificationError(format_walk(q, *w) + " is not a band");
  }
  out.band_u = band_module(pref, out.u, 1, 1);
  out.band_v = band_module(pref, out.v, 1, 1);

  const Letter gamma = t.y.letters().front(), beta = t.y.letters().back();
  const Letter alpha_inv = t.z.letters().front(), delta_inv = t.z.letters().back();
  std::vector<Letter> in_u{delta_inv};
  in_u.insert(in_u.end(), t.x.letters().begin(), t.x.letters().end());
  in_u.push_back(gamma);
  std::vector<Letter> in_v{beta};
  in_v.insert(in_v.end(), t.x.letters().begin(), t.x.letters().end());
  in_v.push_back(alpha_inv);
  const auto pos_u = walk_positions(q, out.u, true);
  const auto pos_v = walk_positions(q, out.v, true);
  out.u_factor = find_cyclic_factor(out.u, in_u);
  out.v_factor = find_cyclic_factor(out.v, in_v);
  // delta^-1 runs from j2 to j1 in u; beta runs from i1 to i2 in v
  const WalkPosition j2 = pos_u[out.u_factor], j1 = pos_u[(out.u_factor + 1) % pos_u.size()];
  const WalkPosition i1 = pos_v[out.v_factor], i2 = pos_v[(out.v_factor + 1) % pos_v.size()];
  out.i1 = i1.index;
  out.i2 = i2.index;
  out.j1 = j1.index;
  out.j2 = j2.index;

  const Representation sum = direct_sum(out.band_u, out.band_v);
  std::vector<Matrix> maps = sum.maps();
  const std::size_t row_i1 = out.band_u.dim(i1.vertex) + i1.index;
  const std::size_t row_i2 = out.band_u.dim(i2.vertex) + i2.index;
  Matrix& mb = maps[beta.arrow];
  for (std::size_t c = 0; c < mb.cols(); ++c) mb(row_i1, c) = 0;
  mb(row_i1, row_i2) = 1;
  mb(row_i1, j1.index) = f.add(mb(row_i1, j1.index), 1);
  Matrix& md = maps[delta_inv.arrow];
  for (std::size_t c = 0; c < md.cols(); ++c) md(row_i2, c) = 0;
  md(row_i2, j2.index) = f.neg(1);
  out.glued = Representation(pref, sum.dims(), std::move(maps));

  ShortExactSequence& s = out.sequence;
  s.left = out.band_u;
  s.middle = out.glued;
  s.right = out.band_v;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::size_t dl = out.band_u.dim(v), dr = out.band_v.dim(v);
    Matrix inc(f, dl, dl + dr), proj(f, dl + dr, dr);
    inc.set_block(0, 0, Matrix::identity(f, dl));
    proj.set_block(dl, 0, Matrix::identity(f, dr));
    s.inclusion.components.push_back(std::move(inc));
    s.projection.components.push_back(std::move(proj));
  }
  if (!is_exact(s)) throw VerificationError("glued sequence is not exact");

  // Following the two x-strands through the gluing: the middle term is the
  // module of u read from j1 followed by v read from i2.
  out.crossed_word = concat(q, rotate(q, out.u, (out.u_factor + 1) % out.u.length()),
                            rotate(q, out.v, (out.v_factor + 1) % out.v.length()));
  return out;
}

}  // namespace sba
