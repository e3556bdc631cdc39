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

#include "sba/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "sba/error.hpp"

namespace sba {

namespace {

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

std::size_t Quiver::add_vertex(std::string id) {
  if (!valid_id(id)) throw PreconditionError("invalid vertex id '" + id + "'");
  if (find_vertex(id)) throw PreconditionError("duplicate vertex '" + id + "'");
  vertices_.push_back(std::move(id));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string id, std::size_t source,
                              std::size_t target) {
  if (!valid_id(id)) throw PreconditionError("invalid arrow id '" + id + "'");
  if (find_arrow(id)) throw PreconditionError("duplicate arrow '" + id + "'");
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw PreconditionError("arrow '" + id + "' has an undeclared endpoint");
  }
  arrows_.push_back({std::move(id), source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view id) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == id) return v;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id == id) return a;
  return std::nullopt;
}

std::vector<std::size_t> Quiver::arrows_out(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::arrows_in(std::size_t v) const {
  std::vector<std::size_t> in;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) in.push_back(a);
  return in;
}

Presentation::Presentation(Quiver quiver,
                           std::vector<std::vector<std::size_t>> relations,
                           PrimeField field)
    : quiver_(std::move(quiver)), relations_(std::move(relations)), field_(field) {
  for (const auto& r : relations_) {
    if (r.size() < 2) {
      throw PreconditionError("relations must have length at least 2");
    }
    for (auto a : r) {
      if (a >= quiver_.arrow_count()) throw PreconditionError("relation uses unknown arrow");
    }
    if (!composable(r)) throw PreconditionError("relation is not a path");
    max_relation_ = std::max(max_relation_, r.size());
  }
}

Presentation Presentation::with_field(PrimeField field) const {
  return Presentation(quiver_, relations_, field);
}

bool Presentation::composable(std::span<const std::size_t> arrows) const {
  if (arrows.empty()) return false;
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (quiver_.arrow(arrows[i]).target != quiver_.arrow(arrows[i + 1]).source) {
      return false;
    }
  }
  return true;
}

bool Presentation::contains_relation(std::span<const std::size_t> arrows) const {
  for (const auto& r : relations_) {
    if (std::search(arrows.begin(), arrows.end(), r.begin(), r.end()) !=
        arrows.end()) {
      return true;
    }
  }
  return false;
}

bool Presentation::ends_with_relation(std::span<const std::size_t> arrows) const {
  for (const auto& r : relations_) {
    if (r.size() <= arrows.size() &&
        std::equal(r.rbegin(), r.rend(), arrows.rbegin())) {
      return true;
    }
  }
  return false;
}

std::vector<QuiverPath> Presentation::paths_from(std::size_t v) const {
  if (!check_finite_dimensional(*this).finite) {
    throw PreconditionError("infinitely many paths avoid the relations");
  }
  std::vector<QuiverPath> out;
  QuiverPath current{v, {}};
  // iterative depth-first search over extensions
  struct Frame {
    std::vector<std::size_t> next;
    std::size_t index = 0;
  };
  std::vector<Frame> stack;
  out.push_back(current);
  stack.push_back({quiver_.arrows_out(v), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.index == top.next.size()) {
      stack.pop_back();
      if (!current.arrows.empty()) current.arrows.pop_back();
      continue;
    }
    const std::size_t a = top.next[top.index++];
    current.arrows.push_back(a);
    if (ends_with_relation(current.arrows)) {
      current.arrows.pop_back();
      continue;
    }
    out.push_back(current);
    stack.push_back({quiver_.arrows_out(quiver_.arrow(a).target), 0});
  }
  return out;
}

// --- text format ----------------------------------------------------------

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Quiver quiver;
  std::vector<std::vector<std::size_t>> relations;
  std::optional<std::uint32_t> field_order;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& key = tokens[0].text;
    auto fail = [&](const Token& t, const std::string& what) -> ParseError {
      return ParseError(line_no, t.column, what);
    };

    if (key == "vertices:") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_id(tokens[i].text)) {
          throw fail(tokens[i], "invalid vertex id '" + tokens[i].text + "'");
        }
        if (quiver.find_vertex(tokens[i].text)) {
          throw fail(tokens[i], "duplicate vertex '" + tokens[i].text + "'");
        }
        quiver.add_vertex(tokens[i].text);
      }
    } else if (key == "arrow:") {
      if (tokens.size() != 4) {
        throw fail(tokens[0], "expected 'arrow: <id> <source> <target>'");
      }
      if (!valid_id(tokens[1].text)) {
        throw fail(tokens[1], "invalid arrow id '" + tokens[1].text + "'");
      }
      if (quiver.find_arrow(tokens[1].text)) {
        throw fail(tokens[1], "duplicate arrow '" + tokens[1].text + "'");
      }
      const auto s = quiver.find_vertex(tokens[2].text);
      if (!s) throw fail(tokens[2], "unknown vertex '" + tokens[2].text + "'");
      const auto t = quiver.find_vertex(tokens[3].text);
      if (!t) throw fail(tokens[3], "unknown vertex '" + tokens[3].text + "'");
      quiver.add_arrow(tokens[1].text, *s, *t);
    } else if (key == "relation:") {
      if (tokens.size() < 3) {
        throw fail(tokens[0], "a relation needs at least two arrows");
      }
      std::vector<std::size_t> path;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto a = quiver.find_arrow(tokens[i].text);
        if (!a) throw fail(tokens[i], "unknown arrow '" + tokens[i].text + "'");
        if (!path.empty()) {
          const Arrow& prev = quiver.arrow(path.back());
          const Arrow& cur = quiver.arrow(*a);
          if (prev.target != cur.source) {
            throw fail(tokens[i],
                       "non-composable path (" + prev.id + " ends at " +
                           quiver.vertex_id(prev.target) + ", " + cur.id +
                           " starts at " + quiver.vertex_id(cur.source) + ")");
          }
        }
        path.push_back(*a);
      }
      relations.push_back(std::move(path));
    } else if (key == "field:") {
      if (tokens.size() != 2) throw fail(tokens[0], "expected 'field: <prime>'");
      const std::string& v = tokens[1].text;
      if (v.empty() || v.size() > 10 ||
          !std::all_of(v.begin(), v.end(),
                       [](unsigned char c) { return std::isdigit(c); })) {
        throw fail(tokens[1], "field order must be a positive integer");
      }
      const std::uint64_t q = std::stoull(v);
      if (q >= (1ull << 31) || !is_prime(q)) {
        throw fail(tokens[1], "field order " + v + " is not prime");
      }
      field_order = static_cast<std::uint32_t>(q);
    } else {
      throw fail(tokens[0], "unknown directive '" + key + "'");
    }
    if (end == text.size()) break;
  }
  return Presentation(std::move(quiver), std::move(relations),
                      PrimeField(field_order.value_or(PrimeField::kDefaultOrder)));
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  const Quiver& q = p.quiver();
  out << "vertices:";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out << ' ' << q.vertex_id(v);
  out << '\n';
  for (const auto& a : q.arrows()) {
    out << "arrow: " << a.id << ' ' << q.vertex_id(a.source) << ' '
        << q.vertex_id(a.target) << '\n';
  }
  for (const auto& r : p.relations()) {
    out << "relation:";
    for (auto a : r) out << ' ' << q.arrow(a).id;
    out << '\n';
  }
  out << "field: " << p.field().order() << '\n';
  return out.str();
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

// --- finiteness and axioms ------------------------------------------------

FiniteDimensionReport check_finite_dimensional(const Presentation& p) {
  const Quiver& q = p.quiver();
  const std::size_t window =
      p.max_relation_length() >= 2 ? p.max_relation_length() - 1 : 1;
  // States are the last `window` arrows of a path avoiding the relations; a
  // cycle among states means arbitrarily long such paths.
  using State = std::vector<std::size_t>;
  std::map<State, int> color;  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<State, std::size_t>> stack;  // state, next arrow index
  std::vector<State> starts;

  // all windows reachable: enumerate composable arrow sequences of length
  // `window` avoiding relations
  std::vector<State> frontier;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) frontier.push_back({a});
  for (std::size_t len = 1; len < window; ++len) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      for (auto b : q.arrows_out(q.arrow(s.back()).target)) {
        State t = s;
        t.push_back(b);
        if (!p.ends_with_relation(t)) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  starts = frontier;

  auto successors = [&](const State& s) {
    std::vector<std::pair<State, std::size_t>> out;
    for (auto b : q.arrows_out(q.arrow(s.back()).target)) {
      State ext = s;
      ext.push_back(b);
      if (p.ends_with_relation(ext)) continue;
      State t(ext.begin() + 1, ext.end());
      out.emplace_back(std::move(t), b);
    }
    return out;
  };

  FiniteDimensionReport report;
  for (const auto& start : starts) {
    if (color[start] != 0) continue;
    std::vector<State> path{start};
    std::vector<std::vector<std::pair<State, std::size_t>>> succ{successors(start)};
    std::vector<std::size_t> idx{0};
    std::vector<std::size_t> via;  // arrow appended to reach path[i+1]
    color[start] = 1;
    while (!path.empty()) {
      if (idx.back() == succ.back().size()) {
        color[path.back()] = 2;
        path.pop_back();
        succ.pop_back();
        idx.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const auto [next, arrow] = succ.back()[idx.back()++];
      const int c = color[next];
      if (c == 1) {
        // back edge: the cycle runs from `next` along the stack to here
        std::size_t k = 0;
        while (path[k] != next) ++k;
        for (std::size_t i = k; i < via.size(); ++i) report.cycle.push_back(via[i]);
        report.cycle.push_back(arrow);
        report.finite = false;
        return report;
      }
      if (c == 0) {
        color[next] = 1;
        State n = next;
        via.push_back(arrow);
        succ.push_back(successors(n));
        idx.push_back(0);
        path.push_back(std::move(n));
      }
    }
  }
  report.finite = true;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    // enumerate directly; finiteness is established
    std::vector<QuiverPath> stack_paths{{v, {}}};
    while (!stack_paths.empty()) {
      QuiverPath cur = std::move(stack_paths.back());
      stack_paths.pop_back();
      const std::size_t end =
          cur.arrows.empty() ? cur.start : q.arrow(cur.arrows.back()).target;
      report.surviving_paths.push_back(cur);
      auto outs = q.arrows_out(end);
      for (auto it = outs.rbegin(); it != outs.rend(); ++it) {
        QuiverPath ext = cur;
        ext.arrows.push_back(*it);
        if (!p.ends_with_relation(ext.arrows)) stack_paths.push_back(std::move(ext));
      }
    }
  }
  return report;
}

AxiomReport validate_axioms(const Presentation& p) {
  const Quiver& q = p.quiver();
  AxiomReport report;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto in = q.arrows_in(v).size();
    const auto out = q.arrows_out(v).size();
    if (in > 2) {
      report.s1 = false;
      report.violations.push_back("S1 violated at vertex " + q.vertex_id(v) +
                                  " (in-degree " + std::to_string(in) + ")");
    }
    if (out > 2) {
      report.s1 = false;
      report.violations.push_back("S1 violated at vertex " + q.vertex_id(v) +
                                  " (out-degree " + std::to_string(out) + ")");
    }
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::vector<std::string> after, before;
    for (auto b : q.arrows_out(q.arrow(a).target)) {
      const std::vector<std::size_t> path{a, b};
      if (!p.contains_relation(path)) after.push_back(q.arrow(b).id);
    }
    for (auto c : q.arrows_in(q.arrow(a).source)) {
      const std::vector<std::size_t> path{c, a};
      if (!p.contains_relation(path)) before.push_back(q.arrow(c).id);
    }
    auto describe = [](const std::vector<std::string>& ids) {
      std::string s;
      for (const auto& id : ids) s += (s.empty() ? "" : " ") + id;
      return s;
    };
    if (after.size() > 1) {
      report.s2 = false;
      report.violations.push_back("S2 violated at arrow " + q.arrow(a).id +
                                  " (continued by " + describe(after) + ")");
    }
    if (before.size() > 1) {
      report.s2 = false;
      report.violations.push_back("S2 violated at arrow " + q.arrow(a).id +
                                  " (preceded by " + describe(before) + ")");
    }
  }
  // Relations are paths by construction, so I is generated by paths.
  report.s3 = true;
  return report;
}

}  // namespace sba
