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

// Acceptance run: one PASS/FAIL line per criterion. With --expect-fail the
// exit status is 0 exactly when the failing criteria are the listed ones.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sba/artheory.hpp"
#include "sba/classify.hpp"
#include "sba/decomp.hpp"
#include "sba/parallel.hpp"

using namespace sba;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Fails the outcome with a note unless the condition holds.
void require(Outcome& o, bool ok, const std::string& note) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + note;
  }
}

void within(Outcome& o, Clock::time_point t0, double limit) {
  const double s = seconds_since(t0);
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  require(o, s < limit, "took " + os.str() + ", limit " + std::to_string(int(limit)) + "s");
  o.detail += (o.detail.empty() ? "" : ", ") + os.str();
}

// 1 --------------------------------------------------------------------------------------
Outcome main_theorem_sufficiency() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream d;
  for (const char* name : {"a3", "a3nr"}) {
    const Catalog cat = enumerate_indecomposables(fixture::load(name), 4);
    CensusOptions opts;
    opts.jobs = default_jobs();
    const MainTheoremReport r = verify_main_theorem(cat, opts);
    std::size_t lines = 0;
    for (const auto& pc : r.pairs) lines += pc.census.lines.size();
    require(o, r.holds, std::string(name) + " has a line with " + std::to_string(r.max_summands) + " summands");
    require(o, !r.pairs.empty(), std::string(name) + " has no Ext pairs");
    d << (d.tellp() ? "; " : "") << name << ": " << r.pairs.size() << " pairs, " << lines
      << " lines, max " << r.max_summands;
  }
  o.detail = d.str() + (o.detail.empty() ? "" : "; ") + o.detail;
  within(o, t0, 60);
  return o;
}

// 2 --------------------------------------------------------------------------------------
Outcome d4_necessity() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto p = fixture::load("d4sub");
  require(o, p->field().order() == 5, "d4sub is not over F_5");
  const Representation m = load_representation(p, fixture::path("d4sub_m.mod"));
  const Representation s0 = load_representation(p, fixture::path("d4sub_s0.mod"));
  require(o, m.dims() == DimensionVector{2, 1, 1, 1}, "M has the wrong dimension vector");
  const std::size_t parts = decompose(m).summand_count();
  const Census c = middle_census(m, s0);
  const auto count = [&](std::size_t k) { return c.histogram.count(k) ? c.histogram.at(k) : 0; };
  require(o, c.ext_dim == 2, "Ext^1 has dimension " + std::to_string(c.ext_dim));
  require(o, count(2) == 3, std::to_string(count(2)) + " two-summand lines");
  require(o, count(3) == 3, std::to_string(count(3)) + " three-summand lines");
  require(o, c.lines.size() == 6, std::to_string(c.lines.size()) + " lines");
  o.detail = "M has " + std::to_string(parts) + " summands, ext1=" + std::to_string(c.ext_dim) + ", 2-summand lines=" + std::to_string(count(2)) +
             ", 3-summand lines=" + std::to_string(count(3)) + (o.detail.empty() ? "" : "; ") + o.detail;
  within(o, t0, 10);
  return o;
}

// 3 and 4 -------------------------------------------------------------------------------
struct SurveyRun {
  const char* name;
  Catalog cat;
  ARTable table;
  DegenerationSurvey survey;
};

std::vector<SurveyRun>& surveys() {
  static std::vector<SurveyRun> runs = [] {
    std::vector<SurveyRun> out;
    for (const char* name : {"a3", "a3nr"}) {
      Catalog cat = enumerate_indecomposables(fixture::load(name), 8);
      ARTable table = ar_table(cat);
      DegenerationSurvey s = survey_degenerations(cat, table, 8, {}, default_jobs());
      out.push_back({name, std::move(cat), std::move(table), std::move(s)});
    }
    return out;
  }();
  return runs;
}

Outcome degeneration_counts() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream d;
  for (const auto& run : surveys()) {
    std::size_t leq = 0;
    for (std::size_t i = 0; i < run.survey.modules.size(); ++i) {
      const auto& mult = run.survey.modules[i].multiplicity;
      const std::size_t built = std::accumulate(mult.begin(), mult.end(), std::size_t{0});
      require(o, run.survey.counts[i] == built,
              std::string(run.name) + " " + run.survey.modules[i].id + " decomposes into " +
                  std::to_string(run.survey.counts[i]));
    }
    for (const auto& pr : run.survey.pairs) {
      if (!pr.leq) continue;
      ++leq;
      const std::string pair = std::string(run.name) + " " + run.survey.modules[pr.m].id + " <= " +
                               run.survey.modules[pr.n].id;
      require(o, pr.count_m <= pr.count_n, pair + ": |M| > |N|");
      require(o, pr.delta_formula == static_cast<long long>(pr.count_n) - static_cast<long long>(pr.count_m),
              pair + ": delta formula " + std::to_string(pr.delta_formula));
    }
    d << (d.tellp() ? "; " : "") << run.name << ": " << run.survey.modules.size() << " sums, "
      << run.survey.pairs.size() << " pairs, " << leq << " hom-ordered";
  }
  o.detail = d.str() + (o.detail.empty() ? "" : "; ") + o.detail;
  within(o, t0, 300);
  return o;
}

Outcome riedtmann_identity() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const auto& run : surveys()) {
    std::vector<const DegenerationPair*> leq;
    for (const auto& pr : run.survey.pairs)
      if (pr.leq) leq.push_back(&pr);
    std::vector<char> ok(leq.size(), 1);
    parallel_for(leq.size(), default_jobs(), [&](std::size_t k) {
      const DegenerationPair& pr = *leq[k];
      const Representation& m = run.survey.modules[pr.m].module;
      const Representation& n = run.survey.modules[pr.n].module;
      const RiedtmannWitness w = riedtmann_witness(run.cat, run.table, m, n);
      const std::vector<Representation> lhs_parts{m, w.x, w.z}, rhs_parts{n, w.y};
      const Representation lhs = direct_sum(lhs_parts), rhs = direct_sum(rhs_parts);
      bool same = w.verified;
      for (const auto& u : run.cat.entries) same = same && oracle::hom_dim(u.module, lhs) == oracle::hom_dim(u.module, rhs);
      ok[k] = same;
    });
    for (std::size_t k = 0; k < leq.size(); ++k) {
      ++checked;
      require(o, ok[k], std::string(run.name) + " " + run.survey.modules[leq[k]->m].id + " <= " +
                            run.survey.modules[leq[k]->n].id);
    }
  }
  o.detail = std::to_string(checked) + " pairs" + (o.detail.empty() ? "" : "; ") + o.detail;
  within(o, t0, 300);
  return o;
}

// 5 --------------------------------------------------------------------------------------
Outcome ar_certification() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t sequences = 0;
  for (const char* name : {"a3", "a3nr"}) {
    const Catalog cat = enumerate_indecomposables(fixture::load(name), 8);
    require(o, cat.complete, std::string(name) + " catalog incomplete");
    const ARTable table = ar_table(cat);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (cat.entries[i].projective) continue;
      const std::string id = std::string(name) + " " + cat.entries[i].id;
      if (!table[i]) {
        require(o, false, id + ": no sequence");
        continue;
      }
      ++sequences;
      const ARSequence& s = *table[i];
      require(o, s.certified && is_exact(s.sequence), id + ": not certified");
      require(o, s.middle_summand_count <= 2, id + ": middle has " + std::to_string(s.middle_summand_count));
      for (std::size_t u = 0; u < cat.size(); ++u) {
        const Representation& U = cat.entries[u].module;
        const long long defect = static_cast<long long>(oracle::hom_dim(U, s.sequence.left)) -
                                 static_cast<long long>(oracle::hom_dim(U, s.sequence.middle)) +
                                 static_cast<long long>(oracle::hom_dim(U, s.sequence.right));
        require(o, defect == (u == i ? 1 : 0), id + ": defect at " + cat.entries[u].id);
      }
    }
  }
  o.detail = std::to_string(sequences) + " sequences" + (o.detail.empty() ? "" : "; ") + o.detail;
  within(o, t0, 60);
  return o;
}

// 6 --------------------------------------------------------------------------------------
Outcome witness_run(std::size_t prime, std::uint32_t q) {
  Outcome o;
  const auto t0 = Clock::now();
  const auto gp = fixture::load("gp");
  const auto t = find_witness_triple(*gp);
  if (!t) return {false, "no witness triple"};
  const WitnessExtension w = build_witness(fixture::over(gp, q), *t, prime);
  require(o, is_exact(w.sequence), "sequence not exact");
  const std::size_t bu = decompose(w.band_u).summand_count();
  const std::size_t bv = decompose(w.band_v).summand_count();
  require(o, bu == 1 && bv == 1, "band modules decompose");
  const std::size_t count = decompose(w.glued).summand_count();
  require(o, count == prime, "p=" + std::to_string(prime) + " q=" + std::to_string(q) +
                                 ": middle has " + std::to_string(count) + " summands, expected " +
                                 std::to_string(prime));
  o.detail = "p=" + std::to_string(prime) + " dim=" + std::to_string(w.glued.total_dim()) +
             " summands=" + std::to_string(count) + (o.detail.empty() ? "" : "; ") + o.detail;
  within(o, t0, 120);
  return o;
}

Outcome witness_extension() {
  Outcome a = witness_run(11, 23), b = witness_run(13, 53);
  return {a.pass && b.pass, a.detail + " | " + b.detail};
}

// 7 --------------------------------------------------------------------------------------
Outcome classification() {
  Outcome o;
  for (const char* name : {"a3", "a3nr"}) {
    const auto c = classify(*fixture::load(name));
    require(o, c.verdict == Verdict::Finite, std::string(name) + " is " + verdict_name(c.verdict));
  }
  const auto k = classify(*fixture::load("kronecker"));
  require(o, k.verdict == Verdict::Domestic && k.search_complete, "kronecker is " + verdict_name(k.verdict));
  require(o, k.bands.size() == 1, "kronecker has " + std::to_string(k.bands.size()) + " band classes");
  const auto gp = fixture::load("gp");
  const auto g = classify(*gp);
  require(o, g.verdict == Verdict::NonDomestic, "gp is " + verdict_name(g.verdict));
  if (g.evidence_roots.size() == 2) {
    const Quiver& q = gp->quiver();
    require(o, canonical_cyclic(q, g.evidence_roots[0]) != canonical_cyclic(q, g.evidence_roots[1]),
            "gp roots coincide");
    o.detail = "kronecker bound=" + std::to_string(k.bound) + ", gp generators " +
               format_walk(q, g.evidence[0]) + " | " + format_walk(q, g.evidence[1]);
  } else {
    require(o, false, "gp certificate lacks two generators");
  }
  return o;
}

// 8 --------------------------------------------------------------------------------------
Outcome fine_wolf_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  auto check = [&](const std::vector<int>& x, const std::vector<int>& y) {
    ++cases;
    const std::size_t n = x.size(), m = y.size(), limit = 4 * (n + m);
    const std::size_t pre = oracle::power_prefix(x, y, limit);
    require(o, common_power_prefix<int>(x, y, limit) == pre, "prefix mismatch");
    const bool root = oracle::common_root(x, y);
    const bool forced = fine_wolf_common_power<int>(x, y, pre) == FineWolfVerdict::ForcedCommonRoot;
    if (forced) require(o, root, "false ForcedCommonRoot");
    if (!root) require(o, pre < n + m - std::gcd(n, m), "prefix reaches the threshold without a common root");
    if (root) require(o, forced, "common root not forced");
  };
  // exhaustive over {0,1} with lengths up to 6; sharpness per length pair
  std::vector<std::vector<std::vector<int>>> by_len(7);
  for (std::size_t len = 1; len <= 6; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::vector<int> w(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = (bits >> i) & 1;
      by_len[len].push_back(w);
    }
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 6; ++m) {
      std::size_t best = 0;
      for (const auto& x : by_len[n])
        for (const auto& y : by_len[m]) {
          check(x, y);
          if (!oracle::common_root(x, y)) best = std::max(best, oracle::power_prefix(x, y, 64));
        }
      const std::size_t threshold = n + m - std::gcd(n, m);
      require(o, best + 1 == threshold,
              "threshold not sharp at (" + std::to_string(n) + "," + std::to_string(m) + ")");
      require(o, fine_wolf_common_power(n, m, threshold) == FineWolfVerdict::ForcedCommonRoot &&
                     fine_wolf_common_power(n, m, threshold - 1) == FineWolfVerdict::Inconclusive,
              "verdict threshold off at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 10000; ++t) {
    std::vector<int> x(1 + rng() % 12), y;
    for (auto& c : x) c = rng() % 2;
    if (t % 4 == 0) {
      // powers of a shared root
      std::vector<int> r(1 + rng() % 4);
      for (auto& c : r) c = rng() % 2;
      x.clear();
      for (std::size_t k = 1 + rng() % 3; k; --k) x.insert(x.end(), r.begin(), r.end());
      for (std::size_t k = 1 + rng() % 3; k; --k) y.insert(y.end(), r.begin(), r.end());
    } else {
      y.resize(1 + rng() % 12);
      for (auto& c : y) c = rng() % 2;
    }
    check(x, y);
  }
  o.detail = std::to_string(cases) + " cases" + (o.detail.empty() ? "" : "; ") + o.detail;
  within(o, t0, 30);
  return o;
}

// 9 --------------------------------------------------------------------------------------
Outcome oracle_agreement() {
  Outcome o;
  const Catalog cat = enumerate_indecomposables(fixture::load("a3"), 8);
  const auto mods = cat.modules();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    std::vector<Representation> parts;
    for (std::size_t k = 1 + rng() % 5; k; --k) parts.push_back(mods[rng() % mods.size()]);
    const Representation m = direct_sum(parts);
    const auto mult = catalog_decompose(m, mods);
    const std::size_t by_catalog = std::accumulate(mult.begin(), mult.end(), std::size_t{0});
    const std::size_t by_fitting = decompose(m, {50, static_cast<std::uint64_t>(t)}).summand_count();
    require(o, by_catalog == by_fitting && by_fitting == parts.size(),
            "sum " + std::to_string(t) + ": " + std::to_string(by_fitting) + " vs " + std::to_string(by_catalog));
  }
  o.detail = std::string("100 sums") + (o.detail.empty() ? "" : "; ") + o.detail;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"main theorem, sufficiency on a3/a3nr", main_theorem_sufficiency},
      {"main theorem, necessity on d4sub", d4_necessity},
      {"hom order versus summand counts", degeneration_counts},
      {"Riedtmann witness identity", riedtmann_identity},
      {"almost split sequences certified", ar_certification},
      {"non-domestic witness extension", witness_extension},
      {"classification verdicts", classification},
      {"Fine-Wolf property suite", fine_wolf_suite},
      {"decompose versus catalog oracle", oracle_agreement},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const int id = static_cast<int>(i + 1);
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << " (" << o.detail << ")" << std::endl;
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::cout << "summary: " << criteria.size() - failed.size() << "/" << criteria.size() << " PASS";
  if (!expected.empty()) std::cout << (failed == expected ? ", failures as recorded" : ", failures differ from the record");
  std::cout << std::endl;
  return failed == expected ? 0 : 1;
}
