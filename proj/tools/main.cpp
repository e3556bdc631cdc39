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

// sbawb: command-line front end over the string algebra workbench.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "sba/artheory.hpp"
#include "sba/classify.hpp"
#include "sba/decomp.hpp"
#include "sba/error.hpp"
#include "sba/homalg.hpp"
#include "sba/parallel.hpp"
#include "sba/presentation.hpp"
#include "sba/representation.hpp"
#include "sba/words.hpp"

namespace sbawb {
namespace {

using namespace sba;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::optional<std::uint32_t> field;
  std::uint64_t seed = 0x5b0a5eedULL;
  std::size_t jobs = 0;
  std::string format = "text";
  bool allow_non_string = false;
  std::vector<std::string> modules;
  std::size_t trials = 50;
};

struct Context {
  const Globals& g;
  PresentationRef p;
  bool is_string = false;

  Format format() const { return g.format == "json" ? Format::Json : Format::Text; }
  std::size_t jobs() const { return g.jobs ? g.jobs : default_jobs(); }
  DecomposeOptions decompose_options() const { return {g.trials, g.seed}; }
  CensusOptions census_options() const { return {jobs(), g.trials, g.seed, true}; }
  const Quiver& quiver() const { return p->quiver(); }
  Report report(const std::string& command) const {
    return Report(command, g.seed, p->field().order());
  }
  int finish(const Report& r, int code) const {
    r.emit(std::cout, format());
    return code;
  }
};

Context load(const Globals& g, const std::string& path, bool gate = true) {
  Presentation base = load_presentation(path);
  if (g.field) base = base.with_field(PrimeField(*g.field));
  Context ctx{g, std::make_shared<const Presentation>(std::move(base)), false};
  const AxiomReport axioms = validate_axioms(*ctx.p);
  ctx.is_string = axioms.is_string() && check_finite_dimensional(*ctx.p).finite;
  if (gate && !ctx.is_string && !g.allow_non_string) {
    std::string why = axioms.violations.empty() ? "algebra is infinite dimensional"
                                                : axioms.violations.front();
    throw PreconditionError("not a string presentation (" + why +
                            "); pass --allow-non-string to proceed");
  }
  return ctx;
}

/// "<word>", "band:<word>:<lambda>[:<n>]" or "@file.mod".
Representation parse_module(const Context& ctx, const std::string& spec) {
  if (spec.empty()) throw ParseError(1, 1, "empty module specification");
  if (spec.front() == '@') return load_representation(ctx.p, spec.substr(1));
  if (spec.rfind("band:", 0) == 0) {
    std::vector<std::string> parts;
    std::string rest = spec.substr(5);
    for (std::size_t pos; (pos = rest.find(':')) != std::string::npos;) {
      parts.push_back(rest.substr(0, pos));
      rest = rest.substr(pos + 1);
    }
    parts.push_back(rest);
    if (parts.size() < 2 || parts.size() > 3)
      throw ParseError(1, 1, "band syntax is band:<word>:<lambda>[:<n>]");
    try {
      const Walk w = parse_walk(ctx.quiver(), parts[0]);
      const unsigned long lambda = std::stoul(parts[1]);
      const std::size_t n = parts.size() == 3 ? std::stoul(parts[2]) : 1;
      return band_module(ctx.p, w, static_cast<Residue>(lambda % ctx.p->field().order()), n);
    } catch (const std::logic_error&) {
      throw ParseError(1, 1, "bad number in band specification '" + spec + "'");
    }
  }
  return string_module(ctx.p, parse_walk(ctx.quiver(), spec));
}

std::string module_label(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') return std::filesystem::path(spec.substr(1)).stem();
  return spec;
}

/// Enumerated catalog for string presentations, otherwise the --module list.
Catalog build_catalog(const Context& ctx, std::size_t max_dim) {
  if (ctx.is_string) return enumerate_indecomposables(ctx.p, max_dim);
  if (ctx.g.modules.empty())
    throw PreconditionError("a non-string presentation needs its catalog via --module");
  std::vector<std::pair<std::string, Representation>> mods;
  for (const auto& spec : ctx.g.modules) mods.emplace_back(module_label(spec), parse_module(ctx, spec));
  return catalog_from_modules(ctx.p, std::move(mods));
}

/// Doubles the dimension bound until the enumeration lists every indecomposable.
Catalog complete_catalog(const Context& ctx, std::size_t floor) {
  if (!ctx.is_string) throw PreconditionError("complete catalogs need a string presentation");
  for (std::size_t d = std::max<std::size_t>(floor, 2);; d *= 2) {
    Catalog cat = enumerate_indecomposables(ctx.p, d);
    if (cat.refused() || cat.complete) return cat;
    if (d >= 256) throw PreconditionError("catalog still open at dimension 256");
  }
}

std::string words_of(const Quiver& q, const std::vector<Walk>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += " | ";
    out += format_walk(q, w);
  }
  return out;
}

Json walks_json(const Quiver& q, const std::vector<Walk>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(format_walk(q, w));
  return a;
}

std::string line_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int refuse(const Context& ctx, Report& r, const Catalog& cat) {
  r.set("refused", true);
  r.set("band_witness", format_walk(ctx.quiver(), *cat.band_witness));
  r.doc()["bands"] = walks_json(ctx.quiver(), cat.bands);
  for (const auto& b : cat.bands) r.line("band=" + format_walk(ctx.quiver(), b));
  return ctx.finish(r, kFail);
}

// --- subcommands ----------------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& path) {
  Context ctx = load(g, path, false);
  const AxiomReport ax = validate_axioms(*ctx.p);
  const FiniteDimensionReport fd = check_finite_dimensional(*ctx.p);
  Report r = ctx.report("validate");
  auto mark = [](bool ok) { return ok ? "ok" : "violated"; };
  r.line(std::string("S1: ") + mark(ax.s1));
  r.line(std::string("S2: ") + mark(ax.s2));
  r.line(std::string("S3: ") + mark(ax.s3));
  for (const auto& v : ax.violations) r.line(v);
  r.line(std::string("finite: ") + (fd.finite ? "yes" : "no"));
  if (fd.finite) r.line("paths: " + std::to_string(fd.surviving_paths.size()));
  r.line(std::string("string: ") + (ctx.is_string ? "yes" : "no"));
  Json& d = r.doc();
  d["s1"] = ax.s1;
  d["s2"] = ax.s2;
  d["s3"] = ax.s3;
  d["violations"] = ax.violations;
  d["finite"] = fd.finite;
  d["paths"] = fd.surviving_paths.size();
  d["string"] = ctx.is_string;
  return ctx.finish(r, ctx.is_string ? kOk : kFail);
}

int cmd_words(const Globals& g, const std::string& path, std::size_t max_len) {
  Context ctx = load(g, path);
  const auto ws = enumerate_words(*ctx.p, max_len);
  Report r = ctx.report("words");
  r.set("max_len", max_len);
  r.set("count", ws.size());
  for (const auto& w : ws) r.line("word=" + format_walk(ctx.quiver(), w));
  r.doc()["words"] = walks_json(ctx.quiver(), ws);
  return ctx.finish(r, kOk);
}

int cmd_classify(const Globals& g, const std::string& path, std::size_t bound) {
  Context ctx = load(g, path);
  const auto c = classify(*ctx.p, bound);
  const Quiver& q = ctx.quiver();
  Report r = ctx.report("classify");
  r.set("verdict", verdict_name(c.verdict));
  r.set("automaton_states", c.automaton_states);
  r.set("bound", c.bound);
  r.set("search_complete", c.search_complete);
  if (c.band_witness) r.set("band_witness", format_walk(q, *c.band_witness));
  if (!c.bands.empty()) {
    r.set("band_classes", c.bands.size());
    for (const auto& b : c.bands) r.line("band=" + format_walk(q, b));
    r.doc()["bands"] = walks_json(q, c.bands);
  }
  Json gens = Json::object();
  for (std::size_t a = 0; a < c.generators.size(); ++a) {
    const std::string& id = q.arrow(a).id;
    r.line("generators[" + id + "]=" + std::to_string(c.generators[a].size()));
    gens[id] = walks_json(q, c.generators[a]);
  }
  r.doc()["generators"] = gens;
  if (c.verdict == Verdict::NonDomestic) {
    r.set("alpha", q.arrow(c.alpha).id);
    r.set("evidence", words_of(q, c.evidence));
    r.set("evidence_roots", words_of(q, c.evidence_roots));
    r.set("common_prefix", c.common_prefix);
    r.set("fine_wolf",
          c.fine_wolf == FineWolfVerdict::Inconclusive ? "inconclusive" : "forced_common_root");
    r.doc()["evidence"] = walks_json(q, c.evidence);
    r.doc()["evidence_roots"] = walks_json(q, c.evidence_roots);
  }
  return ctx.finish(r, kOk);
}

int cmd_modules(const Globals& g, const std::string& path, std::size_t max_dim) {
  Context ctx = load(g, path);
  const Catalog cat = build_catalog(ctx, max_dim);
  Report r = ctx.report("modules");
  r.set("max_dim", max_dim);
  if (cat.refused()) return refuse(ctx, r, cat);
  r.set("count", cat.size());
  r.set("complete", cat.complete);
  Json list = Json::array();
  for (const auto& e : cat.entries) {
    const std::string dv = format_dimvec(e.module.dims());
    r.line("module id=" + e.id + " dimvec=" + dv + " projective=" + (e.projective ? "yes" : "no"));
    list.push_back({{"id", e.id}, {"dimvec", e.module.dims()}, {"projective", e.projective}});
  }
  r.doc()["modules"] = list;
  return ctx.finish(r, kOk);
}

int cmd_hom_ext(const Globals& g, const std::string& path, const std::string& ms,
                const std::string& ns, bool ext) {
  Context ctx = load(g, path);
  const Representation m = parse_module(ctx, ms), n = parse_module(ctx, ns);
  Report r = ctx.report(ext ? "ext" : "hom");
  r.set("m", ms);
  r.set("n", ns);
  r.set("m_dimvec", format_dimvec(m.dims()));
  r.set("n_dimvec", format_dimvec(n.dims()));
  if (ext)
    r.set("ext1_dim", ext1_dim(m, n));
  else
    r.set("hom_dim", hom_dim(m, n));
  return ctx.finish(r, kOk);
}

void census_lines(Report& r, const Census& c, Json& sink, bool text = true) {
  Json lines = Json::array();
  for (const auto& l : c.lines) {
    if (text)
      r.line("line=" + line_text(l.line) + " summands=" + std::to_string(l.summands) +
             " middle_dimvec=" + format_dimvec(l.middle_dims));
    lines.push_back({{"line", l.line}, {"summands", l.summands}, {"middle_dimvec", l.middle_dims}});
  }
  Json hist = Json::object();
  for (const auto& [k, count] : c.histogram) {
    if (text) r.line("histogram summands=" + std::to_string(k) + " lines=" + std::to_string(count));
    hist[std::to_string(k)] = count;
  }
  sink["ext1_dim"] = c.ext_dim;
  sink["lines"] = lines;
  sink["histogram"] = hist;
}

int cmd_census(const Globals& g, const std::string& path, const std::string& ms,
               const std::string& ns, bool no_cap) {
  Context ctx = load(g, path);
  const Representation m = parse_module(ctx, ms), n = parse_module(ctx, ns);
  CensusOptions opts = ctx.census_options();
  opts.enforce_cap = !no_cap;
  const Census c = middle_census(m, n, opts);
  Report r = ctx.report("middle-census");
  r.set("m", ms);
  r.set("n", ns);
  r.set("ext1_dim", c.ext_dim);
  r.set("line_count", c.lines.size());
  census_lines(r, c, r.doc());
  return ctx.finish(r, kOk);
}

int cmd_ar(const Globals& g, const std::string& path, const std::string& word,
           std::size_t max_dim) {
  Context ctx = load(g, path);
  const Quiver& q = ctx.quiver();
  const Walk v = parse_walk(q, word);
  const Catalog cat = complete_catalog(ctx, std::max(max_dim, v.length() + 1));
  Report r = ctx.report("ar");
  if (cat.refused()) return refuse(ctx, r, cat);
  const ARSequence s = ar_sequence(cat, v);
  r.set("v", format_walk(q, s.v_word));
  r.set("tau", format_walk(q, s.tau_word));
  r.set("middle", words_of(q, s.middle_words));
  r.set("middle_summand_count", s.middle_summand_count);
  r.set("middle_dimvec", format_dimvec(s.sequence.middle.dims()));
  r.set("certified", s.certified);
  r.doc()["middle_words"] = walks_json(q, s.middle_words);
  Json defect = Json::object();
  std::string text;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    defect[cat.entries[i].id] = s.defect[i];
    text += (i ? " " : "") + cat.entries[i].id + ":" + std::to_string(s.defect[i]);
  }
  r.doc()["defect"] = defect;
  r.line("defect " + text);
  return ctx.finish(r, s.certified ? kOk : kFail);
}

int cmd_degeneration(const Globals& g, const std::string& path, std::size_t max_dim) {
  Context ctx = load(g, path);
  const Catalog cat = complete_catalog(ctx, max_dim);
  Report r = ctx.report("degeneration");
  if (cat.refused()) return refuse(ctx, r, cat);
  const ARTable table = ar_table(cat);
  const DegenerationSurvey s =
      survey_degenerations(cat, table, max_dim, ctx.decompose_options(), ctx.jobs());
  r.set("max_dim", max_dim);
  r.set("modules", s.modules.size());
  Json pairs = Json::array();
  std::size_t leq = 0, failures = 0;
  for (const auto& pr : s.pairs) {
    const std::string delta = pr.leq ? std::to_string(pr.delta_formula) : "-";
    r.line("M=" + s.modules[pr.m].id + " N=" + s.modules[pr.n].id +
           " hom_leq=" + (pr.leq ? "true" : "false") + " |M|=" + std::to_string(pr.count_m) +
           " |N|=" + std::to_string(pr.count_n) + " delta_formula=" + delta +
           (pr.ok ? "" : " FAIL"));
    Json j = {{"M", s.modules[pr.m].id}, {"N", s.modules[pr.n].id}, {"hom_leq", pr.leq},
              {"count_m", pr.count_m},   {"count_n", pr.count_n}};
    if (pr.leq) {
      j["delta_formula"] = pr.delta_formula;
      j["riedtmann_verified"] = pr.riedtmann_verified;
    }
    j["ok"] = pr.ok;
    pairs.push_back(std::move(j));
    leq += pr.leq;
    failures += !pr.ok;
  }
  r.doc()["pairs"] = pairs;
  r.set("pair_count", s.pairs.size());
  r.set("hom_leq_pairs", leq);
  r.set("failures", failures);
  r.set("result", s.ok ? "PASS" : "FAIL");
  return ctx.finish(r, s.ok ? kOk : kFail);
}

std::uint32_t default_witness_field(std::size_t p) {
  for (std::uint64_t q = 2 * p + 1;; q += 2 * p)
    if (is_prime(q)) return static_cast<std::uint32_t>(q);
}

int cmd_witness(const Globals& g, const std::string& path, std::size_t prime,
                std::optional<std::uint32_t> q) {
  Globals local = g;
  local.field = q ? q : (g.field ? g.field : std::optional(default_witness_field(prime)));
  Context ctx = load(local, path);
  const Quiver& qv = ctx.quiver();
  const auto triple = find_witness_triple(*ctx.p);
  Report r = ctx.report("witness");
  if (!triple) throw PreconditionError("no witness triple among words of length <= 6");
  const WitnessExtension w = build_witness(ctx.p, *triple, prime);
  r.set("x", format_walk(qv, triple->x));
  r.set("y", format_walk(qv, triple->y));
  r.set("z", format_walk(qv, triple->z));
  r.set("u", format_walk(qv, w.u));
  r.set("v", format_walk(qv, w.v));
  r.set("p", prime);
  r.set("q", ctx.p->field().order());
  r.set("dim_band_u", w.band_u.total_dim());
  r.set("dim_band_v", w.band_v.total_dim());
  r.set("dim", w.glued.total_dim());
  r.set("dimvec", format_dimvec(w.glued.dims()));
  r.set("exact", is_exact(w.sequence));
  r.set("crossed_word_length", w.crossed_word.length());
  r.set("crossed_word_primitive", is_primitive(qv, w.crossed_word).primitive);
  const DecompositionReport d = decompose(w.glued, ctx.decompose_options());
  r.set("summands", d.summand_count());
  Json summands = Json::array();
  for (std::size_t k = 0; k < d.summands.size(); ++k) {
    const std::string dv = format_dimvec(d.summands[k].dims());
    r.line("summand " + std::to_string(k) + ": dimvec=" + dv + " endo_local=yes(trials=" +
           std::to_string(d.trials) + ")");
    summands.push_back({{"dimvec", d.summands[k].dims()}, {"trials", d.trials}});
  }
  r.doc()["summand_list"] = summands;
  r.doc()["crossed_word"] = format_walk(qv, w.crossed_word);
  const bool ok = d.summand_count() >= prime;
  r.set("result", ok ? "PASS" : "FAIL");
  return ctx.finish(r, ok ? kOk : kFail);
}

int cmd_verify_main(const Globals& g, const std::string& path, std::size_t max_dim,
                    bool no_cap) {
  Context ctx = load(g, path);
  const Catalog cat = build_catalog(ctx, max_dim);
  Report r = ctx.report("verify-main-theorem");
  r.set("max_dim", max_dim);
  if (cat.refused()) return refuse(ctx, r, cat);
  CensusOptions opts = ctx.census_options();
  opts.enforce_cap = !no_cap;
  const MainTheoremReport rep = verify_main_theorem(cat, opts);
  r.set("catalog", cat.size());
  r.set("ext_pairs", rep.pairs.size());
  Json pairs = Json::array();
  for (const auto& pc : rep.pairs) {
    std::size_t worst = 0;
    for (const auto& l : pc.census.lines) worst = std::max(worst, l.summands);
    r.line("pair M=" + cat.entries[pc.m].id + " N=" + cat.entries[pc.n].id +
           " ext1_dim=" + std::to_string(pc.census.ext_dim) +
           " max_summands=" + std::to_string(worst));
    for (const auto& l : pc.census.lines)
      if (l.summands > 2)
        r.line("  line=" + line_text(l.line) + " summands=" + std::to_string(l.summands) +
               " middle_dimvec=" + format_dimvec(l.middle_dims));
    Json j = {{"M", cat.entries[pc.m].id}, {"N", cat.entries[pc.n].id}};
    census_lines(r, pc.census, j, false);
    pairs.push_back(std::move(j));
  }
  r.doc()["pairs"] = pairs;
  r.set("max_summands", rep.max_summands);
  r.set("result", rep.holds ? "PASS" : "FAIL");
  return ctx.finish(r, rep.holds ? kOk : kFail);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"String algebra workbench: words, modules, extensions and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Prime field order overriding the presentation")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized endomorphism trials");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware concurrency)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--trials", g.trials, "Random endomorphisms tried per summand");
  app.add_flag("--allow-non-string", g.allow_non_string,
               "Run on presentations that fail the string axioms");
  app.add_option("--module", g.modules,
                 "Catalog member for non-string presentations (repeatable)");

  std::string path, ms, ns, word;
  std::size_t max_len = 4, bound = 0, max_dim = 4, prime = 11;
  std::optional<std::uint32_t> q;
  bool no_cap = false;
  std::function<int()> action;

  auto with_path = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("presentation", path, "Presentation file (.sba)")->required();
    return sub;
  };
  auto mn = [&](CLI::App* sub) {
    sub->add_option("--m", ms, "Module M: word, band:<word>:<lambda>[:<n>] or @file.mod")
        ->required();
    sub->add_option("--n", ns, "Module N")->required();
  };

  with_path("validate", "Check the string axioms and finite dimensionality")
      ->callback([&] { action = [&] { return cmd_validate(g, path); }; });
  auto* words = with_path("words", "Enumerate words up to a length");
  words->add_option("--max-len", max_len, "Maximal word length");
  words->callback([&] { action = [&] { return cmd_words(g, path, max_len); }; });
  auto* cls = with_path("classify", "Finite, domestic or non-domestic");
  cls->add_option("--bound", bound, "Generator search length (0 = 4 x automaton states)");
  cls->callback([&] { action = [&] { return cmd_classify(g, path, bound); }; });
  auto* mods = with_path("modules", "Catalog of indecomposables");
  mods->add_option("--max-dim", max_dim, "Dimension bound");
  mods->callback([&] { action = [&] { return cmd_modules(g, path, max_dim); }; });
  auto* hom = with_path("hom", "Dimension of Hom(M, N)");
  mn(hom);
  hom->callback([&] { action = [&] { return cmd_hom_ext(g, path, ms, ns, false); }; });
  auto* ext = with_path("ext", "Dimension of Ext^1(M, N)");
  mn(ext);
  ext->callback([&] { action = [&] { return cmd_hom_ext(g, path, ms, ns, true); }; });
  auto* census = with_path("middle-census", "Middle terms over the lines of P(Ext^1(M, N))");
  mn(census);
  census->add_flag("--no-cap", no_cap, "Allow censuses beyond the size cap");
  census->callback([&] { action = [&] { return cmd_census(g, path, ms, ns, no_cap); }; });
  auto* ar = with_path("ar", "Almost split sequence ending in a string module");
  ar->add_option("--word", word, "Word of the end term, e.g. \"a b^-1\" or \"e(1)\"")->required();
  ar->add_option("--max-dim", max_dim, "Initial catalog dimension bound");
  ar->callback([&] { action = [&] { return cmd_ar(g, path, word, max_dim); }; });
  auto* deg = with_path("degeneration", "Hom order against summand counts over catalog sums");
  deg->add_option("--max-dim", max_dim, "Total dimension bound of the sums");
  deg->callback([&] { action = [&] { return cmd_degeneration(g, path, max_dim); }; });
  auto* wit = with_path("witness", "Glued band extension with many middle summands");
  wit->add_option("--p", prime, "Odd prime p >= 11");
  wit->add_option("--q", q, "Field order (default: least prime = 1 mod 2p)");
  wit->callback([&] { action = [&] { return cmd_witness(g, path, prime, q); }; });
  auto* vmt = with_path("verify-main-theorem", "Middle terms have at most two summands");
  vmt->add_option("--max-dim", max_dim, "Catalog dimension bound");
  vmt->add_flag("--no-cap", no_cap, "Allow censuses beyond the size cap");
  vmt->callback([&] { action = [&] { return cmd_verify_main(g, path, max_dim, no_cap); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sbawb

int main(int argc, char** argv) { return sbawb::run(argc, argv); }
