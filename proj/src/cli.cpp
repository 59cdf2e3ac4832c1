// Copyright 2026 The crkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crkit/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "crkit/amenability.hpp"
#include "crkit/cell_graph.hpp"
#include "crkit/fractional_lp.hpp"
#include "crkit/mcvp.hpp"
#include "crkit/oracles.hpp"
#include "crkit/refinement.hpp"
#include "crkit/tinhofer.hpp"

namespace crkit::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CRKIT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InvalidArgument("CRKIT_SEED is not an unsigned integer");
    }
  }
  return 0;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string hex64(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << x;
  return out.str();
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Shared state of one invocation: inputs are read through here so the
// report can carry a digest of everything consumed.
struct Context {
  std::ostream& out;
  bool json_mode = false;
  std::uint64_t seed = 0;
  std::uint64_t digest = 1469598103934665603ull;
  json report = json::object();
  json verdicts = json::object();
  json timings = json::object();

  std::string input(const std::string& path) {
    std::string text = read_text(path);
    for (unsigned char ch : text) {
      digest ^= ch;
      digest *= 1099511628211ull;
    }
    return text;
  }
  ColoredGraph graph(const std::string& path) {
    std::string text = input(path);
    try {
      return load(text);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), path + ": " + std::string(e.what()));
    }
  }
  // Prints only in text mode.
  template <class... T>
  void say(const T&... parts) {
    if (json_mode) return;
    (out << ... << parts);
    out << '\n';
  }
};

json partition_json(const Partition& p) {
  json classes = json::array();
  for (const VertexSet& c : p.classes) classes.push_back(std::vector<Vertex>(c.begin(), c.end()));
  return classes;
}

std::string join(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

json transcript_json(const std::vector<IndividualizationStep>& steps) {
  json arr = json::array();
  for (const auto& s : steps) arr.push_back({{"round", s.round}, {"class", s.cls}, {"u", s.u}, {"v", s.v}});
  return arr;
}

void print_transcript(Context& ctx, const std::vector<IndividualizationStep>& steps) {
  for (const auto& s : steps)
    ctx.say("  round ", s.round, ": class ", s.cls, " individualize ", s.u, " -> ", s.v);
}

int cmd_refine(Context& ctx, const std::string& file, bool trace) {
  ColoredGraph g = ctx.graph(file);
  auto t0 = Clock::now();
  StableResult r = stable_partition(g, {Engine::Worklist, trace});
  ctx.timings["refine_ms"] = ms_since(t0);
  const Partition& p = r.partition;
  ctx.verdicts["classes"] = p.size();
  ctx.verdicts["discrete"] = p.is_discrete();
  ctx.report["partition"] = partition_json(p);
  if (trace) {
    ctx.report["trace"] = {{"rounds", r.trace.rounds}, {"sizes", r.trace.sizes}};
    ctx.say("rounds ", r.trace.rounds);
    for (std::size_t i = 0; i < r.trace.sizes.size(); ++i)
      ctx.say("round ", i, " classes ", r.trace.sizes[i]);
  }
  ctx.say("classes ", p.size(), p.is_discrete() ? " (discrete)" : "");
  for (ClassId c = 0; c < p.size(); ++c)
    ctx.say("class ", c, " size ", p.classes[c].size(), " : ", join(p.classes[c].ids()));
  return kPositive;
}

json cell_graph_json(const CellGraphData& cg) {
  json cells = json::array();
  for (ClassId c = 0; c < cg.cells.size(); ++c) {
    cells.push_back({{"id", c},
                     {"size", cg.cell_size(c)},
                     {"label", to_string(cg.cell_labels[c].kind)},
                     {"degree", cg.cell_labels[c].degree},
                     {"vertices", std::vector<Vertex>(cg.cells.classes[c].begin(),
                                                      cg.cells.classes[c].end())}});
  }
  json pairs = json::array();
  for (const CellPair& p : cg.pairs) {
    pairs.push_back({{"x", p.x},
                     {"y", p.y},
                     {"label", to_string(p.label.kind)},
                     {"d_xy", p.label.d_xy},
                     {"d_yx", p.label.d_yx},
                     {"s", p.label.s},
                     {"t", p.label.t}});
  }
  json comps = json::array();
  for (const auto& comp : cg.components) {
    comps.push_back({{"cells", comp.cells},
                     {"tree", comp.is_tree},
                     {"heterogeneous", comp.heterogeneous},
                     {"min_cardinality", comp.min_cardinality},
                     {"root", comp.root},
                     {"monotone", comp.is_tree && !comp.monotonicity_violation}});
  }
  return {{"cells", cells}, {"pairs", pairs}, {"components", comps}};
}

int cmd_cellgraph(Context& ctx, const std::string& file, bool dot) {
  ColoredGraph g = ctx.graph(file);
  CellGraphData cg = build_cell_graph(g);
  ctx.verdicts["cells"] = cg.cells.size();
  ctx.verdicts["components"] = cg.components.size();
  ctx.report["cell_graph"] = cell_graph_json(cg);
  if (!ctx.json_mode) ctx.out << (dot ? to_dot(cg) : describe(cg));
  return kPositive;
}

int cmd_amenable(Context& ctx, const std::string& file, bool witness, bool cross_check) {
  ColoredGraph g = ctx.graph(file);
  auto t0 = Clock::now();
  CellGraphData cg = build_cell_graph(g);
  AmenabilityVerdict v = is_amenable(g, cg);
  ctx.timings["recognize_ms"] = ms_since(t0);
  ctx.verdicts["amenable"] = v.amenable;
  ctx.say(v.amenable ? "amenable" : "not amenable");
  if (v.violation) {
    const bool valid = verify_violation(cg, *v.violation);
    ctx.report["witness"] = {{"condition", std::string(1, v.violation->condition)},
                             {"kind", v.violation->kind},
                             {"cells", v.violation->cells},
                             {"cycle", v.violation->cycle},
                             {"verified", valid}};
    if (witness) ctx.say("witness: ", describe(*v.violation), valid ? " [verified]" : " [INVALID]");
  }
  if (cross_check) {
    AmenabilityVerdict c = check_cdef(g);
    ctx.verdicts["conditions_a_to_f"] = c.amenable;
    ctx.say("conditions A-F: ", c.amenable ? "amenable" : "not amenable");
    if (g.n() <= 7) {
      const bool bf = amenable_bruteforce(g);
      ctx.verdicts["bruteforce"] = bf;
      ctx.say("brute force: ", bf ? "amenable" : "not amenable");
      ctx.verdicts["agree"] = bf == v.amenable && c.amenable == v.amenable;
    } else {
      ctx.verdicts["bruteforce"] = "skipped";
      ctx.verdicts["agree"] = c.amenable == v.amenable;
      ctx.say("brute force: skipped (more than 7 vertices)");
    }
  }
  return v.amenable ? kPositive : kNegative;
}

TinhoferPolicy make_policy(const std::string& name, std::uint64_t seed) {
  if (name == "det") return {Policy::Deterministic, seed};
  if (name == "rand") return {Policy::SeededRandom, seed};
  throw InvalidArgument("unknown policy '" + name + "'");
}

int cmd_iso(Context& ctx, const std::string& fg, const std::string& fh, const std::string& policy,
            bool transcript) {
  ColoredGraph g = ctx.graph(fg), h = ctx.graph(fh);
  auto t0 = Clock::now();
  IsoResult r = tinhofer_iso(g, h, make_policy(policy, ctx.seed));
  ctx.timings["iso_ms"] = ms_since(t0);
  ctx.verdicts["isomorphic"] = r.isomorphic;
  if (!r.isomorphic) ctx.verdicts["reason"] = r.reason;
  ctx.report["policy"] = policy;
  if (r.isomorphic) ctx.report["mapping"] = r.mapping;
  ctx.report["transcript"] = transcript_json(r.transcript);
  if (r.isomorphic) {
    ctx.say("isomorphic");
    ctx.say("mapping: ", join(r.mapping));
  } else {
    ctx.say("non-isomorphic (", r.reason, ")");
  }
  if (transcript) print_transcript(ctx, r.transcript);
  return r.isomorphic ? kPositive : kNegative;
}

int cmd_canon(Context& ctx, const std::string& file, const std::string& policy) {
  ColoredGraph g = ctx.graph(file);
  CanonicalForm cf = canonical_form(g, make_policy(policy, ctx.seed));
  ctx.report["order"] = cf.order;
  ctx.verdicts["hash"] = hex64(cf.hash);
  ctx.say("order: ", join(cf.order));
  ctx.say("hash: ", hex64(cf.hash));
  return kPositive;
}

int cmd_fractiso(Context& ctx, const std::string& fg, const std::string& fh) {
  ColoredGraph g = ctx.graph(fg), h = ctx.graph(fh);
  auto t0 = Clock::now();
  const bool f = is_fractionally_isomorphic(g, h);
  ctx.timings["lp_ms"] = ms_since(t0);
  ctx.verdicts["fractionally_isomorphic"] = f;
  ctx.say(f ? "fractionally isomorphic" : "not fractionally isomorphic");
  return f ? kPositive : kNegative;
}

int cmd_compact(Context& ctx, const std::string& file, std::size_t trials, bool witness) {
  ColoredGraph g = ctx.graph(file);
  if (!g.is_simple()) throw InvalidArgument("compact requires a simple graph");
  ctx.report["trials"] = trials;
  if (is_amenable(g).amenable) {
    ctx.verdicts["compact"] = "certified";
    ctx.verdicts["basis"] = "amenable graphs are compact";
    ctx.say("compact (certified: the graph is amenable)");
    return kPositive;
  }
  auto t0 = Clock::now();
  CompactProbeResult r = compact_probe(g, trials, ctx.seed);
  ctx.timings["probe_ms"] = ms_since(t0);
  ctx.report["trials_run"] = r.trials_run;
  if (r.witness) {
    ctx.verdicts["compact"] = false;
    ctx.report["witness_seed"] = r.witness_seed;
    json rows = json::array();
    for (std::size_t i = 0; i < r.witness->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < r.witness->cols(); ++j) row.push_back(to_string(r.witness->at(i, j)));
      rows.push_back(row);
    }
    ctx.report["witness"] = rows;
    ctx.say("not compact: non-integral fractional automorphism found (objective seed ",
            r.witness_seed, ")");
    if (witness && !ctx.json_mode) ctx.out << r.witness->to_string();
    return kNegative;
  }
  ctx.verdicts["compact"] = "open";
  ctx.say("no counterexample in ", r.trials_run, " trials (not a proof of compactness)");
  return kPositive;
}

// Runs `f`, recording "budget" instead of a verdict when it runs out.
template <class F>
json guarded(F&& f) {
  try {
    return f();
  } catch (const BudgetExceeded&) {
    return "budget";
  }
}

int cmd_classify(Context& ctx, const std::string& file, std::size_t trials) {
  ColoredGraph g = ctx.graph(file);
  if (!g.is_simple()) throw InvalidArgument("classify requires a simple graph");
  auto t0 = Clock::now();
  json& v = ctx.verdicts;
  v["discrete"] = is_discrete(g);
  const bool amenable = is_amenable(g).amenable;
  v["amenable"] = amenable;
  if (amenable) {
    v["compact"] = "certified";
  } else {
    v["compact"] = guarded([&]() -> json {
      return compact_probe(g, trials, ctx.seed).witness ? json(false) : json("open");
    });
  }
  v["godsil"] = guarded([&]() -> json { return is_godsil(g); });
  v["tinhofer"] = guarded([&]() -> json { return is_tinhofer_bruteforce(g).tinhofer; });
  v["refinable"] = guarded([&]() -> json { return is_refinable(g); });
  ctx.timings["classify_ms"] = ms_since(t0);
  for (const auto& [k, val] : v.items()) ctx.say(std::left, std::setw(10), k, " ", val.dump());
  return kPositive;
}

int cmd_sweep(Context& ctx, std::size_t n, std::size_t probe_trials) {
  auto t0 = Clock::now();
  SweepReport r = sweep(n, probe_trials, ctx.seed);
  ctx.timings["sweep_ms"] = ms_since(t0);
  json& v = ctx.verdicts;
  v["n"] = r.n;
  v["labeled"] = r.labeled;
  v["iso_classes"] = r.iso_classes;
  v["discrete"] = r.discrete;
  v["amenable"] = r.amenable;
  v["amenable_bruteforce"] = r.amenable_bruteforce;
  v["godsil"] = r.godsil;
  v["tinhofer"] = r.tinhofer;
  v["refinable"] = r.refinable;
  if (probe_trials > 0) v["probe_noncompact"] = r.probe_noncompact;
  v["inclusion_violations"] = r.inclusion_violations;
  ctx.report["violations"] = r.violations;
  for (const auto& [k, val] : v.items()) ctx.say(std::left, std::setw(22), k, " ", val.dump());
  for (const auto& s : r.violations) ctx.say("violation: ", s);
  return r.inclusion_violations == 0 ? kPositive : kNegative;
}

int cmd_reduce(Context& ctx, const std::string& file, const std::string& variant,
               const std::string& output) {
  std::string text = ctx.input(file);
  MonotoneCircuit c = parse_circuit(text);
  ReductionOutput r = reduce(c, parse_variant(variant));
  ctx.verdicts["value"] = evaluate(c);
  ctx.verdicts["vertices"] = r.graph.n();
  ctx.verdicts["edges"] = r.graph.num_edges();
  ctx.verdicts["colors"] = r.graph.num_colors();
  std::size_t cfi = 0, imp = 0, link = 0;
  for (const auto& gi : r.gadgets) {
    cfi += gi.kind == "CFI";
    imp += gi.kind == "IMP";
    link += gi.kind == "LINK";
  }
  ctx.report["gadgets"] = {{"CFI", cfi}, {"IMP", imp}, {"LINK", link}};
  if (output.empty() || output == "-") {
    if (!ctx.json_mode) ctx.out << save(r.graph);
    else ctx.report["graph"] = save(r.graph);
  } else {
    save_file(r.graph, output);
    ctx.say("wrote ", output, ": ", r.graph.n(), " vertices, ", r.graph.num_edges(), " edges, ",
            r.graph.num_colors(), " colors");
  }
  return kPositive;
}

int cmd_bench(Context& ctx, const std::string& target, std::size_t n, std::size_t m,
              std::size_t trials) {
  if (target != "refine") throw InvalidArgument("unknown bench target '" + target + "'");
  json runs = json::array();
  double total = 0;
  std::size_t classes = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    ColoredGraph g = graphs::random_gnm(n, m, ctx.seed + t);
    auto t0 = Clock::now();
    classes = stable_partition(g).partition.size();
    const double ms = ms_since(t0);
    total += ms;
    runs.push_back(ms);
    ctx.say("trial ", t, ": ", std::fixed, std::setprecision(1), ms, " ms, ", classes, " classes");
  }
  ctx.report["n"] = n;
  ctx.report["m"] = m;
  ctx.timings["runs_ms"] = runs;
  ctx.timings["mean_ms"] = trials ? total / static_cast<double>(trials) : 0.0;
  ctx.verdicts["classes_last"] = classes;
  ctx.say("mean ", std::fixed, std::setprecision(1), trials ? total / static_cast<double>(trials) : 0.0,
          " ms");
  return kPositive;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"color refinement, amenability and related graph isomorphism tools", "crkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  long long budget_ms = 0;
  app.add_flag("--json", json_mode, "machine-readable report");
  app.add_option("--budget-ms", budget_ms, "soft wall-clock limit in milliseconds (exit 3)");
  app.set_version_flag("--version", kVersion);

  std::optional<std::uint64_t> seed_opt;
  std::function<int(Context&)> action;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_opt, "random seed (default: CRKIT_SEED or 0)");
  };

  std::string f1, f2, policy = "det", variant = "G", output, target;
  bool flag_a = false, flag_b = false;
  std::size_t trials = 100, bench_trials = 3, n = 0, m = 0, probe_trials = 0, all_n = 0;
  bool all_n_given = false;

  auto* refine = app.add_subcommand("refine", "stable partition");
  refine->add_option("file", f1)->required();
  refine->add_flag("--trace", flag_a, "class counts per round");
  refine->callback([&] { action = [&](Context& c) { return cmd_refine(c, f1, flag_a); }; });

  auto* cell = app.add_subcommand("cellgraph", "labeled cell graph");
  cell->add_option("file", f1)->required();
  cell->add_flag("--dot", flag_a, "DOT drawing");
  cell->callback([&] { action = [&](Context& c) { return cmd_cellgraph(c, f1, flag_a); }; });

  auto* amen = app.add_subcommand("amenable", "amenability recognizer");
  amen->add_option("file", f1)->required();
  amen->add_flag("--witness", flag_a, "print the violated condition");
  amen->add_flag("--cross-check", flag_b, "also run the A-F checker and the brute-force oracle");
  amen->callback([&] { action = [&](Context& c) { return cmd_amenable(c, f1, flag_a, flag_b); }; });

  auto* iso = app.add_subcommand("iso", "Tinhofer isomorphism test");
  iso->add_option("first", f1)->required();
  iso->add_option("second", f2)->required();
  iso->add_option("--policy", policy, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  iso->add_flag("--transcript", flag_a, "print individualization steps");
  add_seed(iso);
  iso->callback([&] { action = [&](Context& c) { return cmd_iso(c, f1, f2, policy, flag_a); }; });

  auto* canon = app.add_subcommand("canon", "canonical ordering (Tinhofer graphs)");
  canon->add_option("file", f1)->required();
  canon->add_option("--policy", policy, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  add_seed(canon);
  canon->callback([&] { action = [&](Context& c) { return cmd_canon(c, f1, policy); }; });

  auto* frac = app.add_subcommand("fractiso", "fractional isomorphism (exact LP)");
  frac->add_option("first", f1)->required();
  frac->add_option("second", f2)->required();
  frac->callback([&] { action = [&](Context& c) { return cmd_fractiso(c, f1, f2); }; });

  auto* compact = app.add_subcommand("compact", "search for a non-integral fractional automorphism");
  compact->add_option("file", f1)->required();
  compact->add_option("--trials", trials, "seeded objectives");
  compact->add_flag("--witness", flag_a, "print the witness matrix");
  add_seed(compact);
  compact->callback([&] { action = [&](Context& c) { return cmd_compact(c, f1, trials, flag_a); }; });

  auto* classify = app.add_subcommand("classify", "hierarchy membership");
  classify->add_option("file", f1);
  classify->add_option("--trials", trials, "compactness probe trials");
  classify->add_option("--all-n", all_n, "sweep all labeled graphs on K vertices instead");
  add_seed(classify);
  classify->callback([&] {
    all_n_given = classify->count("--all-n") > 0;
    if (!all_n_given && f1.empty()) throw CLI::ValidationError("classify", "a graph file or --all-n is required");
    action = [&](Context& c) {
      return all_n_given ? cmd_sweep(c, all_n, 0) : cmd_classify(c, f1, trials);
    };
  });

  auto* red = app.add_subcommand("reduce", "monotone circuit to colored graph");
  red->add_option("circuit", f1)->required();
  red->add_option("--variant", variant, "G, Gp or Gpp")->check(CLI::IsMember({"G", "Gp", "Gpp"}));
  red->add_option("-o,--output", output, "graph file (default: stdout)");
  red->callback([&] { action = [&](Context& c) { return cmd_reduce(c, f1, variant, output); }; });

  auto* bench = app.add_subcommand("bench", "timing runs");
  bench->add_option("target", target)->required()->check(CLI::IsMember({"refine"}));
  bench->add_option("--n", n, "vertices")->required();
  bench->add_option("--m", m, "edges")->required();
  bench->add_option("--trials", bench_trials, "repetitions");
  add_seed(bench);
  bench->callback([&] { action = [&](Context& c) { return cmd_bench(c, target, n, m, bench_trials); }; });

  auto* sw = app.add_subcommand("sweep", "hierarchy census over all labeled graphs on n vertices");
  sw->add_option("n", n)->required()->check(CLI::Range(0, 7));
  sw->add_option("--probe-trials", probe_trials, "compactness probe trials per class");
  add_seed(sw);
  sw->callback([&] { action = [&](Context& c) { return cmd_sweep(c, n, probe_trials); }; });

  std::vector<std::string> argv_store{"crkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }

  Context ctx{out};
  ctx.json_mode = json_mode;
  int code = kUsage;
  std::string error;
  const auto t0 = Clock::now();
  try {
    ctx.seed = seed_opt ? *seed_opt : default_seed();
    if (budget_ms > 0) Deadline::set_after(std::chrono::milliseconds(budget_ms));
    code = action(ctx);
  } catch (const BudgetExceeded& e) {
    code = kBudget;
    error = std::string("budget exceeded: ") + e.what();
  } catch (const ParseError& e) {
    code = kUsage;
    error = std::string("parse error: ") + e.what();
  } catch (const std::invalid_argument& e) {
    code = kUsage;
    error = std::string("error: ") + e.what();
  }
  Deadline::clear();
  ctx.timings["total_ms"] = ms_since(t0);
  if (!error.empty()) err << error << '\n';
  if (json_mode) {
    json report;
    report["command"] = app.get_subcommands().front()->get_name();
    report["input_digest"] = hex64(ctx.digest);
    report["verdicts"] = ctx.verdicts;
    report["timings"] = ctx.timings;
    report["seed"] = ctx.seed;
    report["tool_version"] = kVersion;
    report["exit_code"] = code;
    if (!error.empty()) report["error"] = error;
    for (const auto& [k, v] : ctx.report.items()) report[k] = v;
    out << report.dump(2) << '\n';
  }
  return code;
}

}  // namespace crkit::cli
