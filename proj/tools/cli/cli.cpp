#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/format.hpp"
#include "setpair/cuts.hpp"
#include "setpair/error.hpp"
#include "setpair/functionals.hpp"
#include "setpair/graph.hpp"
#include "setpair/kcut.hpp"
#include "setpair/lovasz.hpp"
#include "setpair/parallel.hpp"
#include "setpair/relax.hpp"
#include "setpair/submodular.hpp"

namespace setpair::cli {

namespace {

using nlohmann::json;

json members_json(const VertexSet& s) {
  json arr = json::array();
  s.for_each([&](std::size_t v) { arr.push_back(v + 1); });
  return arr;
}

json pair_json(const SetPair& p) { return {{"a", members_json(p.a)}, {"b", members_json(p.b)}}; }

void put_value(json& j, const std::string& key, double v) {
  j[key] = round10(v);
  if (const auto hint = rational_hint(v)) j[key + "_rational"] = *hint;
}

json graph_json(const Graph& g) {
  return {{"n", g.n()}, {"m", g.m()}, {"digest", hex_digest(g.digest())}};
}

json certificate_json(const ViolationCertificate& c) {
  json ops = json::array();
  for (const SetPair& p : c.operands) ops.push_back(pair_json(p));
  json j = {{"kind", c.kind}, {"operands", ops}};
  put_value(j, "lhs", c.lhs);
  put_value(j, "rhs", c.rhs);
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

struct Common {
  std::string graph;
  std::size_t threads = 0;
};

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string kind;
  std::string method = "oracle";
  std::size_t restarts = 50;
  std::uint64_t seed = 7;
  std::size_t k = 0;
  std::string sense;
  std::string rule = "allow-empty";
  std::size_t max_iters = 200;
  double tol = 1e-10;
};

int cmd_solve(const SolveArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = read_edge_list(c.graph);
  json j = {{"command", "solve"}, {"kind", a.kind}, {"method", a.method}, {"graph", graph_json(g)}};
  std::string summary;

  if (a.kind == "kcut") {
    if (a.method != "oracle") throw InvalidArgument("kcut supports --method oracle only");
    if (a.k == 0) throw InvalidArgument("kcut needs --k");
    const Sense sense = a.sense.empty() ? Sense::Min : parse_sense(a.sense);
    if (a.rule != "allow-empty" && a.rule != "nonempty") {
      throw InvalidArgument("--rule must be allow-empty or nonempty");
    }
    const PartRule rule = a.rule == "nonempty" ? PartRule::NonEmpty : PartRule::AllowEmpty;
    const KCutResult r = kcut_discrete(g, a.k, sense, rule);
    j["parameters"] = {{"k", a.k}, {"sense", std::string(to_string(sense))}, {"rule", a.rule}};
    put_value(j, "value", r.value);
    json parts = json::array();
    for (const VertexSet& part : r.witness.parts) parts.push_back(members_json(part));
    j["witness"] = {{"parts", parts}};
    j["evaluations"] = r.evaluations;
    summary = "kcut (k=" + std::to_string(a.k) + ", " + std::string(to_string(sense)) +
              "): " + annotated(r.value);
  } else {
    const auto kind = parse_cut_kind(a.kind);
    if (!kind) throw InvalidArgument("unknown problem kind '" + a.kind + "'");
    if (!a.sense.empty() && parse_sense(a.sense) != sense_of(*kind)) {
      throw InvalidArgument(a.kind + " is a " + std::string(to_string(sense_of(*kind))) +
                            " problem; --sense cannot change that");
    }
    if (a.method == "oracle") {
      const CutResult r = discrete_optimum(g, *kind);
      put_value(j, "value", r.value);
      j["witness"] = pair_json(r.witness);
      j["evaluations"] = r.evaluations;
      summary = a.kind + ": " + annotated(r.value) + " at " + to_text(r.witness);
    } else if (a.method == "relax") {
      const RatioProblem problem = pair_ratio_problem(g, *kind);
      SolveOptions opts;
      opts.restarts = a.restarts;
      opts.seed = a.seed;
      opts.descent.max_iters = a.max_iters;
      opts.descent.tol = a.tol;
      const SolveReport rep = multi_start_solve(problem, opts);
      const SetPair witness = witness_from_pair(g, *kind, rep.rounded);
      const double value = *discrete_value(g, *kind, witness);
      j["parameters"] = {{"restarts", a.restarts}, {"seed", a.seed}, {"max_iters", a.max_iters},
                         {"tol", a.tol}};
      put_value(j, "value", value);
      j["witness"] = pair_json(witness);
      j["rounded"] = pair_json(rep.rounded);
      put_value(j, "rounded_value", rep.best_value);
      put_value(j, "continuous_value", rep.continuous_value);
      j["iterations"] = rep.iterations;
      j["starts"] = rep.restarts;
      summary = a.kind + ": " + annotated(value) + " at " + to_text(witness);
    } else {
      throw InvalidArgument("--method must be oracle or relax");
    }
  }
  emit(out, j);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << summary << " [" << a.method << ", " << fixed10(secs) << " s]\n";
  return kOk;
}

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string name;
  std::string vector;
  std::size_t k = 0;
};

int cmd_eval(const EvalArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list(c.graph);
  json j = {{"command", "eval"}, {"name", a.name}, {"graph", graph_json(g)}};

  if (a.name == "kcut") {
    if (a.k == 0) throw InvalidArgument("kcut needs --k");
    const BlockVector x = read_block_vector(a.vector, g.n());
    put_value(j, "FL", kcut_FL(g, a.k, x));
    put_value(j, "GL", kcut_GL(g, a.k, x));
    const double value = kcut_ratio(g, a.k, x);
    put_value(j, "value", value);
    emit(out, j);
    err << "kcut ratio " << annotated(value) << '\n';
    return kOk;
  }

  const std::vector<double> x = load_vector(a.vector);
  if (x.size() != g.n()) {
    throw InvalidArgument("vector has " + std::to_string(x.size()) + " entries, graph has " +
                          std::to_string(g.n()) + " vertices");
  }
  double value = 0.0;
  if (a.name == "I") {
    value = tv(g, x);
  } else if (a.name == "Iplus") {
    value = iplus(g, x);
  } else if (a.name == "Ihat") {
    value = ihat(g, x);
  } else if (a.name == "norm") {
    value = dnorm1(g, x);
  } else if (a.name == "sup") {
    value = sup_norm(x);
  } else if (a.name == "median") {
    const MedianDeviation md = median_dev(g, x);
    value = md.value;
    put_value(j, "minimizer", md.minimizer);
  } else if (a.name == "F1" || a.name == "F2" || a.name == "G1" || a.name == "G2" ||
             a.name == "G3") {
    value = table_extension_closed(g, parse_table_row(a.name), x);
  } else if (const auto kind = parse_cut_kind(a.name)) {
    value = continuous_objective(g, *kind, x);
    const RatioProblem problem = pair_ratio_problem(g, *kind);
    const RoundResult r = threshold_round(problem, x);
    const SetPair witness = witness_from_pair(g, *kind, r.pair);
    j["rounded"] = pair_json(witness);
    put_value(j, "rounded_value", *discrete_value(g, *kind, witness));
  } else {
    throw InvalidArgument("unknown functional or objective '" + a.name + "'");
  }
  put_value(j, "value", value);
  emit(out, j);
  err << a.name << " = " << annotated(value) << '\n';
  return kOk;
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string check;
  std::string function;
  std::string builtin;
  std::size_t n = 0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
};

SetPairFunction load_function(const CheckArgs& a, const Common& c, std::size_t& n) {
  if (!a.function.empty() && !a.builtin.empty()) {
    throw InvalidArgument("give either --function or --builtin, not both");
  }
  if (!a.function.empty()) {
    if (n == 0) throw InvalidArgument("--function needs --n");
    return read_pair_table(a.function, n).as_function(a.function);
  }
  if (a.builtin.empty()) throw InvalidArgument("give --function FILE or --builtin NAME");
  if (a.builtin == "sqrt-card") {
    if (n == 0) throw InvalidArgument("--builtin sqrt-card needs --n");
    return sqrt_cardinality(n);
  }
  if (a.builtin == "random") {
    if (n == 0) throw InvalidArgument("--builtin random needs --n");
    return PairTable::random(n, a.seed).as_function("random");
  }
  const TableRow row = parse_table_row(a.builtin);
  if (c.graph.empty()) throw InvalidArgument("--builtin " + a.builtin + " needs --graph");
  const Graph g = read_edge_list(c.graph);
  if (n != 0 && n != g.n()) throw InvalidArgument("--n does not match the graph");
  n = g.n();
  return table_function(g, row);
}

int cmd_check(const CheckArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  std::size_t n = a.n;
  const SetPairFunction f = load_function(a, c, n);
  json j = {{"command", "check"}, {"check", a.check}, {"function", f.name()}, {"n", n}};
  bool pass = true;

  auto certify = [&](const std::optional<ViolationCertificate>& cert) {
    pass = !cert;
    if (cert) j["certificate"] = certificate_json(*cert);
  };

  if (a.check == "pair-submodular") {
    if (n <= kMaxExhaustiveCheckVertices) {
      j["mode"] = "exhaustive";
      certify(check_pair_submodular(f));
    } else {
      j["mode"] = "sampled";
      j["trials"] = a.trials;
      j["seed"] = a.seed;
      certify(check_pair_submodular_sampled(f, a.trials, a.seed));
    }
  } else if (a.check == "partial") {
    certify(check_partial_submodular(PairTable::tabulate(f)));
  } else if (a.check == "nested" || a.check == "nested-lattice") {
    certify(check_nested_submodular(PairTable::tabulate(f), a.check == "nested"
                                                                ? NestedForm::Corrected
                                                                : NestedForm::Lattice));
  } else if (a.check == "strict") {
    const StrictReport r = check_strict_pair_submodular(PairTable::tabulate(f));
    pass = r.strict();
    j["equality_cases"] = r.equality_cases;
    if (r.violation) j["certificate"] = certificate_json(*r.violation);
    if (r.incomparable_equality) j["incomparable_equality"] = certificate_json(*r.incomparable_equality);
  } else if (a.check == "convexity") {
    const PairTable table = PairTable::tabulate(f);
    j["trials"] = a.trials;
    j["seed"] = a.seed;
    const auto w = convexity_probe(table, a.trials, a.seed);
    pass = !w;
    if (w) {
      json wj = {{"x", w->x}, {"y", w->y}};
      put_value(wj, "midpoint", w->midpoint);
      put_value(wj, "average", w->average);
      j["witness"] = wj;
    }
  } else if (a.check == "properties") {
    const PropertyReport r = extension_properties_check(f, a.trials, a.seed);
    j["trials"] = r.trials;
    j["seed"] = a.seed;
    j["report"] = {{"homogeneity", r.homogeneity},   {"sign_shift", r.sign_shift},
                   {"additivity", r.additivity},     {"evenness", r.evenness},
                   {"symmetric", r.symmetric},       {"even_matches_symmetric", r.even_matches_symmetric}};
    pass = r.homogeneity <= 1e-9 && r.sign_shift <= 1e-9 && r.additivity <= 1e-9 &&
           r.even_matches_symmetric;
  } else {
    throw InvalidArgument("unknown check '" + a.check + "'");
  }
  j["pass"] = pass;
  emit(out, j);
  err << a.check << " on " << f.name() << " (n=" << n << "): " << (pass ? "pass" : "FAIL") << '\n';
  return pass ? kOk : kCheckFailed;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
  std::string problem;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
};

int cmd_sweep(const SweepArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list(c.graph);
  const auto kind = parse_cut_kind(a.problem);
  if (!kind) throw InvalidArgument("unknown problem kind '" + a.problem + "'");
  const RatioProblem problem = pair_ratio_problem(g, *kind);

  // Samples are drawn sequentially from one stream, then evaluated in
  // fixed chunks; the output does not depend on the worker count.
  std::mt19937_64 rng(a.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> xs;
  xs.reserve(a.samples);
  while (xs.size() < a.samples) {
    std::vector<double> x(g.n());
    for (double& v : x) v = normal(rng);
    try {
      (void)problem.continuous_ratio(x);
    } catch (const InfeasiblePoint&) {
      continue;
    }
    xs.push_back(std::move(x));
  }
  struct Row {
    double continuous;
    double rounded;
  };
  std::vector<Row> rows(xs.size());
  parallel_for_chunks(xs.size(), 256, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      rows[i] = {problem.continuous_ratio(xs[i]), threshold_round(problem, xs[i]).value};
    }
  });

  out << "sample,continuous,rounded,gap\n";
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double gap = problem.sense == Sense::Max ? rows[i].rounded - rows[i].continuous
                                                   : rows[i].continuous - rows[i].rounded;
    worst = std::min(worst, gap);
    out << i << ',' << fixed10(rows[i].continuous) << ',' << fixed10(rows[i].rounded) << ','
        << fixed10(gap) << '\n';
  }
  err << a.problem << ": " << rows.size() << " samples, smallest gap " << fixed10(worst) << '\n';
  return kOk;
}

// ---- enumerate -----------------------------------------------------------

struct EnumerateArgs {
  std::string what;
  std::size_t n = 0;
  std::string vector;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  json j = {{"command", "enumerate"}, {"what", a.what}};
  if (a.what == "pairs") {
    json arr = json::array();
    for (auto it = enumerate_setpairs(a.n).begin(); it != SetPairRange(a.n).end(); ++it) {
      json p = pair_json(*it);
      p["code"] = it.code();
      arr.push_back(p);
    }
    j["n"] = a.n;
    j["pairs"] = arr;
    err << arr.size() << " set-pairs\n";
  } else if (a.what == "chain") {
    const std::vector<double> x = load_vector(a.vector);
    const ChainDecomposition chain = threshold_pairs(x);
    json links = json::array();
    for (std::size_t i = 0; i < chain.pairs.size(); ++i) {
      json link = pair_json(chain.pairs[i]);
      link["gap"] = round10(chain.gaps[i]);
      links.push_back(link);
    }
    j["chain"] = links;
    j["sigma"] = chain.sigma;
    err << chain.pairs.size() << " links, total gap " << fixed10(chain.total_gap()) << '\n';
  } else {
    throw InvalidArgument("enumerate: expected 'pairs' or 'chain'");
  }
  emit(out, j);
  return kOk;
}

int fail(std::ostream& out, std::ostream& err, const std::string& command, int code,
         const std::string& type, const std::string& message) {
  emit(out, {{"command", command}, {"error", {{"type", type}, {"message", message}}}});
  err << "error: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set-pair Lovász extension toolkit for graph cuts", "setpair"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (default: SETPAIR_THREADS or all cores)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Optimize a cut problem exactly or by relaxation");
  solve->add_option("kind", sa.kind, "dual-cheeger|max3cut|ratio-max3cut-1|ratio-max3cut-2|maxcut|cheeger|anti-cheeger|kcut")
      ->required();
  solve->add_option("--graph", common.graph, "Edge-list file")->required();
  solve->add_option("--method", sa.method, "oracle|relax")->capture_default_str();
  solve->add_option("--restarts", sa.restarts, "Random starts for relax")->capture_default_str();
  solve->add_option("--seed", sa.seed, "Seed for relax")->capture_default_str();
  solve->add_option("--k", sa.k, "Number of parts (kcut)");
  solve->add_option("--sense", sa.sense, "min|max");
  solve->add_option("--rule", sa.rule, "allow-empty|nonempty (kcut)")->capture_default_str();
  solve->add_option("--max-iters", sa.max_iters, "Descent sweeps per start")->capture_default_str();
  solve->add_option("--tol", sa.tol, "Relative improvement threshold")->capture_default_str();

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a functional or continuous objective");
  eval->add_option("name", ea.name, "I|Iplus|Ihat|norm|sup|median|F1|F2|G1|G2|G3|<kind>|kcut")
      ->required();
  eval->add_option("--graph", common.graph, "Edge-list file")->required();
  eval->add_option("--vector", ea.vector, "Vector file or inline \"(1,-1,0)\"")->required();
  eval->add_option("--k", ea.k, "Number of parts (kcut)");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Check submodularity or extension properties");
  check->add_option("check", ca.check, "pair-submodular|partial|strict|nested|nested-lattice|convexity|properties")
      ->required();
  check->add_option("--function", ca.function, "Tabulated function file (\"code value\" lines)");
  check->add_option("--builtin", ca.builtin, "sqrt-card|random|F1|F2|G1|G2|G3");
  check->add_option("--n", ca.n, "Ground set size");
  check->add_option("--graph", common.graph, "Edge-list file (for F1..G3)");
  check->add_option("--trials", ca.trials, "Random trials")->capture_default_str();
  check->add_option("--seed", ca.seed, "Seed")->capture_default_str();

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "CSV of continuous vs rounded values at random x");
  sweep->add_option("--graph", common.graph, "Edge-list file")->required();
  sweep->add_option("--problem", wa.problem, "Problem kind")->required();
  sweep->add_option("--samples", wa.samples, "Number of samples")->capture_default_str();
  sweep->add_option("--seed", wa.seed, "Seed")->capture_default_str();

  EnumerateArgs na;
  auto* enumerate = app.add_subcommand("enumerate", "List set-pairs or a threshold chain");
  enumerate->add_option("what", na.what, "pairs|chain")->required();
  enumerate->add_option("--n", na.n, "Ground set size (pairs)");
  enumerate->add_option("--vector", na.vector, "Vector (chain)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kInvalidInput;
  }

  const std::size_t previous = worker_count();
  if (common.threads != 0) set_worker_count(common.threads);
  struct Restore {
    std::size_t workers;
    bool active;
    ~Restore() {
      if (active) set_worker_count(0);
    }
  } restore{previous, common.threads != 0};

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*solve) return cmd_solve(sa, common, out, err);
    if (*eval) return cmd_eval(ea, common, out, err);
    if (*check) return cmd_check(ca, common, out, err);
    if (*sweep) return cmd_sweep(wa, common, out, err);
    if (*enumerate) return cmd_enumerate(na, out, err);
  } catch (const GuardExceeded& e) {
    return fail(out, err, command, kGuardExceeded, "guard", e.what());
  } catch (const ParseError& e) {
    return fail(out, err, command, kInvalidInput, "parse", e.what());
  } catch (const InfeasiblePoint& e) {
    return fail(out, err, command, kInvalidInput, "infeasible", e.what());
  } catch (const Error& e) {
    return fail(out, err, command, kInvalidInput, "invalid", e.what());
  }
  return kInvalidInput;
}

}  // namespace setpair::cli
