// gcgt: graph-constrained group testing toolkit.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcgt/cuts.hpp"
#include "gcgt/error.hpp"
#include "gcgt/expansion.hpp"
#include "gcgt/experiment.hpp"
#include "gcgt/generators.hpp"
#include "gcgt/graph_io.hpp"
#include "gcgt/gtcore.hpp"
#include "gcgt/plot.hpp"
#include "gcgt/spectral.hpp"
#include "gcgt/test_io.hpp"
#include "gcgt/testgen.hpp"
#include "gcgt/theorylab.hpp"

namespace {

using namespace gcgt;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
  std::string file;
  std::string family;
  std::uint64_t seed = 0;

  void add_options(CLI::App* app) {
    app->add_option("--graph", file, "Graph file (n m / u v format)");
    app->add_option("--family", family, "Generated graph, e.g. complete:23, fat_tree:8");
  }
  Graph load() const {
    if (!file.empty() && !family.empty()) throw ParameterError("give either --graph or --family, not both");
    if (!file.empty()) return load_graph(file);
    if (!family.empty()) return generate(parse_family(family, seed));
    throw ParameterError("one of --graph or --family is required");
  }
  std::string label() const { return file.empty() ? family : std::filesystem::path(file).filename().string(); }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

std::vector<std::size_t> parse_taus(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.find(':') != std::string::npos) {
    std::size_t start = 0, stop = 0, step = 1;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step == 0)
      throw ParameterError("--taus range must be start:stop:step");
    for (std::size_t t = start; t <= stop; t += step) out.push_back(t);
    return out;
  }
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw ParameterError("bad tau '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << text;
}

void emit_lab_row(bool header, const std::string& lab, const std::string& graph,
                  const std::string& params, std::size_t trials, std::uint64_t seed,
                  double empirical, std::optional<double> bound, double se) {
  if (header) std::cout << "lab,graph,params,trials,seed,empirical,bound,stderr\n";
  std::cout << lab << ',' << graph << ',' << params << ',' << trials << ',' << seed << ','
            << fmt(empirical) << ',' << (bound ? fmt(*bound) : std::string("NA")) << ',' << fmt(se)
            << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcgt - connected-subgraph group testing for network fault localization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(GCGT_VERSION));
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress warnings");

  // generate-graph
  std::string gen_family;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate-graph", "Generate a graph family and write it in text format");
  gen->add_option("--family", gen_family,
                  "complete:N | hypercube:DIM | random_regular:N:D | erdos_renyi:N:P | barbell:HALF | fat_tree:K[:hosts]")
      ->required();
  gen->add_option("--seed", gen_seed, "Seed for random families");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // make-tests
  GraphSource mt_graph;
  std::string mt_method = "subgraph";
  unsigned mt_d = 1;
  double mt_delta = 0;
  double mt_beta = 0.5;
  std::size_t mt_tau = 1;
  std::string mt_mode = "all_large";
  double mt_l = 0;
  std::uint64_t mt_seed = 0;
  std::string mt_out;
  auto* mt = app.add_subcommand("make-tests", "Build a test collection");
  mt_graph.add_options(mt);
  mt->add_option("--method", mt_method, "subgraph | random | walk")
      ->check(CLI::IsMember({"subgraph", "random", "walk"}));
  mt->add_option("--d", mt_d, "Maximum number of defective edges")->check(CLI::PositiveNumber);
  mt->add_option("--delta", mt_delta, "Sparsification parameter (p = 1/(delta d)); default (d+1)/d");
  mt->add_option("--beta", mt_beta, "Component size threshold as a fraction of n");
  mt->add_option("--tau", mt_tau, "Rounds (subgraph) or number of tests (random, walk)");
  mt->add_option("--mode", mt_mode, "all_large | largest_only")
      ->check(CLI::IsMember({"all_large", "largest_only"}));
  mt->add_option("--l", mt_l, "Walk length multiplier (default 1 for complete graphs, else 4)");
  mt->add_option("--seed", mt_seed, "Master seed");
  mt->add_option("--out", mt_out, "Output file (default stdout)");

  // check-disjunct
  std::string cd_tests;
  unsigned cd_d = 1;
  unsigned cd_threads = 1;
  double cd_budget = 1e10;
  auto* cd = app.add_subcommand("check-disjunct", "Exact d-disjunctness check");
  cd->add_option("--tests", cd_tests, "Test collection file")->required();
  cd->add_option("--d", cd_d, "d")->required()->check(CLI::PositiveNumber);
  cd->add_option("--threads", cd_threads, "Worker threads");
  cd->add_option("--budget", cd_budget, "Maximum projected mask operations");

  // decode / run-tests
  std::string dec_tests;
  std::string dec_outcomes;
  auto* dec = app.add_subcommand("decode", "Naive decoder: print the edges declared defective");
  dec->add_option("--tests", dec_tests, "Test collection file")->required();
  dec->add_option("--outcomes", dec_outcomes, "One 0/1 character per test")->required();

  std::string rt_tests;
  std::vector<std::size_t> rt_defective;
  auto* rt = app.add_subcommand("run-tests", "Print the outcome bit string for a defective set");
  rt->add_option("--tests", rt_tests, "Test collection file")->required();
  rt->add_option("--defective", rt_defective, "Defective edge ids");

  // graph-info
  GraphSource gi_graph;
  double gi_beta = 0.5;
  auto* gi = app.add_subcommand("graph-info", "Size, min cut, expansion and spectral bounds of a graph");
  gi_graph.add_options(gi);
  gi->add_option("--beta", gi_beta, "Expansion set-size fraction");

  // lab
  auto* lab = app.add_subcommand("lab", "Empirical checks of the component and ruin bounds");
  lab->require_subcommand(1);
  GraphSource lab_graph;
  EdgeId lab_edge = 0;
  double lab_p = 0.5;
  double lab_beta = 0.25;
  double lab_alpha = 0;
  std::size_t lab_trials = 10000;
  std::uint64_t lab_seed = 0;
  bool lab_header = false;
  bool lab_trace = false;
  double ruin_gamma = 0.5;
  std::int64_t ruin_a = 1, ruin_b = 1;
  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph) lab_graph.add_options(sub);
    sub->add_option("--trials", lab_trials, "Monte Carlo trials");
    sub->add_option("--seed", lab_seed, "Master seed");
    sub->add_flag("--header", lab_header, "Print the CSV header line");
  };
  auto* lab_giant = lab->add_subcommand("giant-component", "P(e survives and its component has >= beta n vertices)");
  add_common(lab_giant, true);
  lab_giant->add_option("--edge", lab_edge, "Edge id");
  lab_giant->add_option("--p", lab_p, "Survival probability");
  lab_giant->add_option("--beta", lab_beta, "Size threshold fraction");
  lab_giant->add_option("--alpha", lab_alpha, "Expansion constant (default: exact certificate, n <= 24)");
  auto* lab_explore = lab->add_subcommand("explore", "Exploration process and escape walk versus eps/8");
  add_common(lab_explore, true);
  lab_explore->add_option("--edge", lab_edge, "Edge id");
  lab_explore->add_option("--p", lab_p, "Survival probability");
  lab_explore->add_option("--beta", lab_beta, "Size threshold fraction");
  lab_explore->add_option("--alpha", lab_alpha, "Expansion constant (default: exact certificate, n <= 24)");
  lab_explore->add_flag("--trace", lab_trace, "Print one exploration trace instead of the summary row");
  auto* lab_ruin = lab->add_subcommand("ruin", "Gambler's ruin: Monte Carlo versus closed form");
  add_common(lab_ruin, false);
  lab_ruin->add_option("--gamma", ruin_gamma, "Up-step probability");
  lab_ruin->add_option("--a", ruin_a, "Up target");
  lab_ruin->add_option("--b", ruin_b, "Down target");
  auto* lab_conn = lab->add_subcommand("connectivity", "Fraction of connected sparsifications");
  add_common(lab_conn, true);
  lab_conn->add_option("--p", lab_p, "Survival probability");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Monte Carlo experiments over the number of tests");
  exp->require_subcommand(1);
  GraphSource ex_graph;
  std::string ex_methods = "subgraph,walk,random";
  unsigned ex_d = 1;
  std::string ex_taus;
  std::size_t ex_trials = 100;
  std::uint64_t ex_seed = 0;
  unsigned ex_threads = 1;
  double ex_l = 0;
  std::string ex_out;
  std::string ex_manifest;
  auto add_exp = [&](CLI::App* sub) {
    ex_graph.add_options(sub);
    sub->add_option("--methods", ex_methods, "Comma-separated subset of subgraph,walk,random");
    sub->add_option("--d", ex_d, "Number of defectives")->check(CLI::PositiveNumber);
    sub->add_option("--taus", ex_taus, "Test counts: comma list or start:stop:step")->required();
    sub->add_option("--trials", ex_trials, "Trials per point");
    sub->add_option("--seed", ex_seed, "Master seed")->required();
    sub->add_option("--threads", ex_threads, "Worker threads (output does not depend on this)");
    sub->add_option("--l", ex_l, "Walk length multiplier");
    sub->add_option("--out", ex_out, "CSV output (default stdout)");
    sub->add_option("--manifest", ex_manifest, "Write a JSON run manifest here");
  };
  auto* ex_dp = exp->add_subcommand("disjunct-prob", "Probability that the collection is d-disjunct");
  add_exp(ex_dp);
  auto* ex_rf = exp->add_subcommand("random-failures", "Probability of recovering d random failures");
  add_exp(ex_rf);

  // plot
  std::string pl_csv;
  std::string pl_dir = ".";
  auto* pl = app.add_subcommand("plot", "Render experiment CSV as SVG curves");
  pl->add_option("--csv", pl_csv, "Experiment CSV")->required();
  pl->add_option("--out-dir", pl_dir, "Directory for the SVG files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (quiet) set_warnings_enabled(false);

  try {
    if (gen->parsed()) {
      std::ostringstream os;
      write_graph(os, generate(parse_family(gen_family, gen_seed)));
      write_text(gen_out, os.str());
      return 0;
    }

    if (mt->parsed()) {
      mt_graph.seed = mt_seed;
      const Graph g = mt_graph.load();
      TestCollection tests;
      if (mt_method == "subgraph") {
        MakeTestsParams params;
        params.d = mt_d;
        params.delta = mt_delta > 0 ? mt_delta : (mt_d + 1.0) / mt_d;
        params.beta = mt_beta;
        params.tau = mt_tau;
        params.mode = mt_mode == "all_large" ? ComponentMode::all_large : ComponentMode::largest_only;
        params.seed = mt_seed;
        tests = make_tests(g, params);
      } else if (mt_method == "random") {
        tests = random_tests(g.m(), mt_d, mt_tau, mt_seed);
      } else {
        const bool complete = g.m() == g.n() * (g.n() - 1) / 2;
        const double l = mt_l > 0 ? mt_l : (complete ? 1.0 : 4.0);
        const WalkParams params =
            make_walk_params(g, mt_d, l, mt_tau, mt_seed, derive_seed(mt_seed, {stable_hash("mixing")}));
        tests = random_walk_tests(g, params);
      }
      std::ostringstream os;
      write_tests(os, tests);
      write_text(mt_out, os.str());
      return 0;
    }

    if (cd->parsed()) {
      const TestCollection tests = load_tests(cd_tests);
      const auto report = check_disjunct(tests, cd_d, {cd_budget, cd_threads});
      if (report.disjunct) {
        std::cout << "DISJUNCT\n";
        return 0;
      }
      std::cout << report.witness->edge << " |";
      for (EdgeId f : report.witness->defectives) std::cout << ' ' << f;
      std::cout << '\n';
      return kExitNegative;
    }

    if (dec->parsed()) {
      const TestCollection tests = load_tests(dec_tests);
      OutcomeVector outcomes;
      for (char c : dec_outcomes) {
        if (c != '0' && c != '1') throw ParameterError("--outcomes must contain only 0 and 1");
        outcomes.push_back(c == '1');
      }
      const auto defective = decode(tests, outcomes).to_vector();
      for (std::size_t i = 0; i < defective.size(); ++i) std::cout << (i ? " " : "") << defective[i];
      std::cout << '\n';
      return 0;
    }

    if (rt->parsed()) {
      const TestCollection tests = load_tests(rt_tests);
      DefectiveSet b(tests.m);
      for (std::size_t e : rt_defective) {
        if (e >= tests.m) throw ParameterError("defective edge id out of range");
        b.set(e);
      }
      for (bool o : run_tests(tests, b)) std::cout << (o ? '1' : '0');
      std::cout << '\n';
      return 0;
    }

    if (gi->parsed()) {
      const Graph g = gi_graph.load();
      std::cout << "n " << g.n() << "\nm " << g.m() << "\nmin_degree " << g.min_degree()
                << "\nmax_degree " << g.max_degree() << "\nconnected " << is_connected(g)
                << "\nbipartite " << is_bipartite(g) << '\n';
      if (g.n() >= 2) std::cout << "min_cut " << min_cut(g) << '\n';
      const auto cert = certify_expansion(g, gi_beta);
      std::cout << "expansion_beta " << gi_beta << "\nexpansion_alpha " << cert.alpha.to_string()
                << "\nexpansion_exact " << cert.exact << '\n';
      if (g.is_regular() && is_connected(g) && g.n() >= 2) {
        const auto sb = spectral_expansion_bounds(g);
        std::cout << "lambda2 " << fmt(sb.lambda) << "\nspectral_lower " << fmt(sb.lower)
                  << "\nspectral_upper " << fmt(sb.upper) << '\n';
      }
      return 0;
    }

    if (lab->parsed()) {
      auto alpha_for = [&](const Graph& g) {
        if (lab_alpha > 0) return lab_alpha;
        const auto cert = certify_expansion(g, lab_beta);
        if (!cert.exact) warn("alpha from sampled expansion is only an upper bound");
        return cert.alpha.value();
      };
      if (lab_giant->parsed()) {
        lab_graph.seed = lab_seed;
        const Graph g = lab_graph.load();
        const double alpha = alpha_for(g);
        const auto r = giant_component_rate(g, lab_edge, lab_p, lab_beta, alpha, lab_trials, lab_seed);
        emit_lab_row(lab_header, "giant-component", lab_graph.label(),
                     "edge=" + std::to_string(lab_edge) + ";p=" + fmt(lab_p) + ";beta=" + fmt(lab_beta) +
                         ";alpha=" + fmt(alpha) + ";epsilon=" + fmt(r.epsilon),
                     lab_trials, lab_seed, r.estimate.rate(), r.bound, r.estimate.standard_error());
        return 0;
      }
      if (lab_explore->parsed()) {
        lab_graph.seed = lab_seed;
        const Graph g = lab_graph.load();
        if (lab_trace) {
          const auto trace = explore_component(g, lab_edge, lab_p, lab_beta, lab_seed);
          std::cout << "t,edge,survived,S,B,U\n";
          for (const auto& s : trace.steps)
            std::cout << s.t << ',' << s.edge << ',' << s.survived << ',' << s.tree_edges << ','
                      << s.blocked << ',' << s.frontier << '\n';
          std::cout << "# end=" << (trace.end == ExplorationEnd::capped ? "capped" : "exhausted")
                    << " vertices=" << trace.vertex_count << '\n';
          return 0;
        }
        const double alpha = alpha_for(g);
        const auto r = exploration_bound_check(g, lab_edge, lab_p, lab_beta, alpha, lab_trials, lab_seed);
        emit_lab_row(lab_header, "explore", lab_graph.label(),
                     "edge=" + std::to_string(lab_edge) + ";p=" + fmt(lab_p) + ";beta=" + fmt(lab_beta) +
                         ";alpha=" + fmt(alpha) + ";epsilon=" + fmt(r.epsilon) +
                         ";escape=" + fmt(r.escape.rate()),
                     lab_trials, lab_seed, r.exploration.rate(),
                     r.applicable ? std::optional<double>(r.escape_bound) : std::nullopt,
                     r.exploration.standard_error());
        return 0;
      }
      if (lab_ruin->parsed()) {
        const RuinParams params{ruin_gamma, ruin_a, ruin_b};
        const double exact = gamblers_ruin(params);
        StatEstimate est;
        est.trials = lab_trials;
        for (std::size_t i = 0; i < lab_trials; ++i) {
          SplitMix64 rng(derive_seed(lab_seed, {i}));
          std::int64_t z = 0;
          while (z < ruin_a && z > -ruin_b) z += rng.bernoulli(ruin_gamma) ? 1 : -1;
          if (z >= ruin_a) ++est.successes;
        }
        emit_lab_row(lab_header, "ruin", "-",
                     "gamma=" + fmt(ruin_gamma) + ";a=" + std::to_string(ruin_a) + ";b=" +
                         std::to_string(ruin_b) + ";oracle=" + fmt(ruin_oracle(params)),
                     lab_trials, lab_seed, est.rate(), exact, est.standard_error());
        return 0;
      }
      if (lab_conn->parsed()) {
        lab_graph.seed = lab_seed;
        const Graph g = lab_graph.load();
        const auto est = connectivity_rate(g, lab_p, lab_trials, lab_seed);
        const std::size_t k = g.n() >= 2 ? min_cut(g) : 0;
        const double threshold = k > 0 ? 5.0 * std::log(static_cast<double>(g.n())) / k : INFINITY;
        std::optional<double> bound;
        if (lab_p >= std::min(threshold, 1.0)) bound = 1.0 - 1.0 / static_cast<double>(g.n());
        emit_lab_row(lab_header, "connectivity", lab_graph.label(),
                     "p=" + fmt(lab_p) + ";min_cut=" + std::to_string(k), lab_trials, lab_seed,
                     est.rate(), bound, est.standard_error());
        return 0;
      }
    }

    if (exp->parsed()) {
      ex_graph.seed = ex_seed;
      GraphInput input;
      if (!ex_graph.family.empty() && ex_graph.file.empty()) {
        input = graph_input(parse_family(ex_graph.family, ex_seed));
      } else {
        input.graph = ex_graph.load();
        input.family = "file";
        input.params = std::filesystem::path(ex_graph.file).filename().string();
      }
      ExperimentConfig config;
      config.methods.clear();
      {
        std::istringstream is(ex_methods);
        std::string item;
        while (std::getline(is, item, ',')) config.methods.push_back(parse_method(item));
      }
      config.d = ex_d;
      config.taus = parse_taus(ex_taus);
      config.trials = ex_trials;
      config.seed = ex_seed;
      config.threads = ex_threads;
      if (ex_l > 0) config.walk_l = ex_l;
      const auto started = std::chrono::system_clock::now();
      const bool disjunct = ex_dp->parsed();
      const auto records = disjunct ? experiment_disjunct_probability(input, config)
                                    : experiment_random_failures(input, config);
      const auto finished = std::chrono::system_clock::now();
      write_text(ex_out, to_csv(records));
      if (!ex_manifest.empty())
        write_text(ex_manifest, manifest_json(disjunct ? "disjunct-prob" : "random-failures", input,
                                              config, started, finished) + "\n");
      return 0;
    }

    if (pl->parsed()) {
      std::ifstream in(pl_csv);
      if (!in) throw FormatError("cannot open " + pl_csv);
      const auto records = read_csv(in);
      std::filesystem::create_directories(pl_dir);
      for (const auto& img : render_plots(records)) {
        const auto path = std::filesystem::path(pl_dir) / (img.name + ".svg");
        write_text(path.string(), img.svg);
        std::cout << path.string() << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "gcgt: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
