// Acceptance gate: one PASS/FAIL line per criterion.
// Usage: gcgt_acceptance [--only N]... [--artifacts DIR]

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gcgt/expansion.hpp"
#include "gcgt/experiment.hpp"
#include "gcgt/generators.hpp"
#include "gcgt/gtcore.hpp"
#include "gcgt/plot.hpp"
#include "gcgt/theorylab.hpp"
#include "../support/oracles.hpp"

using namespace gcgt;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::filesystem::path g_artifacts;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

oracle::Tests random_lists(std::mt19937_64& rng, std::size_t m, std::size_t t, double p) {
  oracle::Tests out(t);
  std::bernoulli_distribution coin(p);
  for (auto& row : out)
    for (int e = 0; e < static_cast<int>(m); ++e)
      if (coin(rng)) row.push_back(e);
  return out;
}

Outcome shapes() {
  struct Case {
    const char* name;
    Graph g;
    std::size_t n, m;
  };
  const std::vector<Case> cases{{"fat_tree(4,hosts)", fat_tree(4, true), 36, 48},
                                {"fat_tree(8)", fat_tree(8, false), 80, 256},
                                {"fat_tree(6)", fat_tree(6, false), 45, 108},
                                {"hypercube(6)", hypercube(6), 64, 192},
                                {"complete(23)", complete_graph(23), 23, 253}};
  Outcome o{true, ""};
  for (const auto& c : cases) {
    const bool ok = c.g.n() == c.n && c.g.m() == c.m;
    o.pass = o.pass && ok;
    o.detail += std::string(o.detail.empty() ? "" : " ") + c.name + "=(" + std::to_string(c.g.n()) + "," +
                std::to_string(c.g.m()) + ")";
  }
  return o;
}

Outcome disjunct_oracle() {
  std::mt19937_64 rng(2);
  std::size_t agree = 0, disjunct = 0, witnesses_valid = 0, witnesses = 0;
  const std::size_t total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t m = 1 + rng() % 12;
    const unsigned d = 1 + static_cast<unsigned>(rng() % 2);
    const std::size_t t = rng() % (8 * m);
    const double p = 0.1 + 0.4 * std::uniform_real_distribution<>(0, 1)(rng);
    auto lists = random_lists(rng, m, t, p);
    if (i % 4 == 0)
      for (int e = 0; e < static_cast<int>(m); ++e)
        if (rng() % 3 != 0) lists.push_back({e});
    const auto tc = oracle::from_lists(m, lists);
    const auto mine = check_disjunct(tc, d);
    const auto ref = oracle::first_violation(m, lists, d);
    bool ok = mine.disjunct == !ref.has_value();
    if (mine.disjunct) ++disjunct;
    if (!mine.disjunct) {
      ++witnesses;
      ok = ok && mine.witness.has_value();
      if (mine.witness) {
        std::vector<int> b(mine.witness->defectives.begin(), mine.witness->defectives.end());
        const bool valid = mine.witness->defectives.size() <= d &&
                           !oracle::separated(lists, static_cast<int>(mine.witness->edge), b) &&
                           std::find(b.begin(), b.end(), static_cast<int>(mine.witness->edge)) == b.end();
        if (valid) ++witnesses_valid;
        ok = ok && valid;
      }
    }
    if (ok) ++agree;
  }
  return {agree == total && witnesses_valid == witnesses,
          std::to_string(agree) + "/" + std::to_string(total) + " verdicts agree (" + std::to_string(disjunct) +
              " disjunct), " + std::to_string(witnesses_valid) + "/" + std::to_string(witnesses) +
              " witnesses valid"};
}

Outcome decoder_soundness() {
  std::mt19937_64 rng(3);
  std::size_t collections = 0, disjunct_collections = 0, sets = 0, failures = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = 4 + static_cast<std::size_t>(i % 9);
    const unsigned d = 1 + static_cast<unsigned>(i % 2);
    auto lists = random_lists(rng, m, 4 + rng() % (6 * m), 0.15 + 0.2 * (i % 3));
    if (i % 5 == 0)
      for (int e = 0; e < static_cast<int>(m); ++e) lists.push_back({e});
    const auto tc = oracle::from_lists(m, lists);
    const bool disjunct = check_disjunct(tc, d).disjunct;
    ++collections;
    if (disjunct) ++disjunct_collections;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      DefectiveSet b(m);
      for (std::size_t e = 0; e < m; ++e)
        if ((mask >> e) & 1U) b.set(e);
      const auto dec = decode(tc, run_tests(tc, b));
      ++sets;
      if (!b.is_subset_of(dec)) ++failures;
      if (disjunct && b.count() <= d && !(dec == b)) ++failures;
    }
  }
  return {failures == 0 && disjunct_collections > 0,
          std::to_string(collections) + " collections (" + std::to_string(disjunct_collections) +
              " disjunct), " + std::to_string(sets) + " defective sets, " + std::to_string(failures) +
              " violations"};
}

Outcome exploration_equivalence() {
  std::size_t cases = 0, equal = 0;
  for (const Graph& g : oracle::small_catalog()) {
    if (g.m() > 10) continue;
    for (EdgeId e = 0; e < g.m(); ++e) {
      for (auto [num, den] : {std::pair<std::uint64_t, std::uint64_t>{1, 4}, {1, 2}, {3, 4}}) {
        ++cases;
        const auto dist = exploration_size_distribution(g, e, num, den);
        if (dist.denominator == oracle::ipow(den, g.m() - 1) &&
            dist.weights == oracle::conditional_component_sizes(g, e, num, den))
          ++equal;
      }
    }
  }
  return {cases > 0 && equal == cases,
          std::to_string(equal) + "/" + std::to_string(cases) + " (graph, edge, p) distributions equal"};
}

Outcome ruin() {
  const std::vector<double> gammas{0.05, 0.2, 0.35, 0.45, 0.499, 0.501, 0.55, 0.65, 0.8, 0.95};
  const std::vector<std::pair<std::int64_t, std::int64_t>> ab{
      {1, 1}, {1, 2}, {2, 1}, {1, 5},  {5, 1},  {2, 3},  {3, 2},   {3, 7},   {7, 3},   {4, 4},
      {5, 9}, {9, 5}, {6, 6}, {8, 12}, {12, 8}, {10, 1}, {1, 10},  {15, 15}, {20, 7},  {7, 20}};
  double worst = 0;
  std::size_t points = 0;
  for (double g : gammas)
    for (auto [a, b] : ab) {
      worst = std::max(worst, std::abs(gamblers_ruin({g, a, b}) - ruin_oracle({g, a, b})));
      ++points;
    }
  bool half_exact = true;
  for (auto [a, b] : ab)
    half_exact = half_exact && gamblers_ruin({0.5, a, b}) == static_cast<double>(b) / static_cast<double>(b + a);
  return {points == 200 && worst <= 1e-12 && half_exact,
          std::to_string(points) + " points, max |closed - oracle| = " + fmt(worst) +
              ", gamma=1/2 branch exact: " + (half_exact ? "yes" : "no")};
}

Outcome giant_component() {
  Outcome o{true, ""};
  for (const auto& [name, g] : {std::pair<std::string, Graph>{"complete(20)", complete_graph(20)},
                                {"hypercube(4)", hypercube(4)}}) {
    const auto cert = certify_expansion(g, 0.25);
    const double alpha = cert.alpha.value();
    for (double eps : {0.1, 0.25}) {
      const double p = (1.0 + eps) / alpha;
      const auto r = giant_component_rate(g, 0, p, 0.25, alpha, 20000,
                                          derive_seed(6, {stable_hash(name), static_cast<std::uint64_t>(eps * 100)}));
      const bool ok = cert.exact && r.bound && r.estimate.rate() >= *r.bound - 3 * r.estimate.standard_error();
      o.pass = o.pass && ok;
      o.detail += (o.detail.empty() ? "" : "; ") + name + " alpha=" + cert.alpha.to_string() + " eps=" + fmt(eps) +
                  ": rate=" + fmt(r.estimate.rate()) + " bound=" + fmt(r.bound.value_or(NAN)) +
                  " se=" + fmt(r.estimate.standard_error());
    }
  }
  return o;
}

Outcome connectivity() {
  const double p = 5.0 * std::log(16.0) / 15.0;
  const auto est = connectivity_rate(complete_graph(16), p, 10000, 7);
  const double bound = 1.0 - 1.0 / 16.0;
  return {est.rate() >= bound - 3 * est.standard_error(),
          "p=" + fmt(p) + " rate=" + fmt(est.rate()) + " bound=" + fmt(bound) + " se=" + fmt(est.standard_error())};
}

Outcome singleton() {
  const Graph c5 = oracle::cycle(5);
  std::size_t confirmed = 0;
  for (int drop = 0; drop < 5; ++drop) {
    oracle::Tests lists;
    for (int e = 0; e < 5; ++e)
      if (e != drop) lists.push_back({e});
    const auto tc = oracle::from_lists(5, lists);
    const auto w = singleton_witness(c5, tc, 2);
    if (w && w->edge == static_cast<EdgeId>(drop) && w->defectives.size() == 2 && is_violation(tc, *w) &&
        !check_disjunct(tc, 2).disjunct)
      ++confirmed;
  }
  oracle::Tests all{{0}, {1}, {2}, {3}, {4}};
  const bool full_ok = !singleton_witness(c5, oracle::from_lists(5, all), 2).has_value();
  return {confirmed == 5 && full_ok,
          std::to_string(confirmed) + "/5 deletions yield a confirmed witness; full collection has none: " +
              (full_ok ? "yes" : "no")};
}

void save_artifacts(const std::string& stem, const std::vector<ExperimentRecord>& recs) {
  if (g_artifacts.empty()) return;
  std::filesystem::create_directories(g_artifacts);
  std::ofstream(g_artifacts / (stem + ".csv")) << to_csv(recs);
  for (const auto& img : render_plots(recs)) std::ofstream(g_artifacts / (img.name + ".svg")) << img.svg;
}

// Largest drop p(tau_i) - p(tau_j) over i < j, per method.
double worst_drop(const std::vector<ExperimentRecord>& recs, Method method) {
  double worst = 0;
  std::vector<const ExperimentRecord*> curve;
  for (const auto& r : recs)
    if (r.method == method) curve.push_back(&r);
  for (std::size_t i = 0; i < curve.size(); ++i)
    for (std::size_t j = i + 1; j < curve.size(); ++j) worst = std::max(worst, curve[i]->p_hat - curve[j]->p_hat);
  return worst;
}

double method_at(const std::vector<ExperimentRecord>& recs, Method m, std::size_t tau) {
  for (const auto& r : recs)
    if (r.method == m && r.tau == tau) return r.p_hat;
  return NAN;
}

Outcome figures() {
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool monotone = true, compare = true;
  double worst_mono = 0, worst_gap_complete = 0, worst_walk_gap = -1;

  ExperimentConfig cfg;
  cfg.trials = 100;
  cfg.seed = 2013;
  cfg.threads = threads;
  cfg.d = 1;
  for (std::size_t t = 0; t <= 120; t += 5) cfg.taus.push_back(t);
  const auto k23 = experiment_disjunct_probability(graph_input(family::Complete{23}), cfg);
  save_artifacts("disjunct_complete23_d1", k23);
  for (Method m : {Method::subgraph, Method::walk, Method::random}) worst_mono = std::max(worst_mono, worst_drop(k23, m));
  for (auto t : cfg.taus)
    worst_gap_complete = std::max(worst_gap_complete,
                                  std::abs(method_at(k23, Method::subgraph, t) - method_at(k23, Method::random, t)));

  cfg.taus.clear();
  for (std::size_t t = 0; t <= 400; t += 20) cfg.taus.push_back(t);
  for (unsigned d : {1u, 2u, 3u, 5u}) {
    cfg.d = d;
    const auto ft = experiment_random_failures(graph_input(family::FatTree{8, false}), cfg);
    save_artifacts("random_failures_fat_tree8_d" + std::to_string(d), ft);
    for (Method m : {Method::subgraph, Method::walk, Method::random}) worst_mono = std::max(worst_mono, worst_drop(ft, m));
    for (auto t : cfg.taus)
      worst_walk_gap = std::max(worst_walk_gap, method_at(ft, Method::walk, t) - method_at(ft, Method::subgraph, t));
  }
  const double minutes =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 60.0;
  monotone = worst_mono <= 0.1;
  compare = worst_gap_complete <= 0.2 && worst_walk_gap <= 0.2;
  return {monotone && compare && minutes <= 30.0,
          "max drop=" + fmt(worst_mono) + " (<=0.1), complete |subgraph-random|<=" + fmt(worst_gap_complete) +
              " (<=0.2), fat-tree max(walk-subgraph)=" + fmt(worst_walk_gap) + " (<=0.2), " + fmt(minutes) +
              " min"};
}

Outcome reproducibility() {
  const unsigned many = std::max(8u, 2 * std::thread::hardware_concurrency());
  ExperimentConfig cfg;
  cfg.trials = 60;
  cfg.seed = 424242;
  cfg.d = 2;
  cfg.taus = {0, 10, 30, 60, 90};
  const auto tree = graph_input(family::FatTree{4, false});
  const auto small = graph_input(family::Complete{7});
  std::vector<std::string> runs;
  for (unsigned threads : {1u, many, 1u, 3u}) {
    cfg.threads = threads;
    runs.push_back(to_csv(experiment_random_failures(tree, cfg)) + to_csv(experiment_disjunct_probability(small, cfg)));
  }
  bool identical = true;
  for (const auto& r : runs) identical = identical && r == runs.front();
  return {identical && runs.front().size() > 100,
          std::to_string(runs.size()) + " runs (threads 1," + std::to_string(many) + ",1,3), " +
              std::to_string(runs.front().size()) + " bytes each, identical: " + (identical ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only.insert(std::atoi(argv[++i]));
    else if (!std::strcmp(argv[i], "--artifacts") && i + 1 < argc) g_artifacts = argv[++i];
    else {
      std::cerr << "usage: gcgt_acceptance [--only N]... [--artifacts DIR]\n";
      return 2;
    }
  }
  set_warnings_enabled(false);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"topology shapes", shapes},
      {"disjunctness oracle equivalence", disjunct_oracle},
      {"decoder soundness", decoder_soundness},
      {"exploration-process equivalence", exploration_equivalence},
      {"gambler's ruin", ruin},
      {"giant-component bound", giant_component},
      {"connectivity threshold", connectivity},
      {"singleton lower bound", singleton},
      {"figure reproduction", figures},
      {"reproducibility", reproducibility}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": " << o.detail << " ("
              << fmt(secs) << " s)" << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
