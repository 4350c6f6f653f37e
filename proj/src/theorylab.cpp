#include "gcgt/theorylab.hpp"

#include <algorithm>
#include <limits>

namespace gcgt {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(what) + ": p must lie in [0, 1]");
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw ParameterError("exact distribution: denominator overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

ExplorationTrace explore_component(const Graph& g, EdgeId e, double p, double beta, std::uint64_t seed) {
  check_probability(p, "explore_component");
  if (e >= g.m()) throw ParameterError("explore_component: edge id out of range");
  if (!(beta > 0.0) || beta * static_cast<double>(g.n()) < 2.0 - 1e-9)
    throw ParameterError("explore_component: beta * n must be at least 2");
  SplitMix64 rng(seed);
  const double cap = beta * static_cast<double>(g.n()) + 1.0;
  return run_exploration(g, e, cap, [&] { return rng.bernoulli(p); });
}

ExactDistribution exploration_size_distribution(const Graph& g, EdgeId e, std::uint64_t p_num,
                                                std::uint64_t p_den) {
  if (p_den == 0 || p_num > p_den) throw ParameterError("exploration distribution: need 0 <= p_num <= p_den");
  if (e >= g.m()) throw ParameterError("exploration distribution: edge id out of range");
  const std::size_t others = g.m() - 1;
  ExactDistribution dist;
  dist.denominator = checked_pow(p_den, others);

  // Enumerate decision sequences depth-first: run with a scripted prefix,
  // extending with "blocked" whenever the script runs out.
  std::vector<bool> script;
  const double uncapped = std::numeric_limits<double>::infinity();
  while (true) {
    std::size_t used = 0;
    const ExplorationTrace trace = run_exploration(g, e, uncapped, [&] {
      if (used == script.size()) script.push_back(false);
      return static_cast<bool>(script[used++]);
    });
    script.resize(used);
    const std::size_t survived = trace.tree.size() - 1;
    const std::size_t blocked = trace.blocked.size();
    const std::uint64_t w = checked_pow(p_num, survived) * checked_pow(p_den - p_num, blocked) *
                            checked_pow(p_den, others - survived - blocked);
    dist.weights[trace.vertex_count] += w;

    while (!script.empty() && script.back()) script.pop_back();
    if (script.empty()) break;
    script.back() = true;
  }
  // Drop zero-probability outcomes so p in {0, 1} compares cleanly.
  std::erase_if(dist.weights, [](const auto& kv) { return kv.second == 0; });
  return dist;
}

GiantComponentReport giant_component_rate(const Graph& g, EdgeId e, double p, double beta,
                                          double alpha, std::size_t trials, std::uint64_t seed) {
  check_probability(p, "giant_component_rate");
  if (e >= g.m()) throw ParameterError("giant_component_rate: edge id out of range");
  if (trials < 1) throw ParameterError("giant_component_rate: trials must be at least 1");
  GiantComponentReport report;
  report.epsilon = p * alpha - 1.0;
  if (report.epsilon > 0.0 && report.epsilon < 1.0 / 3.0) report.bound = p * report.epsilon / 8.0;

  const double threshold = beta * static_cast<double>(g.n()) - 1e-9;
  const Edge& uv = g.edge(e);
  report.estimate.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng(derive_seed(seed, {i}));
    const EdgeSet kept = sample_edges(g, p, rng);
    if (!kept.test(e)) continue;
    detail::DisjointSets ds(g.n());
    const auto edges = g.edges();
    kept.for_each([&](std::size_t id) { ds.unite(edges[id].u, edges[id].v); });
    if (static_cast<double>(ds.set_size(uv.u)) >= threshold) ++report.estimate.successes;
  }
  return report;
}

StatEstimate connectivity_rate(const Graph& g, double p, std::size_t trials, std::uint64_t seed) {
  check_probability(p, "connectivity_rate");
  if (trials < 1) throw ParameterError("connectivity_rate: trials must be at least 1");
  StatEstimate est;
  est.trials = trials;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng(derive_seed(seed, {i}));
    detail::DisjointSets ds(g.n());
    std::size_t merges = 0;
    for (std::size_t id = 0; id < edges.size(); ++id)
      if (rng.bernoulli(p) && ds.unite(edges[id].u, edges[id].v)) ++merges;
    if (merges + 1 >= g.n()) ++est.successes;
  }
  return est;
}

namespace {

void check_ruin(const RuinParams& r) {
  if (!(r.gamma >= 0.0 && r.gamma <= 1.0)) throw ParameterError("gamblers_ruin: gamma must lie in [0, 1]");
  if (r.a < 1 || r.b < 1) throw ParameterError("gamblers_ruin: a and b must be at least 1");
}

}  // namespace

double gamblers_ruin(const RuinParams& r) {
  check_ruin(r);
  if (r.gamma == 0.0) return 0.0;
  if (r.gamma == 1.0) return 1.0;
  const auto a = static_cast<double>(r.a);
  const auto b = static_cast<double>(r.b);
  if (std::abs(r.gamma - 0.5) < 1e-12) return b / (b + a);
  // (1 - phi^b) / (1 - phi^(a+b)) with phi = (1 - gamma) / gamma, written
  // with log phi so neither cancellation nor overflow occurs.
  const double log_phi = std::log1p((1.0 - 2.0 * r.gamma) / r.gamma);
  if (log_phi > 0.0) {
    return std::exp(-a * log_phi) * std::expm1(-b * log_phi) / std::expm1(-(a + b) * log_phi);
  }
  return std::expm1(b * log_phi) / std::expm1((a + b) * log_phi);
}

double ruin_oracle(const RuinParams& r) {
  check_ruin(r);
  const std::size_t size = static_cast<std::size_t>(r.a + r.b + 1);
  // Index i represents position i - b.
  std::vector<double> h(size, 0.0);
  h[size - 1] = 1.0;
  const double up = r.gamma;
  const double down = 1.0 - r.gamma;
  constexpr long kMaxSweeps = 50'000'000;
  for (long sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double change = 0.0;
    for (std::size_t i = 1; i + 1 < size; ++i) {
      const double v = up * h[i + 1] + down * h[i - 1];
      change = std::max(change, std::abs(v - h[i]));
      h[i] = v;
    }
    for (std::size_t i = size - 2; i >= 1; --i) {
      const double v = up * h[i + 1] + down * h[i - 1];
      change = std::max(change, std::abs(v - h[i]));
      h[i] = v;
    }
    if (change <= 1e-17) break;
  }
  return h[static_cast<std::size_t>(r.b)];
}

StatEstimate simulate_escape(double alpha, double p, double target, std::size_t trials,
                             std::uint64_t seed) {
  check_probability(p, "simulate_escape");
  if (!(alpha > 0.0)) throw ParameterError("simulate_escape: alpha must be positive");
  StatEstimate est;
  est.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng(derive_seed(seed, {i}));
    double z = 0.0;
    while (true) {
      z += rng.bernoulli(p) ? alpha : -1.0;
      if (z <= -alpha) break;
      if (z >= target) {
        ++est.successes;
        break;
      }
    }
  }
  return est;
}

ExplorationBoundReport exploration_bound_check(const Graph& g, EdgeId e, double p, double beta,
                                               double alpha, std::size_t trials, std::uint64_t seed) {
  check_probability(p, "exploration_bound_check");
  if (!(beta > 0.0 && beta <= 0.5)) throw ParameterError("exploration_bound_check: beta must lie in (0, 1/2]");
  ExplorationBoundReport report;
  report.epsilon = p * alpha - 1.0;
  report.applicable = report.epsilon > 0.0 && report.epsilon < 1.0 / 3.0;
  report.escape_bound = report.epsilon / 8.0;
  report.target = beta * static_cast<double>(g.n()) * (1.0 + alpha);
  report.escape = simulate_escape(alpha, p, report.target, trials, derive_seed(seed, {0}));
  report.exploration.trials = trials;
  const std::uint64_t explore_seed = derive_seed(seed, {1});
  for (std::size_t i = 0; i < trials; ++i) {
    const auto trace = explore_component(g, e, p, beta, derive_seed(explore_seed, {i}));
    if (trace.end == ExplorationEnd::capped) ++report.exploration.successes;
  }
  return report;
}

}  // namespace gcgt
