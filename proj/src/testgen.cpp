#include "gcgt/testgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcgt/error.hpp"

namespace gcgt {

void validate(const MakeTestsParams& params, std::size_t n) {
  if (params.d < 1) throw ParameterError("make_tests: d must be at least 1");
  if (!(params.delta * params.d >= 2.0 - 1e-12))
    throw ParameterError("make_tests: delta must be at least 2/d");
  const double p = params.p();
  if (!(p > 0.0 && p <= 0.5 + 1e-12)) throw ParameterError("make_tests: p = 1/(delta d) must lie in (0, 1/2]");
  if (!(params.beta > 0.0 && params.beta <= 0.5)) throw ParameterError("make_tests: beta must lie in (0, 1/2]");
  if (params.tau < 1) throw ParameterError("make_tests: tau must be at least 1");
  if (params.beta * static_cast<double>(n) < 2.0 - 1e-9)
    throw ParameterError("make_tests: beta * n must be at least 2");
}

namespace {

// Appends the tests produced by one sparsification round.
void run_round(const Graph& g, const MakeTestsParams& params, std::size_t round,
               std::vector<EdgeSet>& out) {
  SplitMix64 rng(derive_seed(params.seed, {round}));
  const EdgeSet kept = sample_edges(g, params.p(), rng);
  const ComponentLabeling comps = connected_components(g, kept);
  const double threshold = params.beta * static_cast<double>(g.n()) - 1e-9;

  std::vector<char> selected(comps.count(), 0);
  if (params.mode == ComponentMode::all_large) {
    for (std::size_t c = 0; c < comps.count(); ++c)
      selected[c] = static_cast<double>(comps.sizes[c]) >= threshold && comps.sizes[c] >= 2;
  } else {
    // Labels follow smallest-vertex order, so the first maximum wins ties.
    const auto it = std::max_element(comps.sizes.begin(), comps.sizes.end());
    const auto c = static_cast<std::size_t>(it - comps.sizes.begin());
    selected[c] = static_cast<double>(*it) >= threshold && *it >= 2;
  }

  std::vector<std::size_t> slot(comps.count(), SIZE_MAX);
  for (std::size_t c = 0; c < comps.count(); ++c) {
    if (!selected[c]) continue;
    slot[c] = out.size();
    out.emplace_back(g.m());
  }
  const auto edges = g.edges();
  kept.for_each([&](std::size_t id) {
    const std::size_t s = slot[comps.label[edges[id].u]];
    if (s != SIZE_MAX) out[s].set(id);
  });
}

}  // namespace

TestCollection make_tests(const Graph& g, const MakeTestsParams& params) {
  validate(params, g.n());
  if (!is_connected(g)) warn("make_tests: input graph is not connected");
  TestCollection out{g.m(), {}};
  for (std::size_t r = 0; r < params.tau; ++r) run_round(g, params, r, out.tests);
  return out;
}

TestCollection make_tests_until(const Graph& g, const MakeTestsParams& params, std::size_t target,
                                std::size_t max_rounds) {
  MakeTestsParams checked = params;
  checked.tau = 1;
  validate(checked, g.n());
  TestCollection out{g.m(), {}};
  for (std::size_t r = 0; out.tests.size() < target; ++r) {
    if (r >= max_rounds)
      throw ParameterError("make_tests_until: " + std::to_string(max_rounds) +
                           " rounds produced only " + std::to_string(out.tests.size()) + " tests");
    run_round(g, params, r, out.tests);
  }
  out.tests.resize(target, EdgeSet(g.m()));
  return out;
}

TestCollection random_tests(std::size_t m, unsigned d, std::size_t tau, std::uint64_t seed) {
  if (m < 1) throw ParameterError("random_tests: m must be at least 1");
  if (d < 1) throw ParameterError("random_tests: d must be at least 1");
  const double p = 1.0 / (static_cast<double>(d) + 1.0);
  TestCollection out{m, {}};
  out.tests.reserve(tau);
  for (std::size_t i = 0; i < tau; ++i) {
    SplitMix64 rng(derive_seed(seed, {i}));
    EdgeSet t(m);
    for (std::size_t e = 0; e < m; ++e)
      if (rng.bernoulli(p)) t.set(e);
    out.tests.push_back(std::move(t));
  }
  return out;
}

std::size_t degree_ratio(const Graph& g) {
  const std::size_t lo = g.min_degree();
  if (lo == 0) throw DomainError("degree_ratio: graph has an isolated vertex");
  return (g.max_degree() + lo - 1) / lo;
}

MixingEstimate estimate_mixing_time(const Graph& g, std::uint64_t seed, MixingOptions options) {
  const std::size_t n = g.n();
  if (n < 2 || !is_connected(g)) throw DomainError("estimate_mixing_time: graph must be connected with n >= 2");
  MixingEstimate est;
  est.lazy = options.lazy.value_or(is_bipartite(g));
  const double c = static_cast<double>(degree_ratio(g));
  est.threshold = 1.0 / std::pow(2.0 * c * static_cast<double>(n), 2.0);
  const std::size_t cap = options.max_steps.value_or(10 * n * n);

  SplitMix64 rng(seed);
  est.start = static_cast<VertexId>(rng.below(n));
  const double two_m = 2.0 * static_cast<double>(g.m());
  std::vector<double> pi(n);
  for (std::size_t v = 0; v < n; ++v) pi[v] = static_cast<double>(g.degree(static_cast<VertexId>(v))) / two_m;

  std::vector<double> cur(n, 0.0);
  std::vector<double> next(n);
  cur[est.start] = 1.0;
  auto tv = [&] {
    double s = 0.0;
    for (std::size_t v = 0; v < n; ++v) s += std::abs(cur[v] - pi[v]);
    return s / 2.0;
  };
  const double hold = est.lazy ? 0.5 : 0.0;
  for (std::size_t t = 1; t <= cap; ++t) {
    for (std::size_t v = 0; v < n; ++v) next[v] = hold * cur[v];
    for (std::size_t v = 0; v < n; ++v) {
      if (cur[v] == 0.0) continue;
      const auto nb = g.neighbors(static_cast<VertexId>(v));
      const double share = (1.0 - hold) * cur[v] / static_cast<double>(nb.size());
      for (const Incidence& inc : nb) next[inc.neighbor] += share;
    }
    std::swap(cur, next);
    if (tv() < est.threshold) {
      est.steps = t;
      return est;
    }
  }
  throw DomainError("estimate_mixing_time: no convergence within " + std::to_string(cap) +
                    " steps" + (est.lazy ? "" : " (non-lazy walk; periodic chain?)"));
}

WalkParams make_walk_params(const Graph& g, unsigned d, double l, std::size_t tau,
                            std::uint64_t seed, std::uint64_t mixing_seed) {
  WalkParams p;
  p.d = d;
  p.l = l;
  p.tau = tau;
  p.seed = seed;
  p.c = degree_ratio(g);
  p.tau_mix = estimate_mixing_time(g, mixing_seed).steps;
  return p;
}

std::size_t walk_length(const Graph& g, const WalkParams& params) {
  if (params.d < 1 || params.c < 1 || params.tau_mix < 1 || !(params.l > 0.0))
    throw ParameterError("walk params: d, c, tau_mix and l must be positive");
  const double c = static_cast<double>(params.c);
  const double len = std::ceil(params.l * static_cast<double>(g.n()) *
                               static_cast<double>(g.min_degree()) /
                               (c * c * c * params.d * static_cast<double>(params.tau_mix)));
  if (len < 1.0) {
    warn("random_walk_tests: computed walk length is 0, clamping to 1");
    return 1;
  }
  return static_cast<std::size_t>(len);
}

TestCollection random_walk_tests(const Graph& g, const WalkParams& params) {
  if (g.n() < 2 || !is_connected(g)) throw DomainError("random_walk_tests: graph must be connected");
  const std::size_t length = walk_length(g, params);
  TestCollection out{g.m(), {}};
  out.tests.reserve(params.tau);
  for (std::size_t i = 0; i < params.tau; ++i) {
    SplitMix64 rng(derive_seed(params.seed, {i}));
    EdgeSet t(g.m());
    auto v = static_cast<VertexId>(rng.below(g.n()));
    for (std::size_t s = 0; s < length; ++s) {
      const auto nb = g.neighbors(v);
      const Incidence& step = nb[rng.below(nb.size())];
      t.set(step.edge);
      v = step.neighbor;
    }
    out.tests.push_back(std::move(t));
  }
  return out;
}

}  // namespace gcgt
