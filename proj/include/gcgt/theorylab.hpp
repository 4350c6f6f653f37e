#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gcgt/error.hpp"
#include "gcgt/graph.hpp"

namespace gcgt {

/// Bernoulli-trial count with its binomial standard error.
struct StatEstimate {
  std::size_t successes = 0;
  std::size_t trials = 0;

  double rate() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
  double standard_error() const noexcept {
    if (trials == 0) return 0.0;
    const double r = rate();
    return std::sqrt(r * (1.0 - r) / static_cast<double>(trials));
  }
};

// ---------------------------------------------------------------------------
// Component exploration process

/// One probe of the exploration process. tree_edges and blocked are the
/// sizes of S and B after the probe; frontier is |U| before it.
struct ExplorationStep {
  std::size_t t = 0;
  EdgeId edge = 0;
  bool survived = false;
  std::size_t tree_edges = 0;
  std::size_t blocked = 0;
  std::size_t frontier = 0;
};

enum class ExplorationEnd { exhausted, capped };

struct ExplorationTrace {
  EdgeId start = 0;
  std::vector<ExplorationStep> steps;
  ExplorationEnd end = ExplorationEnd::exhausted;
  std::vector<EdgeId> tree;     ///< S, in insertion order (starts with the seed edge)
  std::vector<EdgeId> blocked;  ///< B, in insertion order
  std::size_t vertex_count = 0; ///< |N(S)|
};

/// Grows the component of edge `start` one boundary edge at a time: the
/// probed edge is always the smallest id in U = boundary(N(S)) \ B, and it
/// joins S when coin() returns true, B otherwise. Stops when U is empty or
/// when |S| exceeds cap.
template <class Coin>
ExplorationTrace run_exploration(const Graph& g, EdgeId start, double cap, Coin&& coin) {
  if (start >= g.m()) throw ParameterError("explore: edge id out of range");
  ExplorationTrace trace;
  trace.start = start;
  std::vector<char> in_n(g.n(), 0);
  std::vector<char> in_b(g.m(), 0);
  std::set<EdgeId> frontier;
  auto add_vertex = [&](VertexId x) {
    in_n[x] = 1;
    ++trace.vertex_count;
    for (const Incidence& inc : g.neighbors(x)) {
      if (in_n[inc.neighbor]) frontier.erase(inc.edge);
      else if (!in_b[inc.edge]) frontier.insert(inc.edge);
    }
  };
  const Edge& seed = g.edge(start);
  trace.tree.push_back(start);
  add_vertex(seed.u);
  add_vertex(seed.v);

  for (std::size_t t = 0;; ++t) {
    if (frontier.empty()) {
      trace.end = ExplorationEnd::exhausted;
      break;
    }
    if (static_cast<double>(trace.tree.size()) > cap) {
      trace.end = ExplorationEnd::capped;
      break;
    }
    ExplorationStep step;
    step.t = t;
    step.frontier = frontier.size();
    step.edge = *frontier.begin();
    frontier.erase(frontier.begin());
    step.survived = coin();
    if (step.survived) {
      trace.tree.push_back(step.edge);
      const Edge& e = g.edge(step.edge);
      add_vertex(in_n[e.u] ? e.v : e.u);
    } else {
      trace.blocked.push_back(step.edge);
      in_b[step.edge] = 1;
    }
    step.tree_edges = trace.tree.size();
    step.blocked = trace.blocked.size();
    trace.steps.push_back(step);
  }
  return trace;
}

/// Exploration of edge e's component in G(p), conditioned on e surviving,
/// with success cap |S| > beta n + 1. Requires beta n >= 2; beta may exceed
/// 1/2 (beta >= 1 never caps).
ExplorationTrace explore_component(const Graph& g, EdgeId e, double p, double beta, std::uint64_t seed);

/// Exact distribution over integers with a common denominator.
struct ExactDistribution {
  std::uint64_t denominator = 1;
  std::map<std::size_t, std::uint64_t> weights;
  friend bool operator==(const ExactDistribution&, const ExactDistribution&) = default;
};

/// Distribution of the terminal |N(S)| of the uncapped exploration from e
/// with survival probability p_num / p_den, obtained by enumerating every
/// branch of the process. Weights use the common denominator p_den^(m-1).
ExactDistribution exploration_size_distribution(const Graph& g, EdgeId e, std::uint64_t p_num,
                                                std::uint64_t p_den);

// ---------------------------------------------------------------------------
// Giant component and connectivity

struct GiantComponentReport {
  StatEstimate estimate;  ///< e survives and its component has >= beta n vertices
  double epsilon = 0;     ///< p alpha - 1
  std::optional<double> bound;  ///< p epsilon / 8 when epsilon lies in (0, 1/3)
};

/// Trial i sparsifies with seed derive_seed(seed, {i}).
GiantComponentReport giant_component_rate(const Graph& g, EdgeId e, double p, double beta,
                                          double alpha, std::size_t trials, std::uint64_t seed);

/// Fraction of sparsifications G(p) that are connected.
StatEstimate connectivity_rate(const Graph& g, double p, std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Gambler's ruin

struct RuinParams {
  double gamma = 0.5;  ///< probability of a +1 step
  std::int64_t a = 1;  ///< up target
  std::int64_t b = 1;  ///< down target
};

/// P(walk reaches +a before -b), closed form.
double gamblers_ruin(const RuinParams& params);

/// Same probability by Gauss-Seidel value iteration on the absorbing chain
/// over positions -b..a.
double ruin_oracle(const RuinParams& params);

/// Walk with steps +alpha (probability p) and -1 started at 0. Success when
/// it reaches target before falling to -alpha or below.
StatEstimate simulate_escape(double alpha, double p, double target, std::size_t trials,
                             std::uint64_t seed);

struct ExplorationBoundReport {
  double epsilon = 0;
  bool applicable = false;     ///< epsilon in (0, 1/3)
  double target = 0;           ///< beta n (1 + alpha)
  StatEstimate escape;         ///< simulate_escape
  double escape_bound = 0;     ///< epsilon / 8
  StatEstimate exploration;    ///< exploration runs that hit the cap
};

ExplorationBoundReport exploration_bound_check(const Graph& g, EdgeId e, double p, double beta,
                                               double alpha, std::size_t trials, std::uint64_t seed);

}  // namespace gcgt
