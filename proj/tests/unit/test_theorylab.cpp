#include <doctest.h>

#include <cmath>

#include "gcgt/error.hpp"
#include "gcgt/expansion.hpp"
#include "gcgt/generators.hpp"
#include "gcgt/theorylab.hpp"
#include "../support/oracles.hpp"

using namespace gcgt;

TEST_CASE("exploration trace invariants") {
  for (const Graph& g : {complete_graph(12), hypercube(4), fat_tree(4, true), barbell(5)}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const EdgeId e = static_cast<EdgeId>(seed % g.m());
      const auto trace = explore_component(g, e, 0.4, 0.5, seed);
      CHECK(trace.tree.front() == e);
      for (const auto& s : trace.steps) {
        CHECK(s.tree_edges + s.blocked == s.t + 2);
      }
      CHECK(trace.tree.size() + trace.blocked.size() == trace.steps.size() + 1);
      CHECK(trace.vertex_count == trace.tree.size() + 1);
      EdgeSet tree(g.m());
      for (auto t : trace.tree) tree.set(t);
      CHECK(is_connected_edge_set(g, tree));
      if (trace.end == ExplorationEnd::capped)
        CHECK(static_cast<double>(trace.tree.size()) > 0.5 * static_cast<double>(g.n()) + 1);
    }
  }
}

TEST_CASE("exploration degenerate probabilities") {
  const Graph g = barbell(4);
  const auto full = explore_component(g, 0, 1.0, 2.0, 1);
  CHECK(full.end == ExplorationEnd::exhausted);
  CHECK(full.vertex_count == 8);
  const auto capped = explore_component(g, 0, 1.0, 0.25, 1);
  CHECK(capped.end == ExplorationEnd::capped);
  CHECK(capped.tree.size() == 4);
  const auto none = explore_component(g, 0, 0.0, 0.5, 1);
  CHECK(none.end == ExplorationEnd::exhausted);
  CHECK(none.tree.size() == 1);
  CHECK(none.vertex_count == 2);
  CHECK_THROWS_AS(explore_component(g, 99, 0.5, 0.5, 1), ParameterError);
}

TEST_CASE("exploration distribution equals sparsification distribution") {
  const Graph tri = oracle::cycle(3);
  for (EdgeId e = 0; e < 3; ++e) {
    const auto dist = exploration_size_distribution(tri, e, 1, 2);
    CHECK(dist.denominator == 4);
    CHECK(dist.weights == oracle::conditional_component_sizes(tri, e, 1, 2));
    CHECK(dist.weights.at(2) == 1);
    CHECK(dist.weights.at(3) == 3);
  }
  for (const Graph& g : oracle::small_catalog()) {
    for (EdgeId e = 0; e < g.m(); ++e) {
      for (auto [num, den] : {std::pair<std::uint64_t, std::uint64_t>{1, 4}, {1, 2}, {3, 4}, {2, 3}}) {
        const auto dist = exploration_size_distribution(g, e, num, den);
        CHECK(dist.denominator == oracle::ipow(den, g.m() - 1));
        CHECK(dist.weights == oracle::conditional_component_sizes(g, e, num, den));
      }
    }
  }
}

TEST_CASE("gamblers ruin closed form") {
  CHECK(gamblers_ruin({0.5, 3, 1}) == 0.25);
  CHECK(gamblers_ruin({1.0, 4, 9}) == 1.0);
  CHECK(gamblers_ruin({0.0, 4, 9}) == 0.0);
  CHECK(gamblers_ruin({2.0 / 3.0, 1, 1}) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(ruin_oracle({2.0 / 3.0, 1, 1}) - 2.0 / 3.0) < 1e-12);
  CHECK(ruin_oracle({0.5, 6, 6}) == doctest::Approx(0.5).epsilon(1e-13));
  for (double g : {0.1, 0.37, 0.9}) CHECK(std::abs(ruin_oracle({g, 1, 1}) - g) < 1e-15);
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{1, 1}, {3, 7}, {20, 5}, {50, 50}}) {
    const double mid = static_cast<double>(b) / static_cast<double>(a + b);
    const double up = gamblers_ruin({0.5 + 1e-7, a, b});
    const double down = gamblers_ruin({0.5 - 1e-7, a, b});
    CHECK(std::abs(up - ruin_oracle({0.5 + 1e-7, a, b})) <= 1e-12);
    CHECK(std::abs(down - ruin_oracle({0.5 - 1e-7, a, b})) <= 1e-12);
    CHECK(std::abs((up + down) / 2 - mid) < 1e-9);
    CHECK(up > mid);
    CHECK(down < mid);
    for (double g : {0.05, 0.3, 0.49, 0.51, 0.7, 0.97})
      CHECK(std::abs(gamblers_ruin({g, a, b}) - ruin_oracle({g, a, b})) <= 1e-12);
  }
  CHECK_THROWS_AS(gamblers_ruin({0.5, 0, 1}), ParameterError);
  CHECK_THROWS_AS(gamblers_ruin({1.5, 1, 1}), ParameterError);
}

TEST_CASE("escape walk") {
  CHECK(simulate_escape(4, 1.0, 100, 200, 1).rate() == 1.0);
  const auto walk = simulate_escape(4, 1.2 / 4, 0.25 * 16 * 5, 50000, 3);
  CHECK(walk.rate() >= 0.2 / 8);
  double prev = 0;
  for (double p : {0.2, 0.26, 0.3, 0.35, 0.45}) {
    const auto est = simulate_escape(4, p, 40, 20000, 7);
    CHECK(est.rate() + 3 * est.standard_error() >= prev);
    prev = est.rate();
  }
}

TEST_CASE("giant component and exploration bound reports") {
  const Graph k20 = complete_graph(20);
  const auto one = giant_component_rate(k20, 0, 1.0, 0.25, 15, 50, 1);
  CHECK(one.estimate.rate() == 1.0);
  CHECK_FALSE(one.bound.has_value());
  const double p = 1.25 / 15;
  const auto r = giant_component_rate(k20, 0, p, 0.25, 15, 20000, 2);
  REQUIRE(r.bound.has_value());
  CHECK(r.epsilon == doctest::Approx(0.25));
  CHECK(*r.bound == doctest::Approx(p * 0.25 / 8));
  CHECK(r.estimate.rate() >= *r.bound - 3 * r.estimate.standard_error());
  const auto q4 = hypercube(4);
  const double alpha = certify_expansion(q4, 0.25).alpha.value();
  const double pq = 1.3 / alpha;
  const auto rq = giant_component_rate(q4, 3, pq, 0.25, alpha, 20000, 5);
  REQUIRE(rq.bound.has_value());
  CHECK(rq.estimate.rate() >= *rq.bound - 3 * rq.estimate.standard_error());
  const auto ex = exploration_bound_check(k20, 0, p, 0.25, 15, 5000, 4);
  CHECK(ex.applicable);
  CHECK(ex.escape.rate() >= ex.escape_bound - 3 * ex.escape.standard_error());
  CHECK(ex.exploration.rate() >= ex.escape_bound - 3 * ex.exploration.standard_error());
  CHECK_THROWS_AS(giant_component_rate(k20, 0, p, 0.25, 15, 0, 1), ParameterError);
}

TEST_CASE("connectivity rate") {
  CHECK(connectivity_rate(hypercube(4), 1.0, 100, 1).rate() == 1.0);
  CHECK(connectivity_rate(hypercube(4), 0.0, 100, 1).rate() == 0.0);
  const auto est = connectivity_rate(complete_graph(16), 5 * std::log(16.0) / 15, 10000, 3);
  CHECK(est.rate() >= 1 - 1.0 / 16 - 3 * est.standard_error());
}
