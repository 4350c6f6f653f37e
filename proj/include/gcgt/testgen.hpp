#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcgt/graph.hpp"

namespace gcgt {

/// Ordered collection of tests over the edge universe [0, m).
struct TestCollection {
  std::size_t m = 0;
  std::vector<EdgeSet> tests;

  std::size_t size() const noexcept { return tests.size(); }
  friend bool operator==(const TestCollection&, const TestCollection&) = default;
};

enum class ComponentMode {
  all_large,     ///< every component with at least beta*n vertices
  largest_only,  ///< only the largest component, if it meets the threshold
};

struct MakeTestsParams {
  unsigned d = 1;
  double delta = 2.0;
  double beta = 0.5;
  std::size_t tau = 1;  ///< sparsification rounds
  ComponentMode mode = ComponentMode::all_large;
  std::uint64_t seed = 0;

  /// Sparsification probability 1 / (delta d).
  double p() const noexcept { return 1.0 / (delta * static_cast<double>(d)); }
};

/// Throws ParameterError unless d >= 1, delta >= 2/d, 0 < p <= 1/2,
/// beta in (0, 1/2], tau >= 1 and beta*n >= 2.
void validate(const MakeTestsParams& params, std::size_t n);

/// Connected-subgraph tests from repeated sparsification. Round r uses the
/// seed derive_seed(params.seed, {r}) and draws one Bernoulli(p) per edge in
/// ascending id order; a test is the set of surviving edges of a component
/// with at least beta*n vertices. Ties in largest_only mode go to the
/// component with the smallest minimum vertex.
TestCollection make_tests(const Graph& g, const MakeTestsParams& params);

/// Runs rounds 0, 1, 2, ... of make_tests until exactly target tests have
/// been produced (the last round is truncated if needed). Throws
/// ParameterError if max_rounds rounds do not suffice.
TestCollection make_tests_until(const Graph& g, const MakeTestsParams& params,
                                std::size_t target, std::size_t max_rounds);

/// tau unconstrained tests, each edge included independently with
/// probability 1/(d+1). Test i uses seed derive_seed(seed, {i}). Empty tests
/// are kept.
TestCollection random_tests(std::size_t m, unsigned d, std::size_t tau, std::uint64_t seed);

struct MixingOptions {
  /// nullopt: lazy exactly when the graph is bipartite.
  std::optional<bool> lazy;
  /// nullopt: 10 n^2.
  std::optional<std::size_t> max_steps;
};

struct MixingEstimate {
  std::size_t steps = 0;
  VertexId start = 0;
  bool lazy = false;
  double threshold = 0;  ///< 1 / (2 c n)^2
};

/// Degree ratio c = ceil(max_deg / min_deg).
std::size_t degree_ratio(const Graph& g);

/// First t at which the walk distribution started from a seeded uniform
/// vertex is within total variation 1/(2cn)^2 of deg(v)/(2m). The
/// distribution is propagated exactly. Throws DomainError on a
/// disconnected graph or when the step cap is exceeded.
MixingEstimate estimate_mixing_time(const Graph& g, std::uint64_t seed, MixingOptions options = {});

struct WalkParams {
  unsigned d = 1;
  double l = 4.0;
  std::size_t tau = 1;  ///< number of walks
  std::uint64_t seed = 0;
  std::size_t c = 1;
  std::size_t tau_mix = 1;
};

/// Fills c from the graph and tau_mix from estimate_mixing_time(g, mixing_seed).
WalkParams make_walk_params(const Graph& g, unsigned d, double l, std::size_t tau,
                            std::uint64_t seed, std::uint64_t mixing_seed);

/// ceil(l n D / (c^3 d tau_mix)) with D the minimum degree; 0 is clamped
/// to 1 with a warning.
std::size_t walk_length(const Graph& g, const WalkParams& params);

/// tau tests, each the distinct edges of a simple random walk from a
/// uniform start vertex. Walk i uses seed derive_seed(params.seed, {i}).
TestCollection random_walk_tests(const Graph& g, const WalkParams& params);

}  // namespace gcgt
