#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcgt/generators.hpp"
#include "gcgt/graph.hpp"
#include "gcgt/testgen.hpp"

namespace gcgt {

enum class Method { subgraph, walk, random };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);

/// A graph plus the identifiers written into CSV rows.
struct GraphInput {
  std::string family;
  std::string params;
  Graph graph;
};

GraphInput graph_input(const GraphFamily& family);

/// One point of an experiment curve.
struct ExperimentRecord {
  std::string family;
  std::string params;
  Method method = Method::subgraph;
  unsigned d = 1;
  std::size_t tau = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double p_hat = 0;
  double std_error = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct ExperimentConfig {
  std::vector<Method> methods{Method::subgraph, Method::walk, Method::random};
  unsigned d = 1;
  std::vector<std::size_t> taus;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Walk length multiplier; default 1 for complete graphs and 4 otherwise.
  std::optional<double> walk_l;
  double disjunct_budget = 1e10;
};

/// Seed rule identifier recorded in manifests.
inline constexpr std::string_view kSeedRule =
    "splitmix64/fnv1a-v1: trial seed = derive_seed(master, {fnv1a(experiment id), tau, trial})";

/// Seed of one trial: derive_seed(master, {stable_hash(experiment_id), tau, trial}).
std::uint64_t trial_seed(std::uint64_t master, std::string_view experiment_id, std::size_t tau,
                         std::size_t trial);

/// Tests produced by `method` with exactly tau tests. The subgraph method
/// keeps the largest component of G(1/(d+1)) per round (threshold 2
/// vertices); the walk method uses the given precomputed parameters.
TestCollection generate_tests(const GraphInput& input, Method method, unsigned d, std::size_t tau,
                              std::uint64_t seed, const WalkParams& walk);

/// For each method and tau: fraction of `trials` collections that are
/// d-disjunct. Rows are sorted by (family, params, method, d, tau).
std::vector<ExperimentRecord> experiment_disjunct_probability(const GraphInput& input,
                                                              const ExperimentConfig& config);

/// For each method and tau: fraction of trials in which the naive decoder
/// recovers a uniformly random d-subset of failed edges exactly.
std::vector<ExperimentRecord> experiment_random_failures(const GraphInput& input,
                                                         const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "family,params,method,d,tau,trials,successes,p_hat,stderr,seed";

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
std::string to_csv(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_csv(std::istream& in);

/// JSON manifest describing a run: tool version, parameters, master seed,
/// seed rule and wall-clock timestamps.
std::string manifest_json(std::string_view experiment, const GraphInput& input,
                          const ExperimentConfig& config,
                          std::chrono::system_clock::time_point started,
                          std::chrono::system_clock::time_point finished);

}  // namespace gcgt
