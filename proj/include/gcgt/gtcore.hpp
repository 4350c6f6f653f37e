#pragma once

#include <optional>
#include <vector>

#include "gcgt/graph.hpp"
#include "gcgt/testgen.hpp"

namespace gcgt {

using DefectiveSet = EdgeSet;
using OutcomeVector = std::vector<bool>;

/// outcome[i] = tests[i] intersects defective.
OutcomeVector run_tests(const TestCollection& tests, const DefectiveSet& defective);

/// Naive decoder: e is declared defective iff every test containing e is
/// positive. Edges covered by no test are therefore always declared
/// defective; check coverage separately if that matters.
DefectiveSet decode(const TestCollection& tests, const OutcomeVector& outcomes);

/// A violation of d-disjunctness: every test containing `edge` also meets
/// `defectives`, with edge not in defectives.
struct Witness {
  EdgeId edge = 0;
  std::vector<EdgeId> defectives;  ///< ascending
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct DisjunctnessReport {
  bool disjunct = true;
  std::optional<Witness> witness;
};

struct DisjunctOptions {
  /// Refuse when the projected number of word-level mask operations exceeds this.
  double budget = 1e10;
  unsigned threads = 1;
};

/// Worst-case count of word operations check_disjunct may perform:
/// m * sum_{k<=d} C(m-1, k) * ceil(t / 64).
double projected_disjunct_cost(std::size_t m, std::size_t t, unsigned d);

/// Exact d-disjunctness check. The reported witness is the first one in the
/// order (edge, |B|, B lexicographic), so it always has minimum size for its
/// edge; the report is identical for every thread count. Throws
/// BudgetError when projected_disjunct_cost exceeds options.budget.
DisjunctnessReport check_disjunct(const TestCollection& tests, unsigned d,
                                  const DisjunctOptions& options = {});

/// Replays a witness against the definition.
bool is_violation(const TestCollection& tests, const Witness& witness);

/// For a D-regular graph and d >= 2D - 2: if some edge e = {u, v} has no
/// singleton test, returns (e, all edges adjacent to e), which no connected
/// test can separate. Returns nullopt iff every singleton is present.
/// Throws DomainError on irregular graphs and PreconditionError when
/// d < 2D - 2 or a test is not a connected subgraph.
std::optional<Witness> singleton_witness(const Graph& g, const TestCollection& tests, unsigned d);

}  // namespace gcgt
