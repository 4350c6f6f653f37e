#include "gcgt/gtcore.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "gcgt/error.hpp"

namespace gcgt {

OutcomeVector run_tests(const TestCollection& tests, const DefectiveSet& defective) {
  if (defective.size() != tests.m) throw ParameterError("run_tests: defective set capacity != m");
  OutcomeVector out(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) out[i] = tests.tests[i].intersects(defective);
  return out;
}

DefectiveSet decode(const TestCollection& tests, const OutcomeVector& outcomes) {
  if (outcomes.size() != tests.size()) throw ParameterError("decode: outcome length != number of tests");
  DefectiveSet cleared(tests.m);
  for (std::size_t i = 0; i < tests.size(); ++i)
    if (!outcomes[i]) cleared |= tests.tests[i];
  return cleared.complement();
}

double projected_disjunct_cost(std::size_t m, std::size_t t, unsigned d) {
  if (m == 0) return 0.0;
  double combos = 0.0;
  double c = 1.0;  // C(m-1, k)
  for (unsigned k = 0; k <= d && k <= m - 1; ++k) {
    combos += c;
    c = c * static_cast<double>(m - 1 - k) / static_cast<double>(k + 1);
  }
  const double words = std::max<double>(1.0, std::ceil(static_cast<double>(t) / 64.0));
  return static_cast<double>(m) * combos * words;
}

namespace {

std::vector<TestMask> memberships(const TestCollection& tests) {
  std::vector<TestMask> masks(tests.m, TestMask(tests.size()));
  for (std::size_t i = 0; i < tests.size(); ++i) {
    if (tests.tests[i].size() != tests.m) throw ParameterError("test capacity != m");
    tests.tests[i].for_each([&](std::size_t e) { masks[e].set(i); });
  }
  return masks;
}

// Depth-first search for `need` more edges (chosen from candidates[from..])
// whose masks cover the residual.
bool cover_search(const std::vector<TestMask>& masks, const std::vector<EdgeId>& candidates,
                  std::size_t from, unsigned need, std::vector<TestMask>& residual, unsigned depth,
                  std::vector<EdgeId>& chosen) {
  const TestMask& r = residual[depth];
  for (std::size_t i = from; i + need <= candidates.size(); ++i) {
    const EdgeId f = candidates[i];
    TestMask& next = residual[depth + 1];
    next = r;
    next.subtract(masks[f]);
    chosen.push_back(f);
    if (need == 1) {
      if (next.none()) return true;
    } else if (cover_search(masks, candidates, i + 1, need - 1, residual, depth + 1, chosen)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

std::optional<Witness> witness_for_edge(const std::vector<TestMask>& masks, EdgeId e, unsigned d) {
  const TestMask& target = masks[e];
  if (target.none()) return Witness{e, {}};
  // Only edges sharing a test with e can belong to a minimum-size witness.
  std::vector<EdgeId> candidates;
  for (EdgeId f = 0; f < masks.size(); ++f)
    if (f != e && masks[f].intersects(target)) candidates.push_back(f);
  std::vector<TestMask> residual(d + 1, target);
  std::vector<EdgeId> chosen;
  for (unsigned k = 1; k <= d && k <= candidates.size(); ++k) {
    residual[0] = target;
    chosen.clear();
    if (cover_search(masks, candidates, 0, k, residual, 0, chosen)) return Witness{e, chosen};
  }
  return std::nullopt;
}

}  // namespace

DisjunctnessReport check_disjunct(const TestCollection& tests, unsigned d,
                                  const DisjunctOptions& options) {
  if (d < 1) throw ParameterError("check_disjunct: d must be at least 1");
  const double cost = projected_disjunct_cost(tests.m, tests.size(), d);
  if (cost > options.budget) {
    throw BudgetError("check_disjunct: projected " + std::to_string(cost) +
                      " mask operations exceeds budget " + std::to_string(options.budget));
  }
  const auto masks = memberships(tests);
  const std::size_t m = tests.m;
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(m, 1))));

  std::vector<std::optional<Witness>> found(m);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{m};  // smallest edge known to have a witness
  auto worker = [&] {
    while (true) {
      const std::size_t e = next.fetch_add(1);
      if (e >= m || e > best.load()) return;
      found[e] = witness_for_edge(masks, static_cast<EdgeId>(e), d);
      if (found[e]) {
        std::size_t cur = best.load();
        while (e < cur && !best.compare_exchange_weak(cur, e)) {
        }
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  DisjunctnessReport report;
  if (best.load() < m) {
    report.disjunct = false;
    report.witness = found[best.load()];
  }
  return report;
}

bool is_violation(const TestCollection& tests, const Witness& w) {
  if (w.edge >= tests.m) return false;
  if (std::find(w.defectives.begin(), w.defectives.end(), w.edge) != w.defectives.end()) return false;
  EdgeSet b(tests.m);
  for (EdgeId f : w.defectives) {
    if (f >= tests.m) return false;
    b.set(f);
  }
  for (const EdgeSet& t : tests.tests)
    if (t.test(w.edge) && !t.intersects(b)) return false;
  return true;
}

std::optional<Witness> singleton_witness(const Graph& g, const TestCollection& tests, unsigned d) {
  if (tests.m != g.m()) throw ParameterError("singleton_witness: test universe != m");
  if (!g.is_regular()) throw DomainError("singleton_witness: graph is not regular");
  const std::size_t degree = g.max_degree();
  if (degree >= 1 && d + 2 < 2 * degree)
    throw PreconditionError("singleton_witness: requires d >= 2D - 2 = " + std::to_string(2 * degree - 2));
  EdgeSet singletons(g.m());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const EdgeSet& t = tests.tests[i];
    if (!is_connected_edge_set(g, t))
      throw PreconditionError("singleton_witness: test " + std::to_string(i) + " is not a connected subgraph");
    if (t.count() == 1) singletons.set(t.first());
  }
  const std::size_t missing = singletons.complement().first();
  if (missing >= g.m()) return std::nullopt;
  const auto e = static_cast<EdgeId>(missing);
  const Edge& uv = g.edge(e);
  std::vector<EdgeId> adjacent;
  for (VertexId x : {uv.u, uv.v})
    for (const Incidence& inc : g.neighbors(x))
      if (inc.edge != e) adjacent.push_back(inc.edge);
  std::sort(adjacent.begin(), adjacent.end());
  adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());
  return Witness{e, std::move(adjacent)};
}

}  // namespace gcgt
