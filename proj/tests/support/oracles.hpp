// Naive reference implementations used by the unit and acceptance tests.
// Deliberately share no code with the library beyond the Graph container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gcgt/graph.hpp"
#include "gcgt/testgen.hpp"

namespace oracle {

using Tests = std::vector<std::vector<int>>;

inline Tests to_lists(const gcgt::TestCollection& tc) {
  Tests out;
  for (const auto& t : tc.tests) {
    std::vector<int> row;
    for (std::size_t e = 0; e < tc.m; ++e)
      if (t.test(e)) row.push_back(static_cast<int>(e));
    out.push_back(row);
  }
  return out;
}

inline gcgt::TestCollection from_lists(std::size_t m, const Tests& lists) {
  gcgt::TestCollection tc{m, {}};
  for (const auto& row : lists) {
    gcgt::EdgeSet s(m);
    for (int e : row) s.set(static_cast<std::size_t>(e));
    tc.tests.push_back(s);
  }
  return tc;
}

inline bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// True when some test contains e and none of B.
inline bool separated(const Tests& tests, int e, const std::vector<int>& b) {
  for (const auto& t : tests) {
    if (!contains(t, e)) continue;
    bool clean = true;
    for (int x : b)
      if (contains(t, x)) clean = false;
    if (clean) return true;
  }
  return false;
}

struct Violation {
  int e;
  std::vector<int> b;
};

// First violation in (e, |B|, lexicographic B) order, by plain enumeration.
inline std::optional<Violation> first_violation(std::size_t m, const Tests& tests, unsigned d) {
  for (int e = 0; e < static_cast<int>(m); ++e) {
    std::vector<int> others;
    for (int x = 0; x < static_cast<int>(m); ++x)
      if (x != e) others.push_back(x);
    for (unsigned k = 0; k <= d && k <= others.size(); ++k) {
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<int> b;
        for (int i : idx) b.push_back(others[static_cast<std::size_t>(i)]);
        if (!separated(tests, e, b)) return Violation{e, b};
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(others.size() - k) + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

inline std::vector<bool> outcomes(const Tests& tests, const std::vector<int>& b) {
  std::vector<bool> out;
  for (const auto& t : tests) {
    bool pos = false;
    for (int x : b)
      if (contains(t, x)) pos = true;
    out.push_back(pos);
  }
  return out;
}

// Naive decoder: an edge is cleared iff it lies in some negative test.
inline std::vector<int> decode(std::size_t m, const Tests& tests, const std::vector<bool>& out) {
  std::vector<int> result;
  for (int e = 0; e < static_cast<int>(m); ++e) {
    bool cleared = false;
    for (std::size_t i = 0; i < tests.size(); ++i)
      if (!out[i] && contains(tests[i], e)) cleared = true;
    if (!cleared) result.push_back(e);
  }
  return result;
}

// Number of vertices in the component containing edge e when exactly the
// edges in `mask` (bit i = edge i) are present.
inline std::size_t component_vertices(const gcgt::Graph& g, std::uint64_t mask, gcgt::EdgeId e) {
  std::vector<std::size_t> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (!((mask >> i) & 1U)) continue;
    const auto a = find(g.edges()[i].u);
    const auto b = find(g.edges()[i].v);
    if (a != b) parent[a] = b;
  }
  const auto root = find(g.edges()[e].u);
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (find(v) == root) ++count;
  return count;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= b;
  return r;
}

// Conditional distribution of |C_e| given e survives, over all 2^(m-1)
// states of the other edges; weights over denominator p_den^(m-1).
inline std::map<std::size_t, std::uint64_t> conditional_component_sizes(const gcgt::Graph& g,
                                                                        gcgt::EdgeId e,
                                                                        std::uint64_t p_num,
                                                                        std::uint64_t p_den) {
  std::map<std::size_t, std::uint64_t> dist;
  const std::size_t m = g.m();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (!((mask >> e) & 1U)) continue;
    const auto kept = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    const std::uint64_t w = ipow(p_num, kept) * ipow(p_den - p_num, m - 1 - kept);
    if (w == 0) continue;
    dist[component_vertices(g, mask, e)] += w;
  }
  return dist;
}

// Min |boundary(A)| / |A| over 1 <= |A| <= kmax by direct enumeration,
// returned as (boundary, size) of the minimizing ratio.
inline std::pair<std::size_t, std::size_t> brute_expansion(const gcgt::Graph& g, std::size_t kmax) {
  std::pair<std::size_t, std::size_t> best{0, 0};
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << g.n()); ++a) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(a));
    if (k > kmax) continue;
    std::size_t cut = 0;
    for (const auto& ed : g.edges())
      if (((a >> ed.u) & 1U) != ((a >> ed.v) & 1U)) ++cut;
    if (best.second == 0 || cut * best.second < best.first * k) best = {cut, k};
  }
  return best;
}

// Global min cut by enumerating every bipartition with vertex 0 on one side.
inline std::size_t brute_min_cut(const gcgt::Graph& g) {
  std::size_t best = g.m() + 1;
  const std::size_t n = g.n();
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << (n - 1)); ++a) {
    const std::uint64_t side = a << 1;
    std::size_t cut = 0;
    for (const auto& ed : g.edges())
      if (((side >> ed.u) & 1U) != ((side >> ed.v) & 1U)) ++cut;
    best = std::min(best, cut);
  }
  return best;
}

inline gcgt::Graph cycle(std::size_t n) {
  std::vector<gcgt::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<gcgt::VertexId>(i), static_cast<gcgt::VertexId>((i + 1) % n)});
  return gcgt::Graph(n, edges);
}

inline gcgt::Graph path(std::size_t n) {
  std::vector<gcgt::Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({static_cast<gcgt::VertexId>(i), static_cast<gcgt::VertexId>(i + 1)});
  return gcgt::Graph(n, edges);
}

// Small graphs with at most 10 edges.
inline std::vector<gcgt::Graph> small_catalog() {
  using gcgt::Graph;
  std::vector<Graph> out;
  out.push_back(Graph(2, {{0, 1}}));
  out.push_back(cycle(3));
  out.push_back(path(4));
  out.push_back(path(6));
  out.push_back(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  out.push_back(cycle(4));
  out.push_back(cycle(5));
  out.push_back(cycle(7));
  out.push_back(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  out.push_back(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
  out.push_back(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  out.push_back(Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
  out.push_back(Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}));
  out.push_back(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  out.push_back(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
  out.push_back(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  out.push_back(Graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}}));
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 4; ++i) {
    const std::size_t n = 5 + static_cast<std::size_t>(i % 3);
    std::vector<gcgt::Edge> edges;
    for (gcgt::VertexId u = 0; u < n; ++u)
      for (gcgt::VertexId v = u + 1; v < n; ++v)
        if (edges.size() < 10 && std::bernoulli_distribution(0.45)(rng)) edges.push_back({u, v});
    if (!edges.empty()) out.push_back(Graph(n, edges));
  }
  return out;
}

}  // namespace oracle
