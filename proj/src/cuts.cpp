#include "gcgt/cuts.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "gcgt/error.hpp"

namespace gcgt {

EdgeSet boundary(const Graph& g, const VertexSet& a) {
  if (a.size() != g.n()) throw ParameterError("boundary: vertex set capacity != n");
  EdgeSet out(g.m());
  const auto edges = g.edges();
  for (std::size_t id = 0; id < edges.size(); ++id)
    if (a.test(edges[id].u) != a.test(edges[id].v)) out.set(id);
  return out;
}

VertexSet edge_endpoints_cover(const Graph& g, const EdgeSet& b) {
  if (b.size() != g.m()) throw ParameterError("edge_endpoints_cover: edge set capacity != m");
  VertexSet out(g.n());
  b.for_each([&](std::size_t id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    out.set(e.u);
    out.set(e.v);
  });
  return out;
}

std::size_t min_cut(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) throw ParameterError("min_cut: need at least 2 vertices");
  if (!is_connected(g)) return 0;

  // Dense Stoer-Wagner on the weighted contraction multigraph.
  std::vector<std::vector<std::size_t>> w(n, std::vector<std::size_t>(n, 0));
  for (const Edge& e : g.edges()) {
    ++w[e.u][e.v];
    ++w[e.v][e.u];
  }
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> key(n);
  std::vector<char> added(n);
  while (active.size() > 1) {
    std::fill(key.begin(), key.end(), 0);
    std::fill(added.begin(), added.end(), 0);
    std::size_t prev = active[0];
    std::size_t last = active[0];
    for (std::size_t step = 0; step < active.size(); ++step) {
      std::size_t pick = n;
      for (std::size_t v : active)
        if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step + 1 == active.size()) break;
      for (std::size_t v : active)
        if (!added[v]) key[v] += w[pick][v];
    }
    best = std::min(best, key[last]);
    // Merge last into prev.
    for (std::size_t v : active) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    active.erase(std::find(active.begin(), active.end(), last));
  }
  return best;
}

}  // namespace gcgt
