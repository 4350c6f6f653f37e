#include "gcgt/graph.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <string>

#include "gcgt/error.hpp"

namespace gcgt {

namespace {
bool g_warnings_enabled = true;
}

void warn(const std::string& message) {
  if (g_warnings_enabled) std::clog << "warning: " << message << '\n';
}

void set_warnings_enabled(bool enabled) { g_warnings_enabled = enabled; }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ > std::size_t{0xffffffffU}) throw ParameterError("graph: too many vertices");
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw ParameterError("graph: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") has an endpoint outside [0, " + std::to_string(n_) + ")");
    }
    if (e.u == e.v) throw ParameterError("graph: self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw ParameterError("graph: duplicate edge (" + std::to_string(dup->u) + ", " +
                           std::to_string(dup->v) + ")");
    }
  }

  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  incidences_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidences_[cursor[e.u]++] = {e.v, id};
    incidences_[cursor[e.v]++] = {e.u, id};
  }
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = n_ == 0 ? 0 : offsets_[1] - offsets_[0];
  for (std::size_t v = 0; v < n_; ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

namespace detail {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), 0U);
}

std::uint32_t DisjointSets::find(std::uint32_t x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::uint32_t a, std::uint32_t b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

}  // namespace detail

namespace {

ComponentLabeling label_from_sets(std::size_t n, detail::DisjointSets& ds) {
  ComponentLabeling out;
  out.label.assign(n, 0);
  std::vector<std::uint32_t> root_label(n, UINT32_MAX);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t r = ds.find(v);
    if (root_label[r] == UINT32_MAX) {
      root_label[r] = static_cast<std::uint32_t>(out.sizes.size());
      out.sizes.push_back(0);
    }
    out.label[v] = root_label[r];
    ++out.sizes[root_label[r]];
  }
  return out;
}

}  // namespace

ComponentLabeling connected_components(const Graph& g) {
  detail::DisjointSets ds(g.n());
  for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
  return label_from_sets(g.n(), ds);
}

ComponentLabeling connected_components(const Graph& g, const EdgeSet& kept) {
  if (kept.size() != g.m()) throw ParameterError("components: edge set capacity != m");
  detail::DisjointSets ds(g.n());
  const auto edges = g.edges();
  kept.for_each([&](std::size_t id) { ds.unite(edges[id].u, edges[id].v); });
  return label_from_sets(g.n(), ds);
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).count() == 1; }

bool is_connected_edge_set(const Graph& g, const EdgeSet& edges) {
  if (edges.size() != g.m()) throw ParameterError("edge set capacity != m");
  if (edges.none()) return false;
  detail::DisjointSets ds(g.n());
  std::size_t merges = 0;
  std::size_t vertices = 0;
  VertexSet touched(g.n());
  edges.for_each([&](std::size_t id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    if (ds.unite(e.u, e.v)) ++merges;
    for (VertexId x : {e.u, e.v}) {
      if (!touched.test(x)) {
        touched.set(x);
        ++vertices;
      }
    }
  });
  return merges + 1 == vertices;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.n(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(v)) {
        if (colour[inc.neighbor] < 0) {
          colour[inc.neighbor] = 1 - colour[v];
          stack.push_back(inc.neighbor);
        } else if (colour[inc.neighbor] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

EdgeSet sample_edges(const Graph& g, double p, SplitMix64& rng) {
  EdgeSet kept(g.m());
  for (std::size_t id = 0; id < g.m(); ++id)
    if (rng.bernoulli(p)) kept.set(id);
  return kept;
}

Sparsified restrict_edges(const Graph& g, const EdgeSet& kept) {
  if (kept.size() != g.m()) throw ParameterError("restrict_edges: edge set capacity != m");
  std::vector<Edge> edges;
  std::vector<EdgeId> ids;
  edges.reserve(kept.count());
  ids.reserve(kept.count());
  kept.for_each([&](std::size_t id) {
    edges.push_back(g.edge(static_cast<EdgeId>(id)));
    ids.push_back(static_cast<EdgeId>(id));
  });
  return {Graph(g.n(), std::move(edges)), std::move(ids), kept};
}

Sparsified sparsify(const Graph& g, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("sparsify: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  return restrict_edges(g, sample_edges(g, p, rng));
}

}  // namespace gcgt
