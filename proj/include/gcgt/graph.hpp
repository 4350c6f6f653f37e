#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcgt/bitset.hpp"
#include "gcgt/rng.hpp"

namespace gcgt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Simple undirected graph with stable edge ids. The position of an edge in
/// edges() is its id, and the edge ids are the universe of group-testing
/// items. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices [0, n). Pairs are normalised to u < v;
  /// self-loops, duplicates and out-of-range endpoints throw ParameterError.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Incident (neighbor, edge id) pairs of v, in ascending edge id order.
  std::span<const Incidence> neighbors(VertexId v) const {
    return {incidences_.data() + offsets_.at(v), incidences_.data() + offsets_.at(v + 1)};
  }
  std::size_t degree(VertexId v) const { return offsets_.at(v + 1) - offsets_.at(v); }
  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  bool is_regular() const noexcept { return n_ == 0 || min_degree() == max_degree(); }

  VertexSet empty_vertex_set() const { return VertexSet(n_); }
  EdgeSet empty_edge_set() const { return EdgeSet(m()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

/// Per-vertex component ids, numbered 0..count-1 in order of each
/// component's smallest vertex.
struct ComponentLabeling {
  std::vector<std::uint32_t> label;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return sizes.size(); }
};

ComponentLabeling connected_components(const Graph& g);

/// Components of the spanning subgraph (V, kept).
ComponentLabeling connected_components(const Graph& g, const EdgeSet& kept);

bool is_connected(const Graph& g);

/// Whether (N(T), T) is a single connected component. Empty T is not.
bool is_connected_edge_set(const Graph& g, const EdgeSet& edges);

/// True when g has a proper 2-colouring.
bool is_bipartite(const Graph& g);

/// One Bernoulli(p) draw per edge in ascending id order from rng.
EdgeSet sample_edges(const Graph& g, double p, SplitMix64& rng);

/// The random subgraph G(p) together with the original id of every
/// surviving edge (surviving edges keep their relative order).
struct Sparsified {
  Graph graph;
  std::vector<EdgeId> original_id;
  EdgeSet kept;
};

/// G(p) with edge survival drawn from SplitMix64(seed), one draw per edge id
/// in ascending order.
Sparsified sparsify(const Graph& g, double p, std::uint64_t seed);

/// Subgraph on the same vertex set keeping the given edges.
Sparsified restrict_edges(const Graph& g, const EdgeSet& kept);

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::uint32_t find(std::uint32_t x) noexcept;
  bool unite(std::uint32_t a, std::uint32_t b) noexcept;
  std::size_t set_size(std::uint32_t x) noexcept { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace detail

}  // namespace gcgt
