#pragma once

#include <cstddef>

#include "gcgt/graph.hpp"

namespace gcgt {

/// Edges with exactly one endpoint in a.
EdgeSet boundary(const Graph& g, const VertexSet& a);

/// N(B): every vertex that is an endpoint of some edge in b.
VertexSet edge_endpoints_cover(const Graph& g, const EdgeSet& b);

/// Global minimum edge cut (Stoer-Wagner). Requires n >= 2; returns 0 for a
/// disconnected graph.
std::size_t min_cut(const Graph& g);

}  // namespace gcgt
