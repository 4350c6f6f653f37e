#pragma once

#include "gcgt/graph.hpp"

namespace gcgt {

struct SpectralBounds {
  double degree = 0;       ///< D
  double lambda = 0;       ///< second-largest adjacency eigenvalue
  double lower = 0;        ///< (D - lambda) / 2
  double upper = 0;        ///< sqrt(2 D (D - lambda))
};

/// Second-largest eigenvalue of the adjacency matrix of a connected
/// D-regular graph, by power iteration on A + D I restricted to the
/// complement of the all-ones vector. Relative tolerance 1e-9.
double second_adjacency_eigenvalue(const Graph& g);

/// Cheeger-type bounds on the (1/2, alpha) edge expansion of a connected
/// regular graph. Throws DomainError on irregular or disconnected input.
SpectralBounds spectral_expansion_bounds(const Graph& g);

}  // namespace gcgt
