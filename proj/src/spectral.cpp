#include "gcgt/spectral.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "gcgt/error.hpp"

namespace gcgt {

namespace {

void project_out_constant(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

double norm(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

}  // namespace

double second_adjacency_eigenvalue(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) throw DomainError("spectral: need at least 2 vertices");
  if (!g.is_regular()) throw DomainError("spectral: graph is not regular");
  if (!is_connected(g)) throw DomainError("spectral: graph is not connected");
  const double shift = static_cast<double>(g.max_degree());

  // The shifted operator A + D I is positive semidefinite, so its dominant
  // eigenvalue on 1-perp is lambda_2 + D.
  SplitMix64 rng(0x5eed);
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform() - 0.5;
  project_out_constant(x);
  double nx = norm(x);
  for (double& v : x) v /= nx;

  std::vector<double> y(n);
  double mu = 0.0;
  constexpr double kTol = 1e-9;
  constexpr int kMaxIter = 2'000'000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    for (std::size_t v = 0; v < n; ++v) {
      double s = shift * x[v];
      for (const Incidence& inc : g.neighbors(static_cast<VertexId>(v))) s += x[inc.neighbor];
      y[v] = s;
    }
    project_out_constant(y);
    mu = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    // Residual of the Rayleigh pair bounds the eigenvalue error.
    double res2 = 0.0;
    for (std::size_t v = 0; v < n; ++v) res2 += (y[v] - mu * x[v]) * (y[v] - mu * x[v]);
    const double ny = norm(y);
    if (ny == 0.0) return -shift;
    for (std::size_t v = 0; v < n; ++v) x[v] = y[v] / ny;
    if (std::sqrt(res2) <= kTol * std::max(1.0, std::abs(mu))) break;
  }
  return mu - shift;
}

SpectralBounds spectral_expansion_bounds(const Graph& g) {
  SpectralBounds b;
  b.lambda = second_adjacency_eigenvalue(g);
  b.degree = static_cast<double>(g.max_degree());
  const double gap = std::max(0.0, b.degree - b.lambda);
  b.lower = gap / 2.0;
  b.upper = std::sqrt(2.0 * b.degree * gap);
  return b;
}

}  // namespace gcgt
