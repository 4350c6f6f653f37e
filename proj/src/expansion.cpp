#include "gcgt/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "gcgt/cuts.hpp"
#include "gcgt/error.hpp"

namespace gcgt {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ParameterError("Rational: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t max_eligible_size(std::size_t n, double beta) {
  return static_cast<std::size_t>(std::floor(beta * static_cast<double>(n) + 1e-9));
}

namespace {

ExpansionCertificate exact_expansion(const Graph& g, double beta, std::size_t limit) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= 1U << e.v;
    nbr[e.v] |= 1U << e.u;
  }
  // Gray-code walk over all subsets; adding v changes |dA| by
  // deg(v) - 2 |N(v) & A|, removing it by the negation.
  std::uint32_t set = 0;
  std::int64_t cut = 0;
  std::uint64_t best_num = 0;
  std::uint64_t best_den = 0;
  std::uint32_t best_set = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<unsigned>(std::countr_zero(i));
    const std::uint32_t bit = 1U << v;
    const auto inside = static_cast<std::int64_t>(std::popcount(nbr[v] & set));
    const auto deg = static_cast<std::int64_t>(std::popcount(nbr[v]));
    if (set & bit) {
      set &= ~bit;
      cut -= deg - 2 * inside;
    } else {
      set |= bit;
      cut += deg - 2 * inside;
    }
    const auto size = static_cast<std::uint64_t>(std::popcount(set));
    if (size > limit) continue;
    const auto c = static_cast<std::uint64_t>(cut);
    // c / size < best_num / best_den, ties broken toward the numerically
    // smaller subset mask so the witness is deterministic.
    if (best_den == 0 || c * best_den < best_num * size ||
        (c * best_den == best_num * size && set < best_set)) {
      best_num = c;
      best_den = size;
      best_set = set;
    }
  }
  ExpansionCertificate cert;
  cert.beta = beta;
  cert.alpha = Rational(best_num, best_den);
  VertexSet witness(n);
  for (std::size_t v = 0; v < n; ++v)
    if (best_set >> v & 1U) witness.set(v);
  cert.witness = std::move(witness);
  cert.exact = true;
  return cert;
}

ExpansionCertificate sampled_expansion(const Graph& g, double beta, std::size_t limit,
                                       std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.n();
  SplitMix64 rng(seed);
  std::optional<Rational> best;
  VertexSet best_set(n);
  auto consider = [&](const VertexSet& a) {
    const std::size_t size = a.count();
    if (size == 0 || size > limit) return;
    const Rational r(boundary(g, a).count(), size);
    if (!best || r < *best) {
      best = r;
      best_set = a;
    }
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t target = 1 + rng.below(limit);
    VertexSet a(n);
    if (s % 2 == 0) {
      // Connected sets grown by random BFS frontier expansion; minimisers
      // of |dA|/|A| are connected.
      std::vector<VertexId> frontier{static_cast<VertexId>(rng.below(n))};
      a.set(frontier[0]);
      std::size_t size = 1;
      while (size < target && !frontier.empty()) {
        const std::size_t idx = rng.below(frontier.size());
        const VertexId v = frontier[idx];
        std::vector<VertexId> open;
        for (const Incidence& inc : g.neighbors(v))
          if (!a.test(inc.neighbor)) open.push_back(inc.neighbor);
        if (open.empty()) {
          frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(idx));
          continue;
        }
        const VertexId w = open[rng.below(open.size())];
        a.set(w);
        frontier.push_back(w);
        ++size;
        consider(a);
      }
    } else {
      for (std::size_t k = 0; k < target; ++k) a.set(rng.below(n));
    }
    consider(a);
  }
  ExpansionCertificate cert;
  cert.beta = beta;
  cert.alpha = best.value_or(Rational(0, 1));
  if (best) cert.witness = best_set;
  cert.exact = false;
  return cert;
}

}  // namespace

ExpansionCertificate certify_expansion(const Graph& g, double beta, std::size_t samples,
                                       std::uint64_t seed) {
  if (!(beta > 0.0 && beta <= 0.5)) throw ParameterError("certify_expansion: beta must lie in (0, 1/2]");
  const std::size_t limit = max_eligible_size(g.n(), beta);
  if (limit < 1) throw ParameterError("certify_expansion: beta * n < 1");
  if (g.n() <= kExactExpansionMaxVertices) return exact_expansion(g, beta, limit);
  warn("certify_expansion: n > 24, using sampled (heuristic) mode");
  return sampled_expansion(g, beta, limit, samples, seed);
}

}  // namespace gcgt
