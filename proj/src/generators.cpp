#include "gcgt/generators.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "gcgt/error.hpp"

namespace gcgt {

namespace {

Graph canonical(std::size_t n, std::vector<Edge> edges) {
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return Graph(n, std::move(edges));
}

VertexId vid(std::size_t v) { return static_cast<VertexId>(v); }

template <class T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(items[i - 1], items[j]);
  }
}

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

std::optional<std::vector<Edge>> try_pairing(std::size_t n, std::size_t degree, SplitMix64& rng) {
  std::vector<VertexId> points;
  points.reserve(n * degree);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < degree; ++i) points.push_back(vid(v));
  shuffle(points, rng);
  std::vector<Edge> edges;
  std::vector<std::uint64_t> keys;
  edges.reserve(points.size() / 2);
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    if (points[i] == points[i + 1]) return std::nullopt;
    edges.push_back({points[i], points[i + 1]});
    keys.push_back(pair_key(points[i], points[i + 1]));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return std::nullopt;
  return edges;
}

// Sequential pairing: repeatedly join two random free points whose vertices
// are distinct and not yet adjacent; restart if no such pair remains.
std::optional<std::vector<Edge>> try_steger_wormald(std::size_t n, std::size_t degree,
                                                    SplitMix64& rng) {
  std::vector<VertexId> points;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < degree; ++i) points.push_back(vid(v));
  std::vector<std::uint64_t> present;
  std::vector<Edge> edges;
  auto adjacent = [&](VertexId a, VertexId b) {
    return std::binary_search(present.begin(), present.end(), pair_key(a, b));
  };
  while (!points.empty()) {
    bool paired = false;
    for (int attempt = 0; attempt < 64 && !paired; ++attempt) {
      const std::size_t i = rng.below(points.size());
      const std::size_t j = rng.below(points.size());
      if (i == j || points[i] == points[j] || adjacent(points[i], points[j])) continue;
      const VertexId a = points[i];
      const VertexId b = points[j];
      edges.push_back({a, b});
      present.insert(std::upper_bound(present.begin(), present.end(), pair_key(a, b)),
                     pair_key(a, b));
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
      paired = true;
    }
    if (paired) continue;
    bool any_suitable = false;
    for (std::size_t i = 0; i < points.size() && !any_suitable; ++i)
      for (std::size_t j = i + 1; j < points.size() && !any_suitable; ++j)
        any_suitable = points[i] != points[j] && !adjacent(points[i], points[j]);
    if (!any_suitable) return std::nullopt;
  }
  return edges;
}

}  // namespace

Graph complete_graph(std::size_t n) {
  if (n < 2) throw ParameterError("complete: n must be at least 2");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({vid(u), vid(v)});
  return Graph(n, std::move(edges));
}

Graph hypercube(unsigned dim) {
  if (dim < 1 || dim > 24) throw ParameterError("hypercube: dim must lie in [1, 24]");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (unsigned b = 0; b < dim; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) edges.push_back({vid(v), vid(w)});
    }
  return canonical(n, std::move(edges));
}

Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (degree >= n) throw ParameterError("random_regular: D must be smaller than n");
  if ((n * degree) % 2 != 0) throw ParameterError("random_regular: n*D must be even");
  SplitMix64 rng(seed);
  constexpr int kRestarts = 10000;
  for (int attempt = 0; attempt <= kRestarts; ++attempt) {
    if (auto edges = try_pairing(n, degree, rng)) return canonical(n, std::move(*edges));
  }
  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    if (auto edges = try_steger_wormald(n, degree, rng)) return canonical(n, std::move(*edges));
  }
  throw ParameterError("random_regular: restart budget exhausted");
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("erdos_renyi: p must lie in [0, 1]");
  if (n < 1) throw ParameterError("erdos_renyi: n must be positive");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({vid(u), vid(v)});
  return Graph(n, std::move(edges));
}

Graph barbell(std::size_t half) {
  if (half < 2) throw ParameterError("barbell: half must be at least 2");
  std::vector<Edge> edges;
  for (std::size_t side = 0; side < 2; ++side) {
    const std::size_t base = side * half;
    for (std::size_t u = 0; u < half; ++u)
      for (std::size_t v = u + 1; v < half; ++v) edges.push_back({vid(base + u), vid(base + v)});
  }
  edges.push_back({vid(half - 1), vid(half)});
  return canonical(2 * half, std::move(edges));
}

Graph fat_tree(unsigned k, bool include_hosts) {
  if (k < 2 || k % 2 != 0) throw ParameterError("fat_tree: k must be even and at least 2");
  const std::size_t h = k / 2;
  const std::size_t cores = h * h;
  const std::size_t switches = cores + std::size_t{k} * k;
  const std::size_t hosts = include_hosts ? std::size_t{k} * h * h : 0;
  auto agg = [&](std::size_t pod, std::size_t j) { return cores + pod * k + j; };
  auto edge_sw = [&](std::size_t pod, std::size_t i) { return cores + pod * k + h + i; };

  std::vector<Edge> edges;
  for (std::size_t pod = 0; pod < k; ++pod) {
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) edges.push_back({vid(edge_sw(pod, i)), vid(agg(pod, j))});
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t c = 0; c < h; ++c) edges.push_back({vid(agg(pod, j)), vid(j * h + c)});
    if (include_hosts) {
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t x = 0; x < h; ++x)
          edges.push_back({vid(edge_sw(pod, i)), vid(switches + (pod * h + i) * h + x)});
    }
  }
  return canonical(switches + hosts, std::move(edges));
}

Graph generate(const GraphFamily& family) {
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Complete>) return complete_graph(f.n);
        else if constexpr (std::is_same_v<T, family::Hypercube>) return hypercube(f.dim);
        else if constexpr (std::is_same_v<T, family::RandomRegular>)
          return random_regular(f.n, f.degree, f.seed);
        else if constexpr (std::is_same_v<T, family::ErdosRenyi>)
          return erdos_renyi(f.n, f.p, f.seed);
        else if constexpr (std::is_same_v<T, family::Barbell>) return barbell(f.half);
        else return fat_tree(f.k, f.include_hosts);
      },
      family);
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(const std::string& s, std::string_view what) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParameterError("graph family: bad " + std::string(what) + " '" + s + "'");
  return value;
}

}  // namespace

GraphFamily parse_family(std::string_view text, std::uint64_t default_seed) {
  const auto parts = split(text, ':');
  const std::string& name = parts[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi)
      throw ParameterError("graph family: wrong number of parameters in '" + std::string(text) + "'");
  };
  if (name == "complete") {
    arity(1, 1);
    return family::Complete{parse_number<std::size_t>(parts[1], "n")};
  }
  if (name == "hypercube") {
    arity(1, 1);
    return family::Hypercube{parse_number<unsigned>(parts[1], "dim")};
  }
  if (name == "random_regular") {
    arity(2, 3);
    return family::RandomRegular{
        parse_number<std::size_t>(parts[1], "n"), parse_number<std::size_t>(parts[2], "D"),
        parts.size() > 3 ? parse_number<std::uint64_t>(parts[3], "seed") : default_seed};
  }
  if (name == "erdos_renyi") {
    arity(2, 3);
    return family::ErdosRenyi{
        parse_number<std::size_t>(parts[1], "n"), parse_number<double>(parts[2], "p"),
        parts.size() > 3 ? parse_number<std::uint64_t>(parts[3], "seed") : default_seed};
  }
  if (name == "barbell") {
    arity(1, 1);
    return family::Barbell{parse_number<std::size_t>(parts[1], "half")};
  }
  if (name == "fat_tree") {
    arity(1, 2);
    bool hosts = false;
    if (parts.size() > 2) {
      if (parts[2] != "hosts" && parts[2] != "nohosts")
        throw ParameterError("graph family: fat_tree option must be 'hosts' or 'nohosts'");
      hosts = parts[2] == "hosts";
    }
    return family::FatTree{parse_number<unsigned>(parts[1], "k"), hosts};
  }
  throw ParameterError("graph family: unknown family '" + name + "'");
}

std::string family_name(const GraphFamily& f) {
  static constexpr const char* kNames[] = {"complete", "hypercube", "random_regular",
                                           "erdos_renyi", "barbell", "fat_tree"};
  return kNames[f.index()];
}

std::string family_params(const GraphFamily& family) {
  std::ostringstream os;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Complete>) os << "n=" << f.n;
        else if constexpr (std::is_same_v<T, family::Hypercube>) os << "dim=" << f.dim;
        else if constexpr (std::is_same_v<T, family::RandomRegular>)
          os << "n=" << f.n << ";D=" << f.degree << ";seed=" << f.seed;
        else if constexpr (std::is_same_v<T, family::ErdosRenyi>)
          os << "n=" << f.n << ";p=" << f.p << ";seed=" << f.seed;
        else if constexpr (std::is_same_v<T, family::Barbell>) os << "half=" << f.half;
        else os << "k=" << f.k << ";hosts=" << (f.include_hosts ? 1 : 0);
      },
      family);
  return os.str();
}

}  // namespace gcgt
