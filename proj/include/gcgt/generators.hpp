#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "gcgt/graph.hpp"

namespace gcgt {

/// K_n.
Graph complete_graph(std::size_t n);

/// The dim-dimensional hypercube Q_dim on 2^dim vertices.
Graph hypercube(unsigned dim);

/// Uniform random D-regular simple graph on n vertices. Uses the pairing
/// model with full restart on loops or multi-edges (up to 10 000 restarts);
/// when that budget is exhausted it falls back to sequential
/// Steger-Wormald pairing, which is only asymptotically uniform.
Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);

/// G(n, p): one Bernoulli(p) draw per vertex pair in lexicographic order.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Two copies of K_half joined by the single edge (half - 1, half).
Graph barbell(std::size_t half);

/// k-ary fat tree. Vertex numbering: (k/2)^2 core switches, then per pod
/// k/2 aggregation followed by k/2 edge switches, then (optionally) hosts,
/// k/2 per edge switch. Aggregation switch j of every pod links to cores
/// j*k/2 .. j*k/2 + k/2 - 1.
Graph fat_tree(unsigned k, bool include_hosts);

namespace family {
struct Complete { std::size_t n; };
struct Hypercube { unsigned dim; };
struct RandomRegular { std::size_t n; std::size_t degree; std::uint64_t seed; };
struct ErdosRenyi { std::size_t n; double p; std::uint64_t seed; };
struct Barbell { std::size_t half; };
struct FatTree { unsigned k; bool include_hosts; };
}  // namespace family

using GraphFamily = std::variant<family::Complete, family::Hypercube, family::RandomRegular,
                                 family::ErdosRenyi, family::Barbell, family::FatTree>;

Graph generate(const GraphFamily& family);

/// Parses "complete:23", "hypercube:6", "random_regular:100:10[:seed]",
/// "erdos_renyi:50:0.2[:seed]", "barbell:4", "fat_tree:8[:hosts]".
/// Random families without an explicit seed use default_seed.
GraphFamily parse_family(std::string_view text, std::uint64_t default_seed = 0);

/// Short family name ("complete", "fat_tree", ...).
std::string family_name(const GraphFamily& family);

/// Parameter string without commas, e.g. "k=8;hosts=0".
std::string family_params(const GraphFamily& family);

}  // namespace gcgt
