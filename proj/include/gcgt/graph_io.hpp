#pragma once

#include <filesystem>
#include <iosfwd>

#include "gcgt/graph.hpp"

namespace gcgt {

/// Text format: first line "n m", then m lines "u v" (u < v, 0-indexed).
/// The line index of an edge is its id.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

void save_graph(const std::filesystem::path& path, const Graph& g);
Graph load_graph(const std::filesystem::path& path);

}  // namespace gcgt
