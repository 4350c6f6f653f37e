#include "gcgt/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gcgt/error.hpp"

namespace gcgt {

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  std::size_t m = 0;
  if (!std::getline(in, line)) throw FormatError("graph: missing header line");
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) throw FormatError("graph: header must be 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw FormatError("graph: expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0)
      throw FormatError("graph: bad edge line " + std::to_string(i + 2) + ": '" + line + "'");
    if (u >= v) throw FormatError("graph: edge line " + std::to_string(i + 2) + " must have u < v");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw FormatError("graph: trailing content after " + std::to_string(m) + " edges");
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_graph(out, g);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_graph(in);
}

}  // namespace gcgt
