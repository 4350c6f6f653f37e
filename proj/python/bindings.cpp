#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gcgt/cuts.hpp"
#include "gcgt/error.hpp"
#include "gcgt/expansion.hpp"
#include "gcgt/experiment.hpp"
#include "gcgt/generators.hpp"
#include "gcgt/graph_io.hpp"
#include "gcgt/gtcore.hpp"
#include "gcgt/spectral.hpp"
#include "gcgt/testgen.hpp"
#include "gcgt/theorylab.hpp"

namespace py = pybind11;
using namespace gcgt;

namespace {

using EdgeLists = std::vector<std::vector<std::uint32_t>>;

EdgeLists to_lists(const TestCollection& tc) {
  EdgeLists out;
  out.reserve(tc.size());
  for (const auto& t : tc.tests) out.push_back(t.to_vector());
  return out;
}

TestCollection from_lists(std::size_t m, const EdgeLists& lists) {
  TestCollection tc{m, {}};
  for (const auto& row : lists) {
    EdgeSet s(m);
    for (auto e : row) {
      if (e >= m) throw ParameterError("edge id out of range");
      s.set(e);
    }
    tc.tests.push_back(std::move(s));
  }
  return tc;
}

EdgeSet edge_set(std::size_t m, const std::vector<std::size_t>& ids) {
  EdgeSet s(m);
  for (auto e : ids) {
    if (e >= m) throw ParameterError("edge id out of range");
    s.set(e);
  }
  return s;
}

ExperimentConfig make_config(const std::vector<std::string>& methods, unsigned d,
                             const std::vector<std::size_t>& taus, std::size_t trials, std::uint64_t seed,
                             unsigned threads) {
  ExperimentConfig cfg;
  cfg.methods.clear();
  for (const auto& m : methods) cfg.methods.push_back(parse_method(m));
  cfg.d = d;
  cfg.taus = taus;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_gcgt, m) {
  m.doc() = "Connected-subgraph group testing for network fault localization";
  m.attr("__version__") = GCGT_VERSION;

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<VertexId, VertexId>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("is_regular", &Graph::is_regular)
      .def("to_text", [](const Graph& g) {
        std::ostringstream os;
        write_graph(os, g);
        return os.str();
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("generate", [](const std::string& family, std::uint64_t seed) { return generate(parse_family(family, seed)); },
        py::arg("family"), py::arg("seed") = 0, "Build a graph from a family string such as 'fat_tree:8'.");
  m.def("graph_from_text", [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  });
  m.def("is_connected", [](const Graph& g) { return is_connected(g); });
  m.def("component_sizes", [](const Graph& g) { return connected_components(g).sizes; });
  m.def("boundary", [](const Graph& g, const std::vector<std::size_t>& a) {
    VertexSet s(g.n());
    for (auto v : a) s.set(v);
    return boundary(g, s).to_vector();
  });
  m.def("min_cut", &min_cut);
  m.def(
      "certify_expansion",
      [](const Graph& g, double beta) {
        const auto c = certify_expansion(g, beta);
        return py::make_tuple(c.alpha.num(), c.alpha.den(),
                              c.witness ? c.witness->to_vector() : std::vector<std::uint32_t>{}, c.exact);
      },
      py::arg("g"), py::arg("beta"), "Returns (alpha_num, alpha_den, witness, exact).");
  m.def("spectral_bounds", [](const Graph& g) {
    const auto s = spectral_expansion_bounds(g);
    return py::make_tuple(s.lambda, s.lower, s.upper);
  });

  m.def(
      "make_tests",
      [](const Graph& g, unsigned d, double delta, double beta, std::size_t tau, const std::string& mode,
         std::uint64_t seed) {
        if (mode != "all_large" && mode != "largest_only") throw ParameterError("mode must be all_large or largest_only");
        const ComponentMode cm = mode == "all_large" ? ComponentMode::all_large : ComponentMode::largest_only;
        return to_lists(make_tests(g, {d, delta, beta, tau, cm, seed}));
      },
      py::arg("g"), py::arg("d"), py::arg("delta"), py::arg("beta"), py::arg("tau"), py::arg("mode") = "all_large",
      py::arg("seed") = 0);
  m.def(
      "random_tests",
      [](std::size_t edges, unsigned d, std::size_t tau, std::uint64_t seed) {
        return to_lists(random_tests(edges, d, tau, seed));
      },
      py::arg("m"), py::arg("d"), py::arg("tau"), py::arg("seed") = 0);
  m.def(
      "random_walk_tests",
      [](const Graph& g, unsigned d, double l, std::size_t tau, std::uint64_t seed) {
        return to_lists(random_walk_tests(g, make_walk_params(g, d, l, tau, seed, derive_seed(seed, {1}))));
      },
      py::arg("g"), py::arg("d"), py::arg("l"), py::arg("tau"), py::arg("seed") = 0);
  m.def("mixing_time", [](const Graph& g, std::uint64_t seed) { return estimate_mixing_time(g, seed).steps; },
        py::arg("g"), py::arg("seed") = 0);

  m.def("run_tests", [](std::size_t edges, const EdgeLists& tests, const std::vector<std::size_t>& defective) {
    return run_tests(from_lists(edges, tests), edge_set(edges, defective));
  });
  m.def("decode", [](std::size_t edges, const EdgeLists& tests, const std::vector<bool>& outcomes) {
    return decode(from_lists(edges, tests), outcomes).to_vector();
  });
  m.def(
      "check_disjunct",
      [](std::size_t edges, const EdgeLists& tests, unsigned d, unsigned threads) -> py::object {
        const auto r = check_disjunct(from_lists(edges, tests), d, {1e10, threads});
        if (r.disjunct) return py::none();
        return py::make_tuple(r.witness->edge, r.witness->defectives);
      },
      py::arg("m"), py::arg("tests"), py::arg("d"), py::arg("threads") = 1,
      "None when d-disjunct, otherwise the first witness (e, B).");

  m.def("gamblers_ruin", [](double gamma, std::int64_t a, std::int64_t b) { return gamblers_ruin({gamma, a, b}); });
  m.def("ruin_oracle", [](double gamma, std::int64_t a, std::int64_t b) { return ruin_oracle({gamma, a, b}); });
  m.def("exploration_size_distribution", [](const Graph& g, EdgeId e, std::uint64_t num, std::uint64_t den) {
    const auto d = exploration_size_distribution(g, e, num, den);
    return py::make_tuple(d.weights, d.denominator);
  });
  m.def("giant_component_rate", [](const Graph& g, EdgeId e, double p, double beta, double alpha, std::size_t trials,
                                   std::uint64_t seed) {
    const auto r = giant_component_rate(g, e, p, beta, alpha, trials, seed);
    return py::make_tuple(r.estimate.rate(), r.bound ? py::cast(*r.bound) : py::none(), r.estimate.standard_error());
  });
  m.def("connectivity_rate", [](const Graph& g, double p, std::size_t trials, std::uint64_t seed) {
    return connectivity_rate(g, p, trials, seed).rate();
  });

  m.def(
      "experiment_disjunct_probability",
      [](const std::string& family, const std::vector<std::string>& methods, unsigned d,
         const std::vector<std::size_t>& taus, std::size_t trials, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return to_csv(experiment_disjunct_probability(graph_input(parse_family(family, seed)),
                                                      make_config(methods, d, taus, trials, seed, threads)));
      },
      py::arg("family"), py::arg("methods"), py::arg("d"), py::arg("taus"), py::arg("trials") = 100, py::arg("seed"),
      py::arg("threads") = 1, "Returns CSV text.");
  m.def(
      "experiment_random_failures",
      [](const std::string& family, const std::vector<std::string>& methods, unsigned d,
         const std::vector<std::size_t>& taus, std::size_t trials, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        return to_csv(experiment_random_failures(graph_input(parse_family(family, seed)),
                                                 make_config(methods, d, taus, trials, seed, threads)));
      },
      py::arg("family"), py::arg("methods"), py::arg("d"), py::arg("taus"), py::arg("trials") = 100, py::arg("seed"),
      py::arg("threads") = 1, "Returns CSV text.");
}
