#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinwedge/cli.hpp"
#include "spinwedge/corpus.hpp"
#include "spinwedge/dynamics.hpp"
#include "spinwedge/errors.hpp"
#include "spinwedge/isomorphism.hpp"
#include "spinwedge/spectra.hpp"
#include "spinwedge/spin_system.hpp"
#include "spinwedge/verify.hpp"
#include "spinwedge/wedge.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace spinwedge;

namespace {

ModelSpec make_spec(const std::string& model, double field) {
  ModelSpec spec{parse_model(model), field};
  spec.validate();
  return spec;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return graph_from_edge_list(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wedge-product graphs and XY / Heisenberg spin models on graphs";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), "n"_a, "edges"_a = std::vector<std::pair<int, int>>{})
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", [](const Graph& g) { return g.num_edges(); })
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("neighbors", [](const Graph& g, int v) {
        const auto nb = g.neighbors(v);
        return std::vector<int>(nb.begin(), nb.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("degrees", &Graph::degrees)
      .def("to_json", &graph_to_json)
      .def("to_dot", [](const Graph& g) { return export_dot(g); })
      .def_static("from_json", &graph_from_json)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("path_graph", &path_graph, "n"_a);
  m.def("cycle_graph", &cycle_graph, "n"_a);
  m.def("complete_graph", &complete_graph, "n"_a);
  m.def("empty_graph", &empty_graph, "n"_a);
  m.def("erdos_renyi", &erdos_renyi, "n"_a, "p"_a, "seed"_a);
  m.def("graph_from_source", [](const std::string& s) { return parse_graph_source(s).graph; }, "source"_a,
        "Inline family such as 'cycle:5' or 'random:6:0.5:1', or a JSON file path.");
  m.def("adjacency", [](const Graph& g) { return adjacency(g).dense(); });
  m.def("laplacian", [](const Graph& g) { return laplacian(g).dense(); });
  m.def("count_components", &count_components);

  py::class_<WedgeGraph>(m, "WedgeGraph")
      .def_property_readonly("k", &WedgeGraph::k)
      .def_property_readonly("num_vertices", [](const WedgeGraph& w) { return w.num_vertices(); })
      .def_property_readonly("base", &WedgeGraph::base)
      .def_property_readonly("signed_edges",
                             [](const WedgeGraph& w) {
                               std::vector<std::tuple<std::uint64_t, std::uint64_t, int>> out;
                               for (const auto& e : w.signed_edges()) out.emplace_back(e.a, e.b, e.sign);
                               return out;
                             })
      .def("as_graph", &WedgeGraph::as_graph)
      .def("vertex_names", &WedgeGraph::vertex_names)
      .def("to_json", &wedge_to_json)
      .def("to_dot", &wedge_to_dot);

  m.def("build_wedge_graph", &build_wedge_graph, "graph"_a, "k"_a);
  m.def("signed_matrix", [](const WedgeGraph& w) { return signed_matrix(w).dense(); });
  m.def("wedge_adjacency", [](const WedgeGraph& w) { return wedge_adjacency(w).dense(); });
  m.def("wedge_laplacian", [](const WedgeGraph& w) { return wedge_laplacian(w).dense(); });
  m.def("alt_delta_oracle", [](const Graph& g, int k) { return alt_delta_oracle(g, k).dense(); }, "graph"_a, "k"_a);

  m.def(
      "block_hamiltonian",
      [](const Graph& g, int k, const std::string& model, double field) {
        return block_hamiltonian(g, k, make_spec(model, field)).dense();
      },
      "graph"_a, "k"_a, "model"_a = "xy", "field"_a = 0.0);
  m.def(
      "full_hamiltonian",
      [](const Graph& g, const std::string& model, double field) {
        return full_hamiltonian(g, make_spec(model, field)).dense();
      },
      "graph"_a, "model"_a = "xy", "field"_a = 0.0);
  m.def(
      "block_spectrum",
      [](const Graph& g, int k, const std::string& model, double field) {
        return spectrum_of(block_hamiltonian(g, k, make_spec(model, field))).values();
      },
      "graph"_a, "k"_a, "model"_a = "xy", "field"_a = 0.0);

  m.def("eigh", [](const Eigen::MatrixXd& a) {
    const EigenDecomposition e = eigh(SymMatrix::from_dense(a));
    return py::make_tuple(e.values, e.vectors);
  });
  m.def("path_spectrum", [](int n) { return path_spectrum(n).values(); }, "n"_a);
  m.def("path_eigenvector", &path_eigenvector, "n"_a, "j"_a);
  m.def("xy_path_spectrum", [](int n, int k) { return xy_path_spectrum(n, k).values(); }, "n"_a, "k"_a);
  m.def("johnson_spectrum", [](int n, int k) { return johnson_spectrum(n, k).values(); }, "n"_a, "k"_a);
  m.def(
      "complete_graph_spectrum",
      [](int n, const std::string& model, double field) {
        return complete_graph_spectra(n, make_spec(model, field)).values();
      },
      "n"_a, "model"_a = "xy", "field"_a = 0.0);
  m.def(
      "lift_spectrum", [](const Graph& g, int k) { return lift_spectrum(eigh(adjacency(g)), k).values(); },
      "graph"_a, "k"_a, "Sums of k distinct adjacency eigenvalues of the graph.");
  m.def(
      "lift_eigenvector",
      [](const Graph& g, const std::vector<int>& indices) {
        const LiftedEigenpair p = lift_eigenvector(eigh(adjacency(g)), indices);
        return py::make_tuple(p.value, p.vector);
      },
      "graph"_a, "indices"_a);

  m.def("find_isomorphism", &find_isomorphism, "g1"_a, "g2"_a);

  m.def(
      "evolve",
      [](const Graph& g, const Eigen::VectorXcd& state, int k, double t, const std::string& model, double field) {
        return evolve_block(g, make_spec(model, field), WaveState{k, state}, t).amplitudes;
      },
      "graph"_a, "state"_a, "k"_a, "t"_a, "model"_a = "xy", "field"_a = 0.0);
  m.def(
      "transfer_fidelity",
      [](const Graph& g, int from, int to, const std::vector<double>& times, const std::string& model, double field) {
        return transfer_fidelity(g, make_spec(model, field), from, to, times);
      },
      "graph"_a, "source"_a, "target"_a, "times"_a, "model"_a = "xy", "field"_a = 0.0);

  m.def(
      "verify",
      [](std::vector<std::string> sources, std::uint64_t seed, int random_states) {
        std::vector<NamedGraph> corpus;
        if (sources.empty()) {
          corpus = default_corpus();
        } else {
          for (const auto& s : sources) corpus.push_back(parse_graph_source(s));
        }
        VerifyOptions options;
        options.seed = seed;
        options.random_states = random_states;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_verification(corpus, options);
        }
        py::list checks;
        for (const auto& s : report.summaries()) {
          checks.append(py::dict("check"_a = s.check, "evaluations"_a = s.evaluations, "max_error"_a = s.max_error,
                                 "passed"_a = s.passed));
        }
        return py::dict("passed"_a = report.passed(), "checks"_a = checks);
      },
      "graphs"_a = std::vector<std::string>{}, "seed"_a = 0, "random_states"_a = 20);
}
