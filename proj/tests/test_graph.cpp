#include <gtest/gtest.h>

#include <numeric>
#include <regex>

#include "spinwedge/errors.hpp"
#include "spinwedge/graph.hpp"
#include "spinwedge/spectra.hpp"
#include "spinwedge/wedge.hpp"

using namespace spinwedge;

namespace {

std::string strip_ws(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

}  // namespace

TEST(GraphTest, EdgeListBuildsPath) {
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}};
  EXPECT_EQ(graph_from_edge_list(3, pairs), path_graph(3));
}

TEST(GraphTest, EdgeListNormalizesAndDeduplicates) {
  const std::vector<std::pair<int, int>> pairs{{1, 0}, {0, 1}, {1, 2}};
  const Graph g = graph_from_edge_list(3, pairs);
  EXPECT_EQ(g, path_graph(3));
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(GraphTest, EdgeListRejectsBadInput) {
  const std::vector<std::pair<int, int>> out_of_range{{0, 2}};
  EXPECT_THROW(graph_from_edge_list(2, out_of_range), InputError);
  const std::vector<std::pair<int, int>> loop{{1, 1}};
  EXPECT_THROW(graph_from_edge_list(2, loop), InputError);
  const std::vector<std::pair<int, int>> negative{{-1, 0}};
  EXPECT_THROW(graph_from_edge_list(2, negative), InputError);
}

TEST(GraphTest, FamilyEdgeCounts) {
  EXPECT_EQ(path_graph(6).num_edges(), 5u);
  EXPECT_EQ(complete_graph(4).num_edges(), 6u);
  EXPECT_EQ(cycle_graph(5).num_edges(), 5u);
  EXPECT_TRUE(cycle_graph(5).has_edge(4, 0));
  EXPECT_THROW(cycle_graph(2), InputError);
  EXPECT_THROW(path_graph(0), InputError);
}

TEST(GraphTest, HandshakeIdentityOnFamilies) {
  for (int n = 1; n <= 9; ++n) {
    std::vector<Graph> family{path_graph(n), complete_graph(n)};
    if (n >= 3) family.push_back(cycle_graph(n));
    for (const Graph& g : family) {
      const auto d = g.degrees();
      EXPECT_EQ(2 * g.num_edges(), static_cast<std::size_t>(std::accumulate(d.begin(), d.end(), 0)));
    }
  }
}

TEST(GraphTest, AdjacencyMatrices) {
  Eigen::Matrix3d p3;
  p3 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  EXPECT_EQ(adjacency(path_graph(3)).dense(), Eigen::MatrixXd(p3));

  Eigen::Matrix2d k2;
  k2 << 0, 1, 1, 0;
  EXPECT_EQ(adjacency(complete_graph(2)).dense(), Eigen::MatrixXd(k2));

  EXPECT_EQ(adjacency(empty_graph(3)).dense(), Eigen::MatrixXd::Zero(3, 3));
}

TEST(GraphTest, DegreeAndLaplacian) {
  Eigen::Matrix3d expected;
  expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  const SymMatrix l = laplacian(path_graph(3));
  EXPECT_EQ(l.dense(), Eigen::MatrixXd(expected));
  EXPECT_EQ(degree_matrix(complete_graph(3)).dense(), Eigen::MatrixXd(2.0 * Eigen::Matrix3d::Identity()));

  for (const Graph& g : {path_graph(5), cycle_graph(6), complete_graph(4)}) {
    const SymMatrix lg = laplacian(g);
    EXPECT_LT(lg.dense().rowwise().sum().cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(GraphTest, LaplacianOfK2HasEigenvaluesZeroAndTwo) {
  // [[1,-1],[-1,1]] has eigenvectors (1,1) and (1,-1) with values 0 and 2.
  const Spectrum s = spectrum_of(laplacian(complete_graph(2)));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s.values()[0], 0.0, 1e-14);
  EXPECT_NEAR(s.values()[1], 2.0, 1e-14);
}

TEST(GraphTest, SymMatrixRejectsAsymmetricInput) {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(SymMatrix::from_dense(m), InputError);
  EXPECT_THROW(SymMatrix::from_dense(Eigen::MatrixXd(2, 3)), InputError);
}

TEST(GraphTest, ConnectedComponents) {
  const Graph g(5, {{0, 1}, {3, 4}});
  EXPECT_EQ(count_components(g), 3);
  EXPECT_EQ(connected_components(g), (std::vector<int>{0, 0, 1, 2, 2}));
  EXPECT_EQ(count_components(empty_graph(0)), 0);
}

TEST(GraphTest, DotExport) {
  EXPECT_EQ(strip_ws(export_dot(path_graph(2))), "graph{0--1;}");
  const std::vector<std::string> names{"a", "b b", "7"};
  const std::string dot = export_dot(Graph(3, {{0, 1}}), names);
  EXPECT_NE(dot.find("\"a\" -- \"b b\";"), std::string::npos);
  EXPECT_NE(dot.find("  7;"), std::string::npos);  // isolated vertex is declared
  const std::vector<std::string> short_names{"a"};
  EXPECT_THROW(export_dot(path_graph(2), short_names), InputError);
}

TEST(GraphTest, WedgeDotOfP6HasFifteenVertices) {
  // C(6,2) = 15 names of two concatenated labels.
  const WedgeGraph w = build_wedge_graph(path_graph(6), 2);
  const std::string dot = wedge_to_dot(w);
  std::set<std::string> seen;
  const std::regex id(R"(\b([0-5]{2})\b)");
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), id); it != std::sregex_iterator(); ++it) {
    seen.insert((*it)[1]);
  }
  EXPECT_EQ(seen.size(), 15u);
  EXPECT_TRUE(seen.count("02"));
}

TEST(GraphTest, JsonRoundTrip) {
  for (const Graph& g : {complete_graph(4), path_graph(1), empty_graph(3), cycle_graph(7)}) {
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  }
  EXPECT_EQ(graph_from_json(R"({"n": 3, "edges": [[1,0],[2,1],[0,1]]})"), path_graph(3));
}

TEST(GraphTest, JsonErrors) {
  try {
    graph_from_json(R"({"n": 3, "edges": [[0,1],)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(graph_from_json(R"({"edges": []})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"n": 2, "edges": [[0,5]]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"n": 2, "edges": [[0]]})"), InputError);
}
