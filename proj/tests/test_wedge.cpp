#include <gtest/gtest.h>

#include "json.hpp"
#include "spinwedge/combinadics.hpp"
#include "spinwedge/corpus.hpp"
#include "spinwedge/errors.hpp"
#include "spinwedge/isomorphism.hpp"
#include "spinwedge/spectra.hpp"
#include "spinwedge/wedge.hpp"
#include "test_support.hpp"

using namespace spinwedge;

namespace {

std::uint64_t rank_of(std::initializer_list<int> s, int n) {
  const std::vector<int> v(s);
  return rank_subset(v, n);
}

int sign_between(const WedgeGraph& w, std::uint64_t a, std::uint64_t b) {
  if (a > b) std::swap(a, b);
  for (const auto& e : w.signed_edges())
    if (e.a == a && e.b == b) return e.sign;
  return 0;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (const auto& ng : default_corpus())
    if (ng.graph.num_vertices() <= 6) out.push_back(ng.graph);
  out.push_back(Graph(5, {{0, 3}, {1, 4}, {2, 3}}));  // a forest with an isolated vertex
  return out;
}

}  // namespace

TEST(WedgeTest, PathThreeTwoParticles) {
  const WedgeGraph w = build_wedge_graph(path_graph(3), 2);
  ASSERT_EQ(w.num_vertices(), 3u);
  // ranks: {0,1}=0, {0,2}=1, {1,2}=2; edges 01-02 (1->2) and 02-12 (0->1)
  const std::vector<SignedEdge> expected{{0, 1, 1}, {1, 2, 1}};
  EXPECT_EQ(w.signed_edges(), expected);
  EXPECT_TRUE(find_isomorphism(w.as_graph(), path_graph(3)).has_value());
  EXPECT_EQ(w.vertex_names(), (std::vector<std::string>{"01", "02", "12"}));
}

TEST(WedgeTest, CompleteFourTwoIsOctahedron) {
  const WedgeGraph w = build_wedge_graph(complete_graph(4), 2);
  EXPECT_EQ(w.num_vertices(), 6u);
  EXPECT_EQ(w.signed_edges().size(), 12u);
  for (int d : w.as_graph().degrees()) EXPECT_EQ(d, 4);
}

TEST(WedgeTest, CompleteFourTwoNegativeSign) {
  const WedgeGraph w = build_wedge_graph(complete_graph(4), 2);
  // moving 0 -> 3 from {0,2} passes the occupied vertex 2
  EXPECT_EQ(sign_between(w, rank_of({0, 2}, 4), rank_of({2, 3}, 4)), -1);
  EXPECT_EQ(sign_between(w, rank_of({0, 1}, 4), rank_of({0, 2}, 4)), 1);
  // frozen from the numpy tensor oracle: negative entries at rank pairs
  // (0,2), (0,4), (1,5), (2,5)
  std::vector<std::pair<std::uint64_t, std::uint64_t>> negative;
  for (const auto& e : w.signed_edges())
    if (e.sign < 0) negative.emplace_back(e.a, e.b);
  EXPECT_EQ(negative, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 2}, {0, 4}, {1, 5}, {2, 5}}));
}

TEST(WedgeTest, RejectsOutOfRangeK) {
  EXPECT_THROW(build_wedge_graph(path_graph(3), 4), InputError);
  EXPECT_THROW(build_wedge_graph(path_graph(3), -1), InputError);
  EXPECT_THROW(build_wedge_graph(complete_graph(20), 10), CapacityError);
}

TEST(WedgeTest, ZeroAndFullParticleNumbers) {
  for (const Graph& g : small_graphs()) {
    const int n = g.num_vertices();
    const WedgeGraph w0 = build_wedge_graph(g, 0);
    EXPECT_EQ(w0.num_vertices(), 1u);
    EXPECT_TRUE(w0.signed_edges().empty());
    const WedgeGraph wn = build_wedge_graph(g, n);
    EXPECT_EQ(wedge_adjacency(wn).dense(), Eigen::MatrixXd::Zero(1, 1));
    EXPECT_EQ(wedge_laplacian(wn).dense(), Eigen::MatrixXd::Zero(1, 1));
  }
}

TEST(WedgeTest, SingleParticleIsBaseGraph) {
  for (const Graph& g : small_graphs()) {
    const WedgeGraph w = build_wedge_graph(g, 1);
    EXPECT_EQ(w.as_graph(), g);
    EXPECT_EQ(w.num_negative_edges(), 0u);
    EXPECT_EQ(signed_matrix(w), adjacency(g));
    EXPECT_EQ(alt_delta_oracle(g, 1), adjacency(g));
  }
}

TEST(WedgeTest, MatchesBruteForcePairEnumeration) {
  for (const Graph& g : small_graphs()) {
    for (int k = 0; k <= g.num_vertices(); ++k) {
      const WedgeGraph w = build_wedge_graph(g, k);
      EXPECT_EQ(signed_matrix(w).dense(), oracle::brute_force_signed(g, k)) << "k=" << k;
      EXPECT_EQ(w.num_vertices(), binomial(g.num_vertices(), k));
    }
  }
}

TEST(WedgeTest, SignedMatrixMatchesTensorOracle) {
  for (const Graph& g : small_graphs()) {
    for (int k = 0; k <= std::min(3, g.num_vertices()); ++k) {
      EXPECT_EQ(signed_matrix(build_wedge_graph(g, k)), alt_delta_oracle(g, k)) << "k=" << k;
    }
  }
}

TEST(WedgeTest, OracleCapacityGuard) {
  EXPECT_THROW(alt_delta_oracle(path_graph(12), 6), CapacityError);
}

TEST(WedgeTest, PathSignsArePositive) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const WedgeGraph w = build_wedge_graph(path_graph(n), k);
      EXPECT_TRUE(signed_equals_unsigned(w));
      EXPECT_EQ(signed_matrix(w), wedge_adjacency(w));
    }
  }
}

TEST(WedgeTest, SignedDiffersFromUnsignedOnK4) {
  const WedgeGraph w = build_wedge_graph(complete_graph(4), 2);
  EXPECT_FALSE(signed_equals_unsigned(w));
  EXPECT_GT(signed_matrix(w).max_abs_diff(wedge_adjacency(w)), 0.0);
  EXPECT_EQ(signed_matrix(w).cwise_abs(), wedge_adjacency(w));
}

TEST(WedgeTest, SmallWedgeSpectra) {
  // A(wedge^2 P3) = A(P3): eigenvalues -sqrt2, 0, sqrt2
  const Spectrum s = spectrum_of(wedge_adjacency(build_wedge_graph(path_graph(3), 2)));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s.values()[0], -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.values()[1], 0.0, 1e-12);
  EXPECT_NEAR(s.values()[2], std::sqrt(2.0), 1e-12);

  const SymMatrix l = wedge_laplacian(build_wedge_graph(complete_graph(4), 2));
  EXPECT_LT(l.dense().rowwise().sum().cwiseAbs().maxCoeff(), 1e-15);
}

TEST(WedgeTest, JohnsonDegree) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int d : build_wedge_graph(complete_graph(n), k).as_graph().degrees()) EXPECT_EQ(d, k * (n - k));
}

TEST(WedgeTest, ComplementIsomorphism) {
  for (const auto& ng : default_corpus()) {
    const int n = ng.graph.num_vertices();
    for (int k = 0; k <= n; ++k) {
      const Graph a = build_wedge_graph(ng.graph, k).as_graph();
      const Graph b = build_wedge_graph(ng.graph, n - k).as_graph();
      // the complement map S -> V \ S is itself an isomorphism
      std::vector<int> perm(static_cast<std::size_t>(a.num_vertices()));
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t r = 0; r < perm.size(); ++r) {
        perm[r] = static_cast<int>(rank_mask(full & ~unrank_mask(r, n, k)));
      }
      EXPECT_TRUE(is_isomorphism(a, b, perm)) << ng.name << " k=" << k;
      EXPECT_TRUE(find_isomorphism(a, b).has_value()) << ng.name << " k=" << k;
    }
  }
}

TEST(WedgeTest, SumRules) {
  for (const auto& ng : default_corpus()) {
    for (int k = 0; k <= ng.graph.num_vertices(); ++k) {
      const WedgeGraph w = build_wedge_graph(ng.graph, k);
      EXPECT_NEAR(spectrum_of(wedge_adjacency(w)).sum(), 0.0, 1e-9);
      const auto degrees = w.as_graph().degrees();
      EXPECT_NEAR(spectrum_of(wedge_laplacian(w)).sum(), std::accumulate(degrees.begin(), degrees.end(), 0.0), 1e-9);
    }
  }
}

TEST(WedgeTest, DeterministicEdgeOrder) {
  const WedgeGraph w = build_wedge_graph(erdos_renyi(7, 0.5, 3), 3);
  for (std::size_t i = 1; i < w.signed_edges().size(); ++i) {
    const auto& p = w.signed_edges()[i - 1];
    const auto& q = w.signed_edges()[i];
    EXPECT_TRUE(p.a < q.a || (p.a == q.a && p.b < q.b));
  }
  EXPECT_EQ(w.signed_edges(), build_wedge_graph(erdos_renyi(7, 0.5, 3), 3).signed_edges());
}

TEST(WedgeTest, FlippedSignCopy) {
  const WedgeGraph w = build_wedge_graph(complete_graph(4), 2);
  const WedgeGraph f = w.with_flipped_sign(1);
  EXPECT_EQ(f.signed_edges()[1].sign, 1);
  EXPECT_EQ(w.signed_edges()[1].sign, -1);  // original untouched
  EXPECT_EQ(f.num_negative_edges(), 3u);
  EXPECT_THROW(w.with_flipped_sign(99), InputError);
}

TEST(WedgeTest, JsonAndDot) {
  const WedgeGraph w = build_wedge_graph(complete_graph(4), 2);
  const auto j = nlohmann::json::parse(wedge_to_json(w));
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["edges"].size(), 12u);
  EXPECT_EQ(j["signs"].size(), 4u);
  EXPECT_EQ(j["signs"]["0-2"], -1);
  // the wedge JSON is still a readable graph
  EXPECT_EQ(graph_from_json(wedge_to_json(w)), w.as_graph());

  const std::string dot = wedge_to_dot(w);
  EXPECT_NE(dot.find("01 -- 12 [label=\"-1\", style=dashed];"), std::string::npos);
  EXPECT_NE(wedge_to_dot(build_wedge_graph(path_graph(3), 0)).find("\"\";"), std::string::npos);
  EXPECT_EQ(build_wedge_graph(path_graph(12), 2).vertex_name(rank_of({3, 11}, 12)), "3_11");
}
