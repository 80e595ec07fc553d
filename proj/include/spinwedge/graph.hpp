#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spinwedge {

struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Vertex labels double as the
/// total order used by the wedge basis. Edges are stored normalized (u < v),
/// sorted and deduplicated, so two graphs compare equal iff they have the
/// same labelled edge set.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on an out-of-range endpoint or a self-loop.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  std::vector<int> degrees() const;
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;  // sorted neighbour lists
};

/// Dense real symmetric matrix. Every mutator writes both (i,j) and (j,i),
/// so symmetry holds exactly.
class SymMatrix {
 public:
  using Index = Eigen::Index;

  SymMatrix() = default;
  explicit SymMatrix(Index dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {}

  /// Throws InputError unless `dense` is square and exactly symmetric.
  static SymMatrix from_dense(Eigen::MatrixXd dense);
  static SymMatrix identity(Index dim);

  Index dim() const noexcept { return m_.rows(); }
  double operator()(Index i, Index j) const { return m_(i, j); }
  void set(Index i, Index j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
  }
  void add(Index i, Index j, double value) {
    m_(i, j) += value;
    if (i != j) m_(j, i) += value;
  }
  void add_to_diagonal(double value) { m_.diagonal().array() += value; }

  const Eigen::MatrixXd& dense() const noexcept { return m_; }

  SymMatrix operator+(const SymMatrix& other) const;
  SymMatrix operator-(const SymMatrix& other) const;
  SymMatrix cwise_abs() const;
  double max_abs_diff(const SymMatrix& other) const;

  bool operator==(const SymMatrix& other) const {
    return m_.rows() == other.m_.rows() && m_ == other.m_;
  }

 private:
  explicit SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}
  Eigen::MatrixXd m_;
};

Graph graph_from_edge_list(int n, std::span<const std::pair<int, int>> pairs);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

SymMatrix adjacency(const Graph& g);
SymMatrix degree_matrix(const Graph& g);
SymMatrix laplacian(const Graph& g);

/// Component id per vertex (ids are 0.., in order of first appearance).
std::vector<int> connected_components(const Graph& g);
int count_components(const Graph& g);

/// `vertex_names` may be empty, in which case labels are used.
std::string export_dot(const Graph& g, std::span<const std::string> vertex_names = {});
std::string graph_to_json(const Graph& g);
/// Throws ParseError (malformed JSON) or InputError (bad graph contents).
Graph graph_from_json(const std::string& text);

}  // namespace spinwedge
