#include "spinwedge/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "spinwedge/errors.hpp"

namespace spinwedge {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InputError("vertex count must be non-negative, got " + std::to_string(n));
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

SymMatrix SymMatrix::from_dense(Eigen::MatrixXd dense) {
  if (dense.rows() != dense.cols()) throw InputError("matrix is not square");
  if (dense != dense.transpose()) throw InputError("matrix is not exactly symmetric");
  return SymMatrix(std::move(dense));
}

SymMatrix SymMatrix::identity(Index dim) {
  return SymMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

SymMatrix SymMatrix::operator+(const SymMatrix& other) const {
  if (dim() != other.dim()) throw InputError("matrix dimensions differ");
  return SymMatrix(m_ + other.m_);
}

SymMatrix SymMatrix::operator-(const SymMatrix& other) const {
  if (dim() != other.dim()) throw InputError("matrix dimensions differ");
  return SymMatrix(m_ - other.m_);
}

SymMatrix SymMatrix::cwise_abs() const { return SymMatrix(m_.cwiseAbs()); }

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
  if (dim() != other.dim()) return std::numeric_limits<double>::infinity();
  if (dim() == 0) return 0.0;
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

Graph graph_from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back(Edge{u, v});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw InputError("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle graph needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

SymMatrix adjacency(const Graph& g) {
  SymMatrix a(g.num_vertices());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

SymMatrix degree_matrix(const Graph& g) {
  SymMatrix d(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) d.set(v, v, g.degree(v));
  return d;
}

SymMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency(g); }

std::vector<int> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int count_components(const Graph& g) {
  auto comp = connected_components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

namespace {

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string dot_id(const std::string& name) {
  if (is_numeral(name)) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Graph& g, std::span<const std::string> vertex_names) {
  const int n = g.num_vertices();
  if (!vertex_names.empty() && vertex_names.size() != static_cast<std::size_t>(n)) {
    throw InputError("expected " + std::to_string(n) + " vertex names, got " +
                     std::to_string(vertex_names.size()));
  }
  auto name = [&](int v) {
    return vertex_names.empty() ? std::to_string(v) : vertex_names[v];
  };
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) out << "  " << dot_id(name(v)) << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << dot_id(name(e.u)) << " -- " << dot_id(name(e.v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.num_vertices();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("graph JSON needs an integer field \"n\"");
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("graph JSON field \"edges\" must be an array");
    for (const auto& pair : j["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw InputError("every edge must be a pair of integers, got " + pair.dump());
      }
      edges.push_back(Edge{pair[0].get<int>(), pair[1].get<int>()});
    }
  }
  return Graph(j["n"].get<int>(), edges);
}

}  // namespace spinwedge
