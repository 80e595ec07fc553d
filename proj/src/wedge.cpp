#include "spinwedge/wedge.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <tuple>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "spinwedge/combinadics.hpp"
#include "spinwedge/errors.hpp"

namespace spinwedge {

WedgeGraph::WedgeGraph(Graph base, int k, std::vector<SignedEdge> edges)
    : base_(std::move(base)), k_(k), num_vertices_(binomial(base_.num_vertices(), k)),
      edges_(std::move(edges)) {
  for (const SignedEdge& e : edges_) {
    if (e.a >= e.b || e.b >= num_vertices_ || (e.sign != 1 && e.sign != -1)) {
      throw InputError("malformed signed wedge edge");
    }
  }
}

Graph WedgeGraph::as_graph() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const SignedEdge& e : edges_) edges.push_back(Edge{static_cast<int>(e.a), static_cast<int>(e.b)});
  return Graph(static_cast<int>(num_vertices_), edges);
}

std::string WedgeGraph::vertex_name(std::uint64_t rank) const {
  // labels >= 10 would make plain concatenation ambiguous
  const char* sep = base_.num_vertices() > 10 ? "_" : "";
  std::string out;
  for (int v : unrank_subset(rank, base_.num_vertices(), k_)) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

std::vector<std::string> WedgeGraph::vertex_names() const {
  std::vector<std::string> names;
  names.reserve(num_vertices_);
  for (std::uint64_t r = 0; r < num_vertices_; ++r) names.push_back(vertex_name(r));
  return names;
}

std::size_t WedgeGraph::num_negative_edges() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.sign < 0; }));
}

WedgeGraph WedgeGraph::with_flipped_sign(std::size_t index) const {
  if (index >= edges_.size()) throw InputError("edge index out of range");
  auto edges = edges_;
  edges[index].sign = -edges[index].sign;
  return WedgeGraph(base_, k_, std::move(edges));
}

WedgeGraph build_wedge_graph(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k < 0 || k > n) {
    throw InputError("k = " + std::to_string(k) + " out of range [0," + std::to_string(n) + "]");
  }
  if (n > 63) throw CapacityError("wedge graphs support at most 63 base vertices");
  const std::uint64_t dim = binomial(n, k);
  if (dim > kMaxBlockDim) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                        std::to_string(dim) + " exceeds the block limit");
  }

  std::vector<SignedEdge> edges;
  for (std::uint64_t a = 0; a < dim; ++a) {
    const std::uint64_t mask = unrank_mask(a, n, k);
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int from = std::countr_zero(rest);
      for (int to : g.neighbors(from)) {
        const std::uint64_t to_bit = std::uint64_t{1} << to;
        if (mask & to_bit) continue;
        const std::uint64_t moved = (mask & ~(std::uint64_t{1} << from)) | to_bit;
        const std::uint64_t b = rank_mask(moved);
        if (b < a) continue;  // emitted from the other endpoint
        const int lo = std::min(from, to);
        const int hi = std::max(from, to);
        const std::uint64_t between = ((std::uint64_t{1} << hi) - 1) & ~((std::uint64_t{2} << lo) - 1);
        const int sign = (std::popcount(mask & between) % 2 == 0) ? 1 : -1;
        edges.push_back(SignedEdge{a, b, sign});
      }
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const SignedEdge& x, const SignedEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return WedgeGraph(g, k, std::move(edges));
}

SymMatrix signed_matrix(const WedgeGraph& w) {
  SymMatrix c(static_cast<SymMatrix::Index>(w.num_vertices()));
  for (const SignedEdge& e : w.signed_edges()) c.set(e.a, e.b, e.sign);
  return c;
}

SymMatrix wedge_adjacency(const WedgeGraph& w) {
  SymMatrix a(static_cast<SymMatrix::Index>(w.num_vertices()));
  for (const SignedEdge& e : w.signed_edges()) a.set(e.a, e.b, 1.0);
  return a;
}

SymMatrix wedge_degree(const WedgeGraph& w) {
  SymMatrix d(static_cast<SymMatrix::Index>(w.num_vertices()));
  for (const SignedEdge& e : w.signed_edges()) {
    d.add(e.a, e.a, 1.0);
    d.add(e.b, e.b, 1.0);
  }
  return d;
}

SymMatrix wedge_laplacian(const WedgeGraph& w) { return wedge_degree(w) - wedge_adjacency(w); }

namespace {

struct SignedPermutation {
  std::vector<int> perm;
  int sign;
};

std::vector<SignedPermutation> all_permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inversions += p[i] > p[j];
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

using TensorVector = std::unordered_map<std::uint64_t, std::int64_t>;

// Tensor index of |t_0, ..., t_{k-1}>, first factor most significant.
std::uint64_t encode(std::span<const int> t, int n) {
  std::uint64_t idx = 0;
  for (int x : t) idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(x);
  return idx;
}

std::vector<int> decode(std::uint64_t idx, int n, int k) {
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % static_cast<std::uint64_t>(n));
    idx /= static_cast<std::uint64_t>(n);
  }
  return t;
}

// k! * Alt, i.e. sum_pi eps(pi) pi.
TensorVector antisymmetrize(const TensorVector& x, int n, int k, const std::vector<SignedPermutation>& perms) {
  TensorVector out;
  std::vector<int> permuted(static_cast<std::size_t>(k));
  for (const auto& [idx, coeff] : x) {
    if (coeff == 0) continue;
    const auto t = decode(idx, n, k);
    for (const auto& sp : perms) {
      for (int i = 0; i < k; ++i) permuted[i] = t[sp.perm[i]];
      out[encode(permuted, n)] += sp.sign * coeff;
    }
  }
  return out;
}

// Delta^k(A) = sum_j I x .. x A_j x .. x I
TensorVector apply_coproduct(const TensorVector& x, const Graph& g, int k) {
  const int n = g.num_vertices();
  TensorVector out;
  for (const auto& [idx, coeff] : x) {
    if (coeff == 0) continue;
    auto t = decode(idx, n, k);
    for (int j = 0; j < k; ++j) {
      const int original = t[j];
      for (int nb : g.neighbors(original)) {
        t[j] = nb;
        out[encode(t, n)] += coeff;
      }
      t[j] = original;
    }
  }
  return out;
}

}  // namespace

SymMatrix alt_delta_oracle(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k < 0 || k > n) throw InputError("k out of range");
  double tensor_dim = std::pow(static_cast<double>(n), k);
  if (tensor_dim > 1e6) throw CapacityError("oracle tensor space N^k exceeds 10^6");
  const std::uint64_t dim = binomial(n, k);

  const auto perms = all_permutations(k);
  std::int64_t factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  const std::int64_t denominator = factorial * factorial * factorial;

  SymMatrix c(static_cast<SymMatrix::Index>(dim));
  const auto subsets = all_subsets(n, k);
  for (const KSubset& s : subsets) {
    // u_S = sum_pi eps(pi) |s_pi>, so that e_S = u_S / sqrt(k!) is orthonormal
    TensorVector seed{{encode(s.elements, n), 1}};
    const TensorVector u_s = antisymmetrize(seed, n, k, perms);
    const TensorVector y = antisymmetrize(apply_coproduct(antisymmetrize(u_s, n, k, perms), g, k), n, k, perms);
    for (const KSubset& t : subsets) {
      // <u_T | y>
      std::int64_t numerator = 0;
      std::vector<int> permuted(static_cast<std::size_t>(k));
      for (const auto& sp : perms) {
        for (int i = 0; i < k; ++i) permuted[i] = t.elements[sp.perm[i]];
        auto it = y.find(encode(permuted, n));
        if (it != y.end()) numerator += sp.sign * it->second;
      }
      if (numerator % denominator != 0) {
        throw ConsistencyError("antisymmetrized coproduct entry is not an integer");
      }
      if (numerator != 0) c.set(t.rank, s.rank, static_cast<double>(numerator / denominator));
    }
  }
  return c;
}

bool signed_equals_unsigned(const WedgeGraph& w) { return w.num_negative_edges() == 0; }

std::string wedge_to_json(const WedgeGraph& w) {
  nlohmann::json j;
  j["n"] = w.num_vertices();
  j["k"] = w.k();
  j["base"] = nlohmann::json::parse(graph_to_json(w.base()));
  j["edges"] = nlohmann::json::array();
  j["signs"] = nlohmann::json::object();
  for (const SignedEdge& e : w.signed_edges()) {
    j["edges"].push_back({e.a, e.b});
    if (e.sign < 0) j["signs"][std::to_string(e.a) + "-" + std::to_string(e.b)] = -1;
  }
  return j.dump();
}

std::string wedge_to_dot(const WedgeGraph& w) {
  const auto names = w.vertex_names();
  auto id = [&](std::uint64_t r) {
    const std::string& s = names[r];
    const bool numeral = !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    return numeral ? s : "\"" + s + "\"";
  };
  std::vector<int> degree(names.size(), 0);
  for (const SignedEdge& e : w.signed_edges()) {
    ++degree[e.a];
    ++degree[e.b];
  }
  std::ostringstream out;
  out << "graph {\n";
  for (std::uint64_t r = 0; r < names.size(); ++r) {
    if (degree[r] == 0) out << "  " << id(r) << ";\n";
  }
  for (const SignedEdge& e : w.signed_edges()) {
    out << "  " << id(e.a) << " -- " << id(e.b);
    if (e.sign < 0) out << " [label=\"-1\", style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spinwedge
