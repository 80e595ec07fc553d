#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinwedge/graph.hpp"

namespace spinwedge {

/// Largest dense matrix (per side) any builder in this library will allocate
/// for a single excitation block or wedge graph.
inline constexpr std::uint64_t kMaxBlockDim = 5000;

struct SignedEdge {
  std::uint64_t a = 0;  // colex rank, a < b
  std::uint64_t b = 0;
  int sign = 1;         // +1 or -1

  bool operator==(const SignedEdge&) const = default;
};

/// The k-fold wedge product of a base graph. Vertices are k-subsets of the
/// base vertex set, indexed by colex rank. Two subsets are joined when one
/// particle moves along a base edge to an empty vertex; the edge sign is the
/// parity of the sort that restores increasing order, i.e.
/// (-1)^(number of occupied vertices strictly between source and target).
class WedgeGraph {
 public:
  WedgeGraph(Graph base, int k, std::vector<SignedEdge> edges);

  const Graph& base() const noexcept { return base_; }
  int k() const noexcept { return k_; }
  std::uint64_t num_vertices() const noexcept { return num_vertices_; }
  const std::vector<SignedEdge>& signed_edges() const noexcept { return edges_; }

  /// Unsigned view as a plain Graph on ranks 0..C(N,k)-1.
  Graph as_graph() const;
  /// Concatenated base labels of the subset with this rank, e.g. "024".
  std::string vertex_name(std::uint64_t rank) const;
  std::vector<std::string> vertex_names() const;

  std::size_t num_negative_edges() const;

  /// Copy with the sign of edge `index` negated. Used to check that the
  /// verification suite notices sign corruption.
  WedgeGraph with_flipped_sign(std::size_t index) const;

 private:
  Graph base_;
  int k_;
  std::uint64_t num_vertices_;
  std::vector<SignedEdge> edges_;
};

/// Throws InputError unless 0 <= k <= N; CapacityError when C(N,k) exceeds
/// kMaxBlockDim or N > 63.
WedgeGraph build_wedge_graph(const Graph& g, int k);

/// The signed matrix of k non-interacting hops in the ordered wedge basis:
/// entries in {-1, 0, +1}.
SymMatrix signed_matrix(const WedgeGraph& w);
/// Entrywise |signed_matrix|.
SymMatrix wedge_adjacency(const WedgeGraph& w);
/// Number of legal single-particle moves out of each subset, on the diagonal.
SymMatrix wedge_degree(const WedgeGraph& w);
SymMatrix wedge_laplacian(const WedgeGraph& w);

/// Literal construction: Delta^k(A(G)) on the N^k tensor space, sandwiched
/// between explicit antisymmetrizers (signed sums over all k! permutations),
/// then compressed onto the orthonormal ordered-wedge basis. Computed in
/// exact integer arithmetic. Throws CapacityError when N^k > 10^6.
SymMatrix alt_delta_oracle(const Graph& g, int k);

/// True iff the signed and unsigned adjacency matrices coincide.
bool signed_equals_unsigned(const WedgeGraph& w);

/// JSON graph format plus "k", "base" and "signs" ({"a-b": -1} for negative
/// edges only).
std::string wedge_to_json(const WedgeGraph& w);
/// DOT with concatenated-label vertex names; negative edges carry
/// label="-1" and are dashed.
std::string wedge_to_dot(const WedgeGraph& w);

}  // namespace spinwedge
