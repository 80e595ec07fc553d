#pragma once

#include <optional>
#include <vector>

#include "spinwedge/graph.hpp"

namespace spinwedge {

/// perm[v] is the image in the second graph of vertex v of the first.
using VertexPermutation = std::vector<int>;

/// Searches for a graph isomorphism. Candidates are screened by vertex and
/// edge counts, degree sequence and (for graphs up to a few hundred
/// vertices) adjacency spectrum; the search itself individualizes one vertex
/// pair at a time and refines colours on the disjoint union of both graphs,
/// so colour classes correspond across the two graphs by construction.
/// Returns std::nullopt when the graphs are not isomorphic.
std::optional<VertexPermutation> find_isomorphism(const Graph& g1, const Graph& g2);

/// True iff perm is a bijection carrying the edge set of g1 onto that of g2.
bool is_isomorphism(const Graph& g1, const Graph& g2, const VertexPermutation& perm);

}  // namespace spinwedge
