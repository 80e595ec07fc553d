#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinwedge/graph.hpp"

namespace spinwedge {

enum class Family { Path, Cycle, Complete, Empty, Random, Custom };

struct NamedGraph {
  std::string name;  // inline source syntax, e.g. "cycle:5"
  Family family = Family::Custom;
  Graph graph;
};

/// G(n, p): each pair u < v, in lexicographic order, is an edge when a
/// 53-bit uniform draw from mt19937_64(seed) falls below p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// "path:N", "cycle:N", "complete:N", "empty:N", "random:N:P:SEED", or a path
/// to a JSON graph file. Throws InputError / ParseError.
NamedGraph parse_graph_source(const std::string& source);

/// Paths N=2..8, cycles N=3..7, complete graphs N=2..6 and five G(6, 0.5)
/// graphs with seeds 0..4.
std::vector<NamedGraph> default_corpus();

}  // namespace spinwedge
