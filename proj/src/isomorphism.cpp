#include "spinwedge/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

namespace spinwedge {

namespace {

constexpr int kSpectralScreenMaxVertices = 400;

// Colour refinement state over the disjoint union of the two graphs: vertex
// v of g1 is union vertex v, vertex w of g2 is union vertex n + w.
class UnionRefiner {
 public:
  UnionRefiner(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n_(g1.num_vertices()) {}

  int size() const { return 2 * n_; }

  const std::vector<int>& neighbors(int x) const {
    return x < n_ ? g1_.neighbors(x) : g2_.neighbors(x - n_);
  }
  int offset(int x) const { return x < n_ ? 0 : n_; }

  // Refines to the coarsest equitable partition finer than `colors`. Returns
  // false if some colour class has different sizes in the two halves.
  bool refine(std::vector<int>& colors) const {
    int num_colors = relabel(colors);
    while (true) {
      std::map<std::pair<int, std::vector<int>>, int> signature_ids;
      std::vector<int> next(colors.size());
      for (int x = 0; x < size(); ++x) {
        std::vector<int> sig;
        sig.reserve(neighbors(x).size());
        for (int y : neighbors(x)) sig.push_back(colors[y + offset(x)]);
        std::sort(sig.begin(), sig.end());
        auto [it, inserted] = signature_ids.try_emplace({colors[x], std::move(sig)},
                                                        static_cast<int>(signature_ids.size()));
        next[x] = it->second;
      }
      // ids above follow first appearance; make them canonical (ordered by
      // signature) so that both halves agree on colour numbering.
      std::vector<int> order(signature_ids.size());
      int rank = 0;
      for (auto& [sig, id] : signature_ids) order[id] = rank++;
      for (int& c : next) c = order[c];
      const int next_count = static_cast<int>(signature_ids.size());
      colors = std::move(next);
      if (!balanced(colors, next_count)) return false;
      if (next_count == num_colors) return true;
      num_colors = next_count;
    }
  }

  bool balanced(const std::vector<int>& colors, int num_colors) const {
    std::vector<int> count(static_cast<std::size_t>(num_colors), 0);
    for (int x = 0; x < n_; ++x) ++count[colors[x]];
    for (int x = n_; x < size(); ++x) --count[colors[x]];
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 0; });
  }

  static int relabel(std::vector<int>& colors) {
    std::map<int, int> ids;
    for (int c : colors) ids.emplace(c, 0);
    int next = 0;
    for (auto& [c, id] : ids) id = next++;
    for (int& c : colors) c = ids[c];
    return next;
  }

 private:
  const Graph& g1_;
  const Graph& g2_;
  int n_;
};

bool search(const UnionRefiner& refiner, std::vector<int> colors, const Graph& g1, const Graph& g2,
            VertexPermutation& result) {
  const int n = g1.num_vertices();
  // pick the smallest non-singleton colour class (fewest branches)
  std::vector<int> class_size(static_cast<std::size_t>(2 * n + 1), 0);
  for (int x = 0; x < n; ++x) ++class_size[colors[x]];
  int target = -1;
  for (int c = 0; c < static_cast<int>(class_size.size()); ++c) {
    if (class_size[c] > 1 && (target < 0 || class_size[c] < class_size[target])) target = c;
  }

  if (target < 0) {
    // discrete partition: colours identify a unique bijection
    std::vector<int> by_color(static_cast<std::size_t>(2 * n), -1);
    for (int w = 0; w < n; ++w) by_color[colors[n + w]] = w;
    VertexPermutation perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[v] = by_color[colors[v]];
    if (!is_isomorphism(g1, g2, perm)) return false;
    result = std::move(perm);
    return true;
  }

  int v = 0;
  while (colors[v] != target) ++v;
  const int fresh = 2 * n;  // larger than any current colour id
  for (int w = 0; w < n; ++w) {
    if (colors[n + w] != target) continue;
    std::vector<int> trial = colors;
    trial[v] = fresh;
    trial[n + w] = fresh;
    if (!refiner.refine(trial)) continue;
    if (search(refiner, std::move(trial), g1, g2, result)) return true;
  }
  return false;
}

std::vector<double> sorted_adjacency_spectrum(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency(g).dense(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const VertexPermutation& perm) {
  const int n = g1.num_vertices();
  if (n != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return false;
  if (perm.size() != static_cast<std::size_t>(n)) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int w : perm) {
    if (w < 0 || w >= n || hit[w]) return false;
    hit[w] = true;
  }
  return std::all_of(g1.edges().begin(), g1.edges().end(),
                     [&](const Edge& e) { return g2.has_edge(perm[e.u], perm[e.v]); });
}

std::optional<VertexPermutation> find_isomorphism(const Graph& g1, const Graph& g2) {
  const int n = g1.num_vertices();
  if (n != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return std::nullopt;
  auto d1 = g1.degrees();
  auto d2 = g2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  if (n == 0) return VertexPermutation{};

  if (n <= kSpectralScreenMaxVertices) {
    auto s1 = sorted_adjacency_spectrum(g1);
    auto s2 = sorted_adjacency_spectrum(g2);
    for (int i = 0; i < n; ++i) {
      if (std::abs(s1[i] - s2[i]) > 1e-8 * std::max(1.0, std::abs(s1[i]))) return std::nullopt;
    }
  }

  UnionRefiner refiner(g1, g2);
  std::vector<int> colors(static_cast<std::size_t>(2 * n), 0);
  if (!refiner.refine(colors)) return std::nullopt;
  VertexPermutation result;
  if (search(refiner, std::move(colors), g1, g2, result)) return result;
  return std::nullopt;
}

}  // namespace spinwedge
