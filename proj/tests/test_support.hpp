#pragma once

// Independent reference constructions used only by the tests. None of these
// call into the library's wedge or spin-system code paths.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "spinwedge/graph.hpp"

namespace spinwedge::oracle {

// All k-subsets as sorted vectors, ordered by their bitmask value.
inline std::vector<std::vector<int>> subsets_by_mask(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) != k) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  return out;
}

inline int inversion_parity(const std::vector<int>& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) inv += t[i] > t[j];
  return inv % 2 == 0 ? 1 : -1;
}

// Signed wedge matrix by comparing every pair of subsets: S and T are
// adjacent when they share k-1 elements and the two leftovers form an edge;
// the sign is the parity of sorting S with v replaced in place by w.
inline Eigen::MatrixXd brute_force_signed(const Graph& g, int k) {
  const auto subsets = subsets_by_mask(g.num_vertices(), k);
  const auto d = static_cast<Eigen::Index>(subsets.size());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      const auto& s = subsets[a];
      const auto& t = subsets[b];
      std::vector<int> only_s, only_t;
      std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(only_s));
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(only_t));
      if (only_s.size() != 1 || !g.has_edge(only_s[0], only_t[0])) continue;
      std::vector<int> moved = s;
      *std::find(moved.begin(), moved.end(), only_s[0]) = only_t[0];
      c(a, b) = inversion_parity(moved);
    }
  }
  return c;
}

// Full spin Hamiltonian from explicit Pauli Kronecker products. Each new
// factor is prepended as the most significant one, so factor f acts on bit f
// of the basis index, i.e. on vertex f.
inline Eigen::MatrixXcd pauli_hamiltonian(const Graph& g, bool heisenberg, double field) {
  using C = std::complex<double>;
  const int n = g.num_vertices();
  Eigen::Matrix2cd x, y, z, id;
  x << 0, 1, 1, 0;
  y << 0, C(0, -1), C(0, 1), 0;
  z << 1, 0, 0, -1;
  id.setIdentity();
  auto site = [&](const Eigen::Matrix2cd& op, int v) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int f = 0; f < n; ++f) {
      const Eigen::Matrix2cd& m = (f == v) ? op : id;
      Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) next.block(i * out.rows(), j * out.cols(), out.rows(), out.cols()) = m(i, j) * out;
      out = next;
    }
    return out;
  };
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const Edge& e : g.edges()) {
    Eigen::MatrixXcd xx = site(x, e.u) * site(x, e.v);
    Eigen::MatrixXcd yy = site(y, e.u) * site(y, e.v);
    if (heisenberg) {
      Eigen::MatrixXcd zz = site(z, e.u) * site(z, e.v);
      h += -0.5 * (xx + yy + zz - Eigen::MatrixXcd::Identity(dim, dim));
    } else {
      h += 0.5 * (xx + yy);
    }
  }
  for (int v = 0; v < n; ++v) h += field * site(z, v);
  return h;
}

inline std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(m, Eigen::EigenvaluesOnly);
  return {s.eigenvalues().data(), s.eigenvalues().data() + s.eigenvalues().size()};
}

}  // namespace spinwedge::oracle
