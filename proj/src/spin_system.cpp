#include "spinwedge/spin_system.hpp"

#include <bit>
#include <string>

#include "spinwedge/combinadics.hpp"
#include "spinwedge/errors.hpp"

namespace spinwedge {

SpinBasisMap::SpinBasisMap(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > 63) throw InputError("spin count must be in [0, 63]");
  if (k < 0 || k > n) {
    throw InputError("excitation number k = " + std::to_string(k) + " out of range [0," +
                     std::to_string(n) + "]");
  }
  const std::uint64_t dim = binomial(n, k);
  if (dim > kMaxBlockDim) {
    throw CapacityError("sector dimension C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") = " + std::to_string(dim) + " exceeds the block limit");
  }
  states_.reserve(dim);
  // colex order of subsets == numeric order of their masks
  if (k == 0) {
    states_.push_back(0);
  } else {
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t r = 0; r < dim; ++r) {
      states_.push_back(s);
      // next mask with the same popcount (Gosper's hack)
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t next = s + c;
      s = (((next ^ s) >> 2) / c) | next;
    }
  }
}

std::optional<std::uint64_t> SpinBasisMap::to_rank(std::uint64_t state) const {
  if (std::popcount(state) != k_) return std::nullopt;
  if (n_ < 64 && (state >> n_) != 0) return std::nullopt;
  return rank_mask(state);
}

namespace {

void check_full_capacity(const Graph& g) {
  if (g.num_vertices() > kMaxFullSpins) {
    throw CapacityError("full Hilbert space needs N <= " + std::to_string(kMaxFullSpins) + ", got N = " +
                        std::to_string(g.num_vertices()));
  }
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Visits every nonzero matrix element <out|H|state> produced by the edge
// terms acting on `state`: visit(out_state, amplitude). The field is left to
// the caller. XY: |01><10| + |10><01|; Heisenberg: the D - A form, +1 on
// |01>,|10> and -1 for the swap.
template <typename Visit>
void for_each_edge_term(const Graph& g, Model model, std::uint64_t state, Visit&& visit) {
  const double hop = model == Model::XY ? 1.0 : -1.0;
  for (const Edge& e : g.edges()) {
    const std::uint64_t pair = bit(e.u) | bit(e.v);
    const std::uint64_t occ = state & pair;
    if (occ == 0 || occ == pair) continue;  // |00> and |11> are annihilated
    if (model == Model::Heisenberg) visit(state, 1.0);
    visit(state ^ pair, hop);
  }
}

template <typename Vec>
Vec block_matvec_impl(const Graph& g, int k, const ModelSpec& spec, const Vec& x) {
  spec.validate();
  SpinBasisMap basis(g.num_vertices(), k);
  if (static_cast<std::uint64_t>(x.size()) != basis.dim()) {
    throw InputError("vector length " + std::to_string(x.size()) + " does not match sector dimension " +
                     std::to_string(basis.dim()));
  }
  const double shift = field_shift(spec.field_B, g.num_vertices(), k);
  Vec y = shift * x;
  for (std::uint64_t r = 0; r < basis.dim(); ++r) {
    const auto xr = x(static_cast<Eigen::Index>(r));
    for_each_edge_term(g, spec.model, basis.to_state(r), [&](std::uint64_t out, double amp) {
      y(static_cast<Eigen::Index>(rank_mask(out))) += amp * xr;
    });
  }
  return y;
}

}  // namespace

SymMatrix full_hamiltonian(const Graph& g, const ModelSpec& spec) {
  spec.validate();
  check_full_capacity(g);
  const int n = g.num_vertices();
  const std::uint64_t dim = std::uint64_t{1} << n;
  SymMatrix h(static_cast<SymMatrix::Index>(dim));
  for (std::uint64_t s = 0; s < dim; ++s) {
    const auto col = static_cast<SymMatrix::Index>(s);
    for_each_edge_term(g, spec.model, s, [&](std::uint64_t out, double amp) {
      // each off-diagonal pair is visited from both ends; write only once
      if (out >= s) h.set(static_cast<SymMatrix::Index>(out), col, h(static_cast<SymMatrix::Index>(out), col) + amp);
    });
    h.add(col, col, spec.field_B * static_cast<double>(n - 2 * std::popcount(s)));
  }
  return h;
}

SymMatrix block_hamiltonian(const Graph& g, int k, const ModelSpec& spec) {
  spec.validate();
  SpinBasisMap basis(g.num_vertices(), k);
  SymMatrix h(static_cast<SymMatrix::Index>(basis.dim()));
  for (std::uint64_t r = 0; r < basis.dim(); ++r) {
    const auto col = static_cast<SymMatrix::Index>(r);
    for_each_edge_term(g, spec.model, basis.to_state(r), [&](std::uint64_t out, double amp) {
      const auto row = static_cast<SymMatrix::Index>(*basis.to_rank(out));
      if (row >= col) h.set(row, col, h(row, col) + amp);
    });
  }
  h.add_to_diagonal(field_shift(spec.field_B, g.num_vertices(), k));
  return h;
}

Eigen::VectorXd block_matvec(const Graph& g, int k, const ModelSpec& spec, const Eigen::VectorXd& x) {
  return block_matvec_impl(g, k, spec, x);
}

Eigen::VectorXcd block_matvec(const Graph& g, int k, const ModelSpec& spec, const Eigen::VectorXcd& x) {
  return block_matvec_impl(g, k, spec, x);
}

std::vector<Spectrum> project_full_to_blocks(const Graph& g, const ModelSpec& spec) {
  const SymMatrix full = full_hamiltonian(g, spec);
  const int n = g.num_vertices();
  const Eigen::MatrixXd& h = full.dense();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (h(i, j) != 0.0 && std::popcount(static_cast<std::uint64_t>(i)) !=
                                std::popcount(static_cast<std::uint64_t>(j))) {
        throw ConsistencyError("full Hamiltonian couples sectors: entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") is nonzero");
      }
    }
  }
  std::vector<Spectrum> blocks;
  blocks.reserve(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    SpinBasisMap basis(n, k);
    const auto d = static_cast<Eigen::Index>(basis.dim());
    Eigen::MatrixXd block(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b)
        block(a, b) = h(static_cast<Eigen::Index>(basis.to_state(a)), static_cast<Eigen::Index>(basis.to_state(b)));
    blocks.push_back(spectrum_of(SymMatrix::from_dense(std::move(block))));
  }
  return blocks;
}

Eigen::VectorXcd restrict_to_block(const Eigen::VectorXcd& full_state, int n, int k) {
  if (full_state.size() != (Eigen::Index{1} << n)) throw InputError("full state has wrong length");
  SpinBasisMap basis(n, k);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(basis.dim()));
  for (std::uint64_t r = 0; r < basis.dim(); ++r) {
    out(static_cast<Eigen::Index>(r)) = full_state(static_cast<Eigen::Index>(basis.to_state(r)));
  }
  return out;
}

Eigen::VectorXcd embed_block(const Eigen::VectorXcd& block_state, int n, int k) {
  SpinBasisMap basis(n, k);
  if (static_cast<std::uint64_t>(block_state.size()) != basis.dim()) {
    throw InputError("block state has wrong length");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (std::uint64_t r = 0; r < basis.dim(); ++r) {
    out(static_cast<Eigen::Index>(basis.to_state(r))) = block_state(static_cast<Eigen::Index>(r));
  }
  return out;
}

}  // namespace spinwedge
