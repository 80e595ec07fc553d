#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spinwedge/graph.hpp"
#include "spinwedge/model.hpp"
#include "spinwedge/spectra.hpp"
#include "spinwedge/wedge.hpp"

// Spin-1/2 systems on a graph in the computational basis: bit v of a state
// index is vertex v, and a set bit is a flipped spin (sigma^z = -1). The k
// flipped spins of a state in the k-excitation sector are identified with
// the k-subset of their vertices, ordered by colex rank.

namespace spinwedge {

inline constexpr int kMaxFullSpins = 14;

class SpinBasisMap {
 public:
  /// Throws InputError unless 0 <= k <= n <= 63; CapacityError if C(n,k)
  /// exceeds kMaxBlockDim.
  SpinBasisMap(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t dim() const noexcept { return states_.size(); }

  std::uint64_t to_state(std::uint64_t rank) const { return states_.at(rank); }
  /// std::nullopt unless the state has exactly k set bits within n.
  std::optional<std::uint64_t> to_rank(std::uint64_t state) const;
  const std::vector<std::uint64_t>& states() const noexcept { return states_; }

 private:
  int n_;
  int k_;
  std::vector<std::uint64_t> states_;
};

/// 2^N x 2^N Hamiltonian built edge by edge on bitstrings. Throws
/// CapacityError when N > kMaxFullSpins.
SymMatrix full_hamiltonian(const Graph& g, const ModelSpec& spec);

/// The k-excitation sector of the Hamiltonian, built by bit hops.
SymMatrix block_hamiltonian(const Graph& g, int k, const ModelSpec& spec);

/// Matrix-free action of the block Hamiltonian. Throws InputError on a
/// dimension mismatch.
Eigen::VectorXd block_matvec(const Graph& g, int k, const ModelSpec& spec, const Eigen::VectorXd& x);
Eigen::VectorXcd block_matvec(const Graph& g, int k, const ModelSpec& spec, const Eigen::VectorXcd& x);

/// Permutes the full Hamiltonian into sector-diagonal form and returns the
/// spectrum of each sector k = 0..N. Throws ConsistencyError if any entry
/// coupling two different sectors is nonzero.
std::vector<Spectrum> project_full_to_blocks(const Graph& g, const ModelSpec& spec);

/// Sector-k part of a full state, in colex order.
Eigen::VectorXcd restrict_to_block(const Eigen::VectorXcd& full_state, int n, int k);
/// Inverse of restrict_to_block (zero outside the sector).
Eigen::VectorXcd embed_block(const Eigen::VectorXcd& block_state, int n, int k);

}  // namespace spinwedge
