#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinwedge/graph.hpp"
#include "spinwedge/model.hpp"
#include "spinwedge/spectra.hpp"

namespace spinwedge {

inline constexpr int kMaxOracleEvolutionSpins = 10;
inline constexpr double kNormTol = 1e-10;

/// Amplitudes over the k-excitation sector in colex order.
struct WaveState {
  int k = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Basis state |S> of sector |S|. Throws InputError on a bad subset.
WaveState basis_state(int n, std::span<const int> subset);

/// exp(-i t H) for a fixed real symmetric H, via one eigendecomposition
/// reused for every time.
class Propagator {
 public:
  explicit Propagator(const SymMatrix& h);

  Eigen::Index dim() const { return eig_.dim(); }
  const EigenDecomposition& eigen() const { return eig_; }

  /// Throws InputError on non-finite t or a length mismatch.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& state, double t) const;

 private:
  EigenDecomposition eig_;
};

/// Evolves within the k-excitation block. Throws InputError unless the state
/// has unit norm (within kNormTol) and the right length.
WaveState evolve_block(const Graph& g, const ModelSpec& spec, const WaveState& state, double t);

/// Evolves a full 2^N state with the full Hamiltonian. Throws CapacityError
/// when N > kMaxOracleEvolutionSpins.
Eigen::VectorXcd evolve_full_oracle(const Graph& g, const ModelSpec& spec, const Eigen::VectorXcd& full_state,
                                    double t);

/// |<to| exp(-i t H) |from>|^2 in the single-excitation sector, per time.
std::vector<double> transfer_fidelity(const Graph& g, const ModelSpec& spec, int from_vertex, int to_vertex,
                                      std::span<const double> times);

/// <psi|H|psi> (real for symmetric H).
double energy(const SymMatrix& h, const Eigen::VectorXcd& state);

}  // namespace spinwedge
