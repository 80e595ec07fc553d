#include "spinwedge/dynamics.hpp"

#include <cmath>
#include <string>

#include "spinwedge/combinadics.hpp"
#include "spinwedge/errors.hpp"
#include "spinwedge/spin_system.hpp"

namespace spinwedge {

WaveState basis_state(int n, std::span<const int> subset) {
  const auto k = static_cast<int>(subset.size());
  if (k > n) throw InputError("initial subset larger than the graph");
  const std::uint64_t rank = rank_subset(subset, n);
  WaveState s;
  s.k = k;
  s.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(binomial(n, k)));
  s.amplitudes(static_cast<Eigen::Index>(rank)) = 1.0;
  return s;
}

Propagator::Propagator(const SymMatrix& h) : eig_(eigh(h)) {}

Eigen::VectorXcd Propagator::apply(const Eigen::VectorXcd& state, double t) const {
  if (!std::isfinite(t)) throw InputError("evolution time must be finite");
  if (state.size() != eig_.dim()) throw InputError("state length does not match the Hamiltonian");
  const Eigen::MatrixXd& v = eig_.vectors;
  Eigen::VectorXcd coeffs = v.transpose().cast<std::complex<double>>() * state;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    coeffs(j) *= std::polar(1.0, -t * eig_.values(j));
  }
  return v.cast<std::complex<double>>() * coeffs;
}

WaveState evolve_block(const Graph& g, const ModelSpec& spec, const WaveState& state, double t) {
  if (std::abs(state.norm() - 1.0) > kNormTol) {
    throw InputError("state is not normalised (norm " + std::to_string(state.norm()) + ")");
  }
  Propagator u(block_hamiltonian(g, state.k, spec));
  return WaveState{state.k, u.apply(state.amplitudes, t)};
}

Eigen::VectorXcd evolve_full_oracle(const Graph& g, const ModelSpec& spec, const Eigen::VectorXcd& full_state,
                                    double t) {
  if (g.num_vertices() > kMaxOracleEvolutionSpins) {
    throw CapacityError("full-space evolution needs N <= " + std::to_string(kMaxOracleEvolutionSpins));
  }
  Propagator u(full_hamiltonian(g, spec));
  return u.apply(full_state, t);
}

std::vector<double> transfer_fidelity(const Graph& g, const ModelSpec& spec, int from_vertex, int to_vertex,
                                      std::span<const double> times) {
  const int n = g.num_vertices();
  if (from_vertex < 0 || from_vertex >= n || to_vertex < 0 || to_vertex >= n) {
    throw InputError("transfer endpoints must be vertices of the graph");
  }
  Propagator u(block_hamiltonian(g, 1, spec));
  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(n);
  start(from_vertex) = 1.0;
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(std::norm(u.apply(start, t)(to_vertex)));
  return out;
}

double energy(const SymMatrix& h, const Eigen::VectorXcd& state) {
  return state.dot(h.dense().cast<std::complex<double>>() * state).real();
}

}  // namespace spinwedge
