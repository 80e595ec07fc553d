#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinwedge/graph.hpp"
#include "spinwedge/model.hpp"

namespace spinwedge {

// Tolerances used throughout: eigensolver residuals are held to
// kResidualTol * max(1, ||M||_2); spectra compare to kSpectrumTol absolute
// (matrix entries are small integers); eigenvector orthonormality to
// kOrthonormalityTol.
inline constexpr double kSpectrumTol = 1e-9;
inline constexpr double kResidualTol = 1e-9;
inline constexpr double kOrthonormalityTol = 1e-10;

/// values ascending; column j of `vectors` is the unit eigenvector for
/// values[j]. vectors(l, j) is the component of eigenvector j on vertex l.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;

  Eigen::Index dim() const { return values.size(); }
};

/// Sorted real multiset with a comparison tolerance.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values, double tol = kSpectrumTol);

  const std::vector<double>& values() const noexcept { return values_; }
  double tol() const noexcept { return tol_; }
  std::size_t size() const noexcept { return values_.size(); }
  double min() const;
  double max() const;
  double sum() const;

  /// Consecutive values within tol grouped into (value, count) pairs.
  std::vector<std::pair<double, std::size_t>> collapsed() const;
  std::vector<double> distinct() const;

  Spectrum shifted(double offset) const;
  /// Multiset union; keeps this spectrum's tolerance.
  Spectrum merged(const Spectrum& other) const;

  /// {"values": [...], "multiplicity_collapsed": [[v, c], ...], "tol": tol}
  std::string to_json() const;

 private:
  std::vector<double> values_;
  double tol_ = kSpectrumTol;
};

struct SpectrumComparison {
  bool equal = false;
  double max_gap = 0.0;  // over paired values
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::vector<double> unmatched_a;
  std::vector<double> unmatched_b;
};

/// Greedy sorted pairing within the tolerance of `a`.
SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b);

/// Dense symmetric eigensolver. Throws InputError on non-finite entries.
EigenDecomposition eigh(const SymMatrix& m);
Spectrum spectrum_of(const SymMatrix& m);

/// max_j ||M v_j - lambda_j v_j||_2
double max_residual(const SymMatrix& m, const EigenDecomposition& eig);
double residual(const SymMatrix& m, const Eigen::VectorXd& v, double value);
/// max |<v_i, v_j> - delta_ij|
double orthonormality_error(const Eigen::MatrixXd& vectors);

/// -2 cos(pi (j+1) / (N+1)), j = 0..N-1, ascending.
Spectrum path_spectrum(int n);
/// Unit eigenvector of A(P_N) for path_spectrum(N)[j]:
/// (-1)^l sqrt(2/(N+1)) sin(pi (j+1)(l+1)/(N+1)), l = 0..N-1.
Eigen::VectorXd path_eigenvector(int n, int j);
/// All C(N,k) sums of k distinct path eigenvalues.
Spectrum xy_path_spectrum(int n, int k);

/// Adjacency spectrum of J(N,k): k(N-k) - j(N+1-j) with multiplicity
/// C(N,j) - C(N,j-1), j = 0..min(k, N-k).
Spectrum johnson_spectrum(int n, int k);
/// Full spectrum of the spin model on K_N, assembled block by block from the
/// Johnson spectra (field shift included).
Spectrum complete_graph_spectra(int n, const ModelSpec& spec);

struct LiftedEigenpair {
  std::vector<int> indices;  // strictly increasing single-particle indices
  double value = 0.0;
  Eigen::VectorXd vector;    // over the ordered wedge basis (colex rank)
};

/// Eigenvalues of the k-particle signed matrix C: every sum of k distinct
/// single-particle eigenvalues.
Spectrum lift_spectrum(const EigenDecomposition& base, int k);
/// Determinant (Slater) eigenvector for the chosen indices: the amplitude on
/// the subset {l_0 < ... < l_{k-1}} is det[omega_{j_a}^{l_b}], normalised.
/// Throws InputError on repeated, unsorted or out-of-range indices.
LiftedEigenpair lift_eigenvector(const EigenDecomposition& base, std::span<const int> indices);
/// Every lifted pair, in colex order of the index sets.
std::vector<LiftedEigenpair> lift_all(const EigenDecomposition& base, int k);

}  // namespace spinwedge
