#include "spinwedge/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "json.hpp"
#include "spinwedge/combinadics.hpp"
#include "spinwedge/errors.hpp"

namespace spinwedge {

Spectrum::Spectrum(std::vector<double> values, double tol) : values_(std::move(values)), tol_(tol) {
  std::sort(values_.begin(), values_.end());
}

double Spectrum::min() const {
  if (values_.empty()) throw InputError("empty spectrum has no minimum");
  return values_.front();
}

double Spectrum::max() const {
  if (values_.empty()) throw InputError("empty spectrum has no maximum");
  return values_.back();
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

std::vector<std::pair<double, std::size_t>> Spectrum::collapsed() const {
  std::vector<std::pair<double, std::size_t>> out;
  for (double v : values_) {
    if (!out.empty() && std::abs(v - out.back().first) <= tol_) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

std::vector<double> Spectrum::distinct() const {
  std::vector<double> out;
  for (const auto& [v, c] : collapsed()) out.push_back(v);
  return out;
}

Spectrum Spectrum::shifted(double offset) const {
  auto v = values_;
  for (double& x : v) x += offset;
  return Spectrum(std::move(v), tol_);
}

Spectrum Spectrum::merged(const Spectrum& other) const {
  auto v = values_;
  v.insert(v.end(), other.values_.begin(), other.values_.end());
  return Spectrum(std::move(v), tol_);
}

std::string Spectrum::to_json() const {
  nlohmann::json j;
  j["values"] = values_;
  j["multiplicity_collapsed"] = nlohmann::json::array();
  for (const auto& [v, c] : collapsed()) j["multiplicity_collapsed"].push_back({v, c});
  j["tol"] = tol_;
  return j.dump();
}

SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b) {
  SpectrumComparison r;
  r.count_a = a.size();
  r.count_b = b.size();
  const double tol = a.tol();
  const auto& x = a.values();
  const auto& y = b.values();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const double gap = std::abs(x[i] - y[j]);
    if (gap <= tol) {
      r.max_gap = std::max(r.max_gap, gap);
      ++i;
      ++j;
    } else if (x[i] < y[j]) {
      r.unmatched_a.push_back(x[i++]);
    } else {
      r.unmatched_b.push_back(y[j++]);
    }
  }
  r.unmatched_a.insert(r.unmatched_a.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  r.unmatched_b.insert(r.unmatched_b.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
  r.equal = r.count_a == r.count_b && r.unmatched_a.empty() && r.unmatched_b.empty();
  return r;
}

EigenDecomposition eigh(const SymMatrix& m) {
  if (!m.dense().allFinite()) throw InputError("matrix has non-finite entries");
  if (m.dim() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense());
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum spectrum_of(const SymMatrix& m) {
  if (!m.dense().allFinite()) throw InputError("matrix has non-finite entries");
  if (m.dim() == 0) return Spectrum{};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double residual(const SymMatrix& m, const Eigen::VectorXd& v, double value) {
  return (m.dense() * v - value * v).norm();
}

double max_residual(const SymMatrix& m, const EigenDecomposition& eig) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < eig.dim(); ++j) {
    worst = std::max(worst, residual(m, eig.vectors.col(j), eig.values(j)));
  }
  return worst;
}

double orthonormality_error(const Eigen::MatrixXd& vectors) {
  if (vectors.size() == 0) return 0.0;
  const Eigen::MatrixXd gram = vectors.transpose() * vectors;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

Spectrum path_spectrum(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[j] = -2.0 * std::cos(std::numbers::pi * (j + 1) / (n + 1));
  return Spectrum(std::move(v));
}

Eigen::VectorXd path_eigenvector(int n, int j) {
  if (n < 1 || j < 0 || j >= n) throw InputError("path eigenvector index out of range");
  Eigen::VectorXd v(n);
  const double norm = std::sqrt(2.0 / (n + 1));
  // The plain sine vector belongs to +2cos(...) = lambda_{N-1-j}; the
  // alternating sign moves it to lambda_j.
  for (int l = 0; l < n; ++l) {
    const double sign = l % 2 == 0 ? 1.0 : -1.0;
    v(l) = sign * norm * std::sin(std::numbers::pi * (j + 1) * (l + 1) / (n + 1));
  }
  return v;
}

namespace {

Spectrum sum_lift(std::span<const double> single, int k) {
  const int n = static_cast<int>(single.size());
  if (k < 0 || k > n) throw InputError("k out of range for lift");
  std::vector<double> out;
  out.reserve(binomial(n, k));
  for (const KSubset& s : all_subsets(n, k)) {
    double mu = 0.0;
    for (int j : s.elements) mu += single[j];
    out.push_back(mu);
  }
  return Spectrum(std::move(out));
}

}  // namespace

Spectrum xy_path_spectrum(int n, int k) {
  const auto single = path_spectrum(n).values();
  return sum_lift(single, k);
}

Spectrum johnson_spectrum(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw InputError("Johnson graph needs 0 <= k <= N");
  std::vector<double> out;
  const int top = std::min(k, n - k);
  for (int j = 0; j <= top; ++j) {
    const double value = static_cast<double>(k * (n - k) - j * (n + 1 - j));
    const std::uint64_t mult = binomial(n, j) - (j > 0 ? binomial(n, j - 1) : 0);
    out.insert(out.end(), mult, value);
  }
  return Spectrum(std::move(out));
}

Spectrum complete_graph_spectra(int n, const ModelSpec& spec) {
  if (n < 1) throw InputError("complete graph needs N >= 1");
  spec.validate();
  std::vector<double> out;
  for (int k = 0; k <= n; ++k) {
    const double degree = static_cast<double>(k * (n - k));
    const Spectrum adjacency_values = johnson_spectrum(n, k);
    for (double a : adjacency_values.values()) {
      const double block_value = spec.model == Model::XY ? a : degree - a;
      out.push_back(block_value + field_shift(spec.field_B, n, k));
    }
  }
  return Spectrum(std::move(out));
}

Spectrum lift_spectrum(const EigenDecomposition& base, int k) {
  return sum_lift(std::span<const double>(base.values.data(), static_cast<std::size_t>(base.values.size())), k);
}

LiftedEigenpair lift_eigenvector(const EigenDecomposition& base, std::span<const int> indices) {
  const int n = static_cast<int>(base.dim());
  const int k = static_cast<int>(indices.size());
  for (int a = 0; a < k; ++a) {
    if (indices[a] < 0 || indices[a] >= n) throw InputError("lift index out of range");
    if (a > 0 && indices[a - 1] >= indices[a]) {
      throw InputError("lift indices must be distinct and strictly increasing");
    }
  }
  LiftedEigenpair pair;
  pair.indices.assign(indices.begin(), indices.end());
  for (int j : indices) pair.value += base.values(j);

  const std::uint64_t dim = binomial(n, k);
  pair.vector.resize(static_cast<Eigen::Index>(dim));
  Eigen::MatrixXd minor(k, k);
  for (std::uint64_t r = 0; r < dim; ++r) {
    const auto sites = unrank_subset(r, n, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) minor(a, b) = base.vectors(sites[b], indices[a]);
    pair.vector(static_cast<Eigen::Index>(r)) = k == 0 ? 1.0 : minor.determinant();
  }
  const double norm = pair.vector.norm();
  if (norm == 0.0) throw ConsistencyError("lifted determinant vector vanished");
  pair.vector /= norm;
  return pair;
}

std::vector<LiftedEigenpair> lift_all(const EigenDecomposition& base, int k) {
  const int n = static_cast<int>(base.dim());
  if (k < 0 || k > n) throw InputError("k out of range for lift");
  std::vector<LiftedEigenpair> out;
  for (const KSubset& s : all_subsets(n, k)) out.push_back(lift_eigenvector(base, s.elements));
  return out;
}

}  // namespace spinwedge
