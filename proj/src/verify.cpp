#include "spinwedge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <random>
#include <thread>

#include "spinwedge/combinadics.hpp"
#include "spinwedge/dynamics.hpp"
#include "spinwedge/errors.hpp"
#include "spinwedge/isomorphism.hpp"
#include "spinwedge/spin_system.hpp"
#include "spinwedge/wedge.hpp"

namespace spinwedge {

namespace {

constexpr int kOracleMaxVertices = 6;
constexpr int kOracleMaxK = 3;
// Laplacian eigenvalues counted as zero; the smallest nonzero Laplacian
// eigenvalue of the corpus graphs is far above this.
constexpr double kKernelThreshold = 1e-6;

class Recorder {
 public:
  explicit Recorder(std::string graph) : graph_(std::move(graph)) {}

  void add(std::string check, int k, double error, bool passed, std::string detail = {}) {
    records_.push_back({std::move(check), graph_, k, error, passed, std::move(detail)});
  }
  void within(std::string check, int k, double error, double tol) {
    add(std::move(check), k, error, std::isfinite(error) && error <= tol);
  }
  void spectra(std::string check, int k, const Spectrum& a, const Spectrum& b) {
    const auto cmp = compare_spectra(a, b);
    const double error = cmp.equal ? cmp.max_gap : std::numeric_limits<double>::infinity();
    std::string detail;
    if (!cmp.equal) {
      detail = "counts " + std::to_string(cmp.count_a) + " vs " + std::to_string(cmp.count_b) + ", " +
               std::to_string(cmp.unmatched_a.size() + cmp.unmatched_b.size()) + " unmatched values";
    }
    add(std::move(check), k, error, cmp.equal, std::move(detail));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::string graph_;
  std::vector<CheckRecord> records_;
};

double spectral_norm(const Spectrum& s) {
  if (s.size() == 0) return 0.0;
  return std::max(std::abs(s.min()), std::abs(s.max()));
}

Spectrum with_tol(const Spectrum& s, double tol) { return Spectrum(s.values(), tol); }

std::uint32_t name_hash(const std::string& name) {
  std::uint32_t h = 2166136261u;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 16777619u;
  return h;
}

// Components drawn from [-1, 1) via raw 53-bit draws, then normalised.
Eigen::VectorXcd random_state(std::mt19937_64& rng, Eigen::Index dim) {
  auto uniform = [&] { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; };
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = {uniform(), uniform()};
  return v / v.norm();
}

void check_dynamics(Recorder& rec, const NamedGraph& ng, const ModelSpec& spec, const VerifyOptions& options,
                    const std::string& suffix) {
  const Graph& g = ng.graph;
  const int n = g.num_vertices();
  if (n > kMaxOracleEvolutionSpins) return;
  const Propagator full(full_hamiltonian(g, spec));
  for (int k = 0; k <= n; ++k) {
    const Propagator block(block_hamiltonian(g, k, spec));
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(name_hash(ng.name)),
                      static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(spec.model)};
    std::mt19937_64 rng(seq);
    double worst = 0.0;
    double worst_norm = 0.0;
    for (int s = 0; s < options.random_states; ++s) {
      const Eigen::VectorXcd psi = random_state(rng, block.dim());
      const Eigen::VectorXcd psi_full = embed_block(psi, n, k);
      for (double t : options.times) {
        const Eigen::VectorXcd via_block = block.apply(psi, t);
        const Eigen::VectorXcd via_full = full.apply(psi_full, t);
        // leakage out of the sector counts as disagreement too
        const double deviation = (embed_block(via_block, n, k) - via_full).norm();
        worst = std::max(worst, deviation);
        worst_norm = std::max(worst_norm, std::abs(via_block.norm() - 1.0));
      }
    }
    rec.within("dynamics_block_vs_full" + suffix, k, worst, options.tol);
    rec.within("dynamics_unitarity" + suffix, k, worst_norm, kNormTol);
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

const CheckRecord* VerifyReport::first_failure() const {
  for (const auto& r : records)
    if (!r.passed) return &r;
  return nullptr;
}

std::vector<CheckSummary> VerifyReport::summaries() const {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t> index;
  for (const auto& r : records) {
    auto [it, inserted] = index.try_emplace(r.check, out.size());
    if (inserted) out.push_back({r.check});
    CheckSummary& s = out[it->second];
    ++s.evaluations;
    s.max_error = std::max(s.max_error, r.error);
    s.passed = s.passed && r.passed;
  }
  return out;
}

std::vector<CheckRecord> verify_graph(const NamedGraph& ng, const VerifyOptions& options) {
  const Graph& g = ng.graph;
  const int n = g.num_vertices();
  const double tol = options.tol;
  Recorder rec(ng.name);

  const ModelSpec xy{Model::XY, 0.0};
  const ModelSpec heis{Model::Heisenberg, 0.0};

  // Sector structure of the full Hamiltonian.
  std::vector<Spectrum> full_blocks_xy;
  std::vector<Spectrum> full_blocks_heis;
  try {
    full_blocks_xy = project_full_to_blocks(g, xy);
    full_blocks_heis = project_full_to_blocks(g, heis);
    rec.add("sector_commutation", -1, 0.0, true);
  } catch (const ConsistencyError& e) {
    rec.add("sector_commutation", -1, std::numeric_limits<double>::infinity(), false, e.what());
  }
  const Spectrum full_xy = with_tol(spectrum_of(full_hamiltonian(g, xy)), tol);
  const Spectrum full_heis = with_tol(spectrum_of(full_hamiltonian(g, heis)), tol);

  const EigenDecomposition single = eigh(adjacency(g));

  std::vector<WedgeGraph> wedges;
  wedges.reserve(static_cast<std::size_t>(n + 1));
  Spectrum union_xy({}, tol);
  Spectrum union_heis({}, tol);

  for (int k = 0; k <= n; ++k) {
    WedgeGraph w = build_wedge_graph(g, k);
    if (options.fault && options.fault->graph == ng.name && options.fault->k == k) {
      w = w.with_flipped_sign(options.fault->edge);
    }
    const SymMatrix a_wedge = wedge_adjacency(w);
    const SymMatrix l_wedge = wedge_laplacian(w);
    const SymMatrix c_wedge = signed_matrix(w);

    // Sector Hamiltonians (bit hops) against the wedge-graph matrices.
    const Spectrum block_xy = with_tol(spectrum_of(block_hamiltonian(g, k, xy)), tol);
    const Spectrum block_heis = with_tol(spectrum_of(block_hamiltonian(g, k, heis)), tol);
    rec.spectra("xy_block_vs_wedge_adjacency", k, block_xy, spectrum_of(a_wedge));
    rec.spectra("heis_block_vs_wedge_laplacian", k, block_heis, spectrum_of(l_wedge));
    if (!full_blocks_xy.empty()) {
      rec.spectra("xy_block_vs_full_sector", k, block_xy, full_blocks_xy[k]);
      rec.spectra("heis_block_vs_full_sector", k, block_heis, full_blocks_heis[k]);
    }
    union_xy = union_xy.merged(block_xy);
    union_heis = union_heis.merged(block_heis);

    // Laplacian: positive semidefinite, one zero mode per component.
    const Spectrum l_spec = spectrum_of(l_wedge);
    const double negativity = l_spec.size() ? std::max(0.0, -l_spec.min()) : 0.0;
    const auto zeros = static_cast<int>(std::count_if(l_spec.values().begin(), l_spec.values().end(),
                                                      [](double x) { return std::abs(x) <= kKernelThreshold; }));
    const int components = count_components(w.as_graph());
    rec.add("heis_positive_semidefinite", k, negativity, negativity <= tol);
    rec.add("heis_kernel_equals_components", k, std::abs(zeros - components), zeros == components,
            std::to_string(zeros) + " zero modes, " + std::to_string(components) + " components");

    // Signed matrix against the literal antisymmetrized tensor construction.
    if (n <= kOracleMaxVertices && k <= kOracleMaxK) {
      const double diff = c_wedge.max_abs_diff(alt_delta_oracle(g, k));
      rec.add("signed_vs_alt_oracle", k, diff, diff == 0.0);
    }

    // Spectral lift of the single-particle decomposition.
    const Spectrum c_spec = with_tol(spectrum_of(c_wedge), tol);
    rec.spectra("lift_spectrum_vs_signed", k, c_spec, lift_spectrum(single, k));
    double worst_residual = 0.0;
    for (const auto& pair : lift_all(single, k)) {
      worst_residual = std::max(worst_residual, residual(c_wedge, pair.vector, pair.value));
    }
    rec.within("lift_eigenvector_residual", k, worst_residual, tol * std::max(1.0, spectral_norm(c_spec)));

    // Uniform field: eigenvalues shift by B(N - 2k), eigenvectors stay.
    for (const ModelSpec& base : {xy, heis}) {
      const SymMatrix h0 = block_hamiltonian(g, k, base);
      const EigenDecomposition e0 = eigh(h0);
      for (double field : options.fields) {
        const ModelSpec shifted_spec{base.model, field};
        const SymMatrix h = block_hamiltonian(g, k, shifted_spec);
        const double shift = field_shift(field, n, k);
        Spectrum expected(std::vector<double>(e0.values.data(), e0.values.data() + e0.values.size()), tol);
        rec.spectra("field_shift_spectrum", k, expected.shifted(shift), spectrum_of(h));
        double worst = 0.0;
        for (Eigen::Index j = 0; j < e0.dim(); ++j) {
          worst = std::max(worst, residual(h, e0.vectors.col(j), e0.values(j) + shift));
        }
        rec.within("field_shift_eigenvectors", k, worst, tol * std::max(1.0, spectral_norm(spectrum_of(h))));
      }
    }

    if (ng.family == Family::Path) {
      rec.spectra("path_closed_form_spectrum", k, block_xy, xy_path_spectrum(n, k));
      rec.add("path_signs_positive", k, static_cast<double>(w.num_negative_edges()), w.num_negative_edges() == 0);
      const Spectrum closed_values = path_spectrum(n);
      EigenDecomposition closed_single{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
      for (int j = 0; j < n; ++j) {
        closed_single.values(j) = closed_values.values()[j];
        closed_single.vectors.col(j) = path_eigenvector(n, j);
      }
      double worst = 0.0;
      for (const auto& pair : lift_all(closed_single, k)) {
        worst = std::max(worst, residual(c_wedge, pair.vector, pair.value));
      }
      rec.within("path_closed_form_eigenvectors", k, worst, tol * std::max(1.0, spectral_norm(c_spec)));
    }

    if (ng.family == Family::Complete) {
      rec.spectra("johnson_spectrum", k, with_tol(spectrum_of(a_wedge), tol), johnson_spectrum(n, k));
      const std::vector<int> degrees = w.as_graph().degrees();
      const bool regular = std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == k * (n - k); });
      rec.add("johnson_degree", k, regular ? 0.0 : 1.0, regular);
    }

    wedges.push_back(std::move(w));
  }

  rec.spectra("xy_blocks_union_vs_full", -1, union_xy, full_xy);
  rec.spectra("heis_blocks_union_vs_full", -1, union_heis, full_heis);

  if (ng.family == Family::Path) {
    double worst = 0.0;
    const SymMatrix a = adjacency(g);
    const Spectrum closed_values = path_spectrum(n);
    for (int j = 0; j < n; ++j) {
      worst = std::max(worst, residual(a, path_eigenvector(n, j), closed_values.values()[j]));
    }
    rec.within("path_single_particle_residual", -1, worst, tol * 2.0);
  }

  if (ng.family == Family::Complete) {
    rec.spectra("complete_xy_closed_form_vs_full", -1, with_tol(complete_graph_spectra(n, xy), tol), full_xy);
    rec.spectra("complete_heis_closed_form_vs_full", -1, with_tol(complete_graph_spectra(n, heis), tol), full_heis);
    double worst = 0.0;
    for (double v : full_heis.distinct()) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int j = 0; j <= n; ++j) nearest = std::min(nearest, std::abs(v - j * (n + 1 - j)));
      worst = std::max(worst, nearest);
    }
    rec.within("complete_heis_values", -1, worst, tol);
    if (n % 2 == 0) {
      rec.within("complete_xy_ground_energy", -1, std::abs(full_xy.min() + n / 2.0), tol);
    }
  }

  for (int k = 0; 2 * k <= n; ++k) {
    const bool ok = find_isomorphism(wedges[k].as_graph(), wedges[n - k].as_graph()).has_value();
    rec.add("complement_isomorphism", k, ok ? 0.0 : 1.0, ok);
  }

  check_dynamics(rec, ng, xy, options, "");
  check_dynamics(rec, ng, heis, options, "");

  return rec.take();
}

int default_thread_count() {
  if (const char* env = std::getenv("SPINWEDGE_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerifyReport run_verification(const std::vector<NamedGraph>& corpus, const VerifyOptions& options) {
  if (options.fault) {
    const auto it = std::find_if(corpus.begin(), corpus.end(),
                                 [&](const NamedGraph& g) { return g.name == options.fault->graph; });
    if (it == corpus.end()) throw InputError("fault target '" + options.fault->graph + "' is not in the corpus");
    const auto w = build_wedge_graph(it->graph, options.fault->k);
    if (options.fault->edge >= w.signed_edges().size()) {
      throw InputError("fault edge index out of range for " + it->name);
    }
  }

  std::vector<std::vector<CheckRecord>> per_graph(corpus.size());
  const int threads = std::clamp(options.threads > 0 ? options.threads : default_thread_count(), 1,
                                 std::max(1, static_cast<int>(corpus.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(corpus.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        per_graph[i] = verify_graph(corpus[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerifyReport report;
  for (auto& records : per_graph) {
    report.records.insert(report.records.end(), std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
  }
  return report;
}

}  // namespace spinwedge
