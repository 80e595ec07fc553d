#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinwedge/corpus.hpp"
#include "spinwedge/spectra.hpp"

namespace spinwedge {

/// Negates the sign of one wedge edge before the checks run.
struct SignFault {
  std::string graph;  // corpus entry name
  int k = 1;
  std::size_t edge = 0;
};

struct VerifyOptions {
  double tol = kSpectrumTol;
  std::uint64_t seed = 0;
  int random_states = 20;
  std::vector<double> times{0.5, 1.0, 5.0};
  std::vector<double> fields{0.5, -1.3};
  std::optional<SignFault> fault;
  /// 0 means: SPINWEDGE_THREADS if set, else hardware concurrency.
  int threads = 0;
};

struct CheckRecord {
  std::string check;
  std::string graph;
  int k = -1;  // -1 when the check is not per-sector
  double error = 0.0;
  bool passed = true;
  std::string detail;
};

struct CheckSummary {
  std::string check;
  std::size_t evaluations = 0;
  double max_error = 0.0;
  bool passed = true;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  bool passed() const;
  const CheckRecord* first_failure() const;
  /// One entry per check name, in first-seen order.
  std::vector<CheckSummary> summaries() const;
};

/// All checks for one graph. Checks: sector commutation, XY/Heisenberg block
/// vs wedge adjacency/Laplacian, sector union vs full spectrum, Laplacian
/// positivity and kernel dimension, signed matrix vs the tensor oracle
/// (N <= 6, k <= 3), lifted spectrum and eigenvector residuals, field
/// shift, complement isomorphism, block vs full dynamics, and the family
/// closed forms for paths and complete graphs.
std::vector<CheckRecord> verify_graph(const NamedGraph& g, const VerifyOptions& options);

/// verify_graph over the corpus, in parallel, merged in corpus order.
VerifyReport run_verification(const std::vector<NamedGraph>& corpus, const VerifyOptions& options);

/// Thread count from SPINWEDGE_THREADS, else hardware concurrency (>= 1).
int default_thread_count();

}  // namespace spinwedge
