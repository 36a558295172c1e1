#pragma once

// Acceptance suite gating a build: pinned analytic values (zeros, extrema,
// route consistency, positive definiteness, convergence rate, disk-union
// exactness, curve sign patterns) plus, at the full level, seeded Monte
// Carlo comparisons (volume variance, finite-window covariance, CLT
// diagnostics, interval laws).

#include <cstdint>
#include <string>
#include <vector>

namespace boolcov {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured vs expected, failing clauses marked
  double seconds = 0.0;
};

struct VerifyOptions {
  bool full = false;          // adds the Monte Carlo criteria
  std::uint64_t seed = 12345;
  int threads = 0;            // 0 = BOOLCOV_THREADS, then hardware
};

// Runs the suite in criterion order. Quick level covers the analytic-only
// criteria; full adds the simulator-backed ones.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt = {});

int count_failures(const std::vector<CriterionResult>& results);

// "[PASS] 03 sigma-extrema (1.2s) detail"
std::string criterion_line(const CriterionResult& r);

} // namespace boolcov
