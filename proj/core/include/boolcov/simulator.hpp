#pragma once

// Seeded Monte Carlo for stationary Boolean models: one counter-based RNG
// stream per replicate, plus-sampled germ scenes in the dilated window,
// exact functionals (d = 1 interval unions, d = 2 disk unions, d >= 3
// volume point sampling), moment estimates and normality diagnostics.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolcov/analytic.hpp"
#include "boolcov/disk_union.hpp"
#include "boolcov/geometry.hpp"

namespace boolcov {

// xoshiro256++ seeded through SplitMix64 from (master_seed, stream).
// Distinct streams are statistically independent, so replicates can be
// evaluated on any thread in any order with identical results.
class ReplicateRng {
public:
  ReplicateRng(std::uint64_t master_seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double uniform01();  // [0, 1), 53-bit mantissa
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  long poisson(double mean);  // inversion below 10, transformed rejection above
  double normal();            // Box-Muller

private:
  std::uint64_t s_[4];
};

// Configuration rejected with the offending field named.
struct ConfigInvalid : std::invalid_argument {
  std::string field;
  ConfigInvalid(const std::string& fld, const std::string& what)
      : std::invalid_argument(fld + ": " + what), field(fld) {}
};

struct SimulationConfig {
  ModelParams params;
  Window window = Window::cube(2, 10.0);
  long replicates = 2;
  std::uint64_t master_seed = 0;
  double edge_dilation = 0.0;  // 0 = grain diameter
  int threads = 0;             // 0 = BOOLCOV_THREADS, then hardware
  long volume_points = 1000000;  // d >= 3 sample budget per replicate
  int max_degenerate_retries = 3;

  double dilation() const;  // resolved edge dilation
  void validate() const;    // throws ConfigInvalid
};

// Germs of one replicate: centers flattened row-major (dim * size), one
// radius per germ, sampled uniformly in the window dilated by
// cfg.dilation(). Germs farther than their radius from the window cannot
// touch it, so the clipped union is distributed exactly as for the
// stationary model.
struct GermScene {
  int dim = 0;
  std::vector<double> centers;
  std::vector<double> radii;

  std::size_t size() const { return radii.size(); }
  // Drops germs whose grain cannot intersect the window. The clipped
  // functionals are unchanged.
  GermScene restricted_to(const Window& w) const;
};

GermScene sample_scene(const SimulationConfig& cfg, long replicate_index);

// Planar views.
std::vector<Disk> scene_disks(const GermScene& scene);
Rect window_rect(const Window& w);

// (V_0, V_1) of the union of intervals [c - r, c + r] clipped to
// [lo, hi]: component count and covered length.
std::array<double, 2> interval_union_functionals(const GermScene& scene,
                                                 double lo, double hi);

struct SimulationRun {
  SimulationConfig config;
  std::vector<std::string> functional_names;  // "V0".. low to high index
  std::vector<std::vector<double>> samples;   // [functional][replicate]
  std::vector<double> mean;
  std::vector<std::vector<double>> covariance;  // unbiased
  double volume_sampling_se = 0.0;  // d >= 3: per-replicate point-sampling SE bound

  int functionals() const { return static_cast<int>(samples.size()); }
};

// Evaluates every replicate (parallel, reproducible bit for bit across
// thread counts) and aggregates moments. Degenerate planar configurations
// are retried with a seeded 1e-7-relative center perturbation before the
// exception propagates.
SimulationRun run_simulation(const SimulationConfig& cfg);

struct NormalityDiagnostics {
  std::string name;
  double skewness = 0.0;         // m3 / m2^{3/2}
  double excess_kurtosis = 0.0;  // m4 / m2^2 - 3
  // Standardized sample vs N(0, 1). Integer-valued samples are compared
  // at cell edges with the half-integer continuity correction, so the
  // statistic measures departure from normality rather than discreteness.
  double ks_distance = 0.0;
};

NormalityDiagnostics sample_diagnostics(std::string name,
                                        const std::vector<double>& xs);
std::vector<NormalityDiagnostics> normality_report(const SimulationRun& run);

// Monte Carlo standard errors of the unbiased sample variance and
// covariance, from fourth-moment estimates.
double variance_standard_error(const std::vector<double>& xs);
double covariance_standard_error(const std::vector<double>& xs,
                                 const std::vector<double>& ys);

// One row per replicate: replicate_index, V_0..V_d.
void write_replicates_csv(const SimulationRun& run, std::ostream& out);

// Means, covariance, diagnostics, seed and config echo with its hash.
std::string run_summary_json(const SimulationRun& run);

std::string config_to_json(const SimulationConfig& cfg);
SimulationConfig config_from_json(const std::string& text);

} // namespace boolcov
