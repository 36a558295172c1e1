#include "boolcov/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "boolcov/digest.hpp"
#include "boolcov/parallel.hpp"

namespace boolcov {

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

ReplicateRng::ReplicateRng(std::uint64_t master_seed, std::uint64_t stream) {
  std::uint64_t x = master_seed;
  std::uint64_t y = splitmix64(x) + stream;
  for (auto& w : s_) w = splitmix64(y);
  if (!(s_[0] | s_[1] | s_[2] | s_[3])) s_[0] = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t ReplicateRng::next_u64() {
  const std::uint64_t result = rotl64(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl64(s_[3], 45);
  return result;
}

double ReplicateRng::uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

long ReplicateRng::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    const double lim = std::exp(-mean);
    long k = 0;
    double prod = uniform01();
    while (prod > lim) {
      ++k;
      prod *= uniform01();
    }
    return k;
  }
  // Transformed rejection with squeeze (Hoermann's PTRS), valid for
  // mean >= 10.
  const double llam = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double U = uniform01() - 0.5;
    const double V = uniform01();
    const double us = 0.5 - std::abs(U);
    const double kf = std::floor((2.0 * a / us + b) * U + mean + 0.43);
    if (us >= 0.07 && V <= vr) return static_cast<long>(kf);
    if (kf < 0.0 || (us < 0.013 && V > us)) continue;
    if (std::log(V) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        kf * llam - mean - std::lgamma(kf + 1.0))
      return static_cast<long>(kf);
  }
}

double ReplicateRng::normal() {
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(TWO_PI * u2);
}

double SimulationConfig::dilation() const {
  return edge_dilation > 0.0 ? edge_dilation
                             : 2.0 * params.grain.max_radius();
}

void SimulationConfig::validate() const {
  try {
    params.validate();
  } catch (const std::exception& e) {
    throw ConfigInvalid("params", e.what());
  }
  try {
    window.validate();
  } catch (const std::exception& e) {
    throw ConfigInvalid("window", e.what());
  }
  if (window.dim != params.grain.dim)
    throw ConfigInvalid("window", "dimension differs from the grain's");
  if (replicates < 2)
    throw ConfigInvalid("replicates", "need at least 2");
  if (!std::isfinite(edge_dilation) || edge_dilation < 0.0)
    throw ConfigInvalid("edge_dilation", "must be finite and >= 0");
  if (edge_dilation > 0.0 && edge_dilation < params.grain.max_radius())
    throw ConfigInvalid("edge_dilation",
                        "must be at least the largest grain radius");
  if (params.grain.dim == 2 && window.shape != Window::Shape::box)
    throw ConfigInvalid("window", "planar runs need a box window");
  if (volume_points < 1)
    throw ConfigInvalid("volume_points", "must be >= 1");
  if (max_degenerate_retries < 0)
    throw ConfigInvalid("max_degenerate_retries", "must be >= 0");
  if (threads < 0) throw ConfigInvalid("threads", "must be >= 0");
}

namespace {

// Axis-aligned bounds of the window itself.
void window_bounds(const Window& w, std::vector<double>& lo,
                   std::vector<double>& hi) {
  lo.assign(w.dim, 0.0);
  hi.assign(w.dim, 0.0);
  if (w.shape == Window::Shape::box) {
    for (int a = 0; a < w.dim; ++a) hi[a] = w.sides[a];
  } else {
    for (int a = 0; a < w.dim; ++a) {
      lo[a] = -w.radius;
      hi[a] = w.radius;
    }
  }
}

double distance_to_window(const Window& w, const double* p) {
  if (w.shape == Window::Shape::box) {
    double s2 = 0.0;
    for (int a = 0; a < w.dim; ++a) {
      double d = std::max({0.0, -p[a], p[a] - w.sides[a]});
      s2 += d * d;
    }
    return std::sqrt(s2);
  }
  double n2 = 0.0;
  for (int a = 0; a < w.dim; ++a) n2 += p[a] * p[a];
  return std::max(0.0, std::sqrt(n2) - w.radius);
}

// Steiner volume of W dilated by a ball of radius rho.
double dilated_volume(const Window& w, double rho) {
  double v = 0.0;
  for (int k = 0; k <= w.dim; ++k)
    v += w.intrinsic_volume(k) * kappa(w.dim - k) * std::pow(rho, w.dim - k);
  return v;
}

double draw_radius(const GrainSpec& grain, ReplicateRng& rng) {
  if (grain.deterministic()) return grain.radii[0].r;
  const double u = rng.uniform01();
  double acc = 0.0;
  for (const auto& atom : grain.radii) {
    acc += atom.p;
    if (u < acc) return atom.r;
  }
  return grain.radii.back().r;
}

GermScene sample_with(const SimulationConfig& cfg, ReplicateRng& rng) {
  const GrainSpec& grain = cfg.params.grain;
  const int d = grain.dim;
  const double dil = cfg.dilation();

  std::vector<double> lo, hi;
  window_bounds(cfg.window, lo, hi);
  for (int a = 0; a < d; ++a) {
    lo[a] -= dil;
    hi[a] += dil;
  }

  const long n = rng.poisson(cfg.params.gamma * dilated_volume(cfg.window, dil));
  GermScene scene;
  scene.dim = d;
  scene.centers.reserve(static_cast<std::size_t>(n) * d);
  scene.radii.reserve(n);
  std::vector<double> pt(d);
  for (long i = 0; i < n; ++i) {
    // Rejection from the bounding box into W dilated by the ball.
    for (;;) {
      for (int a = 0; a < d; ++a) pt[a] = rng.uniform(lo[a], hi[a]);
      if (distance_to_window(cfg.window, pt.data()) <= dil) break;
    }
    scene.centers.insert(scene.centers.end(), pt.begin(), pt.end());
    scene.radii.push_back(draw_radius(grain, rng));
  }
  return scene;
}

} // namespace

GermScene sample_scene(const SimulationConfig& cfg, long replicate_index) {
  cfg.validate();
  ReplicateRng rng(cfg.master_seed, static_cast<std::uint64_t>(replicate_index));
  return sample_with(cfg, rng);
}

GermScene GermScene::restricted_to(const Window& w) const {
  GermScene out;
  out.dim = dim;
  for (std::size_t i = 0; i < size(); ++i) {
    const double* c = &centers[i * dim];
    if (distance_to_window(w, c) > radii[i]) continue;
    out.centers.insert(out.centers.end(), c, c + dim);
    out.radii.push_back(radii[i]);
  }
  return out;
}

std::vector<Disk> scene_disks(const GermScene& scene) {
  if (scene.dim != 2)
    throw std::invalid_argument("scene_disks: scene is not planar");
  std::vector<Disk> disks;
  disks.reserve(scene.size());
  for (std::size_t i = 0; i < scene.size(); ++i)
    disks.push_back({{scene.centers[2 * i], scene.centers[2 * i + 1]},
                     scene.radii[i]});
  return disks;
}

Rect window_rect(const Window& w) {
  if (w.dim != 2 || w.shape != Window::Shape::box)
    throw std::invalid_argument("window_rect: needs a planar box window");
  return {0.0, 0.0, w.sides[0], w.sides[1]};
}

std::array<double, 2> interval_union_functionals(const GermScene& scene,
                                                 double lo, double hi) {
  if (scene.dim != 1)
    throw std::invalid_argument("interval_union_functionals: dim != 1");
  std::vector<std::pair<double, double>> runs;
  runs.reserve(scene.size());
  for (std::size_t i = 0; i < scene.size(); ++i) {
    const double a = scene.centers[i] - scene.radii[i];
    const double b = scene.centers[i] + scene.radii[i];
    if (b <= lo || a >= hi) continue;
    runs.emplace_back(a, b);
  }
  std::sort(runs.begin(), runs.end());
  double components = 0.0, length = 0.0;
  std::size_t i = 0;
  while (i < runs.size()) {
    double a = runs[i].first, b = runs[i].second;
    ++i;
    while (i < runs.size() && runs[i].first <= b) {
      b = std::max(b, runs[i].second);
      ++i;
    }
    const double cl = std::max(a, lo), ch = std::min(b, hi);
    if (ch > cl) {
      components += 1.0;
      length += ch - cl;
    }
  }
  return {components, length};
}

namespace {

// Bucket grid over germ centers for point-coverage queries (d >= 3).
class CenterGrid {
public:
  CenterGrid(const GermScene& scene, double cell)
      : scene_(scene), d_(scene.dim), h_(cell), lo_(d_), hi_(d_), it_(d_) {
    for (std::size_t i = 0; i < scene.size(); ++i)
      buckets_[key_of(&scene.centers[i * d_])].push_back(
          static_cast<int>(i));
  }

  bool covered(const double* p, double reach) {
    for (int a = 0; a < d_; ++a) {
      lo_[a] = static_cast<long>(std::floor((p[a] - reach) / h_));
      hi_[a] = static_cast<long>(std::floor((p[a] + reach) / h_));
      it_[a] = lo_[a];
    }
    for (;;) {
      auto found = buckets_.find(key_cells(it_.data()));
      if (found != buckets_.end()) {
        for (int idx : found->second) {
          const double* c = &scene_.centers[static_cast<std::size_t>(idx) * d_];
          const double r = scene_.radii[idx];
          double s2 = 0.0;
          for (int a = 0; a < d_; ++a) {
            const double dx = p[a] - c[a];
            s2 += dx * dx;
          }
          if (s2 <= r * r) return true;
        }
      }
      int a = 0;
      while (a < d_ && ++it_[a] > hi_[a]) {
        it_[a] = lo_[a];
        ++a;
      }
      if (a == d_) return false;
    }
  }

private:
  std::uint64_t key_of(const double* p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int a = 0; a < d_; ++a)
      mix(h, static_cast<std::uint64_t>(
                 static_cast<std::int64_t>(std::floor(p[a] / h_))));
    return h;
  }
  std::uint64_t key_cells(const long* c) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int a = 0; a < d_; ++a)
      mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(c[a])));
    return h;
  }
  static void mix(std::uint64_t& h, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ULL;
    }
  }

  const GermScene& scene_;
  int d_;
  double h_;
  std::vector<long> lo_, hi_, it_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

long strata_per_axis(const SimulationConfig& cfg) {
  const double m =
      std::pow(static_cast<double>(cfg.volume_points),
               1.0 / cfg.params.grain.dim);
  return std::max<long>(1, static_cast<long>(std::floor(m + 1e-9)));
}

// Covered volume inside the window by one stratified point per cell of the
// window's bounding box.
double sampled_volume(const SimulationConfig& cfg, const GermScene& scene,
                      ReplicateRng& rng) {
  const int d = scene.dim;
  std::vector<double> lo, hi;
  window_bounds(cfg.window, lo, hi);
  const long m = strata_per_axis(cfg);

  double rmax = 0.0;
  for (double r : scene.radii) rmax = std::max(rmax, r);
  CenterGrid grid(scene, std::max(rmax, 1e-30));

  double bbox_volume = 1.0;
  for (int a = 0; a < d; ++a) bbox_volume *= hi[a] - lo[a];

  const bool ball = cfg.window.shape == Window::Shape::ball;
  const double R2 = cfg.window.radius * cfg.window.radius;

  std::vector<long> cell(d, 0);
  std::vector<double> pt(d);
  long total = 1;
  for (int a = 0; a < d; ++a) total *= m;
  long count = 0;
  for (long i = 0; i < total; ++i) {
    for (int a = 0; a < d; ++a)
      pt[a] = lo[a] + (cell[a] + rng.uniform01()) * (hi[a] - lo[a]) / m;
    bool inside = true;
    if (ball) {
      double n2 = 0.0;
      for (int a = 0; a < d; ++a) n2 += pt[a] * pt[a];
      inside = n2 <= R2;
    }
    if (inside && rmax > 0.0 && grid.covered(pt.data(), rmax)) ++count;
    int a = 0;
    while (a < d && ++cell[a] == m) {
      cell[a] = 0;
      ++a;
    }
  }
  return bbox_volume * static_cast<double>(count) / static_cast<double>(total);
}

Functionals planar_replicate(const SimulationConfig& cfg,
                             const GermScene& scene, ReplicateRng& rng) {
  const Rect win = window_rect(cfg.window);
  std::vector<Disk> disks;
  disks.reserve(scene.size());
  for (std::size_t i = 0; i < scene.size(); ++i) {
    const double cx = scene.centers[2 * i];
    const double cy = scene.centers[2 * i + 1];
    const double r = scene.radii[i];
    if (cx + r < win.x0 || cx - r > win.x1 || cy + r < win.y0 ||
        cy - r > win.y1)
      continue;
    disks.push_back({{cx, cy}, r});
  }
  for (int attempt = 0;; ++attempt) {
    try {
      return disk_union_functionals(disks, win);
    } catch (const DegenerateConfiguration& e) {
      if (attempt >= cfg.max_degenerate_retries) throw;
      auto nudge = [&rng](Disk& disk) {
        const double ang = rng.uniform(0.0, TWO_PI);
        disk.c.x += 1e-7 * disk.r * std::cos(ang);
        disk.c.y += 1e-7 * disk.r * std::sin(ang);
      };
      if (e.disk >= 0 && e.disk < static_cast<int>(disks.size()))
        nudge(disks[e.disk]);
      else
        for (auto& disk : disks) nudge(disk);
    }
  }
}

} // namespace

SimulationRun run_simulation(const SimulationConfig& cfg) {
  cfg.validate();
  const int d = cfg.params.grain.dim;
  const int nf = d <= 2 ? d + 1 : 1;
  const long n = cfg.replicates;

  SimulationRun run;
  run.config = cfg;
  if (d <= 2)
    for (int i = 0; i <= d; ++i)
      run.functional_names.push_back("V" + std::to_string(i));
  else
    run.functional_names.push_back("V" + std::to_string(d));
  run.samples.assign(nf, std::vector<double>(n, 0.0));

  double wlo = 0.0, whi = 0.0;
  if (d == 1) {
    if (cfg.window.shape == Window::Shape::box)
      whi = cfg.window.sides[0];
    else {
      wlo = -cfg.window.radius;
      whi = cfg.window.radius;
    }
  }
  if (d >= 3) {
    std::vector<double> lo, hi;
    window_bounds(cfg.window, lo, hi);
    double bbox_volume = 1.0;
    for (int a = 0; a < d; ++a) bbox_volume *= hi[a] - lo[a];
    double total = 1.0;
    for (int a = 0; a < d; ++a) total *= static_cast<double>(strata_per_axis(cfg));
    run.volume_sampling_se = bbox_volume * 0.5 / std::sqrt(total);
  }

  parallel_for(n, cfg.threads, [&](long rep) {
    ReplicateRng rng(cfg.master_seed, static_cast<std::uint64_t>(rep));
    const GermScene scene = sample_with(cfg, rng);
    if (d == 1) {
      const auto v = interval_union_functionals(scene, wlo, whi);
      run.samples[0][rep] = v[0];
      run.samples[1][rep] = v[1];
    } else if (d == 2) {
      const Functionals f = planar_replicate(cfg, scene, rng);
      run.samples[0][rep] = f.euler;
      run.samples[1][rep] = f.half_perimeter;
      run.samples[2][rep] = f.area;
    } else {
      run.samples[0][rep] = sampled_volume(cfg, scene, rng);
    }
  });

  run.mean.assign(nf, 0.0);
  for (int f = 0; f < nf; ++f) {
    double s = 0.0;
    for (double v : run.samples[f]) s += v;
    run.mean[f] = s / static_cast<double>(n);
  }
  run.covariance.assign(nf, std::vector<double>(nf, 0.0));
  for (int i = 0; i < nf; ++i)
    for (int j = i; j < nf; ++j) {
      double s = 0.0;
      for (long r = 0; r < n; ++r)
        s += (run.samples[i][r] - run.mean[i]) *
             (run.samples[j][r] - run.mean[j]);
      run.covariance[i][j] = run.covariance[j][i] =
          s / static_cast<double>(n - 1);
    }
  return run;
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / 1.4142135623730951); }

void central_moments(const std::vector<double>& xs, double& mean, double& m2,
                     double& m3, double& m4) {
  const double n = static_cast<double>(xs.size());
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  m2 = m3 = m4 = 0.0;
  for (double x : xs) {
    const double dx = x - mean;
    const double dx2 = dx * dx;
    m2 += dx2;
    m3 += dx2 * dx;
    m4 += dx2 * dx2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
}

} // namespace

NormalityDiagnostics sample_diagnostics(std::string name,
                                        const std::vector<double>& xs) {
  if (xs.size() < 8)
    throw std::invalid_argument("sample_diagnostics: too few samples");
  const double n = static_cast<double>(xs.size());
  double mean, m2, m3, m4;
  central_moments(xs, mean, m2, m3, m4);

  NormalityDiagnostics d;
  d.name = std::move(name);
  if (m2 > 0.0) {
    d.skewness = m3 / std::pow(m2, 1.5);
    d.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    const double sd = std::sqrt(m2 * n / (n - 1.0));
    bool lattice = true;
    for (double x : xs) {
      if (std::rint(x) != x) {
        lattice = false;
        break;
      }
    }
    double ks = 0.0;
    if (!lattice) {
      std::vector<double> z(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) z[i] = (xs[i] - mean) / sd;
      std::sort(z.begin(), z.end());
      for (std::size_t i = 0; i < z.size(); ++i) {
        const double F = normal_cdf(z[i]);
        ks = std::max(ks, std::max(F - static_cast<double>(i) / n,
                                   static_cast<double>(i + 1) / n - F));
      }
    } else {
      // Integer-valued sample: the empirical CDF only moves at lattice
      // points, where the plain statistic has a floor of half the cell
      // mass regardless of how normal the law is. Compare cell edges
      // against the half-integer continuity correction instead.
      std::vector<double> v(xs);
      std::sort(v.begin(), v.end());
      std::size_t i = 0;
      while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        const double lo = normal_cdf((v[i] - 0.5 - mean) / sd);
        const double hi = normal_cdf((v[i] + 0.5 - mean) / sd);
        ks = std::max(ks, std::abs(static_cast<double>(i) / n - lo));
        ks = std::max(ks, std::abs(static_cast<double>(j) / n - hi));
        i = j;
      }
    }
    d.ks_distance = ks;
  } else {
    // Constant sample: maximally non-normal.
    d.skewness = 0.0;
    d.excess_kurtosis = -3.0;
    d.ks_distance = 0.5;
  }
  return d;
}

std::vector<NormalityDiagnostics> normality_report(const SimulationRun& run) {
  std::vector<NormalityDiagnostics> out;
  out.reserve(run.samples.size());
  for (std::size_t f = 0; f < run.samples.size(); ++f)
    out.push_back(sample_diagnostics(run.functional_names[f], run.samples[f]));
  return out;
}

double variance_standard_error(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  if (xs.size() < 4)
    throw std::invalid_argument("variance_standard_error: too few samples");
  double mean, m2, m3, m4;
  central_moments(xs, mean, m2, m3, m4);
  const double s2 = m2 * n / (n - 1.0);
  const double v = (m4 - s2 * s2 * (n - 3.0) / (n - 1.0)) / n;
  return std::sqrt(std::max(0.0, v));
}

double covariance_standard_error(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 4)
    throw std::invalid_argument("covariance_standard_error: bad sample sizes");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double c = 0.0, m22 = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    c += dx * dy;
    m22 += dx * dx * dy * dy;
  }
  c /= n - 1.0;
  m22 /= n;
  return std::sqrt(std::max(0.0, (m22 - c * c) / n));
}

void write_replicates_csv(const SimulationRun& run, std::ostream& out) {
  out << "replicate_index";
  for (const auto& name : run.functional_names) out << ',' << name;
  out << '\n';
  const long n = run.config.replicates;
  for (long r = 0; r < n; ++r) {
    out << r;
    for (const auto& column : run.samples) out << ',' << fmt17(column[r]);
    out << '\n';
  }
}

std::string config_to_json(const SimulationConfig& cfg) {
  nlohmann::json j;
  j["dim"] = cfg.params.grain.dim;
  j["gamma"] = cfg.params.gamma;
  if (cfg.params.grain.deterministic()) {
    j["grain"] = {{"radius", cfg.params.grain.radius()}};
  } else {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : cfg.params.grain.radii)
      atoms.push_back({a.r, a.p});
    j["grain"] = {{"atoms", atoms}};
  }
  if (cfg.window.shape == Window::Shape::box)
    j["window"] = {{"box", cfg.window.sides}};
  else
    j["window"] = {{"ball", cfg.window.radius}};
  j["replicates"] = cfg.replicates;
  j["seed"] = cfg.master_seed;
  j["edge_dilation"] = cfg.edge_dilation;
  j["threads"] = cfg.threads;
  j["volume_points"] = cfg.volume_points;
  j["max_degenerate_retries"] = cfg.max_degenerate_retries;
  return j.dump();
}

SimulationConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigInvalid("json", e.what());
  }
  if (!j.is_object()) throw ConfigInvalid("json", "top level must be an object");

  auto require = [&j](const char* field) -> const nlohmann::json& {
    auto it = j.find(field);
    if (it == j.end()) throw ConfigInvalid(field, "missing");
    return *it;
  };
  auto as_number = [](const nlohmann::json& v, const char* field) -> double {
    if (!v.is_number()) throw ConfigInvalid(field, "must be a number");
    return v.get<double>();
  };

  SimulationConfig cfg;
  const double dimv = as_number(require("dim"), "dim");
  const int dim = static_cast<int>(dimv);
  if (dimv != dim || dim < 1) throw ConfigInvalid("dim", "must be a positive integer");
  cfg.params.gamma = as_number(require("gamma"), "gamma");

  double radius = 1.0;
  if (auto it = j.find("grain"); it != j.end()) {
    if (!it->is_object()) throw ConfigInvalid("grain", "must be an object");
    if (auto atoms = it->find("atoms"); atoms != it->end()) {
      std::vector<RadiusAtom> parsed;
      if (!atoms->is_array()) throw ConfigInvalid("grain.atoms", "must be an array");
      for (const auto& a : *atoms) {
        if (!a.is_array() || a.size() != 2)
          throw ConfigInvalid("grain.atoms", "entries must be [radius, weight]");
        parsed.push_back({as_number(a[0], "grain.atoms"),
                          as_number(a[1], "grain.atoms")});
      }
      try {
        cfg.params.grain = GrainSpec::mixture(dim, std::move(parsed));
      } catch (const std::exception& e) {
        throw ConfigInvalid("grain.atoms", e.what());
      }
      radius = 0.0;
    } else if (auto r = it->find("radius"); r != it->end()) {
      radius = as_number(*r, "grain.radius");
    } else {
      throw ConfigInvalid("grain", "needs radius or atoms");
    }
  } else if (auto r = j.find("radius"); r != j.end()) {
    radius = as_number(*r, "radius");
  }
  if (radius > 0.0) {
    try {
      cfg.params.grain = GrainSpec::ball(dim, radius);
    } catch (const std::exception& e) {
      throw ConfigInvalid("radius", e.what());
    }
  }

  const auto& win = require("window");
  if (win.is_array()) {
    std::vector<double> sides;
    for (const auto& s : win) sides.push_back(as_number(s, "window"));
    try {
      cfg.window = Window::box_of(std::move(sides));
    } catch (const std::exception& e) {
      throw ConfigInvalid("window", e.what());
    }
  } else if (win.is_object() && win.contains("box")) {
    std::vector<double> sides;
    for (const auto& s : win["box"]) sides.push_back(as_number(s, "window.box"));
    try {
      cfg.window = Window::box_of(std::move(sides));
    } catch (const std::exception& e) {
      throw ConfigInvalid("window.box", e.what());
    }
  } else if (win.is_object() && win.contains("ball")) {
    try {
      cfg.window = Window::ball_of(dim, as_number(win["ball"], "window.ball"));
    } catch (const std::exception& e) {
      throw ConfigInvalid("window.ball", e.what());
    }
  } else {
    throw ConfigInvalid("window", "needs box sides or a ball radius");
  }

  const auto& reps = require("replicates");
  const double repv = as_number(reps, "replicates");
  cfg.replicates = static_cast<long>(repv);
  if (repv != cfg.replicates) throw ConfigInvalid("replicates", "must be an integer");

  if (auto it = j.find("seed"); it != j.end()) {
    if (it->is_number_unsigned())
      cfg.master_seed = it->get<std::uint64_t>();
    else if (it->is_number_integer() && it->get<std::int64_t>() >= 0)
      cfg.master_seed = static_cast<std::uint64_t>(it->get<std::int64_t>());
    else
      throw ConfigInvalid("seed", "must be a non-negative integer");
  }
  if (auto it = j.find("edge_dilation"); it != j.end())
    cfg.edge_dilation = as_number(*it, "edge_dilation");
  if (auto it = j.find("threads"); it != j.end())
    cfg.threads = static_cast<int>(as_number(*it, "threads"));
  if (auto it = j.find("volume_points"); it != j.end())
    cfg.volume_points = static_cast<long>(as_number(*it, "volume_points"));
  if (auto it = j.find("max_degenerate_retries"); it != j.end())
    cfg.max_degenerate_retries =
        static_cast<int>(as_number(*it, "max_degenerate_retries"));

  cfg.validate();
  return cfg;
}

std::string run_summary_json(const SimulationRun& run) {
  nlohmann::json j;
  const std::string cfg = config_to_json(run.config);
  j["config"] = nlohmann::json::parse(cfg);
  j["config_digest"] = hex64(fnv1a64(cfg));
  j["seed"] = run.config.master_seed;
  j["replicates"] = run.config.replicates;
  j["functionals"] = run.functional_names;
  j["mean"] = run.mean;
  j["covariance"] = run.covariance;
  nlohmann::json diag = nlohmann::json::array();
  for (const auto& d : normality_report(run))
    diag.push_back({{"name", d.name},
                    {"skewness", d.skewness},
                    {"excess_kurtosis", d.excess_kurtosis},
                    {"ks_distance", d.ks_distance}});
  j["diagnostics"] = diag;
  if (run.config.params.grain.dim >= 3)
    j["volume_sampling_se"] = run.volume_sampling_se;
  return j.dump(2);
}

} // namespace boolcov
