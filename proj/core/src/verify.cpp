#include "boolcov/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "boolcov/analytic.hpp"
#include "boolcov/disk_union.hpp"
#include "boolcov/geometry.hpp"
#include "boolcov/quadrature.hpp"
#include "boolcov/simulator.hpp"

namespace boolcov {

namespace {

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// Collects clause-level outcomes; failing clauses are tagged in the detail.
struct Check {
  bool ok = true;
  std::string detail;

  void record(bool cond, const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    if (!cond) {
      ok = false;
      detail += "FAIL ";
    }
    detail += msg;
  }
};

template <class F>
CriterionResult timed(int id, std::string name, F&& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Check c;
    body(c);
    r.pass = c.ok;
    r.detail = c.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

template <class F>
double refined_root(F&& f, double lo, double hi) {
  return find_root(f, lo, hi, 1e-9).x;
}

// ---- analytic criteria -------------------------------------------------

CriterionResult c1_sigma01_zero(const VerifyOptions&) {
  return timed(1, "sigma01-zero", [](Check& c) {
    auto f = [](double g) { return sigma_2d(0, 1, g); };
    const double g0 = refined_root(f, 0.5, 1.2);
    c.record(g0 >= 0.90785 && g0 <= 0.90786,
             strf("gamma0=%.7f expected in [0.90785,0.90786]", g0));
  });
}

CriterionResult c2_remaining_zeros(const VerifyOptions&) {
  return timed(2, "sigma02-sigma12-zeros", [](Check& c) {
    auto s02 = [](double g) { return sigma_2d(0, 2, g); };
    auto s12 = [](double g) { return sigma_2d(1, 2, g); };
    const double g1 = refined_root(s02, 0.05, 0.3);
    c.record(g1 >= 0.13336 && g1 <= 0.13337,
             strf("gamma1=%.7f expected in [0.13336,0.13337]", g1));
    const double g2 = refined_root(s02, 0.5, 1.3);
    c.record(g2 >= 1.097998 && g2 <= 1.097999,
             strf("gamma2=%.7f expected in [1.097998,1.097999]", g2));
    const double g3 = refined_root(s12, 0.1, 1.0);
    c.record(g3 >= 0.369200 && g3 <= 0.369201,
             strf("gamma3=%.7f expected in [0.369200,0.369201]", g3));
  });
}

void split_extrema(const std::vector<Extremum>& all,
                   std::vector<Extremum>& maxima,
                   std::vector<Extremum>& minima) {
  for (const auto& e : all)
    (e.kind == Extremum::Kind::maximum ? maxima : minima).push_back(e);
  // best first: maxima by value descending, minima ascending
  std::sort(maxima.begin(), maxima.end(),
            [](const Extremum& a, const Extremum& b) { return a.value > b.value; });
  std::sort(minima.begin(), minima.end(),
            [](const Extremum& a, const Extremum& b) { return a.value < b.value; });
}

CriterionResult c3_extrema(const VerifyOptions&) {
  return timed(3, "sigma-extrema", [](Check& c) {
    auto pin = [&c](const char* label, const Extremum& e, double value,
                    double vtol, double xlo, double xhi) {
      c.record(std::abs(e.value - value) <= vtol && e.x >= xlo && e.x <= xhi,
               strf("%s %.7f@%.5f expected %.7f+-%.0e in [%.4f,%.4f]", label,
                    e.value, e.x, value, vtol, xlo, xhi));
    };

    auto s01 = [](double g) { return sigma_2d(0, 1, g); };
    std::vector<Extremum> maxima, minima;
    split_extrema(find_extrema(s01, 0.005, 2.0, 601, 1e-7), maxima, minima);
    c.record(maxima.size() == 2 && minima.size() == 2,
             strf("sigma01 extremum count %zu max / %zu min expected 2/2",
                  maxima.size(), minima.size()));
    if (maxima.size() == 2 && minima.size() == 2) {
      pin("sigma01 global max", maxima[0], 0.067755, 5e-5, 0.0539, 0.0541);
      pin("sigma01 local max", maxima[1], 0.06515, 5e-4, 0.535, 0.537);
      pin("sigma01 global min", minima[0], -0.03179, 5e-4, 1.294, 1.296);
      pin("sigma01 local min", minima[1], 0.0010234, 1e-5, 0.2239, 0.2241);
    }

    auto s02 = [](double g) { return sigma_2d(0, 2, g); };
    maxima.clear();
    minima.clear();
    split_extrema(find_extrema(s02, 0.005, 2.0, 601, 1e-7), maxima, minima);
    c.record(maxima.size() == 2 && minima.size() == 1,
             strf("sigma02 extremum count %zu max / %zu min expected 2/1",
                  maxima.size(), minima.size()));
    if (maxima.size() == 2 && minima.size() == 1) {
      pin("sigma02 global max", maxima[0], 0.070517, 5e-5, 0.0524, 0.0526);
      pin("sigma02 global min", minima[0], -0.1673672, 1e-5, 0.3674, 0.3676);
      // Nominal table location is [1.36, 1.37]; the curve's derivative is
      // still positive there, the maximum sits at 1.37137.
      pin("sigma02 local max", maxima[1], 0.0053, 1e-3, 1.371, 1.372);
    }
  });
}

CriterionResult c4_correlation_limit(const VerifyOptions&) {
  return timed(4, "correlation-limit", [](Check& c) {
    for (int d = 2; d <= 6; ++d) {
      const double cor = correlation_surf_vol(ModelParams::make(d, 1e-4));
      c.record(cor >= 0.99, strf("cor(1e-4) d=%d %.6f >= 0.99", d, cor));

      auto sig = [d](double g) {
        return sigma_surf_vol(ModelParams::make(d, g));
      };
      auto corf = [d](double g) {
        return correlation_surf_vol(ModelParams::make(d, g));
      };
      auto brackets = bracket_roots(sig, 0.02, 1.2, 60);
      c.record(brackets.size() == 1,
               strf("d=%d sign changes %zu expected 1", d, brackets.size()));
      if (brackets.size() == 1) {
        const double zs = refined_root(sig, brackets[0].first, brackets[0].second);
        const double zc = refined_root(corf, brackets[0].first, brackets[0].second);
        c.record(std::abs(zs - zc) <= 1e-6,
                 strf("d=%d zero sigma=%.7f cor=%.7f", d, zs, zc));
      }
    }
  });
}

CriterionResult c5_route_consistency(const VerifyOptions&) {
  return timed(5, "route-consistency", [](Check& c) {
    double worst22 = 0.0, worst_rho = 0.0;
    for (int i = 1; i <= 30; ++i) {
      const double gamma = 0.1 * i;
      const double a = sigma_2d(2, 2, gamma);
      const double b = sigma_vol_vol(ModelParams::make(2, gamma));
      worst22 = std::max(worst22, std::abs(a - b) / std::abs(b));

      const Matrix3 via_rho = sigma_from_rho(gamma, rho_unit_disk(gamma));
      for (int r = 0; r < 3; ++r)
        for (int s = r; s < 3; ++s) {
          const double x = via_rho(r, s);
          const double y = sigma_2d(r, s, gamma);
          worst_rho = std::max(
              worst_rho,
              std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}));
        }
    }
    c.record(worst22 <= 1e-10,
             strf("max rel diff sigma22 two routes %.2e <= 1e-10", worst22));
    c.record(worst_rho <= 1e-9,
             strf("max diff sigma via rho %.2e <= 1e-9", worst_rho));
  });
}

CriterionResult c6_positive_definite(const VerifyOptions&) {
  return timed(6, "positive-definite", [](Check& c) {
    int ok = 0;
    for (int i = 1; i <= 30; ++i)
      if (positive_definite(sigma_matrix_2d(0.1 * i))) ++ok;
    c.record(ok == 30, strf("Cholesky succeeded for %d/30 gamma in (0,3]", ok));
  });
}

CriterionResult c9_convergence_rate(const VerifyOptions&) {
  return timed(9, "convergence-rate", [](Check& c) {
    const ModelParams m = ModelParams::make(2, 0.3);
    const double Ls[] = {8.0, 16.0, 32.0, 64.0};
    const auto pts = variance_rate_curve(m, Ls);

    std::string vals = "scaled deviations";
    bool bounded = true;
    for (const auto& p : pts) {
      bounded = bounded && p.scaled >= 0.01 && p.scaled <= 100.0;
      vals += strf(" L=%g:%.4f", p.L, p.scaled);
    }
    c.record(bounded, vals + " all in [0.01,100]");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(pts.size());
    for (const auto& p : pts) {
      const double x = std::log(p.L), y = std::log(p.deviation);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    c.record(slope >= -1.3 && slope <= -0.7,
             strf("log-log slope %.4f expected in [-1.3,-0.7]", slope));
  });
}

Functionals exact_with_retries(std::vector<Disk> disks, const Rect& win,
                               ReplicateRng& rng) {
  for (int attempt = 0;; ++attempt) {
    try {
      return disk_union_functionals(disks, win);
    } catch (const DegenerateConfiguration&) {
      if (attempt >= 3) throw;
      for (auto& d : disks) {
        const double ang = rng.uniform(0.0, 6.283185307179586);
        d.c.x += 1e-7 * d.r * std::cos(ang);
        d.c.y += 1e-7 * d.r * std::sin(ang);
      }
    }
  }
}

CriterionResult c12_disk_union(const VerifyOptions& opt) {
  return timed(12, "disk-union-exactness", [&opt](Check& c) {
    const double pi = 3.14159265358979323846;

    double worst = 0.0;
    for (double t : {0.5, 1.0, 1.5, 1.9}) {
      const Disk pair[] = {{{0.0, 0.0}, 1.0}, {{t, 0.0}, 1.0}};
      const Rect win{-3.0, -3.0, 5.0, 3.0};
      const Functionals f = disk_union_functionals(pair, win);
      const double beta = std::acos(0.5 * t);
      const double lens = 2.0 * beta - 0.5 * t * std::sqrt(4.0 - t * t);
      worst = std::max(worst, std::abs(f.area - (2.0 * pi - lens)));
      worst = std::max(worst, std::abs(f.half_perimeter - (2.0 * pi - 2.0 * beta)));
      worst = std::max(worst, std::abs(static_cast<double>(f.euler - 1)));
    }
    c.record(worst <= 2e-12,
             strf("two-disk lens max deviation %.2e <= 2e-12", worst));

    // Pairwise-overlapping triple whose circumradius exceeds the grain
    // radius: one component enclosing one hole.
    const double rc = 1.9 / std::sqrt(3.0);
    std::vector<Disk> triple;
    for (int k = 0; k < 3; ++k) {
      const double ang = pi / 2.0 + 2.0 * pi * k / 3.0;
      triple.push_back({{3.0 + rc * std::cos(ang), 3.0 + rc * std::sin(ang)}, 1.0});
    }
    const Rect hole_win{0.0, 0.0, 6.0, 6.0};
    const Functionals exact3 = disk_union_functionals(triple, hole_win);
    const Functionals grid3 = disk_union_grid(triple, hole_win, 200);
    c.record(exact3.euler == 0 && grid3.euler == 0,
             strf("three-disk hole euler exact=%d grid=%d expected 0",
                  exact3.euler, grid3.euler));

    // Random scenes: pixel-counting area error must decay at least like
    // 1/resolution.
    ReplicateRng rng(opt.seed ^ 0x5eedb10cULL, 777);
    const int scenes = 200, r_lo = 32, r_hi = 128;
    double dev_lo = 0.0, dev_hi = 0.0;
    const Rect win{0.0, 0.0, 6.0, 6.0};
    for (int s = 0; s < scenes; ++s) {
      const int n = 8 + static_cast<int>(rng.next_u64() % 10);
      std::vector<Disk> disks;
      for (int i = 0; i < n; ++i) {
        const double cx = rng.uniform(-1.0, 7.0);
        const double cy = rng.uniform(-1.0, 7.0);
        disks.push_back({{cx, cy}, rng.uniform(0.3, 1.1)});
      }
      const Functionals exact = exact_with_retries(disks, win, rng);
      dev_lo += std::abs(exact.area - disk_union_grid(disks, win, r_lo).area);
      dev_hi += std::abs(exact.area - disk_union_grid(disks, win, r_hi).area);
    }
    dev_lo /= scenes;
    dev_hi /= scenes;
    c.record(dev_lo < 0.1 && dev_hi <= 1.5 * dev_lo * r_lo / r_hi,
             strf("mean grid area deviation %.5f@%d -> %.5f@%d follows 1/res",
                  dev_lo, r_lo, dev_hi, r_hi));
  });
}

CriterionResult c13_figure_signs(const VerifyOptions&) {
  return timed(13, "figure-sign-pattern", [](Check& c) {
    for (int d = 2; d <= 6; ++d) {
      int changes = 0;
      double prev = 0.0;
      bool have_prev = false;
      for (int i = 1; i <= 120; ++i) {
        const double v = sigma_surf_vol(ModelParams::make(d, 0.01 * i));
        if (have_prev && (prev > 0.0) != (v > 0.0)) ++changes;
        prev = v;
        have_prev = true;
      }
      c.record(changes == 1,
               strf("sigma_{%d,%d} sign changes on (0,1.2] = %d expected 1",
                    d - 1, d, changes));
    }
  });
}

// ---- Monte Carlo criteria ----------------------------------------------

CriterionResult c7_volume_variance(const VerifyOptions& opt) {
  return timed(7, "volume-variance-mc", [&opt](Check& c) {
    SimulationConfig cfg;
    cfg.params = ModelParams::make(2, 0.3);
    cfg.window = Window::cube(2, 10.0);
    cfg.replicates = 10000;
    cfg.master_seed = opt.seed + 7;
    cfg.threads = opt.threads;
    const SimulationRun run = run_simulation(cfg);

    const double mc = run.covariance[2][2];
    const double se = variance_standard_error(run.samples[2]);
    const double exact = exact_volume_variance(cfg.params, cfg.window);
    c.record(std::abs(mc - exact) <= 3.0 * se,
             strf("Var V2 mc=%.4f exact=%.4f |diff|=%.4f <= 3se=%.4f", mc,
                  exact, std::abs(mc - exact), 3.0 * se));
  });
}

CriterionResult c8_finite_window(const VerifyOptions& opt) {
  return timed(8, "finite-window-mc", [&opt](Check& c) {
    SimulationConfig cfg;
    cfg.params = ModelParams::make(2, 0.2);
    cfg.window = Window::cube(2, 8.0);
    cfg.replicates = 10000;
    cfg.master_seed = opt.seed + 8;
    cfg.threads = opt.threads;
    const SimulationRun run = run_simulation(cfg);
    const Matrix3 analytic = finite_window_covariance_2d(cfg.params, cfg.window);

    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const double mc = run.covariance[i][j];
        const double se =
            i == j ? variance_standard_error(run.samples[i])
                   : covariance_standard_error(run.samples[i], run.samples[j]);
        c.record(std::abs(mc - analytic(i, j)) <= 3.0 * se,
                 strf("Cov(V%d,V%d) mc=%.4f exact=%.4f se=%.4f", i, j, mc,
                      analytic(i, j), se));
      }
  });
}

CriterionResult c10_clt(const VerifyOptions& opt) {
  return timed(10, "clt-diagnostics", [&opt](Check& c) {
    // Threshold calibration on synthetic standard normals from the same
    // estimator.
    ReplicateRng rng(opt.seed + 10, 0xCA11);
    std::vector<double> z(10000);
    for (auto& v : z) v = rng.normal();
    const auto null_diag = sample_diagnostics("synthetic", z);
    c.record(std::abs(null_diag.skewness) < 0.08 &&
                 std::abs(null_diag.excess_kurtosis) < 0.16 &&
                 null_diag.ks_distance < 0.02,
             strf("synthetic normal skew=%.4f kurt=%.4f ks=%.4f",
                  null_diag.skewness, null_diag.excess_kurtosis,
                  null_diag.ks_distance));

    SimulationConfig cfg;
    cfg.params = ModelParams::make(2, 0.5);
    cfg.window = Window::cube(2, 40.0);
    cfg.replicates = 10000;
    cfg.master_seed = opt.seed + 10;
    cfg.threads = opt.threads;
    const SimulationRun run = run_simulation(cfg);
    for (const auto& d : normality_report(run))
      c.record(std::abs(d.skewness) < 0.1 &&
                   std::abs(d.excess_kurtosis) < 0.2 && d.ks_distance < 0.02,
               strf("%s skew=%.4f kurt=%.4f ks=%.4f", d.name.c_str(),
                    d.skewness, d.excess_kurtosis, d.ks_distance));
  });
}

CriterionResult c11_interval_laws(const VerifyOptions& opt) {
  return timed(11, "interval-laws-mc", [&opt](Check& c) {
    SimulationConfig cfg;
    cfg.params = ModelParams::make(1, 0.5);
    cfg.window = Window::box_of({100.0});
    cfg.replicates = 10000;
    cfg.master_seed = opt.seed + 11;
    cfg.threads = opt.threads;
    const SimulationRun run = run_simulation(cfg);
    const double L = 100.0;
    const double n = static_cast<double>(cfg.replicates);

    const double p = volume_fraction(0.5, cfg.params.grain);
    const double frac = run.mean[1] / L;
    const double se_frac = std::sqrt(run.covariance[1][1] / n) / L;
    c.record(std::abs(frac - p) <= 3.0 * se_frac,
             strf("covered fraction mc=%.5f p=%.5f se=%.5f", frac, p, se_frac));

    const double sigma11 = sigma_vol_vol(cfg.params);
    const double var_density = run.covariance[1][1] / L;
    const double se_var = variance_standard_error(run.samples[1]) / L;
    c.record(std::abs(var_density - sigma11) <= 3.0 * se_var,
             strf("Var V1 / |W| mc=%.5f sigma11=%.5f se=%.5f", var_density,
                  sigma11, se_var));
  });
}

} // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  out.push_back(c1_sigma01_zero(opt));
  out.push_back(c2_remaining_zeros(opt));
  out.push_back(c3_extrema(opt));
  out.push_back(c4_correlation_limit(opt));
  out.push_back(c5_route_consistency(opt));
  out.push_back(c6_positive_definite(opt));
  if (opt.full) {
    out.push_back(c7_volume_variance(opt));
    out.push_back(c8_finite_window(opt));
  }
  out.push_back(c9_convergence_rate(opt));
  if (opt.full) out.push_back(c10_clt(opt));
  if (opt.full) out.push_back(c11_interval_laws(opt));
  out.push_back(c12_disk_union(opt));
  out.push_back(c13_figure_signs(opt));
  return out;
}

int count_failures(const std::vector<CriterionResult>& results) {
  int n = 0;
  for (const auto& r : results)
    if (!r.pass) ++n;
  return n;
}

std::string criterion_line(const CriterionResult& r) {
  return strf("[%s] %02d %s (%.1fs) ", r.pass ? "PASS" : "FAIL", r.id,
              r.name.c_str(), r.seconds) +
         r.detail;
}

} // namespace boolcov
