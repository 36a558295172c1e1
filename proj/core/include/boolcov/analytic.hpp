#pragma once

// Asymptotic and finite-window second-order formulas for Boolean models
// with ball grains: the unit-ball integrals f_d, g_d, h_d, k_d, the
// covariance densities sigma_{i,j}, mean-value polynomials, and the exact
// finite-window covariance matrix in the plane.

#include <array>
#include <span>
#include <vector>

#include "boolcov/geometry.hpp"

namespace boolcov {

struct AnalyticOptions {
  double tol_1d = 1e-10;  // relative, one-dimensional quadratures
  double tol_2d = 1e-8;   // relative, outer tolerance of nested quadratures
};

struct ModelParams {
  double gamma = 1.0;
  GrainSpec grain = GrainSpec::ball(2, 1.0);

  static ModelParams make(int d, double gamma, double radius = 1.0) {
    return {gamma, GrainSpec::ball(d, radius)};
  }
  void validate() const;
};

// Unit-ball grain integrals over displacement space. f and k are single
// integrals, g and h run over the two-point measure in substituted
// coordinates (outer t = 1 - cos(phi), which absorbs the sqrt(t(2-t))
// endpoint behaviour; k uses s = 1 - cos(theta) likewise).
double f_integral(int d, double gamma, const AnalyticOptions& opt = {});
double g_integral(int d, double gamma, const AnalyticOptions& opt = {});
double h_integral(int d, double gamma, const AnalyticOptions& opt = {});
double k_integral(int d, double gamma, const AnalyticOptions& opt = {});

// Asymptotic covariance densities for the deterministic ball grain in any
// dimension (radius handled by scaling): volume/volume, boundary/volume
// (V_{d-1} vs V_d) and boundary/boundary, plus their correlation.
double sigma_vol_vol(const ModelParams& m, const AnalyticOptions& opt = {});
double sigma_surf_vol(const ModelParams& m, const AnalyticOptions& opt = {});
double sigma_surf_surf(const ModelParams& m, const AnalyticOptions& opt = {});
double correlation_surf_vol(const ModelParams& m, const AnalyticOptions& opt = {});

// Planar Euler-characteristic kernels (unit disk grain).
double chi_kernel(double r, double gamma);
double chi_tilde_kernel(double r, double gamma);

// Full 3x3 asymptotic covariance matrix in the plane, unit disk grain,
// indices 0..2 <-> (V_0, V_1, V_2). sigma_2d evaluates a single entry
// from the explicit closed-form expressions.
struct Matrix3 {
  std::array<std::array<double, 3>, 3> m{};
  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }
};

double sigma_2d(int i, int j, double gamma, const AnalyticOptions& opt = {});
double sigma_2d(int i, int j, const ModelParams& m, const AnalyticOptions& opt = {});
double correlation_2d(int i, int j, double gamma, const AnalyticOptions& opt = {});
Matrix3 sigma_matrix_2d(double gamma, const AnalyticOptions& opt = {});

// Second-moment densities rho_{k,l} of the unit-disk model and the
// polynomial assembly sigma_{i,j} = (1-p)^2 sum P_{i,k} P_{j,l} rho_{k,l}.
Matrix3 rho_unit_disk(double gamma, const AnalyticOptions& opt = {});
Matrix3 sigma_from_rho(double gamma, const Matrix3& rho);

// Moment polynomials over t = (t_0, ..., t_{d-1}), t_m = gamma * v_m(grain):
// P_{j,l} drives covariances and mean values, P_j the mean densities.
// moment_polynomial requires 0 <= j <= l <= d and t.size() == d.
double moment_polynomial(int d, int j, int l, std::span<const double> t);
double mean_polynomial(int d, int j, std::span<const double> t);

// E V_i(Z ∩ W) for convex windows, and its large-window density
// lim E V_i(Z ∩ W) / V_d(W).
double mean_value(int i, const ModelParams& m, const Window& w);
double mean_density(int i, const ModelParams& m);

// Exact variance of the covered volume in a finite window:
// (1-p)^2 integral of C_W(x) (exp(gamma C(x)) - 1) dx, reduced to a radial
// quadrature against the isotropized set covariance.
double exact_volume_variance(const ModelParams& m, const Window& w,
                             const AnalyticOptions& opt = {});

// Exact finite-window covariance matrix of (V_0, V_1, V_2) in the plane
// for a deterministic disk grain and a box window with min side >= grain
// diameter.
Matrix3 finite_window_covariance_2d(const ModelParams& m, const Window& w,
                                    const AnalyticOptions& opt = {});

// Deviation of the finite-window volume-variance density from its
// asymptotic limit, scaled by the window inradius, for cubes [0, L]^d.
struct RatePoint {
  double L = 0.0;
  double deviation = 0.0;  // |Var V_d(Z ∩ [0,L]^d)/L^d - sigma_dd|
  double scaled = 0.0;     // deviation * (L/2)
};
std::vector<RatePoint> variance_rate_curve(const ModelParams& m,
                                           std::span<const double> Ls,
                                           const AnalyticOptions& opt = {});

// Cholesky test helper: true if the symmetric matrix is positive definite.
bool positive_definite(const Matrix3& a);

} // namespace boolcov
