#pragma once

// Geometric primitives for Boolean models with spherical grains:
// unit-ball constants, intrinsic volumes, covariograms, grain and
// window descriptions, coverage probabilities.

#include <span>
#include <stdexcept>
#include <vector>

namespace boolcov {

// Volume of the n-dimensional unit ball, kappa_n = pi^{n/2} / Gamma(n/2 + 1).
double kappa(int n);

// Surface area of the boundary of the n-dimensional unit ball, n * kappa_n.
double sphere_surface(int n);

// Flag coefficient c^m_j = m! kappa_m / (j! kappa_j).
double flag_coefficient(int m, int j);

// Intrinsic volumes V_0..V_d of a d-ball of radius r:
// V_j = binom(d, j) kappa_d / kappa_{d-j} * r^j.
std::vector<double> ball_intrinsic_volumes(int d, double r);

// Intrinsic volumes of an axis-aligned box: V_j = e_j(sides),
// the j-th elementary symmetric polynomial.
std::vector<double> box_intrinsic_volumes(std::span<const double> sides);

// Integral of sin^n over [0, phi], by the stable three-term recurrence.
double sin_power_integral(int n, double phi);

// Covariogram of the unit d-ball: barC_d(t) = V_d(B ∩ (B + t e1)),
// equal to 2 kappa_{d-1} * sin_power_integral(d, arccos(t/2)) on [0, 2],
// zero for t >= 2.
double ball_covariogram(int d, double t);

// Boundary covariogram of the unit d-ball: half the surface area of the
// spherical cap cut at height t/2, (1/2)(d-1) kappa_{d-1} *
// sin_power_integral(d-2, arccos(t/2)). Domain 0 < t <= 2.
double ball_boundary_covariogram(int d, double t);

// Chebyshev fit of barC_d in the angle variable phi = arccos(t/2), where
// the function is analytic (in t it has a (2-t)^{(d+1)/2} endpoint branch).
// Built once per dimension; inner integrands evaluate it millions of times.
class CovariogramTable {
public:
  explicit CovariogramTable(int d, int n_coeff = 48);
  double operator()(double t) const;
  int dim() const { return d_; }

private:
  int d_;
  double lo_, hi_;              // phi range [0, pi/2]
  std::vector<double> coef_;
};

// Shared read-only table for a dimension, created on first use.
const CovariogramTable& covariogram_table(int d);

struct RadiusAtom {
  double r = 1.0;
  double p = 1.0;
};

// Grain law: a ball with a discrete radius distribution (a single atom
// for the deterministic grain).
struct GrainSpec {
  int dim = 2;
  std::vector<RadiusAtom> radii{{1.0, 1.0}};

  static GrainSpec ball(int d, double r);
  static GrainSpec mixture(int d, std::vector<RadiusAtom> atoms);

  void validate() const;
  bool deterministic() const;
  double radius() const;        // requires deterministic()
  double max_radius() const;
  double moment(int i) const;   // v_i = E V_i(grain)
  double mean_volume() const { return moment(dim); }
  double covariogram(double t) const;           // C_d(t) = E V_d(Z0 ∩ (Z0 + t))
  double boundary_covariogram(double t) const;  // C_{d-1}(t), t > 0
};

// Volume fraction p = 1 - exp(-gamma v_d).
double volume_fraction(double gamma, const GrainSpec& grain);

// P(two points at distance `dist` are both covered)
//   = p^2 + (1-p)^2 (exp(gamma C_d(dist)) - 1).
double two_point_coverage(double gamma, const GrainSpec& grain, double dist);

// Observation window: axis-aligned box or ball.
struct Window {
  enum class Shape { box, ball };

  Shape shape = Shape::box;
  int dim = 2;
  std::vector<double> sides;    // box only
  double radius = 0.0;          // ball only

  static Window box_of(std::vector<double> sides);
  static Window cube(int d, double side);
  static Window ball_of(int d, double radius);

  void validate() const;
  double volume() const;
  double intrinsic_volume(int k) const;
  double inradius() const;
  Window dilated(double rho) const;

  // Set covariance C_W(x) = V_d(W ∩ (W + x)).
  double set_covariance(std::span<const double> x) const;

  // Rotational average of C_W over directions at distance t. Closed form
  // for balls, and for boxes when t <= min side; boxes with t beyond the
  // shortest side fall back to angular quadrature (d = 2 only).
  double isotropized_set_covariance(double t) const;
};

} // namespace boolcov
