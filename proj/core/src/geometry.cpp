#include "boolcov/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

namespace boolcov {

namespace {
constexpr double PI = std::numbers::pi;
constexpr int MAX_DIM = 32;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
} // namespace

double kappa(int n) {
  require(n >= 0, "kappa: negative dimension");
  return std::pow(PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double sphere_surface(int n) {
  require(n >= 1, "sphere_surface: dimension must be >= 1");
  return n * kappa(n);
}

double flag_coefficient(int m, int j) {
  require(m >= 0 && j >= 0, "flag_coefficient: negative index");
  // m! kappa_m / (j! kappa_j) via lgamma to avoid overflow for larger m.
  double lg = std::lgamma(m + 1.0) - std::lgamma(j + 1.0)
            + 0.5 * (m - j) * std::log(PI)
            + std::lgamma(0.5 * j + 1.0) - std::lgamma(0.5 * m + 1.0);
  return std::exp(lg);
}

std::vector<double> ball_intrinsic_volumes(int d, double r) {
  require(d >= 1, "ball_intrinsic_volumes: dimension must be >= 1");
  require(r >= 0.0 && std::isfinite(r), "ball_intrinsic_volumes: bad radius");
  std::vector<double> v(d + 1);
  for (int j = 0; j <= d; ++j) {
    double binom = std::exp(std::lgamma(d + 1.0) - std::lgamma(j + 1.0) -
                            std::lgamma(d - j + 1.0));
    v[j] = binom * kappa(d) / kappa(d - j) * std::pow(r, j);
  }
  return v;
}

std::vector<double> box_intrinsic_volumes(std::span<const double> sides) {
  require(!sides.empty(), "box_intrinsic_volumes: empty sides");
  for (double s : sides) require(s > 0.0 && std::isfinite(s), "box_intrinsic_volumes: bad side");
  // elementary symmetric polynomials e_0..e_d
  std::vector<double> e(sides.size() + 1, 0.0);
  e[0] = 1.0;
  for (double s : sides)
    for (int j = static_cast<int>(sides.size()); j >= 1; --j)
      e[j] += s * e[j - 1];
  return e;
}

double sin_power_integral(int n, double phi) {
  require(n >= 0, "sin_power_integral: negative power");
  double s = std::sin(phi), c = std::cos(phi);
  double i0 = phi, i1 = 1.0 - c;
  if (n == 0) return i0;
  if (n == 1) return i1;
  double prev = i0, cur = i1;   // I_{m-2}, I_{m-1} rolling
  double spow = s;              // sin^{m-1} for m starting at 2
  for (int m = 2; m <= n; ++m) {
    double next = ((m - 1) * prev - spow * c) / m;
    prev = cur;
    cur = next;
    spow *= s;
  }
  return cur;
}

double ball_covariogram(int d, double t) {
  require(d >= 1, "ball_covariogram: dimension must be >= 1");
  require(t >= 0.0 && std::isfinite(t), "ball_covariogram: t must be >= 0");
  if (t >= 2.0) return 0.0;
  return 2.0 * kappa(d - 1) * sin_power_integral(d, std::acos(0.5 * t));
}

double ball_boundary_covariogram(int d, double t) {
  require(d >= 2, "ball_boundary_covariogram: dimension must be >= 2");
  require(t > 0.0 && t <= 2.0, "ball_boundary_covariogram: t must be in (0, 2]");
  return 0.5 * (d - 1) * kappa(d - 1) *
         sin_power_integral(d - 2, std::acos(0.5 * t));
}

CovariogramTable::CovariogramTable(int d, int n_coeff) : d_(d) {
  require(d >= 1, "CovariogramTable: dimension must be >= 1");
  require(n_coeff >= 8, "CovariogramTable: too few coefficients");
  lo_ = 0.0;
  hi_ = 0.5 * PI;
  // Chebyshev interpolation of F(phi) = 2 kappa_{d-1} I_d(phi) at first-kind
  // points; F is entire, so coefficients decay geometrically.
  const int n = n_coeff;
  const double scale = 2.0 * kappa(d - 1);
  std::vector<double> fv(n);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(PI * (k + 0.5) / n);             // in [-1, 1]
    double phi = 0.5 * (x + 1.0) * (hi_ - lo_) + lo_;
    fv[k] = scale * sin_power_integral(d, phi);
  }
  coef_.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
      acc += fv[k] * std::cos(PI * j * (k + 0.5) / n);
    coef_[j] = 2.0 * acc / n;
  }
  coef_[0] *= 0.5;
}

double CovariogramTable::operator()(double t) const {
  if (t >= 2.0) return 0.0;
  if (t < 0.0) t = 0.0;
  double phi = std::acos(0.5 * t);
  double x = 2.0 * (phi - lo_) / (hi_ - lo_) - 1.0;
  // Clenshaw
  double b1 = 0.0, b2 = 0.0;
  for (int j = static_cast<int>(coef_.size()) - 1; j >= 1; --j) {
    double b0 = 2.0 * x * b1 - b2 + coef_[j];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + coef_[0];
}

const CovariogramTable& covariogram_table(int d) {
  require(d >= 1 && d < MAX_DIM, "covariogram_table: dimension out of range");
  static std::array<std::unique_ptr<CovariogramTable>, MAX_DIM> tables;
  static std::array<std::once_flag, MAX_DIM> flags;
  std::call_once(flags[d], [d] { tables[d] = std::make_unique<CovariogramTable>(d); });
  return *tables[d];
}

GrainSpec GrainSpec::ball(int d, double r) {
  GrainSpec g;
  g.dim = d;
  g.radii = {{r, 1.0}};
  g.validate();
  return g;
}

GrainSpec GrainSpec::mixture(int d, std::vector<RadiusAtom> atoms) {
  GrainSpec g;
  g.dim = d;
  g.radii = std::move(atoms);
  g.validate();
  return g;
}

void GrainSpec::validate() const {
  require(dim >= 1 && dim < MAX_DIM, "GrainSpec: dimension out of range");
  require(!radii.empty(), "GrainSpec: empty radius law");
  double total = 0.0;
  for (const auto& a : radii) {
    require(a.r > 0.0 && std::isfinite(a.r), "GrainSpec: radius must be positive");
    require(a.p > 0.0 && a.p <= 1.0, "GrainSpec: weight must be in (0, 1]");
    total += a.p;
  }
  require(std::abs(total - 1.0) <= 1e-12, "GrainSpec: weights must sum to 1");
}

bool GrainSpec::deterministic() const { return radii.size() == 1; }

double GrainSpec::radius() const {
  require(deterministic(), "GrainSpec: radius() needs a deterministic grain");
  return radii.front().r;
}

double GrainSpec::max_radius() const {
  double m = 0.0;
  for (const auto& a : radii) m = std::max(m, a.r);
  return m;
}

double GrainSpec::moment(int i) const {
  require(i >= 0 && i <= dim, "GrainSpec: moment index out of range");
  auto unit = ball_intrinsic_volumes(dim, 1.0);
  double acc = 0.0;
  for (const auto& a : radii) acc += a.p * unit[i] * std::pow(a.r, i);
  return acc;
}

double GrainSpec::covariogram(double t) const {
  require(t >= 0.0 && std::isfinite(t), "GrainSpec: covariogram needs t >= 0");
  double acc = 0.0;
  for (const auto& a : radii)
    acc += a.p * std::pow(a.r, dim) * ball_covariogram(dim, t / a.r);
  return acc;
}

double GrainSpec::boundary_covariogram(double t) const {
  require(t > 0.0 && std::isfinite(t), "GrainSpec: boundary covariogram needs t > 0");
  double acc = 0.0;
  for (const auto& a : radii) {
    if (t <= 2.0 * a.r)
      acc += a.p * std::pow(a.r, dim - 1) *
             ball_boundary_covariogram(dim, t / a.r);
  }
  return acc;
}

double volume_fraction(double gamma, const GrainSpec& grain) {
  require(gamma >= 0.0 && std::isfinite(gamma), "volume_fraction: gamma must be >= 0");
  grain.validate();
  return -std::expm1(-gamma * grain.mean_volume());
}

double two_point_coverage(double gamma, const GrainSpec& grain, double dist) {
  double p = volume_fraction(gamma, grain);
  double q = 1.0 - p;
  return p * p + q * q * std::expm1(gamma * grain.covariogram(dist));
}

Window Window::box_of(std::vector<double> sides) {
  Window w;
  w.shape = Shape::box;
  w.dim = static_cast<int>(sides.size());
  w.sides = std::move(sides);
  w.validate();
  return w;
}

Window Window::cube(int d, double side) {
  return box_of(std::vector<double>(d, side));
}

Window Window::ball_of(int d, double radius) {
  Window w;
  w.shape = Shape::ball;
  w.dim = d;
  w.radius = radius;
  w.validate();
  return w;
}

void Window::validate() const {
  require(dim >= 1 && dim < MAX_DIM, "Window: dimension out of range");
  if (shape == Shape::box) {
    require(static_cast<int>(sides.size()) == dim, "Window: sides/dim mismatch");
    for (double s : sides) require(s > 0.0 && std::isfinite(s), "Window: bad side");
  } else {
    require(radius > 0.0 && std::isfinite(radius), "Window: bad radius");
  }
}

double Window::volume() const {
  if (shape == Shape::box) {
    double v = 1.0;
    for (double s : sides) v *= s;
    return v;
  }
  return kappa(dim) * std::pow(radius, dim);
}

double Window::intrinsic_volume(int k) const {
  require(k >= 0 && k <= dim, "Window: intrinsic volume index out of range");
  if (shape == Shape::box) return box_intrinsic_volumes(sides)[k];
  return ball_intrinsic_volumes(dim, radius)[k];
}

double Window::inradius() const {
  if (shape == Shape::box) return 0.5 * *std::min_element(sides.begin(), sides.end());
  return radius;
}

Window Window::dilated(double rho) const {
  require(rho >= 0.0 && std::isfinite(rho), "Window: bad dilation");
  Window w = *this;
  if (shape == Shape::box) {
    for (double& s : w.sides) s += 2.0 * rho;
  } else {
    w.radius += rho;
  }
  return w;
}

double Window::set_covariance(std::span<const double> x) const {
  require(static_cast<int>(x.size()) == dim, "Window: displacement/dim mismatch");
  if (shape == Shape::box) {
    double v = 1.0;
    for (int i = 0; i < dim; ++i) v *= std::max(0.0, sides[i] - std::abs(x[i]));
    return v;
  }
  double nsq = 0.0;
  for (double xi : x) nsq += xi * xi;
  double t = std::sqrt(nsq);
  if (t >= 2.0 * radius) return 0.0;
  return std::pow(radius, dim) * ball_covariogram(dim, t / radius);
}

double Window::isotropized_set_covariance(double t) const {
  require(t >= 0.0 && std::isfinite(t), "Window: t must be >= 0");
  if (shape == Shape::ball) {
    if (t >= 2.0 * radius) return 0.0;
    return std::pow(radius, dim) * ball_covariogram(dim, t / radius);
  }
  double min_side = *std::min_element(sides.begin(), sides.end());
  if (t <= min_side) {
    // (1/omega_d) sum_k (-t)^k e_{d-k}(sides) mu_k with
    // mu_k = 2 pi^{(d-k)/2} / Gamma((d+k)/2) the sphere integral of a
    // product of k coordinate magnitudes.
    auto e = box_intrinsic_volumes(sides);
    double omega = sphere_surface(dim);
    double acc = 0.0, tp = 1.0;
    for (int k = 0; k <= dim; ++k) {
      double mu = 2.0 * std::pow(PI, 0.5 * (dim - k)) / std::tgamma(0.5 * (dim + k));
      acc += tp * e[dim - k] * mu / omega;
      tp *= -t;
    }
    return acc;
  }
  require(dim == 2, "Window: isotropized set covariance beyond the shortest side needs d = 2");
  // quadrant average of C_W(t cos, t sin) by composite Simpson
  const int n = 512;
  double hx = 0.5 * PI / n, acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    double th = i * hx;
    double cw = std::max(0.0, sides[0] - t * std::cos(th)) *
                std::max(0.0, sides[1] - t * std::sin(th));
    double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * cw;
  }
  return acc * hx / 3.0 * (2.0 / PI);
}

} // namespace boolcov
