#include "boolcov/analytic.hpp"

#include <cmath>
#include <numbers>

#include "boolcov/quadrature.hpp"

namespace boolcov {

namespace {

constexpr double PI = std::numbers::pi;

QuadratureOptions opts_1d(const AnalyticOptions& o) {
  QuadratureOptions q;
  q.rel_tol = o.tol_1d;
  return q;
}

QuadratureOptions opts_2d(const AnalyticOptions& o) {
  QuadratureOptions q;
  q.rel_tol = o.tol_2d;
  return q;
}

void check_dim(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
}

void check_gamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be finite and >= 0");
}

// Displacement between a point of the segment [grain, grain + t e1] pair
// parametrization used by g, h and the plane kernels: with the outer
// substitution t = 1 - cos(phi),
//   xi(phi, s) = sqrt((1 + cos(phi))^2 + sin(phi)^2 s^2).
double xi_of(double cphi, double s2sq) {
  return std::sqrt((1.0 + cphi) * (1.0 + cphi) + s2sq);
}

// Boundary covariogram with its continuous extension at 0 (the inner
// integrands approach xi = 0 at a single corner of the domain).
double bc_boundary(int d, double t) {
  if (t <= 0.0) t = 1e-300;
  if (t > 2.0) return 0.0;
  return ball_boundary_covariogram(d, t);
}

} // namespace

void ModelParams::validate() const {
  check_gamma(gamma);
  grain.validate();
}

double f_integral(int d, double gamma, const AnalyticOptions& opt) {
  check_dim(d);
  check_gamma(gamma);
  if (gamma == 0.0) return 0.0;
  const auto& cov = covariogram_table(d);
  auto r = integrate(
      [&](double t) {
        return std::expm1(gamma * cov(t)) * std::pow(t, d - 1);
      },
      0.0, 2.0, opts_1d(opt));
  return d * kappa(d) * r.value;
}

double g_integral(int d, double gamma, const AnalyticOptions& opt) {
  check_dim(d);
  check_gamma(gamma);
  const auto& cov = covariogram_table(d);
  auto r = integrate_2d(
      [&](double phi, double s) {
        double cphi = std::cos(phi), sphi = std::sin(phi);
        double xi = xi_of(cphi, sphi * sphi * s * s);
        return std::exp(gamma * cov(xi)) * std::pow(s, d - 2) *
               std::pow(sphi, d);
      },
      0.0, PI, 0.0, 1.0, opts_2d(opt));
  return (d - 1) * kappa(d - 1) * r.value;
}

double h_integral(int d, double gamma, const AnalyticOptions& opt) {
  check_dim(d);
  check_gamma(gamma);
  if (d < 2) throw std::invalid_argument("h_integral: requires d >= 2");
  const auto& cov = covariogram_table(d);
  auto r = integrate_2d(
      [&](double phi, double s) {
        double cphi = std::cos(phi), sphi = std::sin(phi);
        double xi = xi_of(cphi, sphi * sphi * s * s);
        return std::exp(gamma * cov(xi)) * bc_boundary(d, xi) *
               std::pow(s, d - 2) * std::pow(sphi, d);
      },
      0.0, PI, 0.0, 1.0, opts_2d(opt));
  return r.value;
}

double k_integral(int d, double gamma, const AnalyticOptions& opt) {
  check_dim(d);
  check_gamma(gamma);
  if (d < 2) throw std::invalid_argument("k_integral: requires d >= 2");
  const auto& cov = covariogram_table(d);
  auto r = integrate(
      [&](double theta) {
        double xi = 2.0 * std::sin(0.5 * theta);
        return std::pow(std::sin(theta), d - 2) * std::exp(gamma * cov(xi));
      },
      0.0, PI, opts_1d(opt));
  return r.value;
}

namespace {

struct UnitSigmas {
  double dd, sv, ss;
};

// The three asymptotic densities for the unit-ball grain, gathered so the
// shared integrals are evaluated once.
UnitSigmas unit_sigmas(int d, double gamma, const AnalyticOptions& opt) {
  double q = std::exp(-gamma * kappa(d));
  q *= q;
  double f = f_integral(d, gamma, opt);
  double g = g_integral(d, gamma, opt);
  double h = h_integral(d, gamma, opt);
  double k = k_integral(d, gamma, opt);
  double dk = d * kappa(d);
  double dk1 = (d - 1) * kappa(d - 1);
  UnitSigmas s;
  s.dd = q * f;
  s.sv = q * gamma * (0.5 * dk) * (g - f);
  // The k-term of sigma_{d-1,d-1} carries 1/gamma against the gamma^2
  // prefactor; written with the product collapsed so gamma -> 0 is exact.
  s.ss = q * gamma * gamma *
             (0.25 * dk * dk * f - 0.5 * dk * dk * g + 0.5 * dk * dk1 * h) +
         q * gamma * 0.25 * dk * dk1 * k;
  return s;
}

double scale_pow(double r, int n) { return std::pow(r, n); }

// sigma_{i,j}(gamma, r) = r^{i+j-d} sigma_{i,j}(gamma r^d, 1).
struct Scaled {
  double gamma_unit;
  double factor(int i, int j, int d, double r) const {
    return scale_pow(r, i + j - d);
  }
};

Scaled scaling(const ModelParams& m) {
  if (!m.grain.deterministic())
    throw std::invalid_argument("sigma formulas need a deterministic ball grain");
  double r = m.grain.radius();
  return {m.gamma * std::pow(r, m.grain.dim)};
}

} // namespace

double sigma_vol_vol(const ModelParams& m, const AnalyticOptions& opt) {
  m.validate();
  int d = m.grain.dim;
  double r = m.grain.radius();
  auto sc = scaling(m);
  double q = std::exp(-sc.gamma_unit * kappa(d));
  q *= q;
  return sc.factor(d, d, d, r) * q * f_integral(d, sc.gamma_unit, opt);
}

double sigma_surf_vol(const ModelParams& m, const AnalyticOptions& opt) {
  m.validate();
  int d = m.grain.dim;
  if (d < 2) throw std::invalid_argument("sigma_surf_vol: requires d >= 2");
  double r = m.grain.radius();
  auto sc = scaling(m);
  auto s = unit_sigmas(d, sc.gamma_unit, opt);
  return sc.factor(d - 1, d, d, r) * s.sv;
}

double sigma_surf_surf(const ModelParams& m, const AnalyticOptions& opt) {
  m.validate();
  int d = m.grain.dim;
  if (d < 2) throw std::invalid_argument("sigma_surf_surf: requires d >= 2");
  double r = m.grain.radius();
  auto sc = scaling(m);
  auto s = unit_sigmas(d, sc.gamma_unit, opt);
  return sc.factor(d - 1, d - 1, d, r) * s.ss;
}

double correlation_surf_vol(const ModelParams& m, const AnalyticOptions& opt) {
  m.validate();
  if (!(m.gamma > 0.0))
    throw std::invalid_argument("correlation needs gamma > 0");
  int d = m.grain.dim;
  auto sc = scaling(m);
  auto s = unit_sigmas(d, sc.gamma_unit, opt);
  return s.sv / std::sqrt(s.dd * s.ss);
}

double chi_kernel(double r, double gamma) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("chi_kernel: r must be > 0");
  check_gamma(gamma);
  double c2 = ball_covariogram(2, r);
  double c1 = r <= 2.0 ? ball_boundary_covariogram(2, r) : 0.0;
  return 4.0 * gamma * gamma * gamma * std::exp(gamma * c2) *
         (gamma * c1 - PI * gamma + 1.0);
}

double chi_tilde_kernel(double r, double gamma) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("chi_tilde_kernel: r must be > 0");
  check_gamma(gamma);
  double c2 = ball_covariogram(2, r);
  double c1 = r <= 2.0 ? ball_boundary_covariogram(2, r) : 0.0;
  return gamma * gamma * std::exp(gamma * c2) *
         (3.0 * PI * gamma - 2.0 * c1 * gamma - 1.0);
}

namespace {

// Integral of kernel(xi) sin^2(phi) over phi in [0, pi], s in [0, 1];
// the pair-measure weight in the plane after the cosine substitution.
template <class K>
double plane_pair_integral(K&& kernel, const AnalyticOptions& opt) {
  auto r = integrate_2d(
      [&](double phi, double s) {
        double cphi = std::cos(phi), sphi = std::sin(phi);
        double xi = xi_of(cphi, sphi * sphi * s * s);
        return kernel(xi) * sphi * sphi;
      },
      0.0, PI, 0.0, 1.0, opts_2d(opt));
  return r.value;
}

} // namespace

double sigma_2d(int i, int j, double gamma, const AnalyticOptions& opt) {
  if (i < 0 || i > 2 || j < 0 || j > 2)
    throw std::invalid_argument("sigma_2d: indices must be in 0..2");
  check_gamma(gamma);
  if (i > j) std::swap(i, j);
  if (gamma == 0.0) return 0.0;
  double p = -std::expm1(-gamma * PI);
  double q = (1.0 - p) * (1.0 - p);
  if (i == 0 && j == 0) {
    double f = f_integral(2, gamma, opt);
    double ichi = plane_pair_integral(
        [&](double xi) { return chi_kernel(xi, gamma); }, opt);
    double k = k_integral(2, gamma, opt);
    return (1.0 - 2.0 * p) * (1.0 - p) * gamma +
           (1.0 - p) * (2.0 * p - 3.0) * gamma * gamma * PI +
           q * gamma * gamma * (1.0 - PI * gamma) * (1.0 - PI * gamma) * f +
           q * 2.0 * PI * ichi + q * 4.0 * PI * gamma * gamma * gamma * k;
  }
  if (i == 0 && j == 1) {
    double f = f_integral(2, gamma, opt);
    double ichit = plane_pair_integral(
        [&](double xi) { return chi_tilde_kernel(xi, gamma); }, opt);
    double k = k_integral(2, gamma, opt);
    return q * gamma * PI + q * gamma * gamma * PI * (1.0 - PI * gamma) * f +
           q * 2.0 * PI * ichit - q * 2.0 * PI * gamma * gamma * k;
  }
  if (i == 0 && j == 2) {
    double f = f_integral(2, gamma, opt);
    double g = g_integral(2, gamma, opt);
    return p * (1.0 - p) - q * gamma * (1.0 - PI * gamma) * f -
           q * 2.0 * gamma * gamma * PI * g;
  }
  if (i == 1 && j == 1)
    return unit_sigmas(2, gamma, opt).ss;
  if (i == 1 && j == 2)
    return unit_sigmas(2, gamma, opt).sv;
  return q * f_integral(2, gamma, opt);
}

double sigma_2d(int i, int j, const ModelParams& m, const AnalyticOptions& opt) {
  m.validate();
  if (m.grain.dim != 2)
    throw std::invalid_argument("sigma_2d: grain must be planar");
  auto sc = scaling(m);
  double r = m.grain.radius();
  return sc.factor(i, j, 2, r) * sigma_2d(i, j, sc.gamma_unit, opt);
}

double correlation_2d(int i, int j, double gamma, const AnalyticOptions& opt) {
  if (!(gamma > 0.0)) throw std::invalid_argument("correlation needs gamma > 0");
  Matrix3 s = sigma_matrix_2d(gamma, opt);
  return s(i, j) / std::sqrt(s(i, i) * s(j, j));
}

Matrix3 sigma_matrix_2d(double gamma, const AnalyticOptions& opt) {
  check_gamma(gamma);
  Matrix3 out;
  if (gamma == 0.0) return out;
  // shared integrals once
  double f = f_integral(2, gamma, opt);
  double g = g_integral(2, gamma, opt);
  double h = h_integral(2, gamma, opt);
  double k = k_integral(2, gamma, opt);
  double ichi = plane_pair_integral(
      [&](double xi) { return chi_kernel(xi, gamma); }, opt);
  double ichit = plane_pair_integral(
      [&](double xi) { return chi_tilde_kernel(xi, gamma); }, opt);
  double p = -std::expm1(-gamma * PI);
  double q = (1.0 - p) * (1.0 - p);
  double g3 = gamma * gamma * gamma;
  out(0, 0) = (1.0 - 2.0 * p) * (1.0 - p) * gamma +
              (1.0 - p) * (2.0 * p - 3.0) * gamma * gamma * PI +
              q * gamma * gamma * (1.0 - PI * gamma) * (1.0 - PI * gamma) * f +
              q * 2.0 * PI * ichi + q * 4.0 * PI * g3 * k;
  out(0, 1) = q * gamma * PI + q * gamma * gamma * PI * (1.0 - PI * gamma) * f +
              q * 2.0 * PI * ichit - q * 2.0 * PI * gamma * gamma * k;
  out(0, 2) = p * (1.0 - p) - q * gamma * (1.0 - PI * gamma) * f -
              q * 2.0 * gamma * gamma * PI * g;
  out(1, 1) = q * gamma * gamma * PI * (PI * f - 2.0 * PI * g + 2.0 * h) +
              q * gamma * PI * k;
  out(1, 2) = q * gamma * PI * (g - f);
  out(2, 2) = q * f;
  out(1, 0) = out(0, 1);
  out(2, 0) = out(0, 2);
  out(2, 1) = out(1, 2);
  return out;
}

Matrix3 rho_unit_disk(double gamma, const AnalyticOptions& opt) {
  check_gamma(gamma);
  double egp = std::exp(gamma * PI);
  Matrix3 r;
  r(0, 0) = egp * (gamma + gamma * gamma * PI);
  r(0, 1) = egp * gamma * PI;
  r(0, 2) = egp - 1.0;
  r(1, 1) = 2.0 * PI * gamma * gamma * h_integral(2, gamma, opt) +
            PI * gamma * k_integral(2, gamma, opt);
  r(1, 2) = gamma * PI * g_integral(2, gamma, opt);
  r(2, 2) = f_integral(2, gamma, opt);
  r(1, 0) = r(0, 1);
  r(2, 0) = r(0, 2);
  r(2, 1) = r(1, 2);
  return r;
}

Matrix3 sigma_from_rho(double gamma, const Matrix3& rho) {
  check_gamma(gamma);
  const double t[2] = {gamma, gamma * PI};
  std::span<const double> ts(t, 2);
  double P[3][3];
  for (int i = 0; i <= 2; ++i)
    for (int k = i; k <= 2; ++k) P[i][k] = moment_polynomial(2, i, k, ts);
  double p = -std::expm1(-gamma * PI);
  double q = (1.0 - p) * (1.0 - p);
  Matrix3 out;
  for (int i = 0; i <= 2; ++i)
    for (int j = i; j <= 2; ++j) {
      double acc = 0.0;
      for (int k = i; k <= 2; ++k)
        for (int l = j; l <= 2; ++l) acc += P[i][k] * P[j][l] * rho(k, l);
      out(i, j) = q * acc;
      out(j, i) = out(i, j);
    }
  return out;
}

double moment_polynomial(int d, int j, int l, std::span<const double> t) {
  if (d < 1 || j < 0 || l < j || l > d)
    throw std::invalid_argument("moment_polynomial: need 0 <= j <= l <= d");
  if (static_cast<int>(t.size()) != d)
    throw std::invalid_argument("moment_polynomial: t must have d entries");
  if (l == j) return 1.0;
  // ordered tuples (m_1..m_s), entries in [j, d-1], summing to `target`;
  // each factor contributes c^{m}_{d} t_m.
  auto tuple_sum = [&](int slots, int target) {
    double acc = 0.0;
    auto rec = [&](auto&& self, int remaining, int need, double prod) -> void {
      if (remaining == 0) {
        if (need == 0) acc += prod;
        return;
      }
      for (int m = j; m <= d - 1; ++m) {
        int rest = need - m;
        if (rest < (remaining - 1) * j) break;
        if (rest > (remaining - 1) * (d - 1)) continue;
        self(self, remaining - 1, rest, prod * flag_coefficient(m, d) * t[m]);
      }
    };
    rec(rec, slots, target, 1.0);
    return acc;
  };
  double sum = 0.0, fact = 1.0;
  for (int s = 1; s <= l - j; ++s) {
    fact *= s;
    double sgn = (s % 2) ? -1.0 : 1.0;
    sum += sgn / fact * tuple_sum(s, s * d + j - l);
  }
  return flag_coefficient(l, j) * sum;
}

double mean_polynomial(int d, int j, std::span<const double> t) {
  if (d < 1 || j < 0 || j > d)
    throw std::invalid_argument("mean_polynomial: need 0 <= j <= d");
  if (static_cast<int>(t.size()) != d)
    throw std::invalid_argument("mean_polynomial: t must have d entries");
  auto tuple_sum = [&](int slots, int target) {
    double acc = 0.0;
    auto rec = [&](auto&& self, int remaining, int need, double prod) -> void {
      if (remaining == 0) {
        if (need == 0) acc += prod;
        return;
      }
      for (int m = j; m <= d - 1; ++m) {
        int rest = need - m;
        if (rest < (remaining - 1) * j) break;
        if (rest > (remaining - 1) * (d - 1)) continue;
        self(self, remaining - 1, rest, prod * flag_coefficient(m, d) * t[m]);
      }
    };
    rec(rec, slots, target, 1.0);
    return acc;
  };
  double sum = 0.0, fact = 1.0;
  for (int l = 1; l <= d - j; ++l) {
    fact *= l;
    sum += tuple_sum(l, (l - 1) * d + j) / fact;
  }
  return flag_coefficient(d, j) * sum;
}

double mean_value(int i, const ModelParams& m, const Window& w) {
  m.validate();
  w.validate();
  int d = m.grain.dim;
  if (w.dim != d) throw std::invalid_argument("mean_value: window/grain dimension mismatch");
  if (i < 0 || i > d) throw std::invalid_argument("mean_value: index out of range");
  std::vector<double> t(d);
  for (int k = 0; k < d; ++k) t[k] = m.gamma * m.grain.moment(k);
  double p = volume_fraction(m.gamma, m.grain);
  double acc = 0.0;
  for (int k = i; k <= d; ++k)
    acc += w.intrinsic_volume(k) * moment_polynomial(d, i, k, t);
  return w.intrinsic_volume(i) - (1.0 - p) * acc;
}

double mean_density(int i, const ModelParams& m) {
  m.validate();
  int d = m.grain.dim;
  if (i < 0 || i > d) throw std::invalid_argument("mean_density: index out of range");
  double p = volume_fraction(m.gamma, m.grain);
  if (i == d) return p;
  std::vector<double> t(d);
  for (int k = 0; k < d; ++k) t[k] = m.gamma * m.grain.moment(k);
  return -(1.0 - p) * moment_polynomial(d, i, d, t);
}

double exact_volume_variance(const ModelParams& m, const Window& w,
                             const AnalyticOptions& opt) {
  m.validate();
  w.validate();
  int d = m.grain.dim;
  if (w.dim != d)
    throw std::invalid_argument("exact_volume_variance: window/grain dimension mismatch");
  double p = volume_fraction(m.gamma, m.grain);
  double q = (1.0 - p) * (1.0 - p);
  double reach = 2.0 * m.grain.max_radius();
  auto r = integrate(
      [&](double t) {
        return w.isotropized_set_covariance(t) *
               std::expm1(m.gamma * m.grain.covariogram(t)) *
               std::pow(t, d - 1);
      },
      0.0, reach, opts_1d(opt));
  return q * sphere_surface(d) * r.value;
}

Matrix3 finite_window_covariance_2d(const ModelParams& m, const Window& w,
                                    const AnalyticOptions& opt) {
  m.validate();
  w.validate();
  if (m.grain.dim != 2 || w.dim != 2)
    throw std::invalid_argument("finite_window_covariance_2d: planar model only");
  if (!m.grain.deterministic())
    throw std::invalid_argument("finite_window_covariance_2d: deterministic grain only");
  if (w.shape != Window::Shape::box)
    throw std::invalid_argument("finite_window_covariance_2d: box window only");
  double r = m.grain.radius();
  double a = w.sides[0] / r, b = w.sides[1] / r;
  if (std::min(a, b) < 2.0)
    throw std::invalid_argument(
        "finite_window_covariance_2d: window sides must be >= grain diameter");
  double gamma = m.gamma * r * r;

  const auto& cov = covariogram_table(2);
  auto expc = [&](double t) { return std::exp(gamma * cov(t)); };
  auto expm = [&](double t) { return std::expm1(gamma * cov(t)); };
  // isotropized set covariance and its boundary analogue for [0,a]x[0,b],
  // valid on t <= min(a,b) which covers the grain reach t <= 2
  auto chat = [&](double t) { return a * b - 2.0 / PI * t * (a + b) + t * t / PI; };
  auto phihat = [&](double t) { return 0.5 * ((a + b) - 4.0 / PI * t); };

  double egp = std::exp(gamma * PI);
  double V2 = a * b, V1 = a + b;

  Matrix3 rho;
  rho(0, 0) = V2 * egp * (gamma + gamma * gamma * PI) + 2.0 * gamma * egp * V1 +
              (egp - 1.0);
  rho(0, 1) = V2 * egp * gamma * PI + V1 * (egp - 1.0);
  rho(0, 2) = V2 * (egp - 1.0);

  auto q1 = integrate([&](double t) { return chat(t) * expm(t) * t; }, 0.0, 2.0,
                      opts_1d(opt));
  rho(2, 2) = 2.0 * PI * q1.value;

  auto pair_cw = integrate_2d(
      [&](double phi, double s) {
        double cphi = std::cos(phi), sphi = std::sin(phi);
        double xi = xi_of(cphi, sphi * sphi * s * s);
        return chat(xi) * expc(xi) * sphi * sphi;
      },
      0.0, PI, 0.0, 1.0, opts_2d(opt));
  auto edge12 = integrate(
      [&](double t) { return ((a + b) - 4.0 / PI * t) * expm(t) * t; }, 0.0,
      2.0, opts_1d(opt));
  rho(1, 2) = 2.0 * PI * gamma * pair_cw.value + PI * edge12.value;

  auto pair_cw_bdry = integrate_2d(
      [&](double phi, double s) {
        double cphi = std::cos(phi), sphi = std::sin(phi);
        double xi = xi_of(cphi, sphi * sphi * s * s);
        return chat(xi) * expc(xi) * bc_boundary(2, xi) * sphi * sphi;
      },
      0.0, PI, 0.0, 1.0, opts_2d(opt));
  auto circle_pair = integrate(
      [&](double theta) {
        double xi = 2.0 * std::sin(0.5 * theta);
        return chat(xi) * expc(xi);
      },
      0.0, PI, opts_1d(opt));
  auto pair_phihat = integrate_2d(
      [&](double phi, double s) {
        double cphi = std::cos(phi), sphi = std::sin(phi);
        double xi = xi_of(cphi, sphi * sphi * s * s);
        return phihat(xi) * expc(xi) * sphi * sphi;
      },
      0.0, PI, 0.0, 1.0, opts_2d(opt));
  auto same_edge = integrate(
      [&](double u) { return ((a - u) + (b - u)) * expm(u); }, 0.0, 2.0,
      opts_1d(opt));
  auto corner = integrate([&](double u) { return expm(u) * u; }, 0.0, 2.0,
                          opts_1d(opt));
  rho(1, 1) = 2.0 * PI * gamma * gamma * pair_cw_bdry.value +
              gamma * PI * circle_pair.value +
              4.0 * PI * gamma * pair_phihat.value + same_edge.value +
              PI * corner.value;

  rho(1, 0) = rho(0, 1);
  rho(2, 0) = rho(0, 2);
  rho(2, 1) = rho(1, 2);

  Matrix3 unit = sigma_from_rho(gamma, rho);
  // undo the unit-grain rescaling: Cov picks up r^{i+j} entrywise
  Matrix3 out;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) out(i, j) = unit(i, j) * scale_pow(r, i + j);
  return out;
}

std::vector<RatePoint> variance_rate_curve(const ModelParams& m,
                                           std::span<const double> Ls,
                                           const AnalyticOptions& opt) {
  m.validate();
  int d = m.grain.dim;
  double sdd = sigma_vol_vol(m, opt);
  std::vector<RatePoint> out;
  out.reserve(Ls.size());
  for (double L : Ls) {
    Window w = Window::cube(d, L);
    double var = exact_volume_variance(m, w, opt);
    RatePoint pt;
    pt.L = L;
    pt.deviation = std::abs(var / w.volume() - sdd);
    pt.scaled = pt.deviation * w.inradius();
    out.push_back(pt);
  }
  return out;
}

bool positive_definite(const Matrix3& a) {
  // Cholesky on the symmetric 3x3
  double l[3][3] = {};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (!(s > 0.0)) return false;
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return true;
}

} // namespace boolcov
