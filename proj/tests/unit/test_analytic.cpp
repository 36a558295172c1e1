#include <doctest.h>

#include <boolcov/analytic.hpp>
#include <boolcov/quadrature.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace boolcov;

namespace {

const double PI = 3.14159265358979323846;

// Reference values computed independently with scipy.integrate.quad /
// dblquad on the same substituted integrands (rel tol 1e-12).
struct Frozen {
  int d;
  double gamma;
  double f, g, h, k;
};

const Frozen integral_table[] = {
    {2, 0.5, 7.4306684435523405, 5.823129091061748, 3.059348869282869,
     5.68855872859398},
    {2, 1.0, 25.062781369617664, 12.657950317329856, 7.360519446167879,
     13.511713987498199},
    {3, 1.0, 44.94978753206455, 17.55957586172323, 5.22994650059455,
     8.164814680564337},
};

// sigma_2d(i, j) at gamma = 0.5 and 1.0, same source.
const double sigma_half[3][3] = {
    {0.10246902883866293, 0.06382464977133062, -0.1389661636387895},
    {0.06382464977133062, 0.14431851352228806, -0.1091201957582544},
    {-0.1389661636387895, -0.1091201957582544, 0.3211082987648627}};
const double sigma_one[3][3] = {
    {0.054077021036323336, -0.01466306723058411, -0.006941819395362481},
    {-0.01466306723058411, 0.1609691227422997, -0.07277597269877109},
    {-0.006941819395362481, -0.07277597269877109, 0.04680330890507901}};

} // namespace

TEST_CASE("f_integral closed form in one dimension") {
  for (double g : {0.3, 0.7, 1.5}) {
    double expect = 2.0 * ((std::exp(2.0 * g) - 1.0) / g - 2.0);
    CHECK(f_integral(1, g) == doctest::Approx(expect).epsilon(1e-11));
  }
}

TEST_CASE("unit ball integrals against reference values") {
  for (const auto& row : integral_table) {
    CAPTURE(row.d);
    CAPTURE(row.gamma);
    CHECK(f_integral(row.d, row.gamma) == doctest::Approx(row.f).epsilon(1e-9));
    CHECK(g_integral(row.d, row.gamma) == doctest::Approx(row.g).epsilon(1e-7));
    CHECK(h_integral(row.d, row.gamma) == doctest::Approx(row.h).epsilon(1e-7));
    CHECK(k_integral(row.d, row.gamma) == doctest::Approx(row.k).epsilon(1e-9));
  }
}

TEST_CASE("integrals degenerate cleanly at gamma = 0") {
  CHECK(f_integral(2, 0.0) == doctest::Approx(0.0).scale(1e-12));
  CHECK(g_integral(2, 0.0) == doctest::Approx(PI).epsilon(1e-9));
  CHECK(k_integral(2, 0.0) == doctest::Approx(PI).epsilon(1e-11));
  CHECK(k_integral(3, 0.0) == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("asymptotic densities for general dimension") {
  struct Row {
    int d;
    double vv, sv, ss;
  };
  const Row rows[] = {
      {3, 0.010336909158510585, -0.03957658466665333, 0.17379311109678486},
      {4, 0.0028555890012133853, -0.019168794752669572, 0.137911454384912},
      {5, 0.0013812963333381275, -0.013206578611772182, 0.13119566991748882},
      {6, 0.001320641149745385, -0.015381801277722602, 0.18311841873488716},
  };
  for (const auto& r : rows) {
    CAPTURE(r.d);
    auto m = ModelParams::make(r.d, 1.0);
    CHECK(sigma_vol_vol(m) == doctest::Approx(r.vv).epsilon(1e-8));
    CHECK(sigma_surf_vol(m) == doctest::Approx(r.sv).epsilon(1e-6));
    CHECK(sigma_surf_surf(m) == doctest::Approx(r.ss).epsilon(1e-6));
  }
  auto m3 = ModelParams::make(3, 1.0);
  CHECK(correlation_surf_vol(m3) ==
        doctest::Approx(-0.9337415498744347).epsilon(1e-6));
  CHECK(sigma_surf_vol(ModelParams::make(3, 0.5)) ==
        doctest::Approx(-0.2561428357378106).epsilon(1e-6));
}

TEST_CASE("planar covariance matrix entries") {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(sigma_2d(i, j, 0.5) ==
            doctest::Approx(sigma_half[i][j]).epsilon(1e-7));
      CHECK(sigma_2d(i, j, 1.0) ==
            doctest::Approx(sigma_one[i][j]).epsilon(1e-7));
    }
  // the d = 2 specializations agree with the general-dimension path
  auto m = ModelParams::make(2, 0.8);
  CHECK(sigma_vol_vol(m) == doctest::Approx(sigma_2d(2, 2, 0.8)).epsilon(1e-9));
  CHECK(sigma_surf_vol(m) == doctest::Approx(sigma_2d(1, 2, 0.8)).epsilon(1e-8));
  CHECK(sigma_surf_surf(m) == doctest::Approx(sigma_2d(1, 1, 0.8)).epsilon(1e-8));

  Matrix3 s = sigma_matrix_2d(0.5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(s(i, j) == doctest::Approx(sigma_half[i][j]).epsilon(1e-7));
  CHECK(positive_definite(s));

  CHECK(correlation_2d(0, 1, 0.5) ==
        doctest::Approx(sigma_half[0][1] /
                        std::sqrt(sigma_half[0][0] * sigma_half[1][1]))
            .epsilon(1e-7));
}

TEST_CASE("euler kernels at the contact distance") {
  // C_2(2) = 0 and C_1(2) = 0, so both kernels collapse to polynomials.
  for (double g : {0.3, 1.0, 2.0}) {
    CHECK(chi_kernel(2.0, g) ==
          doctest::Approx(4.0 * g * g * g * (1.0 - PI * g)).epsilon(1e-12));
    CHECK(chi_tilde_kernel(2.0, g) ==
          doctest::Approx(g * g * (3.0 * PI * g - 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("second moment densities of the unit disk model") {
  Matrix3 r = rho_unit_disk(1.0);
  CHECK(r(0, 0) == doctest::Approx(95.83932260689807).epsilon(1e-9));
  CHECK(r(0, 1) == doctest::Approx(72.69862997411879).epsilon(1e-9));
  CHECK(r(0, 2) == doctest::Approx(std::exp(PI) - 1.0).epsilon(1e-12));
  CHECK(r(1, 1) == doctest::Approx(88.69580903790244).epsilon(1e-7));
  CHECK(r(1, 2) == doctest::Approx(39.76612372642807).epsilon(1e-7));
  CHECK(r(2, 2) == doctest::Approx(25.062781369617664).epsilon(1e-9));
  CHECK(r(2, 1) == r(1, 2));

  // assembling sigma from rho reproduces the closed forms
  for (double g : {0.25, 0.5, 1.0}) {
    Matrix3 s = sigma_from_rho(g, rho_unit_disk(g));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double direct = sigma_2d(i, j, g);
        CHECK(s(i, j) ==
              doctest::Approx(direct).epsilon(1e-7).scale(
                  std::max(1.0, std::abs(direct))));
      }
  }
}

TEST_CASE("grain radius enters through exact scaling") {
  double gamma = 0.4, r = 0.7;
  auto scaled = ModelParams::make(2, gamma, r);
  double g_eff = gamma * r * r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double expect = std::pow(r, i + j - 2) * sigma_2d(i, j, g_eff);
      CHECK(sigma_2d(i, j, scaled) == doctest::Approx(expect).epsilon(1e-8));
    }
  auto m3 = ModelParams::make(3, 0.2, 1.3);
  double e3 = std::pow(1.3, 2 * 3 - 3) * sigma_vol_vol(ModelParams::make(3, 0.2 * std::pow(1.3, 3)));
  CHECK(sigma_vol_vol(m3) == doctest::Approx(e3).epsilon(1e-8));
}

TEST_CASE("moment polynomials in the plane") {
  double g = 0.3;
  std::vector<double> t{g, g * PI};  // gamma * (v_0, v_1) of the unit disk
  CHECK(moment_polynomial(2, 0, 0, t) == doctest::Approx(1.0));
  CHECK(moment_polynomial(2, 1, 1, t) == doctest::Approx(1.0));
  CHECK(moment_polynomial(2, 2, 2, t) == doctest::Approx(1.0));
  CHECK(moment_polynomial(2, 0, 1, t) == doctest::Approx(-2.0 * g).epsilon(1e-13));
  CHECK(moment_polynomial(2, 0, 2, t) ==
        doctest::Approx(-g + g * g * PI).epsilon(1e-13));
  CHECK(moment_polynomial(2, 1, 2, t) == doctest::Approx(-g * PI).epsilon(1e-13));
  // P_j assembles the euler row of the second-moment densities:
  // rho_{0,j} = e^{gamma v_2} P_j
  CHECK(mean_polynomial(2, 0, t) == doctest::Approx(g + g * g * PI).epsilon(1e-13));
  CHECK(mean_polynomial(2, 1, t) == doctest::Approx(g * PI).epsilon(1e-13));
  Matrix3 rho = rho_unit_disk(g);
  for (int j = 0; j <= 1; ++j)
    CHECK(rho(0, j) ==
          doctest::Approx(std::exp(g * PI) * mean_polynomial(2, j, t))
              .epsilon(1e-11));
  CHECK_THROWS_AS((void)moment_polynomial(2, 2, 1, t), std::invalid_argument);
  CHECK_THROWS_AS((void)moment_polynomial(2, 0, 3, t), std::invalid_argument);
}

TEST_CASE("mean densities and mean values") {
  auto m = ModelParams::make(2, 0.3);
  double p = volume_fraction(0.3, m.grain);
  double q = 1.0 - p;
  CHECK(mean_density(2, m) == doctest::Approx(p).epsilon(1e-14));
  CHECK(mean_density(1, m) == doctest::Approx(q * 0.3 * PI).epsilon(1e-13));
  CHECK(mean_density(0, m) ==
        doctest::Approx(q * 0.3 * (1.0 - PI * 0.3)).epsilon(1e-13));

  auto m3 = ModelParams::make(3, 0.4);
  double p3 = volume_fraction(0.4, m3.grain);
  CHECK(mean_density(3, m3) == doctest::Approx(p3).epsilon(1e-14));
  CHECK(mean_density(2, m3) ==
        doctest::Approx((1.0 - p3) * 0.4 * 2.0 * PI).epsilon(1e-13));

  auto w = Window::cube(2, 10.0);
  CHECK(mean_value(2, m, w) == doctest::Approx(p * 100.0).epsilon(1e-13));
  CHECK(mean_value(1, m, w) ==
        doctest::Approx(48.93147424952804).epsilon(1e-12));
  CHECK(mean_value(0, m, w) ==
        doctest::Approx(5.958697533278724).epsilon(1e-12));

  // density is the large-window limit of the value per unit volume
  auto big = Window::cube(2, 400.0);
  CHECK(mean_value(0, m, big) / big.volume() ==
        doctest::Approx(mean_density(0, m)).epsilon(2e-2));

  CHECK_THROWS_AS((void)mean_value(1, m, Window::cube(3, 5.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)mean_value(3, m, w), std::invalid_argument);
  CHECK_THROWS_AS((void)mean_density(-1, m), std::invalid_argument);
}

TEST_CASE("exact volume variance") {
  // d = 1: closed covariogram 2 - t and set covariance L - t
  auto m1 = ModelParams::make(1, 0.5);
  auto w1 = Window::box_of({50.0});
  CHECK(exact_volume_variance(m1, w1) ==
        doctest::Approx(19.205445075004103).epsilon(1e-9));

  auto m2 = ModelParams::make(2, 0.3);
  auto w2 = Window::cube(2, 10.0);
  double vv = exact_volume_variance(m2, w2);
  CHECK(vv == doctest::Approx(50.7534615011179).epsilon(1e-9));

  auto wb = Window::ball_of(2, 4.0);
  CHECK(exact_volume_variance(ModelParams::make(2, 0.25), wb) ==
        doctest::Approx(26.957748247419502).epsilon(1e-9));

  // the finite-window matrix reproduces the same number in slot (2, 2)
  Matrix3 c = finite_window_covariance_2d(m2, w2);
  CHECK(c(2, 2) == doctest::Approx(vv).epsilon(1e-9));
}

TEST_CASE("finite window covariances against reference values") {
  auto m = ModelParams::make(2, 0.2);
  Matrix3 c = finite_window_covariance_2d(m, Window::cube(2, 8.0));
  CHECK(c(0, 0) == doctest::Approx(4.018321685050301).epsilon(1e-6));
  CHECK(c(0, 1) == doctest::Approx(1.6559223896654212).epsilon(1e-6));
  CHECK(c(0, 2) == doctest::Approx(-3.857582526558584).epsilon(1e-6));
  CHECK(c(1, 1) == doctest::Approx(18.16901856423336).epsilon(1e-6));
  CHECK(c(1, 2) == doctest::Approx(19.969544140961037).epsilon(1e-6));
  CHECK(c(2, 2) == doctest::Approx(36.22753074392922).epsilon(1e-8));
  CHECK(c(1, 0) == c(0, 1));

  Matrix3 r = finite_window_covariance_2d(m, Window::box_of({8.0, 6.0}));
  CHECK(r(0, 0) == doctest::Approx(3.164574418142943).epsilon(1e-6));
  CHECK(r(1, 2) == doctest::Approx(15.089687036799514).epsilon(1e-6));
  CHECK(r(2, 2) == doctest::Approx(26.49293335374227).epsilon(1e-8));

  CHECK_THROWS(finite_window_covariance_2d(m, Window::ball_of(2, 5.0)));
}

TEST_CASE("finite window covariance approaches the asymptotic density") {
  auto m = ModelParams::make(2, 0.5);
  double L = 80.0;
  Matrix3 c = finite_window_covariance_2d(m, Window::cube(2, L));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double lim = sigma_2d(i, j, 0.5);
      // deviation decays like 1/L; at L = 80 a 5 percent window is ample
      CHECK(c(i, j) / (L * L) ==
            doctest::Approx(lim).epsilon(0.05).scale(
                std::max(0.05, std::abs(lim))));
    }
}

TEST_CASE("variance rate curve scales like the inverse inradius") {
  auto m = ModelParams::make(2, 0.3);
  std::vector<double> Ls{8.0, 16.0, 32.0};
  auto pts = variance_rate_curve(m, Ls);
  REQUIRE(pts.size() == 3);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].L == Ls[i]);
    CHECK(pts[i].deviation > 0.0);
    CHECK(pts[i].scaled == doctest::Approx(pts[i].deviation * Ls[i] / 2.0));
  }
  // scaled deviation settles to a constant, so consecutive ratios are ~1
  CHECK(pts[1].scaled / pts[0].scaled == doctest::Approx(1.0).epsilon(0.15));
  CHECK(pts[2].scaled / pts[1].scaled == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("model parameter validation") {
  CHECK_THROWS_AS(ModelParams::make(2, -0.5).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams::make(0, 1.0).validate(), std::invalid_argument);
  CHECK_NOTHROW(ModelParams::make(2, 0.0).validate());
}
