#include <doctest.h>

#include <boolcov/geometry.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace boolcov;

namespace {

const double PI = 3.14159265358979323846;

// Composite Simpson, enough for oracle-grade accuracy on smooth integrands.
template <class F>
double simpson(F f, double a, double b, int n = 4000) {
  double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Slice integral for the covariogram of a unit ball: the intersection of two
// balls at distance t is twice the cap of height 1 - t/2.
// Integrated in x = sin(phi) to keep the integrand smooth at the pole.
double cap_slice_covariogram(int d, double t) {
  return 2.0 * simpson(
                   [d](double phi) {
                     return kappa(d - 1) * std::pow(std::cos(phi), d);
                   },
                   std::asin(0.5 * t), 0.5 * PI, 8000);
}

} // namespace

TEST_CASE("unit ball volumes") {
  CHECK(kappa(0) == 1.0);
  CHECK(kappa(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(kappa(2) == doctest::Approx(PI).epsilon(1e-15));
  CHECK(kappa(3) == doctest::Approx(4.0 * PI / 3.0).epsilon(1e-15));
  CHECK(kappa(6) == doctest::Approx(PI * PI * PI / 6.0).epsilon(1e-14));
  CHECK(sphere_surface(2) == doctest::Approx(2.0 * PI).epsilon(1e-15));
  CHECK(sphere_surface(3) == doctest::Approx(4.0 * PI).epsilon(1e-15));
}

TEST_CASE("flag coefficients") {
  // c^m_j = m! kappa_m / (j! kappa_j)
  CHECK(flag_coefficient(0, 0) == doctest::Approx(1.0));
  CHECK(flag_coefficient(2, 2) == doctest::Approx(1.0));
  CHECK(flag_coefficient(2, 1) == doctest::Approx(2.0 * PI / 2.0).epsilon(1e-15));
  CHECK(flag_coefficient(1, 2) == doctest::Approx(2.0 / (2.0 * PI)).epsilon(1e-15));
  CHECK(flag_coefficient(3, 0) == doctest::Approx(6.0 * kappa(3)).epsilon(1e-14));
}

TEST_CASE("intrinsic volumes of balls and boxes") {
  auto disk = ball_intrinsic_volumes(2, 1.0);
  REQUIRE(disk.size() == 3);
  CHECK(disk[0] == doctest::Approx(1.0));
  CHECK(disk[1] == doctest::Approx(PI).epsilon(1e-15));
  CHECK(disk[2] == doctest::Approx(PI).epsilon(1e-15));

  auto ball3 = ball_intrinsic_volumes(3, 1.0);
  REQUIRE(ball3.size() == 4);
  CHECK(ball3[1] == doctest::Approx(4.0).epsilon(1e-14));       // 3 kappa_3 / kappa_2
  CHECK(ball3[2] == doctest::Approx(2.0 * PI).epsilon(1e-14));  // half the surface
  CHECK(ball3[3] == doctest::Approx(4.0 * PI / 3.0).epsilon(1e-15));

  // V_j scales with r^j.
  auto scaled = ball_intrinsic_volumes(3, 2.5);
  for (int j = 0; j <= 3; ++j)
    CHECK(scaled[j] == doctest::Approx(ball3[j] * std::pow(2.5, j)).epsilon(1e-13));

  std::vector<double> sq{1.0, 1.0};
  auto vsq = box_intrinsic_volumes(sq);
  CHECK(vsq[0] == 1.0);
  CHECK(vsq[1] == doctest::Approx(2.0));
  CHECK(vsq[2] == doctest::Approx(1.0));

  std::vector<double> cube{1.0, 1.0, 1.0};
  auto vc = box_intrinsic_volumes(cube);
  CHECK(vc[1] == doctest::Approx(3.0));
  CHECK(vc[2] == doctest::Approx(3.0));
  CHECK(vc[3] == doctest::Approx(1.0));

  std::vector<double> box{2.0, 3.0, 5.0};
  auto vb = box_intrinsic_volumes(box);
  CHECK(vb[1] == doctest::Approx(10.0));
  CHECK(vb[2] == doctest::Approx(2 * 3 + 3 * 5 + 5 * 2.0));
  CHECK(vb[3] == doctest::Approx(30.0));
}

TEST_CASE("sin power integrals") {
  CHECK(sin_power_integral(0, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(sin_power_integral(1, 0.7) ==
        doctest::Approx(1.0 - std::cos(0.7)).epsilon(1e-15));
  for (int n = 2; n <= 7; ++n) {
    for (double phi : {0.3, 1.2, 0.5 * PI}) {
      double direct = simpson(
          [n](double x) { return std::pow(std::sin(x), n); }, 0.0, phi);
      CHECK(sin_power_integral(n, phi) ==
            doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("ball covariogram") {
  CHECK(ball_covariogram(1, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(ball_covariogram(1, 2.0) == 0.0);
  CHECK(ball_covariogram(2, 0.0) == doctest::Approx(PI).epsilon(1e-14));
  CHECK(ball_covariogram(2, 1.0) ==
        doctest::Approx(1.2283696986087567).epsilon(1e-14));
  // d = 3 closed form kappa_3 (1 - 3t/4 + t^3/16)
  for (double t : {0.2, 1.0, 1.7}) {
    double expect = kappa(3) * (1.0 - 0.75 * t + t * t * t / 16.0);
    CHECK(ball_covariogram(3, t) == doctest::Approx(expect).epsilon(1e-13));
  }
  for (int d = 2; d <= 6; ++d) {
    for (double t : {0.1, 0.7, 1.3, 1.9}) {
      CHECK(ball_covariogram(d, t) ==
            doctest::Approx(cap_slice_covariogram(d, t)).epsilon(1e-9));
    }
    CHECK(ball_covariogram(d, 2.0) == 0.0);
    CHECK(ball_covariogram(d, 3.0) == 0.0);
  }
  CHECK_THROWS_AS((void)ball_covariogram(2, -0.1), std::invalid_argument);
}

TEST_CASE("boundary covariogram") {
  CHECK(ball_boundary_covariogram(2, 1.0) ==
        doctest::Approx(std::acos(0.5)).epsilon(1e-15));
  for (double t : {0.2, 0.9, 1.6}) {
    CHECK(ball_boundary_covariogram(2, t) ==
          doctest::Approx(std::acos(0.5 * t)).epsilon(1e-14));
    CHECK(ball_boundary_covariogram(3, t) ==
          doctest::Approx(PI * (1.0 - 0.5 * t)).epsilon(1e-14));
  }
  // t -> 0+ tends to half the boundary measure V_{d-1}(B^d).
  CHECK(ball_boundary_covariogram(3, 1e-12) ==
        doctest::Approx(PI).epsilon(1e-11));
  CHECK_THROWS_AS((void)ball_boundary_covariogram(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)ball_boundary_covariogram(2, 2.5), std::invalid_argument);
  CHECK_THROWS_AS((void)ball_boundary_covariogram(1, 1.0), std::invalid_argument);
}

TEST_CASE("covariogram table matches the exact function") {
  for (int d = 2; d <= 6; ++d) {
    const CovariogramTable& tab = covariogram_table(d);
    CHECK(tab.dim() == d);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      double t = 2.0 * i / 1000;
      worst = std::max(worst, std::abs(tab(t) - ball_covariogram(d, t)));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("grain spec moments and scaling") {
  auto g = GrainSpec::ball(2, 1.0);
  CHECK(g.deterministic());
  CHECK(g.radius() == 1.0);
  CHECK(g.max_radius() == 1.0);
  CHECK(g.moment(0) == doctest::Approx(1.0));
  CHECK(g.moment(1) == doctest::Approx(PI).epsilon(1e-15));
  CHECK(g.moment(2) == doctest::Approx(PI).epsilon(1e-15));
  CHECK(g.mean_volume() == doctest::Approx(PI).epsilon(1e-15));

  auto h = GrainSpec::ball(2, 0.5);
  CHECK(h.covariogram(0.5) ==
        doctest::Approx(0.25 * ball_covariogram(2, 1.0)).epsilon(1e-14));
  CHECK(h.boundary_covariogram(0.5) ==
        doctest::Approx(0.5 * ball_boundary_covariogram(2, 1.0)).epsilon(1e-14));
  CHECK(h.covariogram(1.0) == 0.0);

  auto mix = GrainSpec::mixture(2, {{1.0, 0.25}, {2.0, 0.75}});
  CHECK_FALSE(mix.deterministic());
  CHECK(mix.max_radius() == 2.0);
  CHECK(mix.moment(2) ==
        doctest::Approx(0.25 * PI + 0.75 * 4.0 * PI).epsilon(1e-14));
  CHECK(mix.covariogram(1.0) ==
        doctest::Approx(0.25 * ball_covariogram(2, 1.0) +
                        0.75 * 4.0 * ball_covariogram(2, 0.5))
            .epsilon(1e-13));

  CHECK_THROWS_AS(GrainSpec::ball(2, -1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GrainSpec::mixture(2, {{1.0, 0.4}, {2.0, 0.4}}).validate(),
                  std::invalid_argument);
}

TEST_CASE("volume fraction and two point coverage") {
  auto g = GrainSpec::ball(2, 1.0);
  double gamma = 0.3;
  double p = volume_fraction(gamma, g);
  CHECK(p == doctest::Approx(1.0 - std::exp(-gamma * PI)).epsilon(1e-15));

  // Coincident points recover p, far points decorrelate to p^2.
  CHECK(two_point_coverage(gamma, g, 0.0) == doctest::Approx(p).epsilon(1e-13));
  CHECK(two_point_coverage(gamma, g, 2.0) ==
        doctest::Approx(p * p).epsilon(1e-13));
  CHECK(two_point_coverage(gamma, g, 5.0) ==
        doctest::Approx(p * p).epsilon(1e-13));
  double q = 1.0 - p;
  double expect = p * p + q * q * std::expm1(gamma * g.covariogram(0.8));
  CHECK(two_point_coverage(gamma, g, 0.8) ==
        doctest::Approx(expect).epsilon(1e-13));

  auto mix = GrainSpec::mixture(2, {{0.5, 0.5}, {1.5, 0.5}});
  double pm = volume_fraction(0.2, mix);
  CHECK(pm == doctest::Approx(1.0 - std::exp(-0.2 * mix.mean_volume()))
                  .epsilon(1e-15));
}

TEST_CASE("windows") {
  auto w = Window::cube(2, 4.0);
  CHECK(w.volume() == doctest::Approx(16.0));
  CHECK(w.intrinsic_volume(0) == doctest::Approx(1.0));
  CHECK(w.intrinsic_volume(1) == doctest::Approx(8.0));
  CHECK(w.inradius() == doctest::Approx(2.0));

  auto b = Window::ball_of(2, 3.0);
  CHECK(b.volume() == doctest::Approx(9.0 * PI).epsilon(1e-15));
  CHECK(b.intrinsic_volume(1) == doctest::Approx(3.0 * PI).epsilon(1e-15));
  CHECK(b.inradius() == doctest::Approx(3.0));

  auto wd = w.dilated(1.5);
  CHECK(wd.volume() == doctest::Approx(7.0 * 7.0));
  auto bd = b.dilated(0.5);
  CHECK(bd.inradius() == doctest::Approx(3.5));

  CHECK_THROWS_AS(Window::box_of({2.0, -1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Window::ball_of(2, 0.0).validate(), std::invalid_argument);
}

TEST_CASE("set covariance of boxes and balls") {
  auto w = Window::box_of({3.0, 2.0});
  std::vector<double> x{0.5, 0.25};
  CHECK(w.set_covariance(x) == doctest::Approx(2.5 * 1.75).epsilon(1e-15));
  std::vector<double> far{3.5, 0.0};
  CHECK(w.set_covariance(far) == 0.0);

  // Isotropized value is the angular average of the directional one.
  for (double t : {0.3, 1.1, 1.9}) {
    double avg = simpson(
                     [&](double th) {
                       std::vector<double> v{t * std::cos(th), t * std::sin(th)};
                       return w.set_covariance(v);
                     },
                     0.0, 2.0 * PI) /
                 (2.0 * PI);
    CHECK(w.isotropized_set_covariance(t) ==
          doctest::Approx(avg).epsilon(1e-9));
  }
  // Below the shortest side the box value has the quadratic closed form.
  double a = 3.0, bside = 2.0, t = 1.4;
  CHECK(w.isotropized_set_covariance(t) ==
        doctest::Approx(a * bside - 2.0 / PI * t * (a + bside) + t * t / PI)
            .epsilon(1e-12));

  auto ball = Window::ball_of(2, 2.0);
  std::vector<double> dir{1.0, 0.0};
  CHECK(ball.isotropized_set_covariance(1.0) ==
        doctest::Approx(ball.set_covariance(dir)).epsilon(1e-12));
  // Two disks of radius R at distance t overlap in 2 R^2 (acos u - u sqrt(1-u^2)).
  double R = 2.0, u = 1.0 / (2.0 * R);
  CHECK(ball.set_covariance(dir) ==
        doctest::Approx(2.0 * R * R * (std::acos(u) - u * std::sqrt(1 - u * u)))
            .epsilon(1e-13));
}
