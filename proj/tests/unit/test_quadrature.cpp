#include <doctest.h>

#include <boolcov/quadrature.hpp>

#include <cmath>

using namespace boolcov;

namespace {
const double PI = 3.14159265358979323846;
}

TEST_CASE("integrate smooth functions") {
  auto r = integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(r.error <= 1e-10);

  r = integrate([](double x) { return std::sin(x); }, 0.0, PI);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

  r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(r.evaluations >= 15);

  // degenerate interval
  r = integrate([](double x) { return x; }, 2.0, 2.0);
  CHECK(r.value == 0.0);
  CHECK(r.converged);
}

TEST_CASE("integrate kinked and peaked integrands") {
  // |x - 1/3|^(1/2) forces subdivision near the kink
  auto r = integrate(
      [](double x) { return std::sqrt(std::abs(x - 1.0 / 3.0)); }, 0.0, 1.0);
  double exact = 2.0 / 3.0 * (std::pow(1.0 / 3.0, 1.5) + std::pow(2.0 / 3.0, 1.5));
  CHECK(r.converged);
  CHECK(r.intervals > 1);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-9));
  CHECK(std::abs(r.value - exact) <= std::max(r.error, 1e-12));

  // narrow Gaussian
  r = integrate(
      [](double x) { return std::exp(-500.0 * (x - 0.7) * (x - 0.7)); }, 0.0,
      1.0);
  CHECK(r.value == doctest::Approx(std::sqrt(PI / 500.0)).epsilon(1e-9));
}

TEST_CASE("integrate honours the interval budget") {
  QuadratureOptions opt;
  opt.abs_tol = 1e-300;
  opt.rel_tol = 1e-300;
  opt.max_intervals = 8;
  opt.throw_on_failure = true;
  CHECK_THROWS_AS(
      (void)integrate([](double x) { return std::sqrt(std::abs(x - 0.5)); },
                      0.0, 1.0, opt),
      NonConvergence);
  opt.throw_on_failure = false;
  auto r = integrate([](double x) { return std::sqrt(std::abs(x - 0.5)); },
                     0.0, 1.0, opt);
  CHECK_FALSE(r.converged);
  CHECK(r.intervals <= 8);

  CHECK_THROWS_AS((void)integrate([](double x) { return x; }, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("integrate_2d") {
  auto r = integrate_2d([](double x, double y) { return x * y; }, 0.0, 1.0,
                        0.0, 1.0);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));

  // exact value 0: give the estimator a reachable absolute target
  QuadratureOptions zt;
  zt.abs_tol = 1e-10;
  r = integrate_2d([](double x, double y) { return std::sin(x + y); }, 0.0,
                   PI, 0.0, PI, zt);
  CHECK(std::abs(r.value) < 1e-9);

  r = integrate_2d([](double x, double y) { return std::exp(-x * x - y * y); },
                   0.0, 3.0, 0.0, 3.0);
  double g = 0.5 * std::sqrt(PI) * std::erf(3.0);
  CHECK(r.value == doctest::Approx(g * g).epsilon(1e-9));
}

TEST_CASE("find_root") {
  auto r = find_root([](double x) { return std::cos(x); }, 1.0, 2.0);
  CHECK(r.converged);
  CHECK(r.x == doctest::Approx(0.5 * PI).epsilon(1e-12));
  CHECK(r.iterations > 0);

  r = find_root([](double x) { return x * x * x - 2.0; }, 0.0, 2.0);
  CHECK(r.x == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));

  // exact zero at an endpoint short-circuits
  r = find_root([](double x) { return x - 1.0; }, 1.0, 2.0);
  CHECK(r.x == 1.0);
  CHECK(r.converged);

  CHECK_THROWS_AS(
      (void)find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
      BracketInvalid);
  CHECK_THROWS_AS((void)find_root([](double x) { return x; }, 2.0, 1.0),
                  BracketInvalid);
}

TEST_CASE("find_extrema") {
  auto ex = find_extrema([](double x) { return std::sin(x); }, 0.0, 2.0 * PI);
  REQUIRE(ex.size() == 2);
  CHECK(ex[0].kind == Extremum::Kind::maximum);
  CHECK(ex[0].x == doctest::Approx(0.5 * PI).epsilon(1e-6));
  CHECK(ex[0].value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ex[1].kind == Extremum::Kind::minimum);
  CHECK(ex[1].x == doctest::Approx(1.5 * PI).epsilon(1e-6));

  // endpoints excluded: monotone function reports nothing
  auto none = find_extrema([](double x) { return 2.0 * x; }, 0.0, 1.0);
  CHECK(none.empty());

  auto quad = find_extrema([](double x) { return (x - 0.3) * (x - 0.3); },
                           0.0, 1.0);
  REQUIRE(quad.size() == 1);
  CHECK(quad[0].kind == Extremum::Kind::minimum);
  CHECK(quad[0].x == doctest::Approx(0.3).epsilon(1e-6));

  CHECK_THROWS_AS((void)find_extrema([](double x) { return x; }, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("bracket_roots") {
  auto br = bracket_roots([](double x) { return std::sin(x); }, 1.0, 7.0);
  REQUIRE(br.size() == 2);
  CHECK(br[0].first < PI);
  CHECK(br[0].second > PI);
  CHECK(br[1].first < 2.0 * PI);
  CHECK(br[1].second > 2.0 * PI);

  auto none = bracket_roots([](double x) { return x * x + 1.0; }, -2.0, 2.0);
  CHECK(none.empty());
}
