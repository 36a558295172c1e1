#pragma once

// Deterministic adaptive quadrature (15-point Gauss-Kronrod with global
// error-driven subdivision), nested 2D integration, bracketed root finding
// and grid-scan extremum location.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace boolcov {

struct NonConvergence : std::runtime_error {
  double value;
  double error;
  NonConvergence(const std::string& what, double v, double e)
      : std::runtime_error(what), value(v), error(e) {}
};

struct BracketInvalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
  bool throw_on_failure = true;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

namespace gk15 {

// QUADPACK qk15 abscissae and weights (positive half; node 7 is the center).
inline constexpr double nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double wk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Estimate {
  double integral;
  double error;
  double resabs;
};

// One rule application on [a, b] with QUADPACK's error heuristic.
template <class F>
Estimate apply(F&& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * nodes[i]);
    fv[14 - i] = f(c + h * nodes[i]);
  }
  fv[7] = f(c);
  double resk = 0.0, resg = 0.0, resabs = 0.0;
  for (int i = 0; i < 7; ++i) {
    resk += wk[i] * (fv[i] + fv[14 - i]);
    resabs += wk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
  }
  resk += wk[7] * fv[7];
  resabs += wk[7] * std::abs(fv[7]);
  // Gauss nodes sit at the odd Kronrod indices 1,3,5 plus the center.
  for (int i = 0; i < 3; ++i)
    resg += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  resg += wg[3] * fv[7];

  double reskh = 0.5 * resk;
  double resasc = wk[7] * std::abs(fv[7] - reskh);
  for (int i = 0; i < 7; ++i)
    resasc += wk[i] * (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
  resasc *= std::abs(h);

  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  double scaled = resabs * std::abs(h);
  if (scaled > tiny / (50.0 * eps)) err = std::max(50.0 * eps * scaled, err);
  return {resk * h, err, scaled};
}

} // namespace gk15

namespace detail {

struct Segment {
  double a, b;
  double value, error;
};

inline bool worse(const Segment& x, const Segment& y) { return x.error < y.error; }

} // namespace detail

// Adaptive integration of f over [a, b]: the interval with the largest
// error estimate is bisected until sum(error) <= max(abs_tol, rel_tol *
// |sum(value)|) or the interval budget is exhausted. The final sums run
// over intervals sorted by position, so results do not depend on heap
// ordering details.
template <class F>
QuadratureResult integrate(F&& f, double a, double b,
                           const QuadratureOptions& opt = {}) {
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 0, 0, true};
    throw std::invalid_argument("integrate: requires a <= b");
  }
  std::vector<detail::Segment> segs;
  segs.reserve(64);
  int evals = 15;
  {
    auto e = gk15::apply(f, a, b);
    segs.push_back({a, b, e.integral, e.error});
  }
  auto finish = [&segs, &evals](bool converged, const QuadratureOptions& o) {
    std::sort(segs.begin(), segs.end(),
              [](const detail::Segment& x, const detail::Segment& y) { return x.a < y.a; });
    double value = 0.0, error = 0.0;
    for (const auto& s : segs) {
      value += s.value;
      error += s.error;
    }
    QuadratureResult r{value, error, evals, static_cast<int>(segs.size()), converged};
    if (!converged && o.throw_on_failure)
      throw NonConvergence("integrate: interval budget exhausted", value, error);
    return r;
  };

  std::make_heap(segs.begin(), segs.end(), detail::worse);
  double total_value = segs[0].value, total_error = segs[0].error;
  while (static_cast<int>(segs.size()) < opt.max_intervals) {
    double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value));
    if (total_error <= tol) return finish(true, opt);
    std::pop_heap(segs.begin(), segs.end(), detail::worse);
    detail::Segment s = segs.back();
    segs.pop_back();
    double m = 0.5 * (s.a + s.b);
    if (!(s.a < m && m < s.b)) {
      // interval at rounding resolution; keep it and accept its error
      segs.push_back(s);
      std::push_heap(segs.begin(), segs.end(), detail::worse);
      return finish(total_error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value)), opt);
    }
    auto e1 = gk15::apply(f, s.a, m);
    auto e2 = gk15::apply(f, m, s.b);
    evals += 30;
    total_value += e1.integral + e2.integral - s.value;
    total_error += e1.error + e2.error - s.error;
    segs.push_back({s.a, m, e1.integral, e1.error});
    std::push_heap(segs.begin(), segs.end(), detail::worse);
    segs.push_back({m, s.b, e2.integral, e2.error});
    std::push_heap(segs.begin(), segs.end(), detail::worse);
  }
  double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value));
  return finish(total_error <= tol, opt);
}

// Nested 2D integration of f(x, y) over [ax, bx] x [ay, by]. The inner
// integral runs at a tenth of the outer tolerance.
template <class F2>
QuadratureResult integrate_2d(F2&& f, double ax, double bx, double ay,
                              double by, const QuadratureOptions& opt = {}) {
  QuadratureOptions inner = opt;
  inner.abs_tol = std::max(1e-15, 0.1 * opt.abs_tol);
  inner.rel_tol = 0.1 * opt.rel_tol;
  long long inner_evals = 0;
  auto outer = [&](double x) {
    auto r = integrate([&](double y) { return f(x, y); }, ay, by, inner);
    inner_evals += r.evaluations;
    return r.value;
  };
  QuadratureResult r = integrate(outer, ax, bx, opt);
  r.evaluations = static_cast<int>(std::min<long long>(
      inner_evals, std::numeric_limits<int>::max()));
  return r;
}

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Brent's method on a sign-change bracket.
template <class F>
RootResult find_root(F&& f, double lo, double hi, double xtol = 1e-12,
                     int max_iter = 200) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw BracketInvalid("find_root: bad bracket endpoints");
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0, true};
  if (fb == 0.0) return {b, 0.0, 0, true};
  if ((fa > 0.0) == (fb > 0.0))
    throw BracketInvalid("find_root: no sign change on bracket");
  double c = a, fc = fa;
  double d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 1; it <= max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol1 = 2.0 * eps * std::abs(b) + 0.5 * xtol;
    double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return {b, fb, it, true};
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return {b, fb, max_iter, false};
}

struct Extremum {
  enum class Kind { minimum, maximum };
  double x = 0.0;
  double value = 0.0;
  Kind kind = Kind::minimum;
};

namespace detail {

// Golden-section refinement on [a, b]; sign = +1 maximizes, -1 minimizes.
template <class F>
std::pair<double, double> golden(F&& f, double a, double b, double sign,
                                 double xtol) {
  const double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = sign * f(x1), f2 = sign * f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2; f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = sign * f(x2);
    } else {
      b = x2;
      x2 = x1; f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = sign * f(x1);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

} // namespace detail

// Locate interior extrema of f on [a, b]: uniform grid scan, then
// golden-section refinement of every discrete bump, with extrema of the
// same kind merged when closer than refine_tol. Endpoints are excluded.
template <class F>
std::vector<Extremum> find_extrema(F&& f, double a, double b,
                                   int grid_points = 201,
                                   double refine_tol = 1e-7) {
  if (!(a < b)) throw std::invalid_argument("find_extrema: requires a < b");
  if (grid_points < 8) throw std::invalid_argument("find_extrema: too few grid points");
  std::vector<double> xs(grid_points), ys(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    xs[i] = a + (b - a) * i / (grid_points - 1);
    ys[i] = f(xs[i]);
  }
  std::vector<Extremum> out;
  for (int i = 1; i + 1 < grid_points; ++i) {
    bool is_max = ys[i] > ys[i - 1] && ys[i] >= ys[i + 1];
    bool is_min = ys[i] < ys[i - 1] && ys[i] <= ys[i + 1];
    if (!is_max && !is_min) continue;
    auto [x, v] = detail::golden(f, xs[i - 1], xs[i + 1],
                                 is_max ? 1.0 : -1.0, refine_tol);
    Extremum e;
    e.x = x;
    e.value = v;
    e.kind = is_max ? Extremum::Kind::maximum : Extremum::Kind::minimum;
    if (!out.empty() && out.back().kind == e.kind &&
        std::abs(out.back().x - e.x) < refine_tol) {
      bool better = e.kind == Extremum::Kind::maximum
                        ? e.value > out.back().value
                        : e.value < out.back().value;
      if (better) out.back() = e;
      continue;
    }
    out.push_back(e);
  }
  return out;
}

// Sign-change brackets of f on a uniform grid over [a, b].
template <class F>
std::vector<std::pair<double, double>> bracket_roots(F&& f, double a, double b,
                                                     int grid_points = 401) {
  if (!(a < b)) throw std::invalid_argument("bracket_roots: requires a < b");
  std::vector<std::pair<double, double>> out;
  double x0 = a, f0 = f(a);
  for (int i = 1; i < grid_points; ++i) {
    double x1 = a + (b - a) * i / (grid_points - 1);
    double f1 = f(x1);
    if (f0 == 0.0 || (f0 > 0.0) != (f1 > 0.0)) out.emplace_back(x0, x1);
    x0 = x1;
    f0 = f1;
  }
  return out;
}

} // namespace boolcov
