#include "boolcov/disk_union.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

namespace boolcov {

namespace {

constexpr double PI = std::numbers::pi;
constexpr double TWO_PI = 2.0 * std::numbers::pi;

struct BBox {
  double x0, y0, x1, y1;
};

// Uniform bucket grid over disk bounding boxes; answers "disks near a
// point" and "candidate intersecting pairs" in expected O(1) per query.
class DiskGrid {
public:
  DiskGrid(std::span<const Disk> disks, const BBox& bb, double cell)
      : disks_(disks), cell_(cell), ox_(bb.x0), oy_(bb.y0) {
    nx_ = std::max(1, static_cast<int>(std::ceil((bb.x1 - bb.x0) / cell_)));
    ny_ = std::max(1, static_cast<int>(std::ceil((bb.y1 - bb.y0) / cell_)));
    buckets_.resize(static_cast<size_t>(nx_) * ny_);
    for (int i = 0; i < static_cast<int>(disks.size()); ++i) {
      const Disk& d = disks[i];
      int cx0, cy0, cx1, cy1;
      span_of(d.c.x - d.r, d.c.y - d.r, d.c.x + d.r, d.c.y + d.r, cx0, cy0,
              cx1, cy1);
      for (int cy = cy0; cy <= cy1; ++cy)
        for (int cx = cx0; cx <= cx1; ++cx)
          buckets_[idx(cx, cy)].push_back(i);
    }
  }

  // Disks whose bounding box bucket contains p (callers re-check exactly).
  const std::vector<int>& near_point(double x, double y) const {
    int cx = clampi(static_cast<int>(std::floor((x - ox_) / cell_)), 0, nx_ - 1);
    int cy = clampi(static_cast<int>(std::floor((y - oy_) / cell_)), 0, ny_ - 1);
    return buckets_[idx(cx, cy)];
  }

  std::vector<std::pair<int, int>> candidate_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : buckets_)
      for (size_t u = 0; u < b.size(); ++u)
        for (size_t v = u + 1; v < b.size(); ++v)
          out.emplace_back(std::min(b[u], b[v]), std::max(b[u], b[v]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

private:
  static int clampi(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }
  size_t idx(int cx, int cy) const { return static_cast<size_t>(cy) * nx_ + cx; }
  void span_of(double x0, double y0, double x1, double y1, int& cx0, int& cy0,
               int& cx1, int& cy1) const {
    cx0 = clampi(static_cast<int>(std::floor((x0 - ox_) / cell_)), 0, nx_ - 1);
    cy0 = clampi(static_cast<int>(std::floor((y0 - oy_) / cell_)), 0, ny_ - 1);
    cx1 = clampi(static_cast<int>(std::floor((x1 - ox_) / cell_)), 0, nx_ - 1);
    cy1 = clampi(static_cast<int>(std::floor((y1 - oy_) / cell_)), 0, ny_ - 1);
  }

  std::span<const Disk> disks_;
  double cell_, ox_, oy_;
  int nx_, ny_;
  std::vector<std::vector<int>> buckets_;
};

struct Piece {
  bool is_arc = true;
  int circle = -1;       // arc
  double a0 = 0.0, a1 = 0.0;
  int edge = -1;         // window edge
  Vec2 p0, p1;           // segment endpoints
  int n_start = -1, n_end = -1;
};

double norm_angle(double a) {
  a = std::fmod(a, TWO_PI);
  if (a < 0.0) a += TWO_PI;
  return a;
}

struct Builder {
  std::span<const Disk> disks;
  Rect win;
  double eps;

  std::vector<Vec2> nodes;
  std::vector<std::vector<std::pair<double, int>>> circle_events;  // angle, node
  std::vector<std::vector<std::pair<double, int>>> edge_events;    // param, node
  std::vector<Piece> pieces;
  std::vector<int> full_circles;

  int add_node(double x, double y) {
    nodes.push_back({x, y});
    return static_cast<int>(nodes.size()) - 1;
  }

  bool in_window(double x, double y) const {
    return x >= win.x0 - eps && x <= win.x1 + eps && y >= win.y0 - eps &&
           y <= win.y1 + eps;
  }

  // edge e directed counterclockwise around the window; returns origin,
  // direction and length
  void edge_frame(int e, Vec2& org, Vec2& dir, double& len) const {
    switch (e) {
      case 0: org = {win.x0, win.y0}; dir = {1.0, 0.0}; len = win.width(); break;
      case 1: org = {win.x1, win.y0}; dir = {0.0, 1.0}; len = win.height(); break;
      case 2: org = {win.x1, win.y1}; dir = {-1.0, 0.0}; len = win.width(); break;
      default: org = {win.x0, win.y1}; dir = {0.0, -1.0}; len = win.height(); break;
    }
  }
};

} // namespace

Functionals disk_union_functionals(std::span<const Disk> disks,
                                   const Rect& window) {
  if (!(window.x1 > window.x0) || !(window.y1 > window.y0))
    throw std::invalid_argument("disk_union_functionals: empty window");
  double rmax = 0.0;
  for (const Disk& d : disks) {
    if (!(d.r > 0.0) || !std::isfinite(d.r) || !std::isfinite(d.c.x) ||
        !std::isfinite(d.c.y))
      throw std::invalid_argument("disk_union_functionals: bad disk");
    rmax = std::max(rmax, d.r);
  }
  if (disks.empty()) return {};

  Builder B;
  B.disks = disks;
  B.win = window;
  B.eps = 1e-9 * rmax;

  const int n = static_cast<int>(disks.size());
  B.circle_events.resize(n);
  B.edge_events.resize(4);

  BBox bb{window.x0, window.y0, window.x1, window.y1};
  for (const Disk& d : disks) {
    bb.x0 = std::min(bb.x0, d.c.x - d.r);
    bb.y0 = std::min(bb.y0, d.c.y - d.r);
    bb.x1 = std::max(bb.x1, d.c.x + d.r);
    bb.y1 = std::max(bb.y1, d.c.y + d.r);
  }
  double extent = std::max(bb.x1 - bb.x0, bb.y1 - bb.y0);
  double cell = std::max(2.0 * rmax, extent / 512.0);
  DiskGrid grid(disks, bb, cell);

  // strictly covered by some other disk
  auto covered = [&](double x, double y, int skip) {
    for (int j : grid.near_point(x, y)) {
      if (j == skip) continue;
      double dx = x - disks[j].c.x, dy = y - disks[j].c.y;
      if (dx * dx + dy * dy < disks[j].r * disks[j].r) return true;
    }
    return false;
  };
  auto covered_closed = [&](double x, double y) {
    for (int j : grid.near_point(x, y)) {
      double dx = x - disks[j].c.x, dy = y - disks[j].c.y;
      if (dx * dx + dy * dy <= disks[j].r * disks[j].r) return true;
    }
    return false;
  };

  // circle/circle intersection events
  for (auto [i, j] : grid.candidate_pairs()) {
    const Disk &di = disks[i], &dj = disks[j];
    double dx = dj.c.x - di.c.x, dy = dj.c.y - di.c.y;
    double d2 = dx * dx + dy * dy;
    double rsum = di.r + dj.r, rdif = std::abs(di.r - dj.r);
    double d = std::sqrt(d2);
    if (d >= rsum + B.eps) continue;
    if (d > rsum - B.eps)
      throw DegenerateConfiguration("external tangency", i);
    if (d < rdif - B.eps) continue;  // containment, no boundary crossing
    if (d < rdif + B.eps)
      throw DegenerateConfiguration("internal tangency", i);
    if (d < B.eps)
      throw DegenerateConfiguration("coincident centers", i);
    double a = (d2 + di.r * di.r - dj.r * dj.r) / (2.0 * d);
    double h2 = di.r * di.r - a * a;
    if (h2 < B.eps * B.eps)
      throw DegenerateConfiguration("grazing intersection", i);
    double h = std::sqrt(h2);
    double ux = dx / d, uy = dy / d;
    double mx = di.c.x + a * ux, my = di.c.y + a * uy;
    for (double sgn : {+1.0, -1.0}) {
      double px = mx - sgn * h * uy, py = my + sgn * h * ux;
      int nd = B.add_node(px, py);
      B.circle_events[i].emplace_back(
          norm_angle(std::atan2(py - di.c.y, px - di.c.x)), nd);
      B.circle_events[j].emplace_back(
          norm_angle(std::atan2(py - dj.c.y, px - dj.c.x)), nd);
    }
  }

  // window corner nodes, shared by adjacent edges
  int corner[4];
  corner[0] = B.add_node(window.x0, window.y0);
  corner[1] = B.add_node(window.x1, window.y0);
  corner[2] = B.add_node(window.x1, window.y1);
  corner[3] = B.add_node(window.x0, window.y1);
  for (int e = 0; e < 4; ++e) {
    Vec2 org, dir;
    double len;
    B.edge_frame(e, org, dir, len);
    B.edge_events[e].emplace_back(0.0, corner[e]);
    B.edge_events[e].emplace_back(len, corner[(e + 1) % 4]);
  }

  // circle/edge intersection events
  for (int i = 0; i < n; ++i) {
    const Disk& di = disks[i];
    for (int e = 0; e < 4; ++e) {
      Vec2 org, dir;
      double len;
      B.edge_frame(e, org, dir, len);
      // signed offset of the circle center from the edge line, in the
      // left-normal direction
      double nxv = -dir.y, nyv = dir.x;
      double off = (di.c.x - org.x) * nxv + (di.c.y - org.y) * nyv;
      double rad2 = di.r * di.r - off * off;
      if (rad2 <= 0.0) {
        if (di.r - std::abs(off) > -B.eps && di.r - std::abs(off) < B.eps)
          throw DegenerateConfiguration("edge tangency", i);
        continue;
      }
      double seg = std::sqrt(rad2);
      if (seg < B.eps) throw DegenerateConfiguration("edge tangency", i);
      double tc = (di.c.x - org.x) * dir.x + (di.c.y - org.y) * dir.y;
      for (double sgn : {-1.0, +1.0}) {
        double t = tc + sgn * seg;
        if (t < -B.eps || t > len + B.eps) continue;
        if (t < B.eps || t > len - B.eps)
          throw DegenerateConfiguration("crossing at window corner", i);
        double px = org.x + t * dir.x, py = org.y + t * dir.y;
        int nd = B.add_node(px, py);
        B.edge_events[e].emplace_back(t, nd);
        B.circle_events[i].emplace_back(
            norm_angle(std::atan2(py - di.c.y, px - di.c.x)), nd);
      }
    }
  }

  // circle arcs
  for (int i = 0; i < n; ++i) {
    auto& ev = B.circle_events[i];
    const Disk& di = disks[i];
    if (ev.empty()) {
      double px = di.c.x + di.r, py = di.c.y;
      if (B.in_window(px, py) && !covered(px, py, i)) B.full_circles.push_back(i);
      continue;
    }
    std::sort(ev.begin(), ev.end());
    double ang_eps = std::max(1e-12, B.eps / di.r);
    const int m = static_cast<int>(ev.size());
    for (int k = 0; k < m; ++k) {
      double gap = (k + 1 < m ? ev[k + 1].first : ev[0].first + TWO_PI) -
                   ev[k].first;
      if (gap < ang_eps)
        throw DegenerateConfiguration("coincident events on circle", i);
    }
    for (int k = 0; k < m; ++k) {
      double a0 = ev[k].first;
      double a1 = (k + 1 < m) ? ev[k + 1].first : ev[0].first + TWO_PI;
      double am = 0.5 * (a0 + a1);
      double px = di.c.x + di.r * std::cos(am);
      double py = di.c.y + di.r * std::sin(am);
      if (!B.in_window(px, py) || covered(px, py, i)) continue;
      Piece p;
      p.is_arc = true;
      p.circle = i;
      p.a0 = a0;
      p.a1 = a1;
      p.n_start = ev[k].second;
      p.n_end = (k + 1 < m) ? ev[k + 1].second : ev[0].second;
      B.pieces.push_back(p);
    }
  }

  // window edge segments
  for (int e = 0; e < 4; ++e) {
    auto& ev = B.edge_events[e];
    std::sort(ev.begin(), ev.end());
    Vec2 org, dir;
    double len;
    B.edge_frame(e, org, dir, len);
    for (size_t k = 0; k + 1 < ev.size(); ++k) {
      if (ev[k + 1].first - ev[k].first < B.eps) {
        if (ev[k + 1].second != ev[k].second)
          throw DegenerateConfiguration("coincident events on window edge");
        continue;
      }
      double tm = 0.5 * (ev[k].first + ev[k + 1].first);
      double px = org.x + tm * dir.x, py = org.y + tm * dir.y;
      if (!covered_closed(px, py)) continue;
      Piece p;
      p.is_arc = false;
      p.edge = e;
      p.p0 = {org.x + ev[k].first * dir.x, org.y + ev[k].first * dir.y};
      p.p1 = {org.x + ev[k + 1].first * dir.x, org.y + ev[k + 1].first * dir.y};
      p.n_start = ev[k].second;
      p.n_end = ev[k + 1].second;
      B.pieces.push_back(p);
    }
  }

  // stitch pieces into loops: each node must have exactly one outgoing
  // and one incoming piece
  std::vector<int> out_of(B.nodes.size(), -1);
  std::vector<int> in_count(B.nodes.size(), 0);
  for (int pi = 0; pi < static_cast<int>(B.pieces.size()); ++pi) {
    const Piece& p = B.pieces[pi];
    if (out_of[p.n_start] != -1)
      throw DegenerateConfiguration("boundary branches at a vertex");
    out_of[p.n_start] = pi;
    ++in_count[p.n_end];
  }
  for (const Piece& p : B.pieces)
    if (in_count[p.n_start] == 0 || out_of[p.n_end] == -1)
      throw DegenerateConfiguration("dangling boundary piece");

  auto arc_area2 = [&](const Piece& p) {
    // twice the Green's-theorem contribution of the arc
    const Disk& d = disks[p.circle];
    double da = p.a1 - p.a0;
    return d.r * d.r * da +
           d.r * (d.c.x * (std::sin(p.a1) - std::sin(p.a0)) -
                  d.c.y * (std::cos(p.a1) - std::cos(p.a0)));
  };

  Functionals out;
  double area2 = 0.0, length = 0.0;
  std::vector<char> used(B.pieces.size(), 0);
  for (int start = 0; start < static_cast<int>(B.pieces.size()); ++start) {
    if (used[start]) continue;
    double loop_area2 = 0.0;
    int cur = start;
    int guard = 0;
    do {
      if (used[cur]) throw DegenerateConfiguration("loop re-enters a piece");
      used[cur] = 1;
      const Piece& p = B.pieces[cur];
      if (p.is_arc) {
        loop_area2 += arc_area2(p);
        length += disks[p.circle].r * (p.a1 - p.a0);
      } else {
        loop_area2 += p.p0.x * p.p1.y - p.p1.x * p.p0.y;
        length += std::hypot(p.p1.x - p.p0.x, p.p1.y - p.p0.y);
      }
      cur = out_of[B.pieces[cur].n_end];
      if (cur == -1) throw DegenerateConfiguration("open boundary loop");
      if (++guard > static_cast<int>(B.pieces.size()))
        throw DegenerateConfiguration("non-terminating loop walk");
    } while (cur != start);
    area2 += loop_area2;
    out.euler += loop_area2 > 0.0 ? 1 : -1;
  }
  for (int i : B.full_circles) {
    double r = disks[i].r;
    area2 += TWO_PI * r * r;
    length += TWO_PI * r;
    out.euler += 1;
  }
  out.area = 0.5 * area2;
  out.half_perimeter = 0.5 * length;
  return out;
}

namespace {

// signed distance to (union of disks) ∩ window; exact zero level set away
// from boundary crossings, which is all marching squares needs
double signed_field(std::span<const Disk> disks, const DiskGrid& grid,
                    const Rect& w, double x, double y) {
  double dz = std::numeric_limits<double>::infinity();
  for (int j : grid.near_point(x, y)) {
    double dd = std::hypot(x - disks[j].c.x, y - disks[j].c.y) - disks[j].r;
    dz = std::min(dz, dd);
  }
  double dw = std::max(std::max(w.x0 - x, x - w.x1), std::max(w.y0 - y, y - w.y1));
  return std::max(dz, dw);
}

} // namespace

Functionals disk_union_grid(std::span<const Disk> disks, const Rect& window,
                            int cells_per_unit) {
  if (cells_per_unit < 2)
    throw std::invalid_argument("disk_union_grid: resolution too small");
  double rmax = 0.0;
  for (const Disk& d : disks) rmax = std::max(rmax, d.r);
  const int nx = std::max(2, static_cast<int>(std::lround(window.width() * cells_per_unit)));
  const int ny = std::max(2, static_cast<int>(std::lround(window.height() * cells_per_unit)));
  const double hx = window.width() / nx, hy = window.height() / ny;

  BBox bb{window.x0, window.y0, window.x1, window.y1};
  for (const Disk& d : disks) {
    bb.x0 = std::min(bb.x0, d.c.x - d.r);
    bb.y0 = std::min(bb.y0, d.c.y - d.r);
    bb.x1 = std::max(bb.x1, d.c.x + d.r);
    bb.y1 = std::max(bb.y1, d.c.y + d.r);
  }
  double extent = std::max(bb.x1 - bb.x0, bb.y1 - bb.y0);
  double cell = std::max(disks.empty() ? extent : 2.0 * rmax, extent / 512.0);
  if (cell <= 0.0) cell = 1.0;
  DiskGrid grid(disks, bb, cell);

  // pixel-center occupancy
  std::vector<char> fg(static_cast<size_t>(nx) * ny, 0);
  long long count = 0;
  for (int iy = 0; iy < ny; ++iy) {
    double y = window.y0 + (iy + 0.5) * hy;
    for (int ix = 0; ix < nx; ++ix) {
      double x = window.x0 + (ix + 0.5) * hx;
      bool in = false;
      for (int j : grid.near_point(x, y)) {
        double dx = x - disks[j].c.x, dy = y - disks[j].c.y;
        if (dx * dx + dy * dy <= disks[j].r * disks[j].r) {
          in = true;
          break;
        }
      }
      if (in) {
        fg[static_cast<size_t>(iy) * nx + ix] = 1;
        ++count;
      }
    }
  }

  Functionals out;
  out.area = static_cast<double>(count) * hx * hy;

  // component labelling: foreground 8-adjacency, background 4-adjacency
  // on a one-pixel padded frame so the outside is a single sea
  auto at = [&](int ix, int iy) -> bool {
    if (ix < 0 || iy < 0 || ix >= nx || iy >= ny) return false;
    return fg[static_cast<size_t>(iy) * nx + ix] != 0;
  };
  std::vector<int> label(static_cast<size_t>(nx + 2) * (ny + 2), 0);
  auto lab = [&](int ix, int iy) -> int& {
    return label[static_cast<size_t>(iy + 1) * (nx + 2) + (ix + 1)];
  };
  // Checkerboard 2x2 blocks are ambiguous for any fixed adjacency pair, so
  // a diagonal step across such a block is resolved by the true coverage at
  // the shared pixel corner: covered bridges the foreground, uncovered the
  // background. Corner states are cached on first use.
  std::vector<unsigned char> corner(static_cast<size_t>(nx + 1) * (ny + 1), 0);
  auto corner_covered = [&](int cix, int ciy) -> bool {
    unsigned char& st = corner[static_cast<size_t>(ciy) * (nx + 1) + cix];
    if (st == 0) {
      double v = signed_field(disks, grid, window, window.x0 + cix * hx,
                              window.y0 + ciy * hy);
      st = v <= 0.0 ? 1 : 2;
    }
    return st == 1;
  };
  auto diagonal_open = [&](int cx, int cy, int ax, int ay, bool f) -> bool {
    if (at(ax, cy) == f || at(cx, ay) == f) return true;  // 4-path exists
    return corner_covered(std::max(cx, ax), std::max(cy, ay)) == f;
  };

  int fg_comp = 0, bg_comp = 0;
  std::vector<std::pair<int, int>> stack;
  for (int iy = -1; iy <= ny; ++iy) {
    for (int ix = -1; ix <= nx; ++ix) {
      if (lab(ix, iy) != 0) continue;
      bool f = at(ix, iy);
      int mark = f ? ++fg_comp : --bg_comp;
      stack.clear();
      stack.emplace_back(ix, iy);
      lab(ix, iy) = mark;
      while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        const int r8[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                              {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        for (int q = 0; q < 8; ++q) {
          int ax = cx + r8[q][0], ay = cy + r8[q][1];
          if (ax < -1 || ay < -1 || ax > nx || ay > ny) continue;
          if (lab(ax, ay) != 0) continue;
          if (at(ax, ay) != f) continue;
          if (q >= 4 && !diagonal_open(cx, cy, ax, ay, f)) continue;
          lab(ax, ay) = mark;
          stack.emplace_back(ax, ay);
        }
      }
    }
  }
  // bg components: the padded sea is one of them
  out.euler = fg_comp - (-bg_comp - 1);

  // marching squares on corner samples of the signed field
  double length = 0.0;
  std::vector<double> row0(nx + 1), row1(nx + 1);
  for (int ix = 0; ix <= nx; ++ix)
    row0[ix] = signed_field(disks, grid, window, window.x0 + ix * hx, window.y0);
  for (int iy = 0; iy < ny; ++iy) {
    double yb = window.y0 + (iy + 1) * hy;
    for (int ix = 0; ix <= nx; ++ix)
      row1[ix] = signed_field(disks, grid, window, window.x0 + ix * hx, yb);
    for (int ix = 0; ix < nx; ++ix) {
      // corners: f00 bottom-left, f10 bottom-right, f01 top-left, f11 top-right
      double f00 = row0[ix], f10 = row0[ix + 1];
      double f01 = row1[ix], f11 = row1[ix + 1];
      int code = (f00 < 0 ? 1 : 0) | (f10 < 0 ? 2 : 0) | (f01 < 0 ? 4 : 0) |
                 (f11 < 0 ? 8 : 0);
      if (code == 0 || code == 15) continue;
      auto cut = [](double fa, double fb) { return fa / (fa - fb); };
      // edge midcrossings in cell units
      double xb = cut(f00, f10);          // bottom edge, x fraction
      double xt = cut(f01, f11);          // top edge
      double yl = cut(f00, f01);          // left edge, y fraction
      double yr = cut(f10, f11);          // right edge
      auto seg = [&](double ax, double ay, double bx, double by) {
        length += std::hypot((bx - ax) * hx, (by - ay) * hy);
      };
      switch (code) {
        case 1: case 14: seg(xb, 0.0, 0.0, yl); break;
        case 2: case 13: seg(xb, 0.0, 1.0, yr); break;
        case 4: case 11: seg(0.0, yl, xt, 1.0); break;
        case 8: case 7:  seg(1.0, yr, xt, 1.0); break;
        case 3: case 12: seg(0.0, yl, 1.0, yr); break;
        case 5: case 10: seg(xb, 0.0, xt, 1.0); break;
        case 6: {
          double mid = 0.25 * (f00 + f10 + f01 + f11);
          if (mid < 0) { seg(xb, 0.0, 0.0, yl); seg(1.0, yr, xt, 1.0); }
          else         { seg(xb, 0.0, 1.0, yr); seg(0.0, yl, xt, 1.0); }
          break;
        }
        case 9: {
          double mid = 0.25 * (f00 + f10 + f01 + f11);
          if (mid < 0) { seg(xb, 0.0, 1.0, yr); seg(0.0, yl, xt, 1.0); }
          else         { seg(xb, 0.0, 0.0, yl); seg(1.0, yr, xt, 1.0); }
          break;
        }
        default: break;
      }
    }
    std::swap(row0, row1);
  }
  out.half_perimeter = 0.5 * length;
  return out;
}

std::string scene_to_json(std::span<const Disk> disks, const Rect& window) {
  nlohmann::json j;
  j["window"] = {window.x0, window.y0, window.x1, window.y1};
  auto& arr = j["disks"] = nlohmann::json::array();
  for (const Disk& d : disks) arr.push_back({d.c.x, d.c.y, d.r});
  return j.dump();
}

std::pair<std::vector<Disk>, Rect> scene_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Rect w;
  auto& wj = j.at("window");
  w.x0 = wj.at(0).get<double>();
  w.y0 = wj.at(1).get<double>();
  w.x1 = wj.at(2).get<double>();
  w.y1 = wj.at(3).get<double>();
  std::vector<Disk> disks;
  for (const auto& dj : j.at("disks")) {
    Disk d;
    d.c.x = dj.at(0).get<double>();
    d.c.y = dj.at(1).get<double>();
    d.r = dj.at(2).get<double>();
    disks.push_back(d);
  }
  return {std::move(disks), w};
}

} // namespace boolcov
