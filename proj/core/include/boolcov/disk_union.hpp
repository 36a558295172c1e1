#pragma once

// Exact intrinsic volumes (area, boundary length, Euler characteristic) of
// a union of disks clipped to a rectangular window, computed from the
// oriented arc arrangement of the boundary, plus an independent pixel-grid
// oracle and scene (de)serialization.

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boolcov {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Disk {
  Vec2 c;
  double r = 1.0;
};

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
};

struct Functionals {
  int euler = 0;            // V_0
  double half_perimeter = 0.0;  // V_1
  double area = 0.0;        // V_2
};

// Thrown when the configuration is numerically ambiguous (tangencies,
// nearly coincident intersection points, crossings at window corners).
// `disk` names an involved disk when one is identifiable.
struct DegenerateConfiguration : std::runtime_error {
  int disk = -1;
  explicit DegenerateConfiguration(const std::string& what, int d = -1)
      : std::runtime_error(what), disk(d) {}
};

// Exact functionals of (union of disks) ∩ window via boundary loops:
// uncovered circle arcs plus covered window-edge pieces, stitched into
// oriented closed loops; Green's theorem gives the area, loop orientation
// counts give the Euler characteristic. Degeneracy tolerance scales with
// the largest radius (1e-9 relative).
Functionals disk_union_functionals(std::span<const Disk> disks, const Rect& window);

// Pixel-counting oracle at `cells_per_unit` resolution: area by pixel
// centers, Euler characteristic by component labelling (8-adjacency
// foreground, 4-adjacency background), boundary length by marching
// squares on the signed distance field. Bias is O(1/resolution).
Functionals disk_union_grid(std::span<const Disk> disks, const Rect& window,
                            int cells_per_unit);

std::string scene_to_json(std::span<const Disk> disks, const Rect& window);
std::pair<std::vector<Disk>, Rect> scene_from_json(const std::string& text);

} // namespace boolcov
