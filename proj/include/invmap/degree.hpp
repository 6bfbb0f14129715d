#pragma once

#include <vector>

#include "invmap/core.hpp"
#include "invmap/planar_map.hpp"

namespace invmap {

// image of a ball boundary under the map, sampled until adjacent image
// points are h_loop apart (closed: front() == back())
struct LoopImage {
  std::vector<Vec2> samples;
  std::vector<double> params;  // boundary parameter in [0,1)

  Rect bbox() const;
  bool degenerate(double tol) const { return bbox().diag() <= tol; }
};

// boundary point of a ball at parameter t in [0,1], counterclockwise;
// squares start at the bottom-left corner
Vec2 ball_boundary_point(const Ball& ball, double t);

LoopImage trace_boundary(const PlanarMap& map, const Ball& ball, double h_loop,
                         double delta_floor_factor = 1e-6);

// winding number by compensated angle accumulation; guards against points
// near the loop and under-refined loops
int winding_number(const LoopImage& loop, const Vec2& y, double guard_dist,
                   double max_residual = 0.1);

// bucket index over the loop segments for distance queries
class LoopIndex {
public:
  LoopIndex(const LoopImage& loop, const Rect& window, int buckets = 192);
  // exact distance to the loop if below cap, otherwise >= cap
  double distance(const Vec2& p, double cap) const;

private:
  const LoopImage& loop_;
  Rect win_;
  int bn_;
  double bx_, by_;
  std::vector<std::vector<int>> cells_;
};

struct DegreeRaster {
  Grid grid;
  std::vector<int> deg;       // per pixel, row-major
  std::vector<char> near;     // within w_mask of the loop
  std::vector<double> dist;   // distance to the loop, capped
  double w_mask = 0.0;

  int deg_at(const Vec2& p) const {  // 0 outside the window
    int i, j;
    if (!grid.cell_of(p, i, j)) return 0;
    return deg[grid.index(i, j)];
  }
};

DegreeRaster raster_degrees(const LoopImage& loop, const Grid& grid,
                            double w_mask, int threads = 0);

struct TopImage {
  DegreeRaster raster;
  double imT_area = 0.0;
  double E_area = 0.0;
};

// rasterized topological image of a ball: per-pixel winding numbers over the
// loop bounding box padded by one cell, with areas by pixel counting
TopImage topological_image(const PlanarMap& map, const Ball& ball, int res,
                           const Thresholds& th = {});

// same but over a caller-fixed window grid
TopImage topological_image_on(const PlanarMap& map, const Ball& ball,
                              const Grid& grid, const Thresholds& th = {});

// loop refinement target for a prospective raster window
double loop_step_for(const Ball& ball, int res, double h_loop_pixels);

}  // namespace invmap
