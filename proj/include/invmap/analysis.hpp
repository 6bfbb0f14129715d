#pragma once

#include <vector>

#include "invmap/core.hpp"
#include "invmap/planar_map.hpp"

namespace invmap {

// first-order data of a map on a cell grid: Df, J_f, K_f and the good set
struct MapAnalysis {
  Grid grid;
  std::vector<Mat2> jac;       // per cell, row-major (j*nx + i)
  std::vector<double> jdet;
  std::vector<double> kdist;   // >= 1, +inf where jdet <= 0 and |Df| > 0
  std::vector<char> good;      // jdet > j_min
  std::vector<Vec2> fval;      // f at cell centers
  double j_min = 1e-8;

  long index(int i, int j) const { return grid.index(i, j); }
};

// per-cell derivative analysis; analytic derivatives where the map supplies
// them, otherwise central differences with step = one cell width (one-sided
// on the outermost ring)
MapAnalysis analyze(const PlanarMap& map, const Grid& grid,
                    double j_min = 1e-8, int threads = 0);

// inner distortion field; in the plane the cofactor matrix is a rotation of
// Df, so K_I coincides with K_f and this returns a copy of kdist
std::vector<double> inner_distortion(const MapAnalysis& a);

// derivative at a point: analytic if available, else central differences
Mat2 jacobian_at(const PlanarMap& map, const Vec2& p, double step);

// distortion value from a derivative, following the kdist conventions
double distortion_of(const Mat2& m, double eps = 1e-300);

}  // namespace invmap
