#pragma once

#include <vector>

#include "invmap/analysis.hpp"
#include "invmap/core.hpp"
#include "invmap/degree.hpp"
#include "invmap/planar_map.hpp"

namespace invmap {

struct Cavity {
  Vec2 source;          // the cavity point x
  TopImage region;      // rasterized image of the smallest scheduled ball
  double area = 0.0;
};

// grid-sampled generalized inverse with per-cell provenance
struct InverseMap {
  Grid grid;                    // target window
  std::vector<Vec2> values;     // h per cell, row-major
  std::vector<char> prov;       // 'c' cavity, 'g' graph, 'a' averaged, 'u' undefined
  std::vector<Cavity> cavities;
  double source_cell = 0.0;     // source grid cell width
  double image_cell_scale = 0.0;  // median image-space cell scale
  double rho0 = 0.0;

  bool defined(long k) const { return prov[k] != 'u'; }
};

// candidate points where the good flag fails in a 3x3 neighbourhood or the
// neighbourhood image spread is anomalous, filtered by the scheduled
// topological-image areas
std::vector<Cavity> detect_cavities(const PlanarMap& map,
                                    const MapAnalysis& analysis,
                                    const std::vector<double>& radii,
                                    double delta_cav, int raster_res,
                                    const Thresholds& th = {});

InverseMap build_inverse(const PlanarMap& map, const MapAnalysis& analysis,
                         const Grid& target_grid, const Thresholds& th = {});

// max |f(h(y)) - y| over graph-provenance cells
double roundtrip_residual(const PlanarMap& map, const InverseMap& inv);

struct MultiplicityRaster {
  Grid grid;
  std::vector<int> counts;  // connected source clusters per target cell
};

MultiplicityRaster multiplicity_raster(const PlanarMap& map,
                                       const Grid& source_grid,
                                       const Grid& target_grid,
                                       int threads = 0);

struct Jump {
  int i1, j1, i2, j2;
  double mag;
};

// adjacent defined cells whose values differ by more than kappa cell widths
std::vector<Jump> detect_jump(const InverseMap& inv, double kappa = 10.0);

}  // namespace invmap
