#pragma once

#include <vector>

#include "invmap/core.hpp"
#include "invmap/degree.hpp"
#include "invmap/planar_map.hpp"

namespace invmap {

// sampled verification of the two measure conditions for one ball
struct InvReport {
  Ball ball;
  long n_inside = 0, n_outside = 0;
  long viol_inside = 0, viol_outside = 0;
  double viol_frac = 0.0;
  bool empty_window = false;  // degenerate boundary image, only the outside
                              // condition is meaningful
  struct Witness {
    Vec2 x, fx;
    int cond;  // 2 = inside condition, 3 = outside condition
  };
  std::vector<Witness> witnesses;
};

InvReport check_inv_ball(const PlanarMap& map, const Ball& ball,
                         long n_samples, int res, const Thresholds& th = {});

enum class TriState { pass, fail, inconclusive };

struct StructReport {
  TriState result = TriState::pass;
  long checked = 0;      // classified pixels
  long witnesses_n = 0;  // strict failures outside the mask
  long masked = 0;       // discrepancies within the mask band
  struct Witness {
    Vec2 y;
    int a = 0, b = 0;  // degrees involved
  };
  std::vector<Witness> witnesses;
};

// topological image of the inner ball must lie inside that of the outer one
StructReport check_nested(const PlanarMap& map, const Ball& inner,
                          const Ball& outer, int res, const Thresholds& th = {});

// topological images of disjoint balls must not overlap
StructReport check_disjoint(const PlanarMap& map, const Ball& b1,
                            const Ball& b2, int res, const Thresholds& th = {});

// every classified pixel degree must be 0 or 1
StructReport check_degree_range(const PlanarMap& map,
                                const std::vector<Ball>& balls, int res,
                                const Thresholds& th = {});

// geometric radius schedule r_max * (3/4)^k, k = 0..count-1
std::vector<double> radius_schedule(double r_max, int count = 8,
                                    double ratio = 0.75);

// default ball family for a map: a small lattice of centers inside the
// domain, each with the geometric radius schedule
std::vector<Ball> default_ball_schedule(const PlanarMap& map,
                                        Ball::Shape shape, int centers = 3,
                                        int radii = 8);

}  // namespace invmap
