#include "invmap/inv_check.hpp"

#include <algorithm>

namespace invmap {

namespace {

constexpr size_t kWitnessCap = 64;

struct BallRaster {
  LoopImage loop;
  DegreeRaster raster;
  bool valid = false;
};

Grid window_for(const Rect& bbox, int res) {
  Rect box = bbox;
  const double ref = std::max(box.width(), box.height());
  for (int axis = 0; axis < 2; ++axis) {
    const double d = box.hi[axis] - box.lo[axis];
    if (d < 0.1 * ref) {
      box.lo[axis] -= 0.5 * (0.1 * ref - d);
      box.hi[axis] += 0.5 * (0.1 * ref - d);
    }
  }
  const Vec2 pad(box.width() / res, box.height() / res);
  return Grid{{box.lo - pad, box.hi + pad}, res, res};
}

BallRaster rasterize_ball(const PlanarMap& map, const Ball& ball,
                          const Grid& grid, const Thresholds& th) {
  BallRaster out;
  const double h_loop = th.h_loop_pixels * grid.pixel_diag();
  out.loop = trace_boundary(map, ball, h_loop, th.delta_floor_factor);
  out.raster = raster_degrees(out.loop, grid,
                              th.w_mask_pixels * grid.pixel_diag(), th.threads);
  out.valid = true;
  return out;
}

}  // namespace

std::vector<double> radius_schedule(double r_max, int count, double ratio) {
  std::vector<double> out(count);
  double r = r_max;
  for (int k = 0; k < count; ++k, r *= ratio) out[k] = r;
  return out;
}

std::vector<Ball> default_ball_schedule(const PlanarMap& map, Ball::Shape shape,
                                        int centers, int radii) {
  const Rect dom = map.domain();
  std::vector<Ball> balls;
  for (int cj = 0; cj < centers; ++cj)
    for (int ci = 0; ci < centers; ++ci) {
      const Vec2 c{dom.lo.x() + (ci + 1) * dom.width() / (centers + 1),
                   dom.lo.y() + (cj + 1) * dom.height() / (centers + 1)};
      const double margin =
          std::min({c.x() - dom.lo.x(), dom.hi.x() - c.x(), c.y() - dom.lo.y(),
                    dom.hi.y() - c.y()});
      for (double r : radius_schedule(0.8 * margin, radii))
        balls.push_back({c, r, shape});
    }
  return balls;
}

InvReport check_inv_ball(const PlanarMap& map, const Ball& ball,
                         long n_samples, int res, const Thresholds& th) {
  InvReport rep;
  rep.ball = ball;

  // probe trace to size the window
  LoopImage probe =
      trace_boundary(map, ball, ball.perimeter() / 512.0, th.delta_floor_factor);
  const bool degenerate = probe.degenerate(1e-10 * map.domain().diag());
  rep.empty_window = degenerate;

  Grid grid = window_for(probe.bbox(), res);
  BallRaster br;
  double w_mask = th.w_mask_pixels * grid.pixel_diag();
  LoopImage* loop = &probe;
  if (!degenerate) {
    br = rasterize_ball(map, ball, grid, th);
    loop = &br.loop;
  }
  const Rect lbox = loop->bbox().padded(4.0 * w_mask + 1e-12);
  LoopIndex index(*loop, lbox);
  const double tol = w_mask;  // loop-proximity tolerance, world units

  auto classify = [&](const Vec2& x, bool inside) {
    const Vec2 y = map(x);
    const double d =
        lbox.contains(y) ? index.distance(y, 2.0 * tol) : 2.0 * tol;
    if (d <= tol) return true;  // on the boundary image, both conditions hold
    const int deg = degenerate ? 0 : br.raster.deg_at(y);
    const bool ok = inside ? deg != 0 : deg == 0;
    if (!ok && rep.witnesses.size() < kWitnessCap)
      rep.witnesses.push_back({x, y, inside ? 2 : 3});
    return ok;
  };

  // stratified lattice over the closed ball
  const int m = std::max(2, (int)std::ceil(std::sqrt((double)n_samples)));
  const Rect bb = ball.bbox();
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      const Vec2 x{bb.lo.x() + (i + 0.5) * bb.width() / m,
                   bb.lo.y() + (j + 0.5) * bb.height() / m};
      if (!ball.contains(x)) continue;
      if (!map.domain().contains(x)) continue;
      ++rep.n_inside;
      if (degenerate) {
        // boundary image is a point: the inside condition reduces to
        // landing on it
        const Vec2 y = map(x);
        const double d = index.distance(y, 2.0 * tol);
        if (d > tol) {
          ++rep.viol_inside;
          if (rep.witnesses.size() < kWitnessCap)
            rep.witnesses.push_back({x, y, 2});
        }
      } else if (!classify(x, true)) {
        ++rep.viol_inside;
      }
    }

  // stratified lattice over the rest of the domain
  const Rect dom = map.domain();
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      const Vec2 x{dom.lo.x() + (i + 0.5) * dom.width() / m,
                   dom.lo.y() + (j + 0.5) * dom.height() / m};
      if (ball.contains(x, 1e-12)) continue;
      ++rep.n_outside;
      if (degenerate) continue;  // empty topological image
      if (!classify(x, false)) ++rep.viol_outside;
    }

  const long tot = rep.n_inside + rep.n_outside;
  rep.viol_frac = tot ? double(rep.viol_inside + rep.viol_outside) / tot : 0.0;
  return rep;
}

StructReport check_nested(const PlanarMap& map, const Ball& inner,
                          const Ball& outer, int res, const Thresholds& th) {
  StructReport rep;
  LoopImage pi = trace_boundary(map, inner, inner.perimeter() / 512.0,
                                th.delta_floor_factor);
  LoopImage po = trace_boundary(map, outer, outer.perimeter() / 512.0,
                                th.delta_floor_factor);
  const Grid grid = window_for(Rect::hull(pi.bbox(), po.bbox()), res);
  const auto ri = rasterize_ball(map, inner, grid, th).raster;
  const auto ro = rasterize_ball(map, outer, grid, th).raster;
  const double w_mask = ri.w_mask;
  for (long k = 0; k < grid.cells(); ++k) {
    const bool in_Ei = ri.near[k] || ri.deg[k] != 0;
    if (!in_Ei) continue;
    ++rep.checked;
    const bool in_Eo = ro.near[k] || ro.deg[k] != 0;
    if (in_Eo) continue;
    const double margin = std::min(ri.dist[k], ro.dist[k]);
    if (margin > w_mask) {
      ++rep.witnesses_n;
      if (rep.witnesses.size() < 64) {
        const int i = static_cast<int>(k % grid.nx);
        const int j = static_cast<int>(k / grid.nx);
        rep.witnesses.push_back({grid.cell_center(i, j), ri.deg[k], ro.deg[k]});
      }
    } else {
      ++rep.masked;
    }
  }
  rep.result = rep.witnesses_n   ? TriState::fail
               : rep.masked > 0 ? TriState::inconclusive
                                : TriState::pass;
  return rep;
}

StructReport check_disjoint(const PlanarMap& map, const Ball& b1,
                            const Ball& b2, int res, const Thresholds& th) {
  StructReport rep;
  LoopImage p1 = trace_boundary(map, b1, b1.perimeter() / 512.0,
                                th.delta_floor_factor);
  LoopImage p2 = trace_boundary(map, b2, b2.perimeter() / 512.0,
                                th.delta_floor_factor);
  const Grid grid = window_for(Rect::hull(p1.bbox(), p2.bbox()), res);
  const auto r1 = rasterize_ball(map, b1, grid, th).raster;
  const auto r2 = rasterize_ball(map, b2, grid, th).raster;
  const double w_mask = r1.w_mask;
  for (long k = 0; k < grid.cells(); ++k) {
    const bool im1 = !r1.near[k] && r1.deg[k] != 0;
    const bool im2 = !r2.near[k] && r2.deg[k] != 0;
    if (!(im1 && im2)) continue;
    ++rep.checked;
    const double margin = std::min(r1.dist[k], r2.dist[k]);
    if (margin > w_mask) {
      ++rep.witnesses_n;
      if (rep.witnesses.size() < 64) {
        const int i = static_cast<int>(k % grid.nx);
        const int j = static_cast<int>(k / grid.nx);
        rep.witnesses.push_back({grid.cell_center(i, j), r1.deg[k], r2.deg[k]});
      }
    } else {
      ++rep.masked;
    }
  }
  rep.result = rep.witnesses_n   ? TriState::fail
               : rep.masked > 0 ? TriState::inconclusive
                                : TriState::pass;
  return rep;
}

StructReport check_degree_range(const PlanarMap& map,
                                const std::vector<Ball>& balls, int res,
                                const Thresholds& th) {
  StructReport rep;
  for (const Ball& b : balls) {
    TopImage t;
    try {
      t = topological_image(map, b, res, th);
    } catch (const Error& e) {
      if (e.code == Errc::empty_window) continue;  // point image, degree 0
      throw;
    }
    const auto& r = t.raster;
    for (long k = 0; k < r.grid.cells(); ++k) {
      if (r.near[k] || r.dist[k] <= r.w_mask) continue;
      ++rep.checked;
      if (r.deg[k] != 0 && r.deg[k] != 1) {
        ++rep.witnesses_n;
        if (rep.witnesses.size() < 64) {
          const int i = static_cast<int>(k % r.grid.nx);
          const int j = static_cast<int>(k / r.grid.nx);
          rep.witnesses.push_back({r.grid.cell_center(i, j), r.deg[k], 0});
        }
      }
    }
  }
  rep.result = rep.witnesses_n ? TriState::fail : TriState::pass;
  return rep;
}

}  // namespace invmap
