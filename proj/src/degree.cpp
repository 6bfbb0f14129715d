#include "invmap/degree.hpp"

#include <algorithm>

#include "invmap/parallel.hpp"

namespace invmap {

Rect LoopImage::bbox() const {
  Vec2 lo = samples.front(), hi = samples.front();
  for (const Vec2& p : samples) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return {lo, hi};
}

Vec2 ball_boundary_point(const Ball& ball, double t) {
  t -= std::floor(t);
  if (ball.shape == Ball::Shape::disk) {
    const double a = 2.0 * M_PI * t;
    return ball.center + ball.radius * Vec2(std::cos(a), std::sin(a));
  }
  const double r = ball.radius;
  const double s = t * 8.0 * r;  // arc length from the bottom-left corner
  const Vec2 bl = ball.center - Vec2(r, r);
  if (s < 2 * r) return bl + Vec2(s, 0);
  if (s < 4 * r) return bl + Vec2(2 * r, s - 2 * r);
  if (s < 6 * r) return bl + Vec2(2 * r - (s - 4 * r), 2 * r);
  return bl + Vec2(0, 2 * r - (s - 6 * r));
}

LoopImage trace_boundary(const PlanarMap& map, const Ball& ball, double h_loop,
                         double delta_floor_factor) {
  const double t_floor =
      delta_floor_factor * ball.radius / ball.perimeter();
  LoopImage out;
  struct Seg {
    double t0, t1;
    Vec2 y0, y1;
  };
  const int m0 = 64;
  std::vector<Seg> stack;
  std::vector<Vec2> seed(m0 + 1);
  for (int k = 0; k <= m0; ++k)
    seed[k] = map(ball_boundary_point(ball, double(k) / m0));
  // in-order refinement: process one segment fully before the next
  for (int k = 0; k < m0; ++k) {
    stack.push_back({double(k) / m0, double(k + 1) / m0, seed[k], seed[k + 1]});
    while (!stack.empty()) {
      const Seg s = stack.back();
      stack.pop_back();
      if ((s.y1 - s.y0).norm() <= h_loop) {
        out.samples.push_back(s.y0);
        out.params.push_back(s.t0);
        continue;
      }
      if (s.t1 - s.t0 <= t_floor)
        throw Error(Errc::refinement_floor,
                    map.name() + ": boundary trace hit the refinement floor "
                    "with image spacing still above h_loop");
      const double tm = 0.5 * (s.t0 + s.t1);
      const Vec2 ym = map(ball_boundary_point(ball, tm));
      // push the right half first so the left half is processed next
      stack.push_back({tm, s.t1, ym, s.y1});
      stack.push_back({s.t0, tm, s.y0, ym});
    }
  }
  out.samples.push_back(out.samples.front());
  out.params.push_back(1.0);
  return out;
}

int winding_number(const LoopImage& loop, const Vec2& y, double guard_dist,
                   double max_residual) {
  const auto& pts = loop.samples;
  double min_d2 = kInf;
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    const Vec2 a = pts[k] - y, b = pts[k + 1] - y;
    const Vec2 e = b - a;
    const double den = e.squaredNorm();
    double t = den > 0 ? std::clamp(-(a.dot(e)) / den, 0.0, 1.0) : 0.0;
    min_d2 = std::min(min_d2, (a + t * e).squaredNorm());
  }
  if (min_d2 <= guard_dist * guard_dist)
    throw Error(Errc::too_close_to_boundary,
                "winding_number: point within the boundary guard band");
  Ksum acc;
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    const Vec2 a = pts[k] - y, b = pts[k + 1] - y;
    acc.add(std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b)));
  }
  const double w = acc.value() / (2.0 * M_PI);
  const double r = std::round(w);
  if (std::abs(w - r) >= max_residual)
    throw Error(Errc::non_integer_winding,
                "winding_number: residual " + std::to_string(std::abs(w - r)));
  return static_cast<int>(r);
}

LoopIndex::LoopIndex(const LoopImage& loop, const Rect& window, int buckets)
    : loop_(loop), win_(window), bn_(buckets) {
  bx_ = win_.width() / bn_;
  by_ = win_.height() / bn_;
  cells_.assign(static_cast<size_t>(bn_) * bn_, {});
  const auto& pts = loop_.samples;
  auto clampi = [&](int v) { return std::clamp(v, 0, bn_ - 1); };
  for (int k = 0; k + 1 < (int)pts.size(); ++k) {
    const Vec2 lo = pts[k].cwiseMin(pts[k + 1]);
    const Vec2 hi = pts[k].cwiseMax(pts[k + 1]);
    const int i0 = clampi((int)std::floor((lo.x() - win_.lo.x()) / bx_));
    const int i1 = clampi((int)std::floor((hi.x() - win_.lo.x()) / bx_));
    const int j0 = clampi((int)std::floor((lo.y() - win_.lo.y()) / by_));
    const int j1 = clampi((int)std::floor((hi.y() - win_.lo.y()) / by_));
    for (int j = j0; j <= j1; ++j)
      for (int i = i0; i <= i1; ++i)
        cells_[static_cast<size_t>(j) * bn_ + i].push_back(k);
  }
}

double LoopIndex::distance(const Vec2& p, double cap) const {
  const auto& pts = loop_.samples;
  const int ci = std::clamp((int)std::floor((p.x() - win_.lo.x()) / bx_), -1, bn_);
  const int cj = std::clamp((int)std::floor((p.y() - win_.lo.y()) / by_), -1, bn_);
  const int kx = (int)std::ceil(cap / bx_) + 1;
  const int ky = (int)std::ceil(cap / by_) + 1;
  double best2 = cap * cap;
  for (int j = std::max(0, cj - ky); j <= std::min(bn_ - 1, cj + ky); ++j)
    for (int i = std::max(0, ci - kx); i <= std::min(bn_ - 1, ci + kx); ++i)
      for (int k : cells_[static_cast<size_t>(j) * bn_ + i]) {
        const Vec2 a = pts[k] - p, b = pts[k + 1] - p;
        const Vec2 e = b - a;
        const double den = e.squaredNorm();
        const double t = den > 0 ? std::clamp(-(a.dot(e)) / den, 0.0, 1.0) : 0.0;
        best2 = std::min(best2, (a + t * e).squaredNorm());
      }
  return std::sqrt(best2);
}

DegreeRaster raster_degrees(const LoopImage& loop, const Grid& grid,
                            double w_mask, int threads) {
  DegreeRaster r;
  r.grid = grid;
  r.w_mask = w_mask;
  const long n = grid.cells();
  r.deg.assign(n, 0);
  r.near.assign(n, 0);
  r.dist.assign(n, 0.0);
  const double dist_cap = std::max(3.0 * w_mask, 1.5 * grid.pixel_diag());
  LoopIndex index(loop, grid.domain);
  const auto& pts = loop.samples;

  parallel_for(grid.ny, threads, [&](long jlo, long jhi) {
    std::vector<std::pair<double, int>> events;
    for (long j = jlo; j < jhi; ++j) {
      const double y = grid.domain.lo.y() + (j + 0.5) * grid.dy();
      events.clear();
      for (size_t k = 0; k + 1 < pts.size(); ++k) {
        const Vec2& a = pts[k];
        const Vec2& b = pts[k + 1];
        if (a.y() <= y && y < b.y()) {
          const double x = a.x() + (y - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
          events.emplace_back(x, -1);  // upward crossing of the left ray
        } else if (b.y() <= y && y < a.y()) {
          const double x = a.x() + (y - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
          events.emplace_back(x, +1);
        }
      }
      std::sort(events.begin(), events.end());
      size_t e = 0;
      int w = 0;
      for (int i = 0; i < grid.nx; ++i) {
        const double xc = grid.domain.lo.x() + (i + 0.5) * grid.dx();
        while (e < events.size() && events[e].first < xc) w += events[e++].second;
        const long idx = grid.index(i, static_cast<int>(j));
        r.deg[idx] = w;
        const double d = index.distance({xc, y}, dist_cap);
        r.dist[idx] = d;
        r.near[idx] = d <= w_mask ? 1 : 0;
      }
    }
  });
  return r;
}

double loop_step_for(const Ball& ball, int res, double h_loop_pixels) {
  // provisional pixel size from the ball bounding box; the traced loop may
  // grow the window, which only makes the step conservative
  const double px = 2.0 * ball.radius / res * std::sqrt(2.0);
  return std::max(1e-12, h_loop_pixels * px);
}

TopImage topological_image_on(const PlanarMap& map, const Ball& ball,
                              const Grid& grid, const Thresholds& th) {
  const double h_loop = th.h_loop_pixels * grid.pixel_diag();
  LoopImage loop = trace_boundary(map, ball, h_loop, th.delta_floor_factor);
  if (loop.degenerate(1e-12 * map.domain().diag()))
    throw Error(Errc::empty_window, "topological_image: degenerate loop");
  TopImage t;
  t.raster = raster_degrees(loop, grid, th.w_mask_pixels * grid.pixel_diag(),
                            th.threads);
  const double px = grid.cell_area();
  long n_imt = 0, n_e = 0;
  for (long k = 0; k < grid.cells(); ++k) {
    if (t.raster.deg[k] != 0) ++n_imt;
    if (t.raster.deg[k] != 0 || t.raster.near[k]) ++n_e;
  }
  t.imT_area = n_imt * px;
  t.E_area = n_e * px;
  return t;
}

TopImage topological_image(const PlanarMap& map, const Ball& ball, int res,
                           const Thresholds& th) {
  // first trace to find the window, then retrace at the window's pixel scale
  LoopImage probe = trace_boundary(map, ball, ball.perimeter() / 1024.0,
                                   th.delta_floor_factor);
  if (probe.degenerate(1e-12 * map.domain().diag()))
    throw Error(Errc::empty_window, "topological_image: degenerate loop");
  Rect box = probe.bbox();
  const double ref = std::max(box.width(), box.height());
  for (int axis = 0; axis < 2; ++axis) {
    const double d = box.hi[axis] - box.lo[axis];
    if (d < 0.1 * ref) {  // keep a usable aspect for near-degenerate loops
      box.lo[axis] -= 0.5 * (0.1 * ref - d);
      box.hi[axis] += 0.5 * (0.1 * ref - d);
    }
  }
  const Vec2 pad(box.width() / res, box.height() / res);
  box = {box.lo - pad, box.hi + pad};
  const Grid grid{box, res, res};
  return topological_image_on(map, ball, grid, th);
}

}  // namespace invmap
