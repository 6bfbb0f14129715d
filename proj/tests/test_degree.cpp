#include <doctest.h>

#include <random>

#include "invmap/degree.hpp"
#include "invmap/gallery.hpp"

using namespace invmap;

namespace {
PlanarMap identity_map() { return gallery_get("identity").map; }
}

TEST_CASE("boundary trace refines to the requested spacing") {
  auto id = identity_map();
  const Ball b{{0, 0}, 1.0, Ball::Shape::disk};
  auto loop = trace_boundary(id, b, 0.1);
  CHECK(loop.samples.size() >= 63);  // arc length 2*pi over 0.1
  for (size_t k = 0; k + 1 < loop.samples.size(); ++k)
    CHECK((loop.samples[k + 1] - loop.samples[k]).norm() <= 0.1 + 1e-12);
  CHECK((loop.samples.front() - loop.samples.back()).norm() == 0.0);
}

TEST_CASE("cube cavitation fixes the square boundary") {
  auto e = gallery_get("cube_cavitation(cx=0,cy=0,r=1)");
  const Ball q{{0, 0}, 1.0, Ball::Shape::square};
  auto loop = trace_boundary(e.map, q, 0.05);
  for (size_t k = 0; k < loop.samples.size(); ++k) {
    const Vec2 expect = ball_boundary_point(q, loop.params[k]);
    CHECK((loop.samples[k] - expect).norm() < 1e-12);
  }
}

TEST_CASE("winding numbers of simple loops") {
  auto id = identity_map();
  const Ball b{{0, 0}, 1.0, Ball::Shape::disk};
  auto loop = trace_boundary(id, b, 0.02);
  CHECK(winding_number(loop, {0, 0}, 0.05) == 1);
  CHECK(winding_number(loop, {2, 0}, 0.05) == 0);
  CHECK_THROWS_AS(winding_number(loop, {1.0, 0.0}, 0.05), Error);

  auto refl = PlanarMap::analytic(
      "refl", {{-2, -2}, {2, 2}},
      [](const Vec2& p) { return Vec2(p.x(), -p.y()); });
  auto rloop = trace_boundary(refl, b, 0.02);
  CHECK(winding_number(rloop, {0, 0}, 0.05) == -1);
}

TEST_CASE("winding is stable under refinement and reparametrization") {
  auto e = gallery_get("radial_cavitation");
  const Ball b{{0.2, 0.1}, 0.5, Ball::Shape::disk};
  auto c1 = trace_boundary(e.map, b, 0.02);
  auto c2 = trace_boundary(e.map, b, 0.005);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-2.2, 2.2);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 60; ++t) {
    const Vec2 y(u(rng), u(rng));
    try {
      const int w1 = winding_number(c1, y, 0.03);
      const int w2 = winding_number(c2, y, 0.03);
      CHECK(w1 == w2);
      ++checked;
    } catch (const Error&) {
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("affine maps wind once inside their image") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 10; ++t) {
    Mat2 a;
    do {
      a << 1 + u(rng), u(rng), u(rng), 1 + u(rng);
    } while (a.determinant() < 0.2);
    auto f = PlanarMap::analytic("aff", {{-2, -2}, {2, 2}},
                                 [a](const Vec2& p) { return Vec2(a * p); });
    const Ball b{{0.1, -0.2}, 0.7, Ball::Shape::disk};
    auto loop = trace_boundary(f, b, 0.02);
    for (int s = 0; s < 20; ++s) {
      const Vec2 x(b.center.x() + u(rng), b.center.y() + u(rng));
      const Vec2 y = a * x;
      const bool inside = (x - b.center).norm() < b.radius - 0.1;
      const bool outside = (x - b.center).norm() > b.radius + 0.1;
      if (!inside && !outside) continue;
      CHECK(winding_number(loop, y, 1e-3) == (inside ? 1 : 0));
    }
  }
}

TEST_CASE("raster degrees agree with the angle sum") {
  auto e = gallery_get("radial_cavitation");
  const Ball b{{0.1, 0.0}, 0.4, Ball::Shape::disk};
  auto t = topological_image(e.map, b, 96);
  auto loop = trace_boundary(e.map, b, 0.25 * t.raster.grid.pixel_diag());
  const auto& r = t.raster;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, r.grid.nx - 1);
  int checked = 0;
  for (int s = 0; s < 400 && checked < 80; ++s) {
    const int i = pick(rng), j = pick(rng);
    const long k = r.grid.index(i, j);
    if (r.near[k] || r.dist[k] <= 2.0 * r.w_mask) continue;
    const Vec2 y = r.grid.cell_center(i, j);
    CHECK(r.deg[k] == winding_number(loop, y, 0.5 * r.w_mask));
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("topological image of the identity disk") {
  auto id = identity_map();
  auto t = topological_image(id, {{0, 0}, 1.0, Ball::Shape::disk}, 256);
  CHECK(std::abs(t.imT_area - M_PI) < 0.05);
  CHECK(t.E_area >= t.imT_area);
  // zero degree on the window frame
  const auto& r = t.raster;
  for (int i = 0; i < r.grid.nx; ++i) {
    CHECK(r.deg[r.grid.index(i, 0)] == 0);
    CHECK(r.deg[r.grid.index(i, r.grid.ny - 1)] == 0);
  }
}

TEST_CASE("cavitation inflates the image of a small ball") {
  auto e = gallery_get("radial_cavitation");
  double prev_err = kInf;
  for (int res : {64, 128, 256}) {
    auto t = topological_image(e.map, {{0, 0}, 0.25, Ball::Shape::disk}, res);
    const double expect = M_PI * 1.25 * 1.25;
    const double err = std::abs(t.imT_area - expect);
    CHECK(err < prev_err + 0.02);
    prev_err = err;
  }
  CHECK(prev_err < 0.08);
}

TEST_CASE("degenerate boundary images are reported") {
  auto c = PlanarMap::analytic("const", {{-2, -2}, {2, 2}},
                               [](const Vec2&) { return Vec2(0.5, 0.5); });
  CHECK_THROWS_AS(
      topological_image(c, {{0, 0}, 1.0, Ball::Shape::disk}, 64), Error);
}

TEST_CASE("counterexample degrees at the rotated square") {
  auto e = gallery_get("bad_inv_nofd");
  const Ball q1{{-0.25, 0.75}, 0.25, Ball::Shape::square};
  const Ball q2{{0.25, 0.75}, 0.25, Ball::Shape::square};
  const Ball q{{0.0, 0.0}, 1.0, Ball::Shape::square};
  auto l1 = trace_boundary(e.map, q1, 0.01);
  auto l2 = trace_boundary(e.map, q2, 0.01);
  auto lq = trace_boundary(e.map, q, 0.01);
  const Vec2 center(0.0, 1.5);  // middle of the rotated square
  CHECK(winding_number(l1, center, 0.02) == -1);
  CHECK(winding_number(l2, center, 0.02) == 1);
  // additivity of the degree over the two squares inside q
  for (const Vec2 y : {Vec2(0.0, 1.45), Vec2(-0.08, 1.5), Vec2(0.1, 1.62)}) {
    const int dq = winding_number(lq, y, 0.02);
    const int d1 = winding_number(l1, y, 0.02);
    const int d2 = winding_number(l2, y, 0.02);
    CHECK(dq == d1 + d2);
    CHECK(dq == 0);
  }
}
