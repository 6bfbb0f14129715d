#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "invmap/analysis.hpp"
#include "invmap/core.hpp"
#include "invmap/io.hpp"
#include "invmap/planar_map.hpp"

using namespace invmap;

TEST_CASE("closed-form singular values") {
  Mat2 d;
  d << 2, 0, 0, 1;
  auto s = singular_values(d);
  CHECK(s.smax == doctest::Approx(2.0));
  CHECK(s.smin == doctest::Approx(1.0));

  const double a = 0.7;
  Mat2 rot;
  rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  s = singular_values(rot);
  CHECK(s.smax == doctest::Approx(1.0));
  CHECK(s.smin == doctest::Approx(1.0));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 200; ++t) {
    Mat2 m;
    m << u(rng), u(rng), u(rng), u(rng);
    const auto sv = singular_values(m);
    Eigen::JacobiSVD<Mat2> ref(m);
    CHECK(sv.smax == doctest::Approx(ref.singularValues()(0)).epsilon(1e-10));
    CHECK(sv.smin == doctest::Approx(ref.singularValues()(1)).epsilon(1e-10));
  }
}

TEST_CASE("evaluate on the basic representations") {
  auto ident = PlanarMap::analytic("id", {{-2, -2}, {2, 2}},
                                   [](const Vec2& p) { return p; });
  CHECK((ident(Vec2(0.3, 0.4)) - Vec2(0.3, 0.4)).norm() == 0.0);

  Mat2 d;
  d << 2, 0, 0, 1;
  auto lin = PlanarMap::analytic("lin", {{0, 0}, {1, 1}},
                                 [d](const Vec2& p) { return Vec2(d * p); });
  CHECK((lin(Vec2(0.5, 0.5)) - Vec2(1.0, 0.5)).norm() < 1e-15);

  CHECK_THROWS_AS(ident(Vec2(3.0, 0.0)), Error);
}

TEST_CASE("composition equals iterated evaluate") {
  Mat2 a;
  a << 0.5, 0.25, 0.0, 0.5;
  auto f1 = PlanarMap::analytic("f1", {{-2, -2}, {2, 2}},
                                [a](const Vec2& p) { return Vec2(a * p); });
  auto f2 = PlanarMap::analytic(
      "f2", {{-2, -2}, {2, 2}},
      [](const Vec2& p) { return Vec2(p.x() + 0.1, p.y() - 0.2); });
  auto comp = PlanarMap::composition({f1, f2});
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.9, 1.9);
  for (int t = 0; t < 100; ++t) {
    const Vec2 p(u(rng), u(rng));
    CHECK((comp(p) - f2(f1(p))).norm() == 0.0);
  }
}

TEST_CASE("finite differences recover an affine map") {
  Mat2 a;
  a << 1.5, -0.25, 0.75, 2.0;
  const Vec2 off(0.3, -0.1);
  // no analytic jacobian supplied, forcing differences
  auto f = PlanarMap::analytic(
      "aff", {{-2, -2}, {2, 2}},
      [a, off](const Vec2& p) { return Vec2(a * p + off); });
  const Grid g{{{-1, -1}, {1, 1}}, 16, 16};
  const auto an = analyze(f, g, 1e-8);
  for (long k = 0; k < g.cells(); ++k)
    CHECK((an.jac[k] - a).norm() / a.norm() < 1e-12);
  // one-sided differences on the outermost ring of the full domain
  const Grid g2{{{-2, -2}, {2, 2}}, 8, 8};
  const auto an2 = analyze(f, g2, 1e-8);
  for (long k = 0; k < g2.cells(); ++k)
    CHECK((an2.jac[k] - a).norm() / a.norm() < 1e-12);
}

TEST_CASE("distortion conventions") {
  Mat2 z = Mat2::Zero();
  CHECK(distortion_of(z) == 1.0);  // zero derivative contributes nothing
  Mat2 d;
  d << 2, 0, 0, 1;
  CHECK(distortion_of(d) == doctest::Approx(2.0));
  Mat2 flip;
  flip << 1, 0, 0, -1;
  CHECK(distortion_of(flip) == kInf);
  Mat2 rank1;
  rank1 << 1, 0, 0, 0;
  CHECK(distortion_of(rank1) == kInf);
}

TEST_CASE("operator norm inequality on analysis cells") {
  Mat2 a;
  a << 1.2, 0.3, -0.4, 0.9;
  auto f = PlanarMap::analytic("aff2", {{-1, -1}, {1, 1}},
                               [a](const Vec2& p) { return Vec2(a * p); });
  const Grid g{{{-1, -1}, {1, 1}}, 12, 12};
  const auto an = analyze(f, g, 1e-8);
  for (long k = 0; k < g.cells(); ++k) {
    if (!std::isfinite(an.kdist[k])) continue;
    const double n = op_norm(an.jac[k]);
    CHECK(n * n <= an.kdist[k] * an.jdet[k] + 1e-12);
  }
  // the inner distortion field coincides with kdist in the plane
  const auto ki = inner_distortion(an);
  for (long k = 0; k < g.cells(); ++k) CHECK(ki[k] == an.kdist[k]);
}

TEST_CASE("grid sampled maps interpolate bilinearly") {
  GridSampledData gs;
  gs.domain = {{0, 0}, {1, 1}};
  gs.nx = gs.ny = 9;
  Mat2 a;
  a << 2, 1, 0, 1;
  for (int j = 0; j < gs.ny; ++j)
    for (int i = 0; i < gs.nx; ++i) gs.values.push_back(a * gs.node(i, j));
  auto f = PlanarMap::grid_sampled(gs);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 100; ++t) {
    const Vec2 p(u(rng), u(rng));
    CHECK((f(p) - a * p).norm() < 1e-13);
  }
}

TEST_CASE("gridmap2 round trip is exact") {
  GridSampledData gs;
  gs.domain = {{-0.5, 0.25}, {1.5, 2.0}};
  gs.nx = 5;
  gs.ny = 4;
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int k = 0; k < gs.nx * gs.ny; ++k)
    gs.values.push_back({u(rng), u(rng)});
  std::stringstream ss;
  write_gridmap2(ss, gs);
  const auto back = read_gridmap2(ss);
  REQUIRE(back.nx == gs.nx);
  REQUIRE(back.ny == gs.ny);
  CHECK(back.domain.lo == gs.domain.lo);
  CHECK(back.domain.hi == gs.domain.hi);
  for (size_t k = 0; k < gs.values.size(); ++k)
    CHECK(back.values[k] == gs.values[k]);
}

TEST_CASE("pwa2 round trip is exact") {
  PwaData d;
  d.domain = {{0, 0}, {2, 2}};
  PwaPiece pc;
  pc.poly = {{0, 0}, {2, 0}, {1, 2}};
  pc.A << 0.123456789012345, -1, 1, 0.5;
  pc.b = {1e-17, 3.25};
  d.pieces.push_back(pc);
  std::stringstream ss;
  write_pwa2(ss, d);
  const auto back = read_pwa2(ss);
  REQUIRE(back.pieces.size() == 1);
  CHECK(back.pieces[0].A == d.pieces[0].A);
  CHECK(back.pieces[0].b == d.pieces[0].b);
  for (size_t v = 0; v < 3; ++v)
    CHECK(back.pieces[0].poly[v] == d.pieces[0].poly[v]);
}

TEST_CASE("csv quoting") {
  std::stringstream ss;
  CsvWriter w(ss);
  w.field(std::string("plain")).field(std::string("a,b")).field(std::string("q\"q"));
  w.end_row();
  CHECK(ss.str() == "plain,\"a,b\",\"q\"\"q\"\n");
}
