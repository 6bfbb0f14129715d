#include <doctest.h>

#include <random>

#include "invmap/analysis.hpp"
#include "invmap/gallery.hpp"
#include "invmap/io.hpp"
#include "invmap/parallel.hpp"

using namespace invmap;

TEST_CASE("catalog is complete and resolvable") {
  const auto list = gallery_list();
  CHECK(list.size() >= 7);
  bool has_bad = false;
  for (const auto& [name, desc] : list) {
    CHECK_NOTHROW(gallery_get(name));
    if (name == "bad_inv_nofd") has_bad = true;
  }
  CHECK(has_bad);
  CHECK_THROWS_AS(gallery_get("no_such_map"), Error);
}

TEST_CASE("gallery point values") {
  auto bv = gallery_get("bv_inverse");
  CHECK((bv.map(Vec2(1.5, 0.5)) - Vec2(1.0, 0.5)).norm() < 1e-14);
  auto rc = gallery_get("radial_cavitation");
  CHECK((rc.map(Vec2(0.5, 0.0)) - Vec2(1.5, 0.0)).norm() < 1e-14);
  auto id = gallery_get("identity");
  CHECK(id.props.finite_distortion);
  CHECK(id.props.satisfies_inv);
  auto k = gallery_get("cube_cavitation(cx=0,cy=0,r=1)");
  CHECK((k.map(Vec2(0.5, 0.0)) - Vec2(1.0, 0.0)).norm() < 1e-14);
}

TEST_CASE("linear arguments are parsed") {
  auto e = gallery_get("linear(a=3,b=0.5)");
  CHECK((e.map(Vec2(1.0, 1.0)) - Vec2(3.0, 0.5)).norm() < 1e-14);
}

TEST_CASE("counterexample is the identity on the outer boundary") {
  auto e = gallery_get("bad_inv_nofd");
  for (int k = 0; k <= 64; ++k) {
    const double t = -2.0 + 4.0 * k / 64.0;
    for (const Vec2 p : {Vec2(t, -2), Vec2(t, 2), Vec2(-2, t), Vec2(2, t)})
      CHECK((e.map(p) - p).norm() < 1e-12);
  }
}

TEST_CASE("committed stage data matches the embedded tables") {
  for (char which : {'b', 'l', 'r'}) {
    const PwaData mem = bad_inv_stage(which);
    const std::string path = std::string(INVMAP_DATA_DIR) + "/bad_inv_" +
                             which + ".pwa2";
    const PwaData file = read_pwa2_file(path);
    REQUIRE(file.pieces.size() == mem.pieces.size());
    for (size_t k = 0; k < mem.pieces.size(); ++k) {
      REQUIRE(file.pieces[k].poly.size() == mem.pieces[k].poly.size());
      for (size_t v = 0; v < mem.pieces[k].poly.size(); ++v)
        CHECK(file.pieces[k].poly[v] == mem.pieces[k].poly[v]);
      CHECK(file.pieces[k].A == mem.pieces[k].A);
      CHECK(file.pieces[k].b == mem.pieces[k].b);
    }
  }
}

TEST_CASE("stage pieces tile the domain") {
  for (char which : {'b', 'l', 'r'}) {
    const PwaData d = bad_inv_stage(which);
    double area = 0.0;
    for (const auto& pc : d.pieces) {
      double a2 = 0.0;
      const size_t n = pc.poly.size();
      for (size_t v = 0; v < n; ++v) {
        const Vec2& p = pc.poly[v];
        const Vec2& q = pc.poly[(v + 1) % n];
        a2 += p.x() * q.y() - q.x() * p.y();
      }
      CHECK(a2 > 0.0);  // counterclockwise
      area += 0.5 * a2;
    }
    CHECK(area == doctest::Approx(16.0).epsilon(1e-9));
  }
}

TEST_CASE("bv map is 1-Lipschitz in the max norm on its branch region") {
  auto e = gallery_get("bv_inverse");
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ux(0, 3), uy(0, 1);
  for (int t = 0; t < 400; ++t) {
    const Vec2 p(ux(rng), uy(rng)), q(ux(rng), uy(rng));
    const Vec2 fp = e.map(p), fq = e.map(q);
    const double dm = std::max(std::abs(p.x() - q.x()), std::abs(p.y() - q.y()));
    const double dfm =
        std::max(std::abs(fp.x() - fq.x()), std::abs(fp.y() - fq.y()));
    CHECK(dfm <= dm + 1e-12);
  }
}

TEST_CASE("radial cavitation has integrable distortion") {
  auto e = gallery_get("radial_cavitation");
  const Region disk = Region::disk_in({0, 0}, 1.0);
  double prev = kInf;
  for (int res : {96, 192, 384}) {
    const Grid g{{{-1, -1}, {1, 1}}, res, res};
    const auto an = analyze(e.map, g);
    const double integral = parallel_sum(g.cells(), 0, [&](long k) -> double {
      const int i = static_cast<int>(k % g.nx);
      const int j = static_cast<int>(k / g.nx);
      if (!disk.contains(g.cell_center(i, j))) return 0.0;
      return std::isfinite(an.kdist[k]) ? an.kdist[k] * g.cell_area() : 0.0;
    });
    const double err = std::abs(integral - 3.0 * M_PI);
    CHECK(err < prev + 0.05);
    prev = err;
  }
  CHECK(prev < 0.35);
}

TEST_CASE("distortion fields of the simple maps") {
  auto id = gallery_get("identity");
  const Grid g{{{-1, -1}, {1, 1}}, 24, 24};
  const auto a1 = analyze(id.map, g);
  for (long k = 0; k < g.cells(); ++k) {
    CHECK(a1.kdist[k] == doctest::Approx(1.0));
    CHECK(a1.jdet[k] == doctest::Approx(1.0));
  }
  auto lin = gallery_get("linear(a=2,b=1)");
  const Grid g2{{{0, 0}, {1, 1}}, 24, 24};
  const auto a2 = analyze(lin.map, g2);
  for (long k = 0; k < g2.cells(); ++k)
    CHECK(a2.kdist[k] == doctest::Approx(2.0));
  // radial stretch 1, tangential (1+r)/r
  auto rc = gallery_get("radial_cavitation");
  const auto a3 = analyze(rc.map, g);
  for (int s = 0; s < 24; ++s) {
    const long k = a3.grid.index(s, 12);
    const Vec2 p = a3.grid.cell_center(s, 12);
    const double r = p.norm();
    if (r < 0.15 || r > 0.95) continue;
    CHECK(a3.kdist[k] == doctest::Approx((1 + r) / r).epsilon(1e-6));
  }
}

TEST_CASE("file specs load as maps") {
  GridSampledData gs;
  gs.domain = {{0, 0}, {1, 1}};
  gs.nx = gs.ny = 3;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) gs.values.push_back(gs.node(i, j));
  const std::string path = "test_identity.gridmap2";
  write_gridmap2_file(path, gs);
  auto e = load_map_spec(path);
  CHECK((e.map(Vec2(0.25, 0.75)) - Vec2(0.25, 0.75)).norm() < 1e-13);
  std::remove(path.c_str());
}
