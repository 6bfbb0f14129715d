#include <doctest.h>

#include "invmap/gallery.hpp"
#include "invmap/inverse.hpp"

using namespace invmap;

namespace {

InverseMap invert_entry(const GalleryEntry& e, int res) {
  const Grid sgrid{e.source_region.box, res, res};
  const auto an = analyze(e.map, sgrid);
  const Grid tgrid{e.target_region.box, res, res};
  return build_inverse(e.map, an, tgrid);
}

}  // namespace

TEST_CASE("identity inverts to itself") {
  auto e = gallery_get("identity");
  const auto inv = invert_entry(e, 96);
  CHECK(inv.cavities.empty());
  const double cw = inv.grid.dx();
  long defined = 0;
  for (long k = 0; k < inv.grid.cells(); ++k) {
    if (!inv.defined(k)) continue;
    ++defined;
    const int i = static_cast<int>(k % inv.grid.nx);
    const int j = static_cast<int>(k / inv.grid.nx);
    CHECK((inv.values[k] - inv.grid.cell_center(i, j)).norm() <= cw);
  }
  CHECK(defined >= inv.grid.cells() * 99 / 100);
  CHECK(roundtrip_residual(e.map, inv) <= std::hypot(inv.grid.dx(), inv.grid.dy()));
  CHECK(detect_jump(inv).empty());
}

TEST_CASE("diagonal map inverts to the reciprocal diagonal") {
  auto e = gallery_get("linear(a=2,b=1)");
  const auto inv = invert_entry(e, 96);
  CHECK(inv.cavities.empty());
  for (long k = 0; k < inv.grid.cells(); ++k) {
    if (inv.prov[k] != 'g') continue;
    const int i = static_cast<int>(k % inv.grid.nx);
    const int j = static_cast<int>(k / inv.grid.nx);
    const Vec2 y = inv.grid.cell_center(i, j);
    CHECK((inv.values[k] - Vec2(0.5 * y.x(), y.y())).norm() <=
          2.0 * std::hypot(inv.grid.dx(), inv.grid.dy()));
  }
  CHECK(roundtrip_residual(e.map, inv) <=
        std::hypot(inv.grid.dx(), inv.grid.dy()));
}

TEST_CASE("radial cavitation yields one cavity and the analytic inverse") {
  auto e = gallery_get("radial_cavitation");
  const auto inv = invert_entry(e, 128);
  REQUIRE(inv.cavities.size() == 1);
  CHECK(inv.cavities[0].source.norm() < 0.05);
  CHECK(std::abs(inv.cavities[0].area - M_PI) < 0.12 * M_PI);
  const double diag = std::hypot(inv.grid.dx(), inv.grid.dy());
  for (long k = 0; k < inv.grid.cells(); ++k) {
    if (inv.prov[k] != 'g') continue;
    const int i = static_cast<int>(k % inv.grid.nx);
    const int j = static_cast<int>(k / inv.grid.nx);
    const Vec2 y = inv.grid.cell_center(i, j);
    const double ry = y.norm();
    if (ry < 1.1 || ry > 1.9) continue;
    const Vec2 expect = (ry - 1.0) / ry * y;
    CHECK((inv.values[k] - expect).norm() <= 2.0 * diag);
  }
  CHECK(detect_jump(inv).empty());
  // cavity cells carry the source point exactly
  for (long k = 0; k < inv.grid.cells(); ++k)
    if (inv.prov[k] == 'c')
      CHECK((inv.values[k] - inv.cavities[0].source).norm() == 0.0);
}

TEST_CASE("bv inverse jumps along the collapse line") {
  auto e = gallery_get("bv_inverse");
  const auto inv = invert_entry(e, 128);
  const auto jumps = detect_jump(inv);
  REQUIRE(!jumps.empty());
  // rows well inside the strip see the unit jump across the collapse line
  std::vector<char> row_hit(inv.grid.ny, 0);
  for (const auto& jm : jumps) {
    const Vec2 y = inv.grid.cell_center(jm.i1, jm.j1);
    if (y.y() <= 0.1 || y.y() >= 0.9) continue;
    if (std::abs(y.x() - 1.0) < 3.0 * inv.grid.dx() && jm.i2 == jm.i1 + 1) {
      CHECK(jm.mag == doctest::Approx(1.0).epsilon(0.15));
      row_hit[jm.j1] = 1;
    }
  }
  long rows = 0, hit = 0;
  for (int j = 0; j < inv.grid.ny; ++j) {
    const double yy = inv.grid.cell_center(0, j).y();
    if (yy <= 0.1 || yy >= 0.9) continue;
    ++rows;
    hit += row_hit[j];
  }
  CHECK(hit >= rows * 9 / 10);
}

TEST_CASE("multiplicity counts preimage clusters") {
  auto id = gallery_get("identity");
  const Grid sg{id.source_region.box, 128, 128};
  const Grid tg{{{-1.9, -1.9}, {1.9, 1.9}}, 64, 64};
  const auto mult = multiplicity_raster(id.map, sg, tg);
  for (long k = 0; k < tg.cells(); ++k) CHECK(mult.counts[k] == 1);

  auto bv = gallery_get("bv_inverse");
  const Grid sg2{bv.source_region.box, 256, 256};
  const Grid tg2{{{0.2, 0.2}, {1.8, 0.8}}, 32, 32};
  const auto m2 = multiplicity_raster(bv.map, sg2, tg2);
  // the segment [1,2]x{y} collapses onto x=1 next to the graph branch
  int ti, tj;
  REQUIRE(tg2.cell_of({1.0, 0.5}, ti, tj));
  CHECK(m2.counts[tg2.index(ti, tj)] >= 2);
  // away from the collapse the map is one to one
  REQUIRE(tg2.cell_of({0.5, 0.5}, ti, tj));
  CHECK(m2.counts[tg2.index(ti, tj)] == 1);
}

TEST_CASE("inverting twice returns a homeomorphism") {
  auto e = gallery_get("linear(a=2,b=1)");
  const auto inv = invert_entry(e, 96);
  // resample h as a grid map over the cell centers
  GridSampledData gs;
  gs.domain = {inv.grid.cell_center(0, 0),
               inv.grid.cell_center(inv.grid.nx - 1, inv.grid.ny - 1)};
  gs.nx = inv.grid.nx;
  gs.ny = inv.grid.ny;
  gs.values = inv.values;
  auto hmap = PlanarMap::grid_sampled(gs, true, "h");
  const Grid sg{gs.domain, 96, 96};
  const auto an = analyze(hmap, sg);
  const Grid tg{{{0.05, 0.05}, {0.95, 0.95}}, 96, 96};
  const auto inv2 = build_inverse(hmap, an, tg);
  const double tol = 3.0 * std::hypot(tg.dx(), tg.dy());
  long graph_cells = 0;
  for (long k = 0; k < tg.cells(); ++k) {
    if (inv2.prov[k] != 'g') continue;
    ++graph_cells;
    const int i = static_cast<int>(k % tg.nx);
    const int j = static_cast<int>(k / tg.nx);
    const Vec2 x = tg.cell_center(i, j);  // point in the original source
    CHECK((inv2.values[k] - Vec2(2.0 * x.x(), x.y())).norm() <= tol);
  }
  CHECK(graph_cells > tg.cells() / 2);
}

TEST_CASE("cavity regions overlap cells without good preimages") {
  auto e = gallery_get("radial_cavitation");
  const auto inv = invert_entry(e, 96);
  REQUIRE(inv.cavities.size() == 1);
  long overlap = 0;
  for (long k = 0; k < inv.grid.cells(); ++k) {
    if (inv.prov[k] != 'c') continue;
    ++overlap;
  }
  CHECK(overlap > 0);
}
