#include <doctest.h>

#include "invmap/energy.hpp"
#include "invmap/gallery.hpp"
#include "invmap/inv_check.hpp"

using namespace invmap;

namespace {

// fills an inverse-map container from an analytic field, all graph cells
InverseMap synthetic_inverse(const Grid& g,
                             const std::function<Vec2(const Vec2&)>& h) {
  InverseMap inv;
  inv.grid = g;
  inv.values.resize(g.cells());
  inv.prov.assign(g.cells(), 'g');
  inv.source_cell = g.dx();
  for (long k = 0; k < g.cells(); ++k) {
    const int i = static_cast<int>(k % g.nx);
    const int j = static_cast<int>(k / g.nx);
    inv.values[k] = h(g.cell_center(i, j));
  }
  return inv;
}

}  // namespace

TEST_CASE("dirichlet energy of simple fields") {
  const Grid unit{{{0, 0}, {1, 1}}, 128, 128};
  auto id = synthetic_inverse(unit, [](const Vec2& y) { return y; });
  CHECK(dirichlet_energy(id, Region::rect(unit.domain)) ==
        doctest::Approx(1.0).epsilon(1e-6));

  const Grid two{{{0, 0}, {2, 1}}, 128, 128};
  auto halfx = synthetic_inverse(
      two, [](const Vec2& y) { return Vec2(0.5 * y.x(), y.y()); });
  CHECK(dirichlet_energy(halfx, Region::rect(two.domain)) ==
        doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("dirichlet energy of the cavitation inverse") {
  // analytic generalized inverse: constant on the unit disk, radial outside
  const Grid g{{{-2, -2}, {2, 2}}, 512, 512};
  auto h = synthetic_inverse(g, [](const Vec2& y) -> Vec2 {
    const double r = y.norm();
    if (r <= 1.0) return {0.0, 0.0};
    return (r - 1.0) / r * y;
  });
  const double e = dirichlet_energy(h, Region::disk_in({0, 0}, 2.0));
  CHECK(e == doctest::Approx(3.0 * M_PI).epsilon(0.02));
}

TEST_CASE("too many undefined cells abort the quadrature") {
  const Grid g{{{0, 0}, {1, 1}}, 32, 32};
  auto inv = synthetic_inverse(g, [](const Vec2& y) { return y; });
  for (long k = 0; k < g.cells() / 10; ++k) inv.prov[k] = 'u';
  CHECK_THROWS_AS(dirichlet_energy(inv, Region::rect(g.domain)), Error);
}

TEST_CASE("distortion integrals of the gallery maps") {
  auto id = gallery_get("identity");
  const Grid g{{{0, 0}, {1, 1}}, 64, 64};
  CHECK(distortion_integral(analyze(id.map, g), Region::rect(g.domain)) ==
        doctest::Approx(1.0).epsilon(1e-6));
  auto lin = gallery_get("linear(a=2,b=1)");
  CHECK(distortion_integral(analyze(lin.map, g), Region::rect(g.domain)) ==
        doctest::Approx(2.0).epsilon(1e-6));
  auto rc = gallery_get("radial_cavitation");
  const Grid g2{{{-1, -1}, {1, 1}}, 512, 512};
  CHECK(distortion_integral(analyze(rc.map, g2), Region::disk_in({0, 0}, 1.0)) ==
        doctest::Approx(3.0 * M_PI).epsilon(0.02));
}

TEST_CASE("energy identity for the identity map") {
  auto e = gallery_get("identity");
  const auto rep =
      energy_identity(e.map, e.source_region, e.target_region, 128);
  CHECK(rep.rel_err <= 1e-3);
}

TEST_CASE("key estimate ratio matches the closed form for the identity") {
  auto e = gallery_get("identity");
  const Grid sg{e.source_region.box, 512, 512};
  const auto an = analyze(e.map, sg);
  const Grid tg{e.target_region.box, 256, 256};
  const auto inv = build_inverse(e.map, an, tg);
  const auto probe =
      key_estimate_probe(e.map, an, inv, {0, 0}, {0.2, 0.4}, 1.5);
  for (size_t k = 0; k < probe.radii.size(); ++k) {
    CHECK(!probe.no_preimage[k]);
    CHECK(probe.ratio[k] ==
          doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(0.08));
    // change of variables: the pullback integral matches the source energy
    CHECK(probe.phi_2r[k] ==
          doctest::Approx(probe.energy_2r[k]).epsilon(0.05));
  }
}

TEST_CASE("inv checker on the fold control") {
  auto fold = gallery_get("fold");
  const Ball b{{0.0, -0.5}, 0.2, Ball::Shape::disk};
  const auto rep = check_inv_ball(fold.map, b, 4096, 192);
  CHECK(rep.viol_outside > 0);  // points above the axis land in the image
  CHECK(rep.viol_frac > 0.015);
  bool has_cond3 = false;
  for (const auto& w : rep.witnesses) has_cond3 |= w.cond == 3;
  CHECK(has_cond3);
}

TEST_CASE("inv checker passes on an easy homeomorphism") {
  auto id = gallery_get("identity");
  const Ball b{{0.0, 0.0}, 1.0, Ball::Shape::disk};
  const auto rep = check_inv_ball(id.map, b, 4096, 192);
  CHECK(rep.viol_frac == 0.0);
}

TEST_CASE("nested and disjoint checks on the identity") {
  auto id = gallery_get("identity");
  const Ball in{{0, 0}, 0.3, Ball::Shape::disk};
  const Ball out{{0, 0}, 0.7, Ball::Shape::disk};
  CHECK(check_nested(id.map, in, out, 192).result == TriState::pass);
  const Ball l{{-1, 0}, 0.3, Ball::Shape::disk};
  const Ball r{{1, 0}, 0.3, Ball::Shape::disk};
  CHECK(check_disjoint(id.map, l, r, 192).result == TriState::pass);
}

TEST_CASE("structural checks detect the counterexample") {
  auto e = gallery_get("bad_inv_nofd");
  const Ball q1{{-0.25, 0.75}, 0.25, Ball::Shape::square};
  const Ball q{{0.0, 0.0}, 1.0, Ball::Shape::square};
  const auto nested = check_nested(e.map, q1, q, 192);
  CHECK(nested.result == TriState::fail);
  CHECK(nested.witnesses_n > 0);
  const auto range = check_degree_range(e.map, {q1}, 192);
  CHECK(range.result == TriState::fail);
  const Ball q2{{0.25, 0.75}, 0.25, Ball::Shape::square};
  const auto disj = check_disjoint(e.map, q1, q2, 192);
  CHECK(disj.result == TriState::fail);
}
