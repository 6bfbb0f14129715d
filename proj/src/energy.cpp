#include "invmap/energy.hpp"

#include <algorithm>

#include "invmap/parallel.hpp"

namespace invmap {

double dirichlet_energy(const InverseMap& inv, const Region& region,
                        const Thresholds& th, EnergyStats* stats) {
  const Grid& g = inv.grid;

  // mask: undefined cells plus a one-cell band around detected jumps along
  // the jump direction (a single O(1) jump otherwise injects O(1/h) energy)
  std::vector<char> masked(g.cells(), 0);
  const auto jumps = detect_jump(inv, th.kappa_jump);
  for (const Jump& jm : jumps) {
    const int di = jm.i2 - jm.i1, dj = jm.j2 - jm.j1;
    for (int s = -1; s <= 2; ++s) {
      const int ii = jm.i1 + s * di, jj = jm.j1 + s * dj;
      if (ii >= 0 && ii < g.nx && jj >= 0 && jj < g.ny)
        masked[g.index(ii, jj)] = 1;
    }
  }

  long in_region = 0, n_masked = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const long k = g.index(i, j);
      if (!region.contains(g.cell_center(i, j))) continue;
      ++in_region;
      if (!inv.defined(k)) masked[k] = 1;
      if (masked[k]) ++n_masked;
    }
  if (stats) {
    stats->cells_in_region = in_region;
    stats->masked = n_masked;
    stats->jumps = (long)jumps.size();
  }
  if (in_region == 0)
    throw Error(Errc::too_many_undefined, "dirichlet_energy: empty region");
  if (double(n_masked) / in_region > th.energy_mask_limit)
    throw Error(Errc::too_many_undefined,
                "dirichlet_energy: masked fraction " +
                    std::to_string(double(n_masked) / in_region) +
                    " exceeds the limit");

  // stencil neighbours must be defined and inside the region; values from
  // outside the image window are extrapolation noise
  auto usable = [&](int i, int j) {
    if (i < 0 || i >= g.nx || j < 0 || j >= g.ny) return false;
    if (!inv.defined(g.index(i, j))) return false;
    return region.contains(g.cell_center(i, j));
  };
  auto deriv = [&](int i, int j, int axis) -> Vec2 {
    const int di = axis == 0 ? 1 : 0, dj = axis == 0 ? 0 : 1;
    const double h = axis == 0 ? g.dx() : g.dy();
    const bool has_m = usable(i - di, j - dj);
    const bool has_p = usable(i + di, j + dj);
    const long k = g.index(i, j);
    if (has_m && has_p)
      return (inv.values[g.index(i + di, j + dj)] -
              inv.values[g.index(i - di, j - dj)]) /
             (2.0 * h);
    if (has_p) return (inv.values[g.index(i + di, j + dj)] - inv.values[k]) / h;
    if (has_m) return (inv.values[k] - inv.values[g.index(i - di, j - dj)]) / h;
    return Vec2::Zero();
  };

  const double cell = g.cell_area();
  return parallel_sum(g.cells(), th.threads, [&](long k) -> double {
    const int i = static_cast<int>(k % g.nx);
    const int j = static_cast<int>(k / g.nx);
    if (masked[k] || !inv.defined(k)) return 0.0;
    if (!region.contains(g.cell_center(i, j))) return 0.0;
    Mat2 dh;
    dh.col(0) = deriv(i, j, 0);
    dh.col(1) = deriv(i, j, 1);
    const double s = op_norm(dh);
    return s * s * cell;
  });
}

double distortion_integral(const MapAnalysis& analysis, const Region& region,
                           int threads) {
  const Grid& g = analysis.grid;
  const double cell = g.cell_area();
  return parallel_sum(g.cells(), threads, [&](long k) -> double {
    if (!analysis.good[k]) return 0.0;
    const int i = static_cast<int>(k % g.nx);
    const int j = static_cast<int>(k / g.nx);
    if (!region.contains(g.cell_center(i, j))) return 0.0;
    return analysis.kdist[k] * cell;
  });
}

EnergyReport energy_identity(const PlanarMap& map, const Region& source_region,
                             const Region& target_region, int res,
                             const Thresholds& th) {
  const Grid sgrid{source_region.box, res, res};
  const Grid tgrid{target_region.box, res, res};
  const MapAnalysis a = analyze(map, sgrid, th.j_min, th.threads);
  const InverseMap inv = build_inverse(map, a, tgrid, th);
  EnergyReport rep;
  rep.res = res;
  EnergyStats stats;
  rep.lhs = dirichlet_energy(inv, target_region, th, &stats);
  rep.masked_cells = stats.masked;
  rep.rhs = distortion_integral(a, source_region, th.threads);
  rep.rel_err = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.rhs), 1e-12);
  return rep;
}

KeyEstimateProbe key_estimate_probe(const PlanarMap& map,
                                    const MapAnalysis& analysis,
                                    const InverseMap& inv, const Vec2& center,
                                    const std::vector<double>& radii, double p,
                                    int threads) {
  KeyEstimateProbe probe;
  probe.center = center;
  probe.p = p;
  probe.radii = radii;
  const Grid& sg = analysis.grid;
  const double cell = sg.cell_area();

  for (double r : radii) {
    // hits of B_r and B_2r among the source samples
    std::vector<Vec2> hits_r;
    double measure = 0.0;
    Ksum energy;
    for (long k = 0; k < sg.cells(); ++k) {
      const double d = (analysis.fval[k] - center).norm();
      if (d <= r)
        hits_r.push_back(sg.cell_center(static_cast<int>(k % sg.nx),
                                        static_cast<int>(k / sg.nx)));
      if (d <= 2.0 * r) {
        measure += cell;
        energy.add(std::pow(op_norm(analysis.jac[k]), p) * cell);
      }
    }

    double diam = 0.0;
    if (hits_r.size() >= 2) {
      // convex hull (monotone chain), then the max pairwise distance
      std::sort(hits_r.begin(), hits_r.end(), [](const Vec2& a, const Vec2& b) {
        return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
      });
      auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
        return (a.x() - o.x()) * (b.y() - o.y()) -
               (a.y() - o.y()) * (b.x() - o.x());
      };
      std::vector<Vec2> hull(2 * hits_r.size());
      size_t m = 0;
      for (const Vec2& q : hits_r) {
        while (m >= 2 && cross(hull[m - 2], hull[m - 1], q) <= 0) --m;
        hull[m++] = q;
      }
      const size_t lower = m + 1;
      for (auto it = hits_r.rbegin(); it != hits_r.rend(); ++it) {
        while (m >= lower && cross(hull[m - 2], hull[m - 1], *it) <= 0) --m;
        hull[m++] = *it;
      }
      hull.resize(m > 0 ? m - 1 : 0);
      for (size_t a1 = 0; a1 < hull.size(); ++a1)
        for (size_t b1 = a1 + 1; b1 < hull.size(); ++b1)
          diam = std::max(diam, (hull[a1] - hull[b1]).norm());
    }

    // pullback density over B_2r via graph-provenance cells of the inverse
    Ksum phi;
    const Grid& tg = inv.grid;
    const double tcell = tg.cell_area();
    for (long k = 0; k < tg.cells(); ++k) {
      if (inv.prov[k] != 'g') continue;
      const Vec2 y = tg.cell_center(static_cast<int>(k % tg.nx),
                                    static_cast<int>(k / tg.nx));
      if ((y - center).norm() > 2.0 * r) continue;
      const Vec2 x = inv.values[k];
      if (!map.domain().contains(x, map.domain_tol())) continue;
      const Mat2 df = jacobian_at(map, x, sg.dx());
      const double jf = df.determinant();
      if (jf <= 0.0) continue;
      phi.add(std::pow(op_norm(df), p) / jf * tcell);
    }

    probe.lhs_diam.push_back(diam);
    probe.measure_2r.push_back(measure);
    probe.energy_2r.push_back(energy.value());
    probe.phi_2r.push_back(phi.value());
    probe.no_preimage.push_back(hits_r.empty() ? 1 : 0);
    const double den =
        (1.0 / r) * std::pow(measure, (p - 1.0) / p) * std::pow(energy.value(), 1.0 / p);
    probe.ratio.push_back(den > 0.0 ? diam / den : 0.0);
  }
  (void)threads;
  return probe;
}

}  // namespace invmap
