#include "invmap/inverse.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invmap/inv_check.hpp"
#include "invmap/parallel.hpp"

namespace invmap {

namespace {

// union-find for small candidate sets
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  return v[mid];
}

// image-space bucket index over good source samples
struct SampleIndex {
  Rect box;
  double cell;
  int bn;
  std::vector<std::vector<int>> buckets;

  SampleIndex(const MapAnalysis& a, double cell_size) {
    Vec2 lo(kInf, kInf), hi(-kInf, -kInf);
    for (long k = 0; k < a.grid.cells(); ++k)
      if (a.good[k]) {
        lo = lo.cwiseMin(a.fval[k]);
        hi = hi.cwiseMax(a.fval[k]);
      }
    if (!(lo.x() < hi.x())) {
      lo = Vec2(0, 0);
      hi = Vec2(1, 1);
    }
    box = {lo - Vec2(cell_size, cell_size), hi + Vec2(cell_size, cell_size)};
    cell = cell_size;
    bn = std::max(1, (int)std::ceil(std::max(box.width(), box.height()) / cell));
    bn = std::min(bn, 2048);
    buckets.assign(static_cast<size_t>(bn) * bn, {});
    for (long k = 0; k < a.grid.cells(); ++k)
      if (a.good[k]) buckets[bucket_of(a.fval[k])].push_back((int)k);
  }
  size_t bucket_of(const Vec2& p) const {
    const int i = std::clamp((int)((p.x() - box.lo.x()) / box.width() * bn), 0, bn - 1);
    const int j = std::clamp((int)((p.y() - box.lo.y()) / box.height() * bn), 0, bn - 1);
    return static_cast<size_t>(j) * bn + i;
  }
  void query(const Vec2& y, double rho, std::vector<int>& out,
             const MapAnalysis& a) const {
    out.clear();
    const double bx = box.width() / bn, by = box.height() / bn;
    const int ci = std::clamp((int)((y.x() - box.lo.x()) / bx), 0, bn - 1);
    const int cj = std::clamp((int)((y.y() - box.lo.y()) / by), 0, bn - 1);
    const int kx = (int)std::ceil(rho / bx) + 1;
    const int ky = (int)std::ceil(rho / by) + 1;
    const double r2 = rho * rho;
    for (int j = std::max(0, cj - ky); j <= std::min(bn - 1, cj + ky); ++j)
      for (int i = std::max(0, ci - kx); i <= std::min(bn - 1, ci + kx); ++i)
        for (int k : buckets[static_cast<size_t>(j) * bn + i])
          if ((a.fval[k] - y).squaredNorm() <= r2) out.push_back(k);
  }
};

}  // namespace

std::vector<Cavity> detect_cavities(const PlanarMap& map,
                                    const MapAnalysis& analysis,
                                    const std::vector<double>& radii,
                                    double delta_cav, int raster_res,
                                    const Thresholds& th) {
  const Grid& g = analysis.grid;
  const double cw = g.dx();

  // neighbourhood image spread per cell
  std::vector<double> spread(g.cells(), 0.0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const long k = g.index(i, j);
      double s = 0.0;
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || ii >= g.nx || jj < 0 || jj >= g.ny) continue;
          s = std::max(s, (analysis.fval[g.index(ii, jj)] - analysis.fval[k]).norm());
        }
      spread[k] = s;
    }
  const double spread_thresh = 10.0 * std::max(median_of(spread), 1e-12);

  std::vector<char> mask(g.cells(), 0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const long k = g.index(i, j);
      bool all_bad = true;
      for (int dj = -1; dj <= 1 && all_bad; ++dj)
        for (int di = -1; di <= 1 && all_bad; ++di) {
          const int ii = std::clamp(i + di, 0, g.nx - 1);
          const int jj = std::clamp(j + dj, 0, g.ny - 1);
          if (analysis.good[g.index(ii, jj)]) all_bad = false;
        }
      if (all_bad || spread[k] > spread_thresh) mask[k] = 1;
    }
  (void)cw;

  // adjacent candidates collapse to the centroid of their component
  std::vector<Vec2> centers;
  std::vector<char> seen(g.cells(), 0);
  std::vector<long> stack;
  for (long k0 = 0; k0 < g.cells(); ++k0) {
    if (!mask[k0] || seen[k0]) continue;
    stack.assign(1, k0);
    seen[k0] = 1;
    Vec2 sum = Vec2::Zero();
    long cnt = 0;
    while (!stack.empty()) {
      const long k = stack.back();
      stack.pop_back();
      const int i = static_cast<int>(k % g.nx);
      const int j = static_cast<int>(k / g.nx);
      sum += g.cell_center(i, j);
      ++cnt;
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || ii >= g.nx || jj < 0 || jj >= g.ny) continue;
          const long kk = g.index(ii, jj);
          if (mask[kk] && !seen[kk]) {
            seen[kk] = 1;
            stack.push_back(kk);
          }
        }
    }
    centers.push_back(sum / double(cnt));
  }
  std::sort(centers.begin(), centers.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
  });

  std::vector<Cavity> out;
  const Rect dom = map.domain();
  for (const Vec2& c : centers) {
    const double margin = std::min({c.x() - dom.lo.x(), dom.hi.x() - c.x(),
                                    c.y() - dom.lo.y(), dom.hi.y() - c.y()});
    bool is_cavity = true;
    TopImage smallest;
    bool have = false;
    for (double r : radii) {
      if (r >= margin) { is_cavity = false; break; }
      TopImage t;
      try {
        t = topological_image(map, {c, r, Ball::Shape::disk}, raster_res, th);
      } catch (const Error& e) {
        if (e.code == Errc::empty_window || e.code == Errc::refinement_floor) {
          is_cavity = false;
          break;
        }
        throw;
      }
      if (t.imT_area < delta_cav) {
        is_cavity = false;
        break;
      }
      smallest = std::move(t);
      have = true;
    }
    if (is_cavity && have)
      out.push_back({c, std::move(smallest), 0.0});
  }
  for (auto& cav : out) cav.area = cav.region.imT_area;
  return out;
}

InverseMap build_inverse(const PlanarMap& map, const MapAnalysis& analysis,
                         const Grid& target_grid, const Thresholds& th) {
  InverseMap inv;
  inv.grid = target_grid;
  const long n = target_grid.cells();
  inv.values.assign(n, Vec2::Zero());
  inv.prov.assign(n, 'u');
  inv.source_cell = analysis.grid.dx();

  // cavity detection on a schedule tied to the source resolution
  const double r_max = 8.0 * analysis.grid.dx();
  const double delta_cav = th.delta_cav_pixels * target_grid.cell_area();
  inv.cavities = detect_cavities(map, analysis, radius_schedule(r_max), delta_cav,
                                 std::max(128, target_grid.nx / 2), th);

  // image-space scale of one source cell over the good set
  std::vector<double> scales;
  scales.reserve(analysis.grid.cells());
  for (long k = 0; k < analysis.grid.cells(); ++k)
    if (analysis.good[k])
      scales.push_back(analysis.grid.dx() * op_norm(analysis.jac[k]));
  inv.image_cell_scale = median_of(scales);
  const double rho0 = th.rho0_factor * std::max(inv.image_cell_scale, 1e-12);
  const double rho_max = th.rho_max_factor * rho0;
  inv.rho0 = rho0;

  SampleIndex index(analysis, rho0);
  const double link = th.bimodal_cells * analysis.grid.dx();

  struct CellClusters {
    std::vector<Vec2> means;   // cluster means, lexicographically sorted
    char prov = 'u';
  };
  std::vector<CellClusters> pending(n);

  parallel_for(n, th.threads, [&](long lo, long hi) {
    std::vector<int> cand;
    for (long k = lo; k < hi; ++k) {
      const int i = static_cast<int>(k % target_grid.nx);
      const int j = static_cast<int>(k / target_grid.nx);
      const Vec2 y = target_grid.cell_center(i, j);

      // cavity cells take the cavity source point exactly
      bool in_cavity = false;
      for (const Cavity& cav : inv.cavities) {
        const auto& r = cav.region.raster;
        int ci, cj;
        if (r.grid.cell_of(y, ci, cj)) {
          const long ck = r.grid.index(ci, cj);
          if (!r.near[ck] && r.deg[ck] != 0) {
            inv.values[k] = cav.source;
            inv.prov[k] = 'c';
            in_cavity = true;
            break;
          }
        }
      }
      if (in_cavity) continue;

      double rho = rho0;
      index.query(y, rho, cand, analysis);
      while ((long)cand.size() < th.m_min && rho < rho_max) {
        rho *= 2.0;
        index.query(y, std::min(rho, rho_max), cand, analysis);
      }
      if (cand.empty()) continue;  // stays undefined

      // cluster the candidate preimages in source space
      Dsu dsu((int)cand.size());
      for (size_t a = 0; a < cand.size(); ++a) {
        const Vec2 pa = analysis.grid.cell_center(
            (int)(cand[a] % analysis.grid.nx), (int)(cand[a] / analysis.grid.nx));
        for (size_t b = a + 1; b < cand.size(); ++b) {
          const Vec2 pb = analysis.grid.cell_center(
              (int)(cand[b] % analysis.grid.nx), (int)(cand[b] / analysis.grid.nx));
          if ((pa - pb).norm() <= link) dsu.join((int)a, (int)b);
        }
      }
      // nearest-candidate weighting: candidates whose image sits on y
      // dominate the average, which removes the clipping bias where the
      // preimage lattice is cut off by the window edge
      struct Acc {
        Vec2 sum = Vec2::Zero();
        double w = 0.0;
      };
      const double soft = 0.25 * rho0;
      std::map<int, Acc> groups;
      for (size_t a = 0; a < cand.size(); ++a) {
        const Vec2 pa = analysis.grid.cell_center(
            (int)(cand[a] % analysis.grid.nx), (int)(cand[a] / analysis.grid.nx));
        const double d2 = (analysis.fval[cand[a]] - y).squaredNorm();
        const double w = 1.0 / (d2 + soft * soft);
        auto& gr = groups[dsu.find((int)a)];
        gr.sum += w * pa;
        gr.w += w;
      }
      CellClusters cc;
      for (auto& [root, gr] : groups) cc.means.push_back(gr.sum / gr.w);
      std::sort(cc.means.begin(), cc.means.end(),
                [](const Vec2& a, const Vec2& b) {
                  return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
                });
      cc.prov = (rho == rho0 && cc.means.size() == 1) ? 'g' : 'a';
      if (cc.means.size() == 1) {
        inv.values[k] = cc.means.front();
        inv.prov[k] = cc.prov;
      } else {
        pending[k] = std::move(cc);  // bimodal, resolved in pass 2
      }
    }
  });

  // pass 2: resolve bimodal cells in row-major order against the average of
  // already assigned neighbours; ties pick the lexicographically smallest
  for (long k = 0; k < n; ++k) {
    if (pending[k].means.empty()) continue;
    const int i = static_cast<int>(k % target_grid.nx);
    const int j = static_cast<int>(k / target_grid.nx);
    Vec2 nb = Vec2::Zero();
    int cnt = 0;
    const int di[4] = {-1, 1, 0, 0};
    const int dj[4] = {0, 0, -1, 1};
    for (int t = 0; t < 4; ++t) {
      const int ii = i + di[t], jj = j + dj[t];
      if (ii < 0 || ii >= target_grid.nx || jj < 0 || jj >= target_grid.ny)
        continue;
      const long kk = target_grid.index(ii, jj);
      if (inv.prov[kk] == 'g' || inv.prov[kk] == 'a' || inv.prov[kk] == 'c') {
        nb += inv.values[kk];
        ++cnt;
      }
    }
    const auto& means = pending[k].means;
    size_t best = 0;
    if (cnt > 0) {
      nb /= cnt;
      double bd = kInf;
      for (size_t m = 0; m < means.size(); ++m) {
        const double d = (means[m] - nb).norm();
        if (d < bd - 1e-15) {
          bd = d;
          best = m;
        }
      }
    }
    inv.values[k] = means[best];
    inv.prov[k] = 'a';
  }
  return inv;
}

double roundtrip_residual(const PlanarMap& map, const InverseMap& inv) {
  double worst = 0.0;
  for (long k = 0; k < inv.grid.cells(); ++k) {
    if (inv.prov[k] != 'g') continue;
    const int i = static_cast<int>(k % inv.grid.nx);
    const int j = static_cast<int>(k / inv.grid.nx);
    const Vec2 y = inv.grid.cell_center(i, j);
    if (!map.domain().contains(inv.values[k], map.domain_tol())) continue;
    worst = std::max(worst, (map(inv.values[k]) - y).norm());
  }
  return worst;
}

MultiplicityRaster multiplicity_raster(const PlanarMap& map,
                                       const Grid& source_grid,
                                       const Grid& target_grid, int threads) {
  MultiplicityRaster out;
  out.grid = target_grid;
  out.counts.assign(target_grid.cells(), 0);

  const long ns = source_grid.cells();
  std::vector<long> target_of(ns, -1);
  parallel_for(ns, threads, [&](long lo, long hi) {
    for (long k = lo; k < hi; ++k) {
      const int i = static_cast<int>(k % source_grid.nx);
      const int j = static_cast<int>(k / source_grid.nx);
      const Vec2 y = map(source_grid.cell_center(i, j));
      int ti, tj;
      if (target_grid.cell_of(y, ti, tj)) target_of[k] = target_grid.index(ti, tj);
    }
  });

  // group source samples per target cell, then count 8-connected clusters
  std::vector<std::vector<long>> groups(target_grid.cells());
  for (long k = 0; k < ns; ++k)
    if (target_of[k] >= 0) groups[target_of[k]].push_back(k);

  // degenerate source material (zero Jacobian) forms its own continua, so
  // adjacency only links samples with the same good flag
  std::vector<char> good(ns, 0);
  parallel_for(ns, threads, [&](long lo, long hi) {
    for (long k = lo; k < hi; ++k) {
      const int i = static_cast<int>(k % source_grid.nx);
      const int j = static_cast<int>(k / source_grid.nx);
      const Mat2 df =
          jacobian_at(map, source_grid.cell_center(i, j), source_grid.dx());
      good[k] = df.determinant() > 1e-8 ? 1 : 0;
    }
  });

  for (long t = 0; t < target_grid.cells(); ++t) {
    auto& g = groups[t];
    if (g.empty()) continue;
    std::map<long, int> pos;
    for (size_t a = 0; a < g.size(); ++a) pos[g[a]] = (int)a;
    Dsu dsu((int)g.size());
    for (size_t a = 0; a < g.size(); ++a) {
      const int i = static_cast<int>(g[a] % source_grid.nx);
      const int j = static_cast<int>(g[a] / source_grid.nx);
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
          if (!di && !dj) continue;
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || ii >= source_grid.nx || jj < 0 || jj >= source_grid.ny)
            continue;
          const auto it = pos.find(source_grid.index(ii, jj));
          if (it != pos.end() && good[g[a]] == good[g[it->second]])
            dsu.join((int)a, it->second);
        }
    }
    int clusters = 0;
    for (size_t a = 0; a < g.size(); ++a)
      if (dsu.find((int)a) == (int)a) ++clusters;
    out.counts[t] = clusters;
  }
  return out;
}

std::vector<Jump> detect_jump(const InverseMap& inv, double kappa) {
  std::vector<Jump> out;
  const Grid& g = inv.grid;
  const double thresh = kappa * std::max(g.dx(), g.dy());
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const long k = g.index(i, j);
      if (!inv.defined(k)) continue;
      if (i + 1 < g.nx) {
        const long k2 = g.index(i + 1, j);
        if (inv.defined(k2)) {
          const double m = (inv.values[k] - inv.values[k2]).norm();
          if (m > thresh) out.push_back({i, j, i + 1, j, m});
        }
      }
      if (j + 1 < g.ny) {
        const long k2 = g.index(i, j + 1);
        if (inv.defined(k2)) {
          const double m = (inv.values[k] - inv.values[k2]).norm();
          if (m > thresh) out.push_back({i, j, i, j + 1, m});
        }
      }
    }
  return out;
}

}  // namespace invmap
