#include "invmap/analysis.hpp"

#include "invmap/parallel.hpp"

namespace invmap {

Mat2 jacobian_at(const PlanarMap& map, const Vec2& p, double step) {
  if (auto j = map.analytic_jacobian(p)) return *j;
  const Rect& dom = map.domain();
  const double tol = map.domain_tol();
  Mat2 m;
  for (int axis = 0; axis < 2; ++axis) {
    Vec2 e = Vec2::Zero();
    e[axis] = step;
    Vec2 a = p - e, b = p + e;
    // one-sided on the outermost ring
    if (!dom.contains(a, tol)) a = p;
    if (!dom.contains(b, tol)) b = p;
    const double h = (b - a)[axis];
    m.col(axis) = h > 0 ? Vec2((map(b) - map(a)) / h) : Vec2::Zero();
  }
  return m;
}

double distortion_of(const Mat2& m, double) {
  const double norm = op_norm(m);
  const double det = m.determinant();
  if (norm == 0.0) return 1.0;       // |Df| = 0: contributes nothing
  if (det <= 0.0) return kInf;       // degenerate or orientation reversing
  return std::max(1.0, norm * norm / det);
}

MapAnalysis analyze(const PlanarMap& map, const Grid& grid, double j_min,
                    int threads) {
  MapAnalysis a;
  a.grid = grid;
  a.j_min = j_min;
  const long n = grid.cells();
  a.jac.resize(n);
  a.jdet.resize(n);
  a.kdist.resize(n);
  a.good.resize(n);
  a.fval.resize(n);
  const double step = grid.dx();
  parallel_for(n, threads, [&](long lo, long hi) {
    for (long k = lo; k < hi; ++k) {
      const int i = static_cast<int>(k % grid.nx);
      const int j = static_cast<int>(k / grid.nx);
      const Vec2 p = grid.cell_center(i, j);
      const Mat2 df = jacobian_at(map, p, step);
      a.jac[k] = df;
      a.jdet[k] = df.determinant();
      a.kdist[k] = distortion_of(df);
      a.good[k] = a.jdet[k] > j_min ? 1 : 0;
      a.fval[k] = map(p);
    }
  });
  return a;
}

std::vector<double> inner_distortion(const MapAnalysis& a) { return a.kdist; }

}  // namespace invmap
