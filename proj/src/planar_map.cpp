#include "invmap/planar_map.hpp"

#include <variant>

namespace invmap {

double PwaPiece::inside_margin(const Vec2& p) const {
  double m = kInf;
  const size_t n = poly.size();
  for (size_t k = 0; k < n; ++k) {
    const Vec2& a = poly[k];
    const Vec2& b = poly[(k + 1) % n];
    const Vec2 e = b - a;
    const double len = e.norm();
    if (len == 0.0) continue;
    // CCW polygon: interior is on the left of each edge
    const double d = (e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x())) / len;
    m = std::min(m, d);
  }
  return m;
}

Rect PwaPiece::bbox() const {
  Vec2 lo = poly.front(), hi = poly.front();
  for (const Vec2& p : poly) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return {lo, hi};
}

namespace {

struct AnalyticRep {
  PlanarMap::EvalFn f;
  PlanarMap::JacFn jac;
};

// uniform bucket index over the pieces for point location
struct PwaRep {
  PwaData data;
  int bn = 1;
  std::vector<std::vector<int>> buckets;

  void build_index() {
    bn = std::max(8, static_cast<int>(std::sqrt((double)data.pieces.size()) * 4));
    buckets.assign(static_cast<size_t>(bn) * bn, {});
    const Rect& d = data.domain;
    for (int pi = 0; pi < (int)data.pieces.size(); ++pi) {
      const Rect bb = data.pieces[pi].bbox();
      int i0 = cell_i(bb.lo.x()), i1 = cell_i(bb.hi.x());
      int j0 = cell_j(bb.lo.y()), j1 = cell_j(bb.hi.y());
      for (int j = j0; j <= j1; ++j)
        for (int i = i0; i <= i1; ++i)
          buckets[static_cast<size_t>(j) * bn + i].push_back(pi);
    }
    (void)d;
  }
  int cell_i(double x) const {
    const Rect& d = data.domain;
    int i = static_cast<int>((x - d.lo.x()) / d.width() * bn);
    return std::clamp(i, 0, bn - 1);
  }
  int cell_j(double y) const {
    const Rect& d = data.domain;
    int j = static_cast<int>((y - d.lo.y()) / d.height() * bn);
    return std::clamp(j, 0, bn - 1);
  }
  // piece with the largest inside margin near p (margin may be slightly
  // negative on shared edges)
  int locate(const Vec2& p) const {
    const auto& cand = buckets[static_cast<size_t>(cell_j(p.y())) * bn + cell_i(p.x())];
    int best = -1;
    double best_m = -kInf;
    for (int pi : cand) {
      const double m = data.pieces[pi].inside_margin(p);
      if (m > best_m) {
        best_m = m;
        best = pi;
      }
      if (m >= 0.0) return pi;
    }
    if (best >= 0 && best_m > -1e-9 * data.domain.diag()) return best;
    return -1;
  }
};

struct GridRep {
  GridSampledData data;
};

struct CompRep {
  std::vector<PlanarMap> stages;
};

using Rep = std::variant<AnalyticRep, PwaRep, GridRep, CompRep>;

}  // namespace

struct PlanarMap::Impl {
  std::string name;
  Rect domain;
  bool boundary_homeo = true;
  double tau_dom = 0.0;
  Rep rep;

  Vec2 eval(const Vec2& p0) const {
    Vec2 p = p0;
    if (!domain.contains(p, tau_dom))
      throw Error(Errc::out_of_domain,
                  name + ": point (" + std::to_string(p.x()) + ", " +
                      std::to_string(p.y()) + ") outside domain");
    p = domain.clamp(p);
    if (const auto* a = std::get_if<AnalyticRep>(&rep)) return a->f(p);
    if (const auto* w = std::get_if<PwaRep>(&rep)) {
      const int pi = w->locate(p);
      if (pi < 0)
        throw Error(Errc::out_of_domain, name + ": point not covered by pieces");
      return w->data.pieces[pi].apply(p);
    }
    if (const auto* g = std::get_if<GridRep>(&rep)) {
      const auto& d = g->data;
      const double fx = std::clamp((p.x() - d.domain.lo.x()) / d.hx(), 0.0,
                                   double(d.nx - 1) - 1e-12);
      const double fy = std::clamp((p.y() - d.domain.lo.y()) / d.hy(), 0.0,
                                   double(d.ny - 1) - 1e-12);
      const int i = static_cast<int>(fx), j = static_cast<int>(fy);
      const double s = fx - i, t = fy - j;
      return (1 - s) * (1 - t) * d.value(i, j) + s * (1 - t) * d.value(i + 1, j) +
             (1 - s) * t * d.value(i, j + 1) + s * t * d.value(i + 1, j + 1);
    }
    const auto& c = std::get<CompRep>(rep);
    Vec2 q = p;
    for (const auto& stage : c.stages) q = stage(q);
    return q;
  }

  std::optional<Mat2> jac(const Vec2& p0) const {
    if (!domain.contains(p0, tau_dom)) return std::nullopt;
    const Vec2 p = domain.clamp(p0);
    if (const auto* a = std::get_if<AnalyticRep>(&rep)) {
      if (!a->jac) return std::nullopt;
      return a->jac(p);
    }
    if (const auto* w = std::get_if<PwaRep>(&rep)) {
      const int pi = w->locate(p);
      if (pi < 0) return std::nullopt;
      return w->data.pieces[pi].A;
    }
    if (const auto* g = std::get_if<GridRep>(&rep)) {
      const auto& d = g->data;
      const double fx = std::clamp((p.x() - d.domain.lo.x()) / d.hx(), 0.0,
                                   double(d.nx - 1) - 1e-12);
      const double fy = std::clamp((p.y() - d.domain.lo.y()) / d.hy(), 0.0,
                                   double(d.ny - 1) - 1e-12);
      const int i = static_cast<int>(fx), j = static_cast<int>(fy);
      const double s = fx - i, t = fy - j;
      const Vec2 du = ((1 - t) * (d.value(i + 1, j) - d.value(i, j)) +
                       t * (d.value(i + 1, j + 1) - d.value(i, j + 1))) /
                      d.hx();
      const Vec2 dv = ((1 - s) * (d.value(i, j + 1) - d.value(i, j)) +
                       s * (d.value(i + 1, j + 1) - d.value(i + 1, j))) /
                      d.hy();
      Mat2 m;
      m.col(0) = du;
      m.col(1) = dv;
      return m;
    }
    const auto& c = std::get<CompRep>(rep);
    Mat2 acc = Mat2::Identity();
    Vec2 q = p;
    for (const auto& stage : c.stages) {
      const auto j = stage.analytic_jacobian(q);
      if (!j) return std::nullopt;
      acc = (*j) * acc;
      q = stage(q);
    }
    return acc;
  }
};

PlanarMap PlanarMap::analytic(std::string name, Rect domain, EvalFn f,
                              JacFn jac, bool boundary_homeo) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->domain = domain;
  impl->boundary_homeo = boundary_homeo;
  impl->tau_dom = 1e-9 * domain.diag();
  impl->rep = AnalyticRep{std::move(f), std::move(jac)};
  PlanarMap m;
  m.impl_ = std::move(impl);
  return m;
}

PlanarMap PlanarMap::piecewise_affine(PwaData data, bool boundary_homeo,
                                      std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->domain = data.domain;
  impl->boundary_homeo = boundary_homeo;
  impl->tau_dom = 1e-9 * data.domain.diag();
  PwaRep rep{std::move(data)};
  rep.build_index();
  impl->rep = std::move(rep);
  PlanarMap m;
  m.impl_ = std::move(impl);
  return m;
}

PlanarMap PlanarMap::grid_sampled(GridSampledData data, bool boundary_homeo,
                                  std::string name) {
  if (data.nx < 2 || data.ny < 2 ||
      data.values.size() != static_cast<size_t>(data.nx) * data.ny)
    throw Error(Errc::bad_format, "grid_sampled: inconsistent node data");
  for (const Vec2& v : data.values)
    if (!v.allFinite())
      throw Error(Errc::bad_format, "grid_sampled: non-finite node value");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->domain = data.domain;
  impl->boundary_homeo = boundary_homeo;
  impl->tau_dom = 1e-9 * data.domain.diag();
  impl->rep = GridRep{std::move(data)};
  PlanarMap m;
  m.impl_ = std::move(impl);
  return m;
}

PlanarMap PlanarMap::composition(std::vector<PlanarMap> stages,
                                 std::string name) {
  if (stages.empty())
    throw Error(Errc::bad_format, "composition: no stages");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->domain = stages.front().domain();
  impl->boundary_homeo = true;
  for (const auto& s : stages) impl->boundary_homeo &= s.boundary_homeo();
  impl->tau_dom = 1e-9 * impl->domain.diag();
  impl->rep = CompRep{std::move(stages)};
  PlanarMap m;
  m.impl_ = std::move(impl);
  return m;
}

Vec2 PlanarMap::operator()(const Vec2& p) const { return impl_->eval(p); }

std::optional<Mat2> PlanarMap::analytic_jacobian(const Vec2& p) const {
  return impl_->jac(p);
}

const Rect& PlanarMap::domain() const { return impl_->domain; }
bool PlanarMap::boundary_homeo() const { return impl_->boundary_homeo; }
const std::string& PlanarMap::name() const { return impl_->name; }
double PlanarMap::domain_tol() const { return impl_->tau_dom; }

}  // namespace invmap
