#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "invmap/core.hpp"

namespace invmap {

// one convex piece of a piecewise-affine map: p -> A p + b on poly
struct PwaPiece {
  std::vector<Vec2> poly;  // CCW convex polygon
  Mat2 A = Mat2::Identity();
  Vec2 b = Vec2::Zero();

  Vec2 apply(const Vec2& p) const { return A * p + b; }
  // signed distance to the polygon: >= 0 inside (min distance to edges)
  double inside_margin(const Vec2& p) const;
  Rect bbox() const;
};

struct PwaData {
  Rect domain;
  std::vector<PwaPiece> pieces;
};

// values on an nx-by-ny node lattice spanning the domain inclusively
struct GridSampledData {
  Rect domain;
  int nx = 2;
  int ny = 2;
  std::vector<Vec2> values;  // row-major, y rows from lo.y, x fastest

  double hx() const { return domain.width() / (nx - 1); }
  double hy() const { return domain.height() / (ny - 1); }
  Vec2 node(int i, int j) const {
    return {domain.lo.x() + i * hx(), domain.lo.y() + j * hy()};
  }
  const Vec2& value(int i, int j) const {
    return values[static_cast<size_t>(j) * nx + i];
  }
};

class PlanarMap {
public:
  using EvalFn = std::function<Vec2(const Vec2&)>;
  using JacFn = std::function<Mat2(const Vec2&)>;

  PlanarMap() = default;

  static PlanarMap analytic(std::string name, Rect domain, EvalFn f,
                            JacFn jac = nullptr, bool boundary_homeo = true);
  static PlanarMap piecewise_affine(PwaData data, bool boundary_homeo = true,
                                    std::string name = "pwa");
  static PlanarMap grid_sampled(GridSampledData data,
                                bool boundary_homeo = true,
                                std::string name = "grid");
  static PlanarMap composition(std::vector<PlanarMap> stages,
                               std::string name = "composition");

  // evaluates f(p); throws Errc::out_of_domain beyond the tolerance
  Vec2 operator()(const Vec2& p) const;
  // derivative where the representation supplies one (chain rule for
  // compositions); nullopt means the caller should fall back to differences
  std::optional<Mat2> analytic_jacobian(const Vec2& p) const;

  const Rect& domain() const;
  bool boundary_homeo() const;
  const std::string& name() const;
  bool valid() const { return impl_ != nullptr; }

  // domain tolerance used by evaluate
  double domain_tol() const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace invmap
