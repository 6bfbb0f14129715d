#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace invmap {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Errc {
  out_of_domain,
  unknown_entry,
  too_close_to_boundary,
  non_integer_winding,
  refinement_floor,
  empty_window,
  too_many_undefined,
  bad_format,
};

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
  Errc code;
};

// axis-aligned rectangle, lo < hi componentwise
struct Rect {
  Vec2 lo{0.0, 0.0};
  Vec2 hi{1.0, 1.0};

  double width() const { return hi.x() - lo.x(); }
  double height() const { return hi.y() - lo.y(); }
  double diag() const { return (hi - lo).norm(); }
  double area() const { return width() * height(); }
  Vec2 center() const { return 0.5 * (lo + hi); }

  bool contains(const Vec2& p, double tol = 0.0) const {
    return p.x() >= lo.x() - tol && p.x() <= hi.x() + tol &&
           p.y() >= lo.y() - tol && p.y() <= hi.y() + tol;
  }
  Vec2 clamp(const Vec2& p) const {
    return {std::clamp(p.x(), lo.x(), hi.x()),
            std::clamp(p.y(), lo.y(), hi.y())};
  }
  Rect padded(double m) const { return {lo - Vec2(m, m), hi + Vec2(m, m)}; }
  static Rect hull(const Rect& a, const Rect& b) {
    return {a.lo.cwiseMin(b.lo), a.hi.cwiseMax(b.hi)};
  }
};

// cell-centred grid over a rectangle: nx*ny cells, centers strictly inside
struct Grid {
  Rect domain;
  int nx = 1;
  int ny = 1;

  double dx() const { return domain.width() / nx; }
  double dy() const { return domain.height() / ny; }
  double cell_area() const { return dx() * dy(); }
  double pixel_diag() const { return std::hypot(dx(), dy()); }
  long cells() const { return static_cast<long>(nx) * ny; }

  Vec2 cell_center(int i, int j) const {
    return {domain.lo.x() + (i + 0.5) * dx(), domain.lo.y() + (j + 0.5) * dy()};
  }
  // cell containing p; false if outside the grid
  bool cell_of(const Vec2& p, int& i, int& j) const {
    i = static_cast<int>(std::floor((p.x() - domain.lo.x()) / dx()));
    j = static_cast<int>(std::floor((p.y() - domain.lo.y()) / dy()));
    return i >= 0 && i < nx && j >= 0 && j < ny;
  }
  long index(int i, int j) const { return static_cast<long>(j) * nx + i; }
};

struct Ball {
  enum class Shape { disk, square };
  Vec2 center{0.0, 0.0};
  double radius = 1.0;
  Shape shape = Shape::disk;

  bool contains(const Vec2& p, double tol = 0.0) const {
    const Vec2 d = p - center;
    if (shape == Shape::disk) return d.norm() <= radius + tol;
    return std::max(std::abs(d.x()), std::abs(d.y())) <= radius + tol;
  }
  double perimeter() const {
    return shape == Shape::disk ? 2.0 * M_PI * radius : 8.0 * radius;
  }
  Rect bbox() const {
    return {center - Vec2(radius, radius), center + Vec2(radius, radius)};
  }
};

// integration window: a rectangle, optionally clipped to an inscribed disk
struct Region {
  Rect box;
  std::optional<Ball> disk;

  bool contains(const Vec2& p, double tol = 0.0) const {
    if (!box.contains(p, tol)) return false;
    return !disk || disk->contains(p, tol);
  }
  double area() const {
    return disk ? M_PI * disk->radius * disk->radius : box.area();
  }
  static Region rect(const Rect& r) { return {r, std::nullopt}; }
  static Region disk_in(const Vec2& c, double rad) {
    return {{c - Vec2(rad, rad), c + Vec2(rad, rad)},
            Ball{c, rad, Ball::Shape::disk}};
  }
};

// closed-form singular values of a 2x2 matrix
struct Svd2 {
  double smax = 0.0;
  double smin = 0.0;
};

inline Svd2 singular_values(const Mat2& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double e = 0.5 * (a + d), f = 0.5 * (a - d);
  const double g = 0.5 * (c + b), h = 0.5 * (c - b);
  const double q = std::hypot(e, h), r = std::hypot(f, g);
  return {q + r, std::abs(q - r)};
}

inline double op_norm(const Mat2& m) { return singular_values(m).smax; }

// Neumaier-compensated accumulator
class Ksum {
public:
  void add(double v) {
    const double t = s_ + v;
    if (std::abs(s_) >= std::abs(v))
      c_ += (s_ - t) + v;
    else
      c_ += (v - t) + s_;
    s_ = t;
  }
  double value() const { return s_ + c_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// tunable thresholds with the library defaults
struct Thresholds {
  double j_min = 1e-8;
  double tau_dom_factor = 1e-9;    // domain tolerance, relative to diam
  double w_mask_pixels = 2.0;      // near-boundary mask, in pixel diagonals
  double h_loop_pixels = 0.5;      // loop refinement target, pixel diagonals
  double delta_floor_factor = 1e-6;  // refinement floor, relative to radius
  double winding_residual = 0.1;
  double eps_inv = 0.005;
  double delta_cav_pixels = 10.0;  // cavity area floor, in target pixels
  double rho0_factor = 1.5;        // candidate radius, in image cell scales
  double rho_max_factor = 32.0;
  int m_min = 3;
  double bimodal_cells = 8.0;      // cluster split distance, in source cells
  double kappa_jump = 10.0;
  double eps_undef = 0.01;
  double energy_mask_limit = 0.05;
  int threads = 0;                 // 0 = hardware concurrency
};

}  // namespace invmap
