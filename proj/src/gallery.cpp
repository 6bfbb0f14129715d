#include "invmap/gallery.hpp"

#include <cstdio>
#include <fstream>
#include <filesystem>
#include <map>

#include "invmap/io.hpp"

namespace invmap {

namespace {

struct PwaPieceData {
  double poly[16];
  int n;
  double A[4];
  double b[2];
};

#include "bad_inv_data.inl"

PwaData pieces_from(const PwaPieceData* table, size_t count) {
  PwaData d;
  d.pieces.resize(count);
  Vec2 lo(kInf, kInf), hi(-kInf, -kInf);
  for (size_t k = 0; k < count; ++k) {
    auto& pc = d.pieces[k];
    pc.poly.resize(table[k].n);
    for (int v = 0; v < table[k].n; ++v) {
      pc.poly[v] = {table[k].poly[2 * v], table[k].poly[2 * v + 1]};
      lo = lo.cwiseMin(pc.poly[v]);
      hi = hi.cwiseMax(pc.poly[v]);
    }
    pc.A << table[k].A[0], table[k].A[1], table[k].A[2], table[k].A[3];
    pc.b = {table[k].b[0], table[k].b[1]};
  }
  d.domain = {lo, hi};
  return d;
}

// sup-norm cavitation inside one square, identity outside
Vec2 cube_cav_eval(const Vec2& c, double r, const Vec2& p) {
  const Vec2 d = p - c;
  const double s = std::max(std::abs(d.x()), std::abs(d.y()));
  if (s >= r) return p;
  if (s == 0.0) return c + Vec2(r, 0.0);
  return c + (r / s) * d;
}

Mat2 cube_cav_jac(const Vec2& c, double r, const Vec2& p) {
  const Vec2 d = p - c;
  const double s = std::max(std::abs(d.x()), std::abs(d.y()));
  if (s >= r || s == 0.0) return Mat2::Identity();
  Mat2 m = Mat2::Zero();
  if (std::abs(d.x()) >= std::abs(d.y())) {
    const double sx = d.x() >= 0 ? 1.0 : -1.0;
    m(1, 0) = -r * d.y() * sx / (d.x() * d.x());
    m(1, 1) = r / std::abs(d.x());
  } else {
    const double sy = d.y() >= 0 ? 1.0 : -1.0;
    m(0, 1) = -r * d.x() * sy / (d.y() * d.y());
    m(0, 0) = r / std::abs(d.y());
  }
  return m;
}

PlanarMap make_identity() {
  const Rect dom{{-2, -2}, {2, 2}};
  return PlanarMap::analytic(
      "identity", dom, [](const Vec2& p) { return p; },
      [](const Vec2&) { return Mat2::Identity(); });
}

PlanarMap make_linear(double a, double b) {
  const Rect dom{{0, 0}, {1, 1}};
  Mat2 m;
  m << a, 0, 0, b;
  return PlanarMap::analytic(
      "linear", dom, [m](const Vec2& p) { return Vec2(m * p); },
      [m](const Vec2&) { return m; });
}

PlanarMap make_radial_cavitation() {
  const Rect dom{{-1, -1}, {1, 1}};
  auto eval = [](const Vec2& p) -> Vec2 {
    const double r = p.norm();
    if (r == 0.0) return {0.0, 0.0};
    return (1.0 + r) / r * p;
  };
  auto jac = [](const Vec2& p) -> Mat2 {
    const double r = p.norm();
    if (r == 0.0) return Mat2::Identity();
    const Vec2 u = p / r;
    const Mat2 pr = u * u.transpose();
    return pr + (1.0 + r) / r * (Mat2::Identity() - pr);
  };
  return PlanarMap::analytic("radial_cavitation", dom, eval, jac);
}

PlanarMap make_cube_cavitation(const Vec2& c, double r) {
  const Rect dom{c - Vec2(2 * r, 2 * r), c + Vec2(2 * r, 2 * r)};
  return PlanarMap::analytic(
      "cube_cavitation", dom,
      [c, r](const Vec2& p) { return cube_cav_eval(c, r, p); },
      [c, r](const Vec2& p) { return cube_cav_jac(c, r, p); });
}

PlanarMap make_fold() {
  const Rect dom{{-1, -1}, {1, 1}};
  return PlanarMap::analytic(
      "fold", dom,
      [](const Vec2& p) { return Vec2(p.x(), std::abs(p.y())); },
      [](const Vec2& p) {
        Mat2 m = Mat2::Identity();
        if (p.y() < 0) m(1, 1) = -1.0;
        return m;
      },
      /*boundary_homeo=*/false);
}

// three-branch collapse on [0,3]x[0,1], blended to the identity away from it
PlanarMap make_bv_inverse() {
  const Rect dom{{-1, -1}, {4, 2}};
  auto abr = [](double x) -> double {
    if (x <= 1.0) return x;
    if (x <= 2.0) return 1.0;
    if (x <= 3.0) return x - 1.0;
    return 2.0 * x - 4.0;
  };
  auto abr_d = [](double x) -> double {
    if (x <= 1.0) return 1.0;
    if (x <= 2.0) return 0.0;
    if (x <= 3.0) return 1.0;
    return 2.0;
  };
  auto tb = [](double y) -> double {
    const double d = std::max({0.0, -y, y - 1.0});
    return std::min(1.0, 2.0 * d);
  };
  auto tb_d = [](double y) -> double {
    if (y < 0.0) return y > -0.5 ? -2.0 : 0.0;
    if (y > 1.0) return y < 1.5 ? 2.0 : 0.0;
    return 0.0;
  };
  auto eval = [abr, tb](const Vec2& p) -> Vec2 {
    const double t = tb(p.y());
    return {(1.0 - t) * abr(p.x()) + t * p.x(), p.y()};
  };
  auto jac = [abr, abr_d, tb, tb_d](const Vec2& p) -> Mat2 {
    const double t = tb(p.y());
    Mat2 m;
    m << (1.0 - t) * abr_d(p.x()) + t, (p.x() - abr(p.x())) * tb_d(p.y()), 0.0,
        1.0;
    return m;
  };
  return PlanarMap::analytic("bv_inverse", dom, eval, jac);
}

PlanarMap make_bad_inv() {
  const Rect dom{{-2, -2}, {2, 2}};
  const Vec2 c1(-0.25, 0.75), c2(0.25, 0.75), c3(-0.25, 1.25);
  const double r = 0.25;
  auto keval = [=](const Vec2& p) -> Vec2 {
    for (const Vec2& c : {c1, c2, c3}) {
      const Vec2 d = p - c;
      if (std::max(std::abs(d.x()), std::abs(d.y())) < r)
        return cube_cav_eval(c, r, p);
    }
    return p;
  };
  auto kjac = [=](const Vec2& p) -> Mat2 {
    for (const Vec2& c : {c1, c2, c3}) {
      const Vec2 d = p - c;
      if (std::max(std::abs(d.x()), std::abs(d.y())) < r)
        return cube_cav_jac(c, r, p);
    }
    return Mat2::Identity();
  };
  PlanarMap k = PlanarMap::analytic("bad_inv_k", dom, keval, kjac);
  PlanarMap b = PlanarMap::piecewise_affine(bad_inv_stage('b'), true, "bad_inv_b");
  PlanarMap l = PlanarMap::piecewise_affine(bad_inv_stage('l'), true, "bad_inv_l");
  PlanarMap rr = PlanarMap::piecewise_affine(bad_inv_stage('r'), true, "bad_inv_r");
  return PlanarMap::composition({k, b, l, rr}, "bad_inv_nofd");
}

std::map<std::string, double> parse_args(const std::string& spec,
                                         std::string& name) {
  std::map<std::string, double> args;
  const auto open = spec.find('(');
  if (open == std::string::npos) {
    name = spec;
    return args;
  }
  if (spec.back() != ')')
    throw Error(Errc::bad_format, "malformed map spec: " + spec);
  name = spec.substr(0, open);
  std::string body = spec.substr(open + 1, spec.size() - open - 2);
  size_t pos = 0;
  while (pos < body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    const std::string kv = body.substr(pos, comma - pos);
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::bad_format, "expected key=value in: " + spec);
    args[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    pos = comma + 1;
  }
  return args;
}

double arg_or(const std::map<std::string, double>& a, const std::string& k,
              double dflt) {
  const auto it = a.find(k);
  return it == a.end() ? dflt : it->second;
}

}  // namespace

PwaData bad_inv_stage(char which) {
  switch (which) {
    case 'b':
      return pieces_from(kBadInv_b, sizeof(kBadInv_b) / sizeof(kBadInv_b[0]));
    case 'l':
      return pieces_from(kBadInv_l, sizeof(kBadInv_l) / sizeof(kBadInv_l[0]));
    case 'r':
      return pieces_from(kBadInv_r, sizeof(kBadInv_r) / sizeof(kBadInv_r[0]));
    default:
      throw Error(Errc::unknown_entry, "bad_inv stage");
  }
}

std::vector<std::pair<std::string, std::string>> gallery_list() {
  return {
      {"identity", "identity map on [-2,2]^2"},
      {"linear", "diagonal linear map diag(a,b) on the unit square"},
      {"radial_cavitation",
       "radial cavitation opening a unit disk at the origin"},
      {"cube_cavitation",
       "sup-norm cavitation collapsing the square Q(c,r) onto its boundary"},
      {"bad_inv_nofd",
       "cavitation composed with piecewise-affine folding; satisfies the ball "
       "condition without finite distortion"},
      {"bv_inverse",
       "Lipschitz collapse of a vertical strip; its inverse is BV but not "
       "Sobolev"},
      {"fold", "orientation-violating fold (x,|y|)"},
  };
}

GalleryEntry gallery_get(const std::string& spec) {
  std::string name;
  const auto args = parse_args(spec, name);
  GalleryEntry e;
  e.name = name;
  using Reg = GalleryProps::InverseReg;

  if (name == "identity") {
    e.map = make_identity();
    e.props = {true, true, Reg::sobolev, {}};
    e.source_region = Region::rect(e.map.domain());
    e.target_region = Region::rect(e.map.domain());
  } else if (name == "linear") {
    const double a = arg_or(args, "a", 2.0), b = arg_or(args, "b", 1.0);
    if (a <= 0 || b <= 0)
      throw Error(Errc::bad_format, "linear: need positive a, b");
    e.map = make_linear(a, b);
    e.props = {true, true, Reg::sobolev, {}};
    e.source_region = Region::rect({{0, 0}, {1, 1}});
    e.target_region = Region::rect({{0, 0}, {a, b}});
  } else if (name == "radial_cavitation") {
    e.map = make_radial_cavitation();
    e.props = {true, true, Reg::sobolev, {{{0.0, 0.0}, M_PI}}};
    e.source_region = Region::disk_in({0, 0}, 1.0);
    e.target_region = Region::disk_in({0, 0}, 2.0);
  } else if (name == "cube_cavitation") {
    const Vec2 c(arg_or(args, "cx", 0.0), arg_or(args, "cy", 0.0));
    const double r = arg_or(args, "r", 1.0);
    if (r <= 0) throw Error(Errc::bad_format, "cube_cavitation: need r > 0");
    e.map = make_cube_cavitation(c, r);
    e.props = {false, true, Reg::na, {{c, 4.0 * r * r}}};
    e.source_region = Region::rect(e.map.domain());
    e.target_region = Region::rect(e.map.domain());
  } else if (name == "bad_inv_nofd") {
    e.map = make_bad_inv();
    const double qa = 0.18;  // area of the rotated square
    e.props = {false,
               true,
               Reg::na,
               {{{-0.25, 0.75}, qa}, {{0.25, 0.75}, qa}, {{-0.25, 1.25}, qa}}};
    e.source_region = Region::rect(e.map.domain());
    e.target_region = Region::rect(e.map.domain());
  } else if (name == "bv_inverse") {
    e.map = make_bv_inverse();
    e.props = {false, true, Reg::bv_only, {}};
    e.source_region = Region::rect(e.map.domain());
    e.target_region = Region::rect({{0, 0}, {2, 1}});
  } else if (name == "fold") {
    e.map = make_fold();
    e.props = {false, false, Reg::na, {}};
    e.source_region = Region::rect(e.map.domain());
    e.target_region = Region::rect(e.map.domain());
  } else {
    throw Error(Errc::unknown_entry, "unknown gallery entry: " + name);
  }
  for (const auto& [n, d] : gallery_list())
    if (n == name) e.description = d;
  return e;
}

GalleryEntry load_map_spec(const std::string& spec) {
  namespace fs = std::filesystem;
  if (fs::exists(spec)) {
    GalleryEntry e;
    e.name = fs::path(spec).stem().string();
    e.description = "loaded from " + spec;
    std::ifstream probe(spec);
    std::string magic;
    probe >> magic;
    if (magic == "GRIDMAP2") {
      e.map = PlanarMap::grid_sampled(read_gridmap2_file(spec), true, e.name);
    } else if (magic == "PWA2") {
      e.map = PlanarMap::piecewise_affine(read_pwa2_file(spec), true, e.name);
    } else {
      throw Error(Errc::bad_format, spec + ": unknown file format");
    }
    e.source_region = Region::rect(e.map.domain());
    // estimate the image window from a coarse sample
    Vec2 lo(kInf, kInf), hi(-kInf, -kInf);
    const Rect dom = e.map.domain();
    for (int j = 0; j < 33; ++j)
      for (int i = 0; i < 33; ++i) {
        const Vec2 p{dom.lo.x() + i * dom.width() / 32.0,
                     dom.lo.y() + j * dom.height() / 32.0};
        const Vec2 y = e.map(p);
        lo = lo.cwiseMin(y);
        hi = hi.cwiseMax(y);
      }
    e.target_region = Region::rect({lo, hi});
    return e;
  }
  return gallery_get(spec);
}

}  // namespace invmap
