#include "invmap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace invmap {

namespace {

std::string next_token(std::istream& in) {
  std::string t;
  if (!(in >> t)) throw Error(Errc::bad_format, "unexpected end of file");
  return t;
}

double next_double(std::istream& in) {
  double v;
  if (!(in >> v)) throw Error(Errc::bad_format, "expected a number");
  return v;
}

long next_long(std::istream& in) {
  long v;
  if (!(in >> v)) throw Error(Errc::bad_format, "expected an integer");
  return v;
}

void expect(std::istream& in, const std::string& word) {
  const std::string t = next_token(in);
  if (t != word)
    throw Error(Errc::bad_format, "expected '" + word + "', got '" + t + "'");
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::bad_format, "cannot open " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(Errc::bad_format, "cannot write " + path);
  return f;
}

}  // namespace

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GridSampledData read_gridmap2(std::istream& in) {
  expect(in, "GRIDMAP2");
  expect(in, "v1");
  expect(in, "domain");
  GridSampledData g;
  g.domain.lo.x() = next_double(in);
  g.domain.lo.y() = next_double(in);
  g.domain.hi.x() = next_double(in);
  g.domain.hi.y() = next_double(in);
  if (!(g.domain.lo.x() < g.domain.hi.x() && g.domain.lo.y() < g.domain.hi.y()))
    throw Error(Errc::bad_format, "GRIDMAP2: empty domain");
  expect(in, "res");
  g.nx = static_cast<int>(next_long(in));
  g.ny = static_cast<int>(next_long(in));
  if (g.nx < 2 || g.ny < 2) throw Error(Errc::bad_format, "GRIDMAP2: res < 2");
  const long n = static_cast<long>(g.nx) * g.ny;
  g.values.resize(n);
  for (long k = 0; k < n; ++k) {
    g.values[k].x() = next_double(in);
    g.values[k].y() = next_double(in);
    if (!g.values[k].allFinite())
      throw Error(Errc::bad_format, "GRIDMAP2: non-finite value");
  }
  return g;
}

GridSampledData read_gridmap2_file(const std::string& path) {
  auto f = open_in(path);
  return read_gridmap2(f);
}

void write_gridmap2(std::ostream& out, const GridSampledData& g) {
  out << "GRIDMAP2 v1\n";
  out << "domain " << fmt_g17(g.domain.lo.x()) << ' ' << fmt_g17(g.domain.lo.y())
      << ' ' << fmt_g17(g.domain.hi.x()) << ' ' << fmt_g17(g.domain.hi.y())
      << '\n';
  out << "res " << g.nx << ' ' << g.ny << '\n';
  for (const Vec2& v : g.values)
    out << fmt_g17(v.x()) << ' ' << fmt_g17(v.y()) << '\n';
}

void write_gridmap2_file(const std::string& path, const GridSampledData& g) {
  auto f = open_out(path);
  write_gridmap2(f, g);
}

PwaData read_pwa2(std::istream& in) {
  expect(in, "PWA2");
  expect(in, "v1");
  expect(in, "pieces");
  const long n = next_long(in);
  if (n <= 0) throw Error(Errc::bad_format, "PWA2: piece count");
  PwaData d;
  d.pieces.resize(n);
  Vec2 lo(kInf, kInf), hi(-kInf, -kInf);
  for (long k = 0; k < n; ++k) {
    expect(in, "piece");
    const long m = next_long(in);
    if (m < 3) throw Error(Errc::bad_format, "PWA2: piece with < 3 vertices");
    auto& pc = d.pieces[k];
    pc.poly.resize(m);
    for (long v = 0; v < m; ++v) {
      pc.poly[v].x() = next_double(in);
      pc.poly[v].y() = next_double(in);
      lo = lo.cwiseMin(pc.poly[v]);
      hi = hi.cwiseMax(pc.poly[v]);
    }
    expect(in, "matrix");
    pc.A(0, 0) = next_double(in);
    pc.A(0, 1) = next_double(in);
    pc.A(1, 0) = next_double(in);
    pc.A(1, 1) = next_double(in);
    expect(in, "offset");
    pc.b.x() = next_double(in);
    pc.b.y() = next_double(in);
  }
  d.domain = {lo, hi};
  return d;
}

PwaData read_pwa2_file(const std::string& path) {
  auto f = open_in(path);
  return read_pwa2(f);
}

void write_pwa2(std::ostream& out, const PwaData& d) {
  out << "PWA2 v1\n";
  out << "pieces " << d.pieces.size() << '\n';
  for (const auto& pc : d.pieces) {
    out << "piece " << pc.poly.size() << '\n';
    for (const Vec2& v : pc.poly)
      out << fmt_g17(v.x()) << ' ' << fmt_g17(v.y()) << '\n';
    out << "matrix " << fmt_g17(pc.A(0, 0)) << ' ' << fmt_g17(pc.A(0, 1)) << ' '
        << fmt_g17(pc.A(1, 0)) << ' ' << fmt_g17(pc.A(1, 1)) << '\n';
    out << "offset " << fmt_g17(pc.b.x()) << ' ' << fmt_g17(pc.b.y()) << '\n';
  }
}

void write_pwa2_file(const std::string& path, const PwaData& d) {
  auto f = open_out(path);
  write_pwa2(f, d);
}

CsvWriter& CsvWriter::field(const std::string& s) {
  if (!first_) out_ << ',';
  first_ = false;
  if (s.find_first_of(",\"\n") != std::string::npos) {
    out_ << '"';
    for (char c : s) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  } else {
    out_ << s;
  }
  return *this;
}

CsvWriter& CsvWriter::field(double v) { return field(fmt_g17(v)); }

CsvWriter& CsvWriter::field(long v) { return field(std::to_string(v)); }

void CsvWriter::end_row() {
  out_ << '\n';
  first_ = true;
}

void write_pgm(std::ostream& out, int nx, int ny,
               const std::vector<int>& rows_top_down, int maxval) {
  out << "P2\n" << nx << ' ' << ny << '\n' << maxval << '\n';
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (i) out << ' ';
      out << std::clamp(rows_top_down[static_cast<size_t>(j) * nx + i], 0, maxval);
    }
    out << '\n';
  }
}

SvgCanvas::SvgCanvas(Rect world, double px_width) : world_(world) {
  scale_ = px_width / world.width();
  w_ = px_width;
  h_ = world.height() * scale_;
}

Vec2 SvgCanvas::to_px(const Vec2& w) const {
  return {(w.x() - world_.lo.x()) * scale_,
          (world_.hi.y() - w.y()) * scale_};
}

void SvgCanvas::polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                         double width, bool closed) {
  if (pts.size() < 2) return;
  std::ostringstream s;
  s << "<path d=\"M";
  for (size_t k = 0; k < pts.size(); ++k) {
    const Vec2 q = to_px(pts[k]);
    s << (k ? " L" : " ") << fmt_g17(q.x()) << ' ' << fmt_g17(q.y());
  }
  if (closed) s << " Z";
  s << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
    << "\"/>\n";
  body_ += s.str();
}

void SvgCanvas::rect(const Rect& r, const std::string& fill, double opacity) {
  const Vec2 a = to_px({r.lo.x(), r.hi.y()});
  std::ostringstream s;
  s << "<rect x=\"" << fmt_g17(a.x()) << "\" y=\"" << fmt_g17(a.y())
    << "\" width=\"" << fmt_g17(r.width() * scale_) << "\" height=\""
    << fmt_g17(r.height() * scale_) << "\" fill=\"" << fill << "\" opacity=\""
    << opacity << "\"/>\n";
  body_ += s.str();
}

void SvgCanvas::circle(const Vec2& c, double radius_world, const std::string& fill) {
  const Vec2 q = to_px(c);
  std::ostringstream s;
  s << "<circle cx=\"" << fmt_g17(q.x()) << "\" cy=\"" << fmt_g17(q.y())
    << "\" r=\"" << fmt_g17(radius_world * scale_) << "\" fill=\"" << fill
    << "\"/>\n";
  body_ += s.str();
}

void SvgCanvas::text(const Vec2& at, const std::string& s, double size_px) {
  const Vec2 q = to_px(at);
  std::ostringstream o;
  o << "<text x=\"" << fmt_g17(q.x()) << "\" y=\"" << fmt_g17(q.y())
    << "\" font-size=\"" << size_px << "\" font-family=\"sans-serif\">" << s
    << "</text>\n";
  body_ += o.str();
}

std::string SvgCanvas::finish() const {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_
    << "\" height=\"" << h_ << "\" viewBox=\"0 0 " << w_ << ' ' << h_
    << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << body_ << "</svg>\n";
  return s.str();
}

}  // namespace invmap
