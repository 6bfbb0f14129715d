#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "invmap/core.hpp"
#include "invmap/planar_map.hpp"

namespace invmap {

// GRIDMAP2 v1: header, domain, node resolution, then nx*ny "u v" lines in
// row-major node order (y rows from the bottom, x fastest)
GridSampledData read_gridmap2(std::istream& in);
GridSampledData read_gridmap2_file(const std::string& path);
void write_gridmap2(std::ostream& out, const GridSampledData& g);
void write_gridmap2_file(const std::string& path, const GridSampledData& g);

// PWA2 v1: piece count, then per piece a vertex list, matrix and offset
PwaData read_pwa2(std::istream& in);
PwaData read_pwa2_file(const std::string& path);
void write_pwa2(std::ostream& out, const PwaData& d);
void write_pwa2_file(const std::string& path, const PwaData& d);

// formats a double with 17 significant digits (round-trip exact)
std::string fmt_g17(double v);

// CSV writer with RFC 4180 style quoting and deterministic formatting
class CsvWriter {
public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  CsvWriter& field(const std::string& s);
  CsvWriter& field(double v);
  CsvWriter& field(long v);
  CsvWriter& field(int v) { return field(static_cast<long>(v)); }
  void end_row();

private:
  std::ostream& out_;
  bool first_ = true;
};

// plain-text PGM (P2)
void write_pgm(std::ostream& out, int nx, int ny,
               const std::vector<int>& rows_top_down, int maxval = 255);

// minimal self-contained SVG canvas
class SvgCanvas {
public:
  SvgCanvas(Rect world, double px_width);
  void polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                double width, bool closed = false);
  void rect(const Rect& r, const std::string& fill, double opacity = 1.0);
  void circle(const Vec2& c, double radius_world, const std::string& fill);
  void text(const Vec2& at, const std::string& s, double size_px = 12.0);
  std::string finish() const;

private:
  Vec2 to_px(const Vec2& w) const;
  Rect world_;
  double scale_;
  double w_, h_;
  std::string body_;
};

}  // namespace invmap
