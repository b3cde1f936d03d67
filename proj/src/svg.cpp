#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace weyl {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::pair<double, double> SvgCanvas::map(double x, double y) const {
  double sx = (x - min_x) / (max_x - min_x) * width;
  double sy = (max_y - y) / (max_y - min_y) * height;
  return {sx, sy};
}

void SvgCanvas::line(double x1, double y1, double x2, double y2, const std::string& style) {
  auto [a, b] = map(x1, y1);
  auto [c, d] = map(x2, y2);
  elements.push_back("<line x1=\"" + fmt(a) + "\" y1=\"" + fmt(b) + "\" x2=\"" + fmt(c) +
                     "\" y2=\"" + fmt(d) + "\" " + style + "/>");
}

void SvgCanvas::circle(double cx, double cy, double r, const std::string& style) {
  auto [a, b] = map(cx, cy);
  elements.push_back("<circle cx=\"" + fmt(a) + "\" cy=\"" + fmt(b) + "\" r=\"" + fmt(r) +
                     "\" " + style + "/>");
}

void SvgCanvas::rect_marker(double cx, double cy, double half, const std::string& style) {
  auto [a, b] = map(cx, cy);
  elements.push_back("<rect x=\"" + fmt(a - half) + "\" y=\"" + fmt(b - half) + "\" width=\"" +
                     fmt(2 * half) + "\" height=\"" + fmt(2 * half) + "\" " + style + "/>");
}

void SvgCanvas::polygon(const std::vector<std::pair<double, double>>& pts,
                        const std::string& style) {
  std::string s = "<polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    auto [a, b] = map(pts[i].first, pts[i].second);
    s += (i ? " " : "") + fmt(a) + "," + fmt(b);
  }
  elements.push_back(s + "\" " + style + "/>");
}

std::string SvgCanvas::document() const {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                  std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
  for (const auto& e : elements) s += "  " + e + "\n";
  return s + "</svg>\n";
}

std::string plot_lt_fan(const LTFan& fan) {
  if (fan.q.rank() != 1)
    throw unsupported_error("lt fan figure requires a rank-1 form");
  SvgCanvas canvas;
  double w = (double)fan.window + 1.0;
  canvas.min_x = -w;
  canvas.max_x = w;
  canvas.min_y = -0.1;
  canvas.max_y = 1.25;
  // axis at height 1 where the Voronoi subdivision lives
  canvas.line(-w, 1.0, w, 1.0, "stroke=\"#888888\" stroke-width=\"1\"");
  // rays from the origin through the primitive generators
  for (const auto& r : fan.rays) {
    double x = (double)r[0], h = (double)r[1];
    double scale = 1.2 / h;
    canvas.line(0, 0, x * scale, h * scale,
                "stroke=\"#333333\" stroke-width=\"1\" stroke-dasharray=\"4,3\"");
  }
  // lattice points at height 1 (squares) and cell vertices (circles)
  for (Int n = -fan.window; n <= fan.window; ++n)
    canvas.rect_marker((double)n, 1.0, 3.5, "fill=\"#000000\"");
  for (const auto& r : fan.rays)
    canvas.circle((double)r[0] / (double)r[1], 1.0, 3.0,
                  "fill=\"#ffffff\" stroke=\"#000000\"");
  canvas.circle(0, 0, 2.5, "fill=\"#000000\"");
  return canvas.document();
}

std::string plot_alcove(const AffineRootDatum& ard) {
  if (ard.base.rank != 2) throw unsupported_error("alcove figure requires rank 2");
  Alcove al = alcove(ard);
  SvgCanvas canvas;
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& v : al.vertices) {
    lo_x = std::min(lo_x, v[0].to_double());
    hi_x = std::max(hi_x, v[0].to_double());
    lo_y = std::min(lo_y, v[1].to_double());
    hi_y = std::max(hi_y, v[1].to_double());
  }
  double pad = 0.35;
  canvas.min_x = lo_x - pad;
  canvas.max_x = hi_x + pad;
  canvas.min_y = lo_y - pad;
  canvas.max_y = hi_y + pad;
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : al.vertices) pts.emplace_back(v[0].to_double(), v[1].to_double());
  canvas.polygon(pts, "fill=\"#dddddd\" stroke=\"#000000\" stroke-width=\"1.5\"");
  for (size_t i = 0; i < al.vertices.size(); ++i)
    canvas.circle(al.vertices[i][0].to_double(), al.vertices[i][1].to_double(), 3.0,
                  "fill=\"#000000\"");
  return canvas.document();
}

std::string plot_voronoi(const QuadraticForm& q, Int window) {
  if (q.rank() != 2) throw unsupported_error("voronoi figure requires rank 2");
  SvgCanvas canvas;
  double w = (double)window + 1.0;
  canvas.min_x = -w;
  canvas.max_x = w;
  canvas.min_y = -w;
  canvas.max_y = w;
  for (Int x = -window; x <= window; ++x)
    for (Int y = -window; y <= window; ++y) {
      VoronoiCell cell = voronoi_cell(q, IVec{x, y});
      std::vector<std::pair<double, double>> pts;
      for (const auto& v : cell.vertices) pts.emplace_back(v[0].to_double(), v[1].to_double());
      // order polygon vertices by angle around the center
      std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a.second - y, a.first - x) < std::atan2(b.second - y, b.first - x);
      });
      canvas.polygon(pts, "fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"");
      canvas.circle((double)x, (double)y, 2.5, "fill=\"#000000\"");
    }
  return canvas.document();
}

std::string plot_fan(const Fan& fan) {
  if (fan.ambient_dim() != 2) throw unsupported_error("fan figure requires ambient rank 2");
  SvgCanvas canvas;
  canvas.min_x = canvas.min_y = -1.5;
  canvas.max_x = canvas.max_y = 1.5;
  for (const auto& c : fan.cones())
    for (const auto& r : c.generators()) {
      double nx = (double)r[0], ny = (double)r[1];
      double norm = std::sqrt(nx * nx + ny * ny);
      canvas.line(0, 0, 1.3 * nx / norm, 1.3 * ny / norm,
                  "stroke=\"#333333\" stroke-width=\"1\"");
    }
  canvas.circle(0, 0, 2.5, "fill=\"#000000\"");
  return canvas.document();
}

}  // namespace weyl
