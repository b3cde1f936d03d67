#pragma once

#include <string>
#include <vector>

#include "affine.hpp"
#include "voronoi.hpp"

// Minimal deterministic SVG rendering for rank <= 2 figures: the loop-torus
// fan, alcoves, and Voronoi cells. Output is an element list with fixed
// formatting so identical inputs produce byte-identical documents.

namespace weyl {

struct SvgCanvas {
  double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
  int width = 640, height = 480;
  std::vector<std::string> elements;

  void line(double x1, double y1, double x2, double y2, const std::string& style);
  void circle(double cx, double cy, double r, const std::string& style);
  void rect_marker(double cx, double cy, double half, const std::string& style);
  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style);
  std::string document() const;

 private:
  std::pair<double, double> map(double x, double y) const;
};

// Figure of the loop-torus fan for a rank-1 form: lattice dots, Voronoi
// vertices, dashed rays through them at height 1.
std::string plot_lt_fan(const LTFan& fan);
// Alcove of a rank-2 datum: walls and vertices.
std::string plot_alcove(const AffineRootDatum& ard);
// Voronoi cells of a rank-2 form over a window of centers.
std::string plot_voronoi(const QuadraticForm& q, Int window);
// Fan in the plane: rays of every cone.
std::string plot_fan(const Fan& fan);

}  // namespace weyl
