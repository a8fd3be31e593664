#include "trop/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trop/convexity.hpp"

namespace trop {

namespace {

class Canvas {
 public:
  Canvas(const Rational& top, const Rational& span, int size)
      : low_(top - span), span_(span.get_d()), size_(size) {}

  double axis(const SymNum& v) const {
    if (v.is_zero()) return 0.0;
    Rational shifted = v.mag() - low_;
    double m = shifted > 0 ? shifted.get_d() : 0.0;
    return v.is_neg() ? -m : m;
  }
  double sx(const SymNum& v) const { return size_ / 2.0 + axis(v) * scale(); }
  double sy(const SymNum& v) const { return size_ / 2.0 - axis(v) * scale(); }

  /// Inverse of the display map on one axis, for grid sampling.
  SymNum value_at(double t) const {
    if (t == 0.0) return {};
    Rational mag = Rational(std::abs(t)) + low_;
    return t < 0 ? SymNum::neg(mag) : SymNum::pos(mag);
  }

 private:
  double scale() const { return (size_ / 2.0 - 12.0) / span_; }
  Rational low_;
  double span_;
  int size_;
};

void draw_segment(std::ostringstream& svg, const Canvas& c, const SymVector& p,
                  const SymVector& q) {
  SegmentDescription seg = segment(p, q);
  std::string points;
  for (const SegmentPiece& piece : seg.pieces) {
    if (piece.is_box()) {
      double x0 = c.sx(piece.box[0].lo);
      double x1 = c.sx(piece.box[0].hi);
      double y0 = c.sy(piece.box[1].hi);
      double y1 = c.sy(piece.box[1].lo);
      svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << (x1 - x0)
          << "\" height=\"" << (y1 - y0)
          << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\"/>\n";
    } else {
      points += std::to_string(c.sx((*piece.vertex)[0])) + "," +
                std::to_string(c.sy((*piece.vertex)[1])) + " ";
    }
  }
  svg << "<polyline points=\"" << points << "\" fill=\"none\" stroke=\"#3182bd\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string plot_svg(const SymMatrix& generators, const PlotOptions& options) {
  if (generators.rows() != 2) throw std::invalid_argument("plot: only two-dimensional input");
  if (options.span <= 0) throw std::invalid_argument("plot: span must be positive");
  Rational top = 0;
  bool any = false;
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      const SymNum& v = generators(i, j);
      if (!v.is_zero() && (!any || v.mag() > top)) {
        top = v.mag();
        any = true;
      }
    }
  }
  top += 1;
  Canvas c(top, options.span, options.size);
  const int size = options.size;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"0\" y1=\"" << size / 2 << "\" x2=\"" << size << "\" y2=\"" << size / 2
      << "\" stroke=\"#888\"/>\n"
      << "<line x1=\"" << size / 2 << "\" y1=\"0\" x2=\"" << size / 2 << "\" y2=\"" << size
      << "\" stroke=\"#888\"/>\n";

  if (!options.halfspaces.empty()) {
    const int steps = 24;
    double reach = options.span.get_d();
    for (int a = -steps; a <= steps; ++a) {
      for (int b = -steps; b <= steps; ++b) {
        SymVector x{c.value_at(reach * a / steps), c.value_at(reach * b / steps)};
        bool ok = std::all_of(options.halfspaces.begin(), options.halfspaces.end(),
                              [&](const AffineRow& r) { return halfspace_contains(r, x); });
        if (ok) {
          svg << "<circle cx=\"" << c.sx(x[0]) << "\" cy=\"" << c.sy(x[1])
              << "\" r=\"1.5\" fill=\"#fdae6b\"/>\n";
        }
      }
    }
  }

  if (generators.cols() > 0) {
    OrthantHull hull = orthant_hull(generators);
    for (const auto& [pattern, cell] : hull.cells) {
      std::vector<SymVector> pts;
      for (std::size_t j = 0; j < cell.cols(); ++j) {
        SymVector v = cell.column(j);
        for (std::size_t i = 0; i < 2; ++i) {
          if (pattern[i] == '-') v[i] = -v[i];
        }
        pts.push_back(v);
      }
      for (std::size_t j = 0; j < pts.size(); ++j) {
        for (std::size_t k = j + 1; k < pts.size(); ++k) draw_segment(svg, c, pts[j], pts[k]);
      }
    }
  }
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    SymVector g = generators.column(j);
    svg << "<circle cx=\"" << c.sx(g[0]) << "\" cy=\"" << c.sy(g[1])
        << "\" r=\"4\" fill=\"#d62728\"><title>(" << to_string(g[0]) << ", " << to_string(g[1])
        << ")</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace trop
