#pragma once

#include "xconv/disks.hpp"
#include "xconv/reduction.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace xconv {
namespace detail {

// Display-only decimal rendering; nothing drawn here is ever read back.
inline std::string svg_num(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", r.convert_to<double>());
  return buf;
}

inline std::string svg_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct SvgCanvas {
  std::ostringstream body;
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;

  void grow(const Rational& x, const Rational& y, double pad) {
    const double px = x.convert_to<double>(), py = y.convert_to<double>();
    if (first) {
      min_x = px - pad;
      max_x = px + pad;
      min_y = py - pad;
      max_y = py + pad;
      first = false;
    } else {
      min_x = std::min(min_x, px - pad);
      max_x = std::max(max_x, px + pad);
      min_y = std::min(min_y, py - pad);
      max_y = std::max(max_y, py + pad);
    }
  }

  std::string finish() const {
    const double w = max_x - min_x, h = max_y - min_y;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_num(min_x) << ' '
        << svg_num(-max_y) << ' ' << svg_num(w) << ' ' << svg_num(h)
        << "\" width=\"" << svg_num(w * 40) << "\" height=\"" << svg_num(h * 40) << "\">\n"
        << "<g transform=\"scale(1,-1)\">\n"
        << body.str() << "</g>\n</svg>\n";
    return out.str();
  }
};

}  // namespace detail

/// Draws the disks (radius 1) with touching pairs highlighted by a dot at
/// the touch point and a dashed center-to-center segment.
inline std::string svg_disks(const DiskInstance& d) {
  if (d.centers.empty()) throw std::invalid_argument("svg_disks: empty instance");
  detail::SvgCanvas canvas;
  for (const Point2& c : d.centers) canvas.grow(c.x, c.y, 1.5);
  for (const Point2& c : d.centers) {
    canvas.body << "<circle cx=\"" << detail::svg_num(c.x) << "\" cy=\"" << detail::svg_num(c.y)
                << "\" r=\"1\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" "
                   "stroke-width=\"0.04\"/>\n";
  }
  for (const TangentPair& p : tangent_pairs(d)) {
    const Point2& a = d.centers[p.i];
    const Point2& b = d.centers[p.j];
    const Point2 t = midpoint(a, b);
    canvas.body << "<line x1=\"" << detail::svg_num(a.x) << "\" y1=\"" << detail::svg_num(a.y)
                << "\" x2=\"" << detail::svg_num(b.x) << "\" y2=\"" << detail::svg_num(b.y)
                << "\" stroke=\"#e6550d\" stroke-width=\"0.05\" stroke-dasharray=\"0.15,0.1\"/>\n"
                << "<circle cx=\"" << detail::svg_num(t.x) << "\" cy=\"" << detail::svg_num(t.y)
                << "\" r=\"0.09\" fill=\"#e6550d\"/>\n";
  }
  return canvas.finish();
}

/// Draws the xy-projection of a reduction: lifted centers as filled disks,
/// blocking points as crosses, with each blocking segment drawn.
inline std::string svg_points(const ReductionOutput& r) {
  if (r.lifted.empty()) throw std::invalid_argument("svg_points: empty point set");
  detail::SvgCanvas canvas;
  for (const Point3& p : r.lifted) canvas.grow(p.x, p.y, 0.8);
  for (const Blocker& b : r.blockers) canvas.grow(b.point.x, b.point.y, 0.8);
  for (const Blocker& b : r.blockers) {
    const Point3& a = r.lifted[b.pair.i];
    const Point3& c = r.lifted[b.pair.j];
    canvas.body << "<line x1=\"" << detail::svg_num(a.x) << "\" y1=\"" << detail::svg_num(a.y)
                << "\" x2=\"" << detail::svg_num(c.x) << "\" y2=\"" << detail::svg_num(c.y)
                << "\" stroke=\"#bdbdbd\" stroke-width=\"0.03\"/>\n";
  }
  for (const Point3& p : r.lifted) {
    canvas.body << "<circle cx=\"" << detail::svg_num(p.x) << "\" cy=\"" << detail::svg_num(p.y)
                << "\" r=\"0.12\" fill=\"#3182bd\"/>\n";
  }
  for (const Blocker& b : r.blockers) {
    canvas.body << "<g stroke=\"#e6550d\" stroke-width=\"0.05\">"
                << "<line x1=\"" << detail::svg_num(b.point.x - Rational(1, 10)) << "\" y1=\""
                << detail::svg_num(b.point.y - Rational(1, 10)) << "\" x2=\""
                << detail::svg_num(b.point.x + Rational(1, 10)) << "\" y2=\""
                << detail::svg_num(b.point.y + Rational(1, 10)) << "\"/>"
                << "<line x1=\"" << detail::svg_num(b.point.x - Rational(1, 10)) << "\" y1=\""
                << detail::svg_num(b.point.y + Rational(1, 10)) << "\" x2=\""
                << detail::svg_num(b.point.x + Rational(1, 10)) << "\" y2=\""
                << detail::svg_num(b.point.y - Rational(1, 10)) << "\"/></g>\n";
  }
  return canvas.finish();
}

}  // namespace xconv
