#include "tspsurf/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tspsurf {

namespace {

struct Mapper {
  double min_x, min_y, scale, height;
  double x(const Point& p) const { return (p.x - min_x) * scale + 20.0; }
  double y(const Point& p) const { return height - ((p.y - min_y) * scale + 20.0); }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

} // namespace

std::string render_svg(const TspInstance& inst, const TriangleSet* candidates,
                       const RunReport* report) {
  if (!inst.has_coords())
    throw TspError(ErrorCode::NoCoordinates,
                   "cannot plot an instance without coordinates");
  const auto& pts = *inst.coords;
  double min_x = pts[0].x, max_x = pts[0].x;
  double min_y = pts[0].y, max_y = pts[0].y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  double span = std::max(max_x - min_x, max_y - min_y);
  if (span <= 0) span = 1.0;
  const double drawable = 760.0;
  Mapper m{min_x, min_y, drawable / span,
           (max_y - min_y) * (drawable / span) + 40.0};
  double width = (max_x - min_x) * m.scale + 40.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(m.height) << "\" viewBox=\"0 0 " << num(width)
      << " " << num(m.height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto tri_path = [&](const Triangle& t) {
    return "M " + num(m.x(pts[t.a])) + " " + num(m.y(pts[t.a])) + " L " +
           num(m.x(pts[t.b])) + " " + num(m.y(pts[t.b])) + " L " +
           num(m.x(pts[t.c])) + " " + num(m.y(pts[t.c])) + " Z";
  };

  if (candidates) {
    svg << "<g fill=\"#f3e2c0\" fill-opacity=\"0.45\" stroke=\"#b5b5b5\" "
           "stroke-width=\"0.6\">\n";
    for (const auto& t : candidates->triangles)
      svg << "<path d=\"" << tri_path(t) << "\"/>\n";
    svg << "</g>\n";
  }

  if (report && !report->selected_triangles.empty()) {
    svg << "<g fill=\"#f5a623\" fill-opacity=\"0.65\" stroke=\"#c77f00\" "
           "stroke-width=\"0.8\">\n";
    for (const auto& t : report->selected_triangles)
      svg << "<path d=\"" << tri_path(t) << "\"/>\n";
    svg << "</g>\n";

    if (!report->selected_dual_edges.empty() && candidates) {
      svg << "<g stroke=\"#2d5bba\" stroke-width=\"1.2\" "
             "stroke-dasharray=\"5,4\">\n";
      auto centroid = [&](int t) {
        const Triangle& tr = candidates->triangles[t];
        Point c{(pts[tr.a].x + pts[tr.b].x + pts[tr.c].x) / 3.0,
                (pts[tr.a].y + pts[tr.b].y + pts[tr.c].y) / 3.0};
        return c;
      };
      for (const auto& [t1, t2] : report->selected_dual_edges) {
        Point c1 = centroid(t1), c2 = centroid(t2);
        svg << "<line x1=\"" << num(m.x(c1)) << "\" y1=\"" << num(m.y(c1))
            << "\" x2=\"" << num(m.x(c2)) << "\" y2=\"" << num(m.y(c2))
            << "\"/>\n";
      }
      svg << "</g>\n";
    }
  }

  if (report && report->tour) {
    const auto& order = report->tour->order;
    svg << "<path fill=\"none\" stroke=\"#d0021b\" stroke-width=\"2.2\" d=\"";
    for (size_t i = 0; i < order.size(); ++i) {
      const Point& p = pts[order[i]];
      svg << (i == 0 ? "M " : "L ") << num(m.x(p)) << " " << num(m.y(p)) << " ";
    }
    svg << "Z\"/>\n";
  }

  svg << "<g fill=\"black\">\n";
  for (const auto& p : pts)
    svg << "<circle cx=\"" << num(m.x(p)) << "\" cy=\"" << num(m.y(p))
        << "\" r=\"2.6\"/>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

} // namespace tspsurf
