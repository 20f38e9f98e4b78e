#include "pathlayout/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace pathlayout {

namespace {

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Canvas {
  double scale, margin;
  std::int32_t min_x = 0, max_y = 0;

  double px(std::int32_t x) const { return margin + scale * (x - min_x); }
  double py(std::int32_t y) const { return margin + scale * (max_y - y); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void polyline(std::string& out, const Canvas& c, const std::vector<Point>& pts, std::string_view extra = {}) {
  out += "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fmt(c.px(pts[i].x)) + "," + fmt(c.py(pts[i].y));
  }
  out += "\"";
  out += extra;
  out += "/>\n";
}

}  // namespace

std::string render_svg(const Dag& g, const GridLayout& layout, const SvgOptions& options) {
  std::int32_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool any = false;
  auto extend = [&](std::int32_t x, std::int32_t y) {
    if (!any) {
      min_x = max_x = x;
      min_y = max_y = y;
      any = true;
      return;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (std::size_t v = 0; v < layout.x.size(); ++v) extend(layout.x[v], layout.y[v]);
  for (const auto& route : layout.routes) {
    for (const Point& p : route) extend(p.x, p.y);
  }
  for (const auto& placed : layout.intervals) {
    extend(placed.x, placed.interval.start);
    extend(placed.x, placed.interval.finish);
  }

  const Canvas c{options.scale, options.margin, min_x, max_y};
  const double width = 2 * options.margin + options.scale * (max_x - min_x);
  const double height = 2 * options.margin + options.scale * (max_y - min_y);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  if (!any) {
    out += "</svg>\n";
    return out;
  }

  out += "<g id=\"path-edges\" fill=\"none\" stroke=\"" + options.path_color + "\" stroke-width=\"2\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto idx = static_cast<std::size_t>(e);
    if (idx < layout.edge_class.size() && layout.edge_class[idx] == EdgeClass::kPath && idx < layout.routes.size()) {
      polyline(out, c, layout.routes[idx]);
    }
  }
  out += "</g>\n";

  out += "<g id=\"cross-edges\" fill=\"none\" stroke=\"" + options.cross_color + "\" stroke-width=\"1.2\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto idx = static_cast<std::size_t>(e);
    if (idx < layout.edge_class.size() && layout.edge_class[idx] == EdgeClass::kCross && idx < layout.routes.size() &&
        !layout.routes[idx].empty()) {
      polyline(out, c, layout.routes[idx]);
    }
  }
  out += "</g>\n";

  if (options.show_transitive && !layout.intervals.empty()) {
    out += "<g id=\"transitive\" fill=\"none\" stroke=\"" + options.transitive_color + "\" stroke-width=\"1.2\">\n";
    for (const auto& placed : layout.intervals) {
      const Interval& iv = placed.interval;
      const std::int32_t spine = layout.path_column[static_cast<std::size_t>(iv.path_index)];
      polyline(out, c, {{placed.x, iv.start}, {placed.x, iv.finish}});
      for (std::int32_t row : iv.connector_rows) polyline(out, c, {{placed.x, row}, {spine, row}});
      // Dot marks the anchor row.
      const std::int32_t tip = iv.direction == BundleDirection::kOutgoing ? iv.start : iv.finish;
      const double r = options.scale * 0.12;
      out += "<circle cx=\"" + fmt(c.px(placed.x)) + "\" cy=\"" + fmt(c.py(tip)) + "\" r=\"" + fmt(r) +
             "\" fill=\"" + options.transitive_color + "\"/>\n";
    }
    out += "</g>\n";
  }

  const double radius = options.scale * 0.22;
  out += "<g id=\"vertices\" stroke=\"" + options.path_color + "\" fill=\"" + options.vertex_color + "\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto idx = static_cast<std::size_t>(v);
    const double cx = c.px(layout.x[idx]);
    const double cy = c.py(layout.y[idx]);
    out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(radius) + "\"/>\n";
    if (options.labels) {
      out += "<text x=\"" + fmt(cx + radius * 1.3) + "\" y=\"" + fmt(cy - radius * 0.3) +
             "\" font-size=\"" + fmt(options.scale * 0.3) + "\" stroke=\"none\" fill=\"#000000\">" +
             escape_xml(g.label(v)) + "</text>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace pathlayout
