#include "hopspan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hopspan {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Frame {
    double x0, y0, x1, y1, scale;
    double px(double x) const { return (x - x0) * scale; }
    double py(double y) const { return (y1 - y) * scale; }  // y up
};

void line(std::string& out, const Frame& f, const Point2& a, const Point2& b, const char* cls) {
    out += "  <line class=\"";
    out += cls;
    out += "\" x1=\"" + num(f.px(a.x)) + "\" y1=\"" + num(f.py(a.y)) + "\" x2=\"" + num(f.px(b.x)) +
           "\" y2=\"" + num(f.py(b.y)) + "\"/>\n";
}

}  // namespace

std::string render_svg(const PointSet& ps, const SpannerBundle* plane, const HexSpanner* hex,
                       const SvgStyle& style) {
    Frame f{0, 0, 1, 1, style.scale};
    if (!ps.points.empty()) {
        f.x0 = f.x1 = ps[0].x;
        f.y0 = f.y1 = ps[0].y;
        for (const Point2& p : ps.points) {
            f.x0 = std::min(f.x0, p.x);
            f.x1 = std::max(f.x1, p.x);
            f.y0 = std::min(f.y0, p.y);
            f.y1 = std::max(f.y1, p.y);
        }
    }
    f.x0 -= style.margin;
    f.y0 -= style.margin;
    f.x1 += style.margin;
    f.y1 += style.margin;
    const double w = (f.x1 - f.x0) * f.scale, h = (f.y1 - f.y0) * f.scale;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    out += "  <style>\n"
           "    .grid { stroke: #c8c8c8; stroke-width: 0.6; fill: none }\n"
           "    .dt { stroke: #1f4e9c; stroke-width: 1.4 }\n"
           "    .attach { stroke: #d9822b; stroke-width: 1.0; stroke-dasharray: 3 2 }\n"
           "    .star { stroke: #3a8a3a; stroke-width: 1.0 }\n"
           "    .link { stroke: #9c1f4e; stroke-width: 1.2 }\n"
           "    .point { fill: #555 }\n"
           "    .hub { fill: #c0392b }\n"
           "  </style>\n";

    if (style.draw_grid && plane) {
        const GridConfig& g = plane->grid;
        std::string d;
        const long mx0 = static_cast<long>(std::floor((f.x0 - g.offset_x) / GridConfig::side));
        const long mx1 = static_cast<long>(std::ceil((f.x1 - g.offset_x) / GridConfig::side));
        for (long m = mx0; m <= mx1; ++m) {
            const double x = g.x_line(2 * m);
            d += "M" + num(f.px(x)) + " 0V" + num(h);
        }
        const long my0 = static_cast<long>(std::floor((f.y0 - g.offset_y) / GridConfig::side));
        const long my1 = static_cast<long>(std::ceil((f.y1 - g.offset_y) / GridConfig::side));
        for (long m = my0; m <= my1; ++m) {
            const double y = g.y_line(2 * m);
            d += "M0 " + num(f.py(y)) + "H" + num(w);
        }
        out += "  <path class=\"grid\" d=\"" + d + "\"/>\n";
    }

    if (plane) {
        for (const Edge& e : plane->dt_edges) line(out, f, ps[e.u], ps[e.v], "dt");
        for (const Edge& e : plane->attachment_edges) line(out, f, ps[e.u], ps[e.v], "attach");
    }
    if (hex) {
        for (const Edge& e : hex->star_edges) line(out, f, ps[e.u], ps[e.v], "star");
        for (const Edge& e : hex->link_edges) line(out, f, ps[e.u], ps[e.v], "link");
    }
    std::vector<bool> center(ps.points.size(), false);
    if (hex) {
        for (const auto& [cell, v] : hex->centers) center[v] = true;
    }
    for (int i = 0; i < ps.size(); ++i) {
        const bool hub = (plane && plane->hub.contains(i)) || center[i];
        out += "  <circle class=\"" + std::string(hub ? "hub" : "point") + "\" cx=\"" +
               num(f.px(ps[i].x)) + "\" cy=\"" + num(f.py(ps[i].y)) + "\" r=\"" +
               num(style.point_radius * f.scale) + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hopspan
