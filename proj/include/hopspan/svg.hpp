#pragma once

#include <optional>
#include <string>

#include "hopspan/sparse.hpp"
#include "hopspan/spanner.hpp"

namespace hopspan {

struct SvgStyle {
    double scale = 60.0;  // pixels per unit
    double margin = 0.5;  // units around the bounding box
    double point_radius = 0.035;
    bool draw_grid = true;
};

/// Points plus the grid; edges and hubs when a spanner is given. Grid lines
/// form a single <path>, every edge is one <line>.
std::string render_svg(const PointSet& ps, const SpannerBundle* plane, const HexSpanner* hex,
                       const SvgStyle& style = {});

}  // namespace hopspan
