#include "hopspan/hexgrid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hopspan/geom.hpp"

namespace hopspan {

namespace {

constexpr double kR = HexGridConfig::circumradius;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr std::array<HexCoord, 6> kDirections = {
    HexCoord{1, 0}, HexCoord{1, -1}, HexCoord{0, -1},
    HexCoord{-1, 0}, HexCoord{-1, 1}, HexCoord{0, 1}};

HexCoord cube_round(double fq, double fr) {
    const double fs = -fq - fr;
    double q = std::round(fq), r = std::round(fr), s = std::round(fs);
    const double dq = std::fabs(q - fq), dr = std::fabs(r - fr), ds = std::fabs(s - fs);
    if (dq > dr && dq > ds) {
        q = -r - s;
    } else if (dr > ds) {
        r = -q - s;
    }
    return {static_cast<int>(q), static_cast<int>(r)};
}

struct Nearest {
    HexCoord cell;
    double margin;  // distance to the Voronoi boundary of the nearest center
};

Nearest nearest_center(const Point2& p, const HexGridConfig& h) {
    const double x = p.x - h.offset.x;
    const double y = p.y - h.offset.y;
    const double fq = (2.0 / 3.0 * x) / kR;
    const double fr = (-1.0 / 3.0 * x + kSqrt3 / 3.0 * y) / kR;
    HexCoord best = cube_round(fq, fr);
    double best_d2 = squared_distance(p, h.center(best));
    // The rounded cell is almost always right; walk to a local minimum to be
    // safe against rounding in the fractional coordinates.
    for (bool moved = true; moved;) {
        moved = false;
        for (HexCoord d : kDirections) {
            const double d2 = squared_distance(p, h.center(best + d));
            if (d2 < best_d2) {
                best_d2 = d2;
                best = best + d;
                moved = true;
            }
        }
    }
    const Point2 c1 = h.center(best);
    double margin = std::numeric_limits<double>::infinity();
    for (HexCoord d : kDirections) {
        const Point2 c2 = h.center(best + d);
        const double m = (squared_distance(p, c2) - best_d2) / (2.0 * distance(c1, c2));
        margin = std::min(margin, m);
    }
    return {best, margin};
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double wx = p.x - a.x, wy = p.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0 ? (wx * vx + wy * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 proj{a.x + t * vx, a.y + t * vy};
    return distance(p, proj);
}

bool point_in_convex(const Point2& p, const std::array<Point2, 6>& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orient_sign(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
    }
    return true;
}

}  // namespace

Point2 HexGridConfig::center(HexCoord h) const {
    return {offset.x + 1.5 * kR * h.q, offset.y + kSqrt3 * kR * (h.r + 0.5 * h.q)};
}

std::array<Point2, 6> HexGridConfig::vertices(HexCoord h) const {
    const Point2 c = center(h);
    std::array<Point2, 6> out;
    for (int i = 0; i < 6; ++i) {
        const double a = std::numbers::pi / 3.0 * i;
        out[i] = {c.x + kR * std::cos(a), c.y + kR * std::sin(a)};
    }
    return out;
}

double hex_boundary_margin(const Point2& p, const HexGridConfig& h) {
    return nearest_center(p, h).margin;
}

HexCoord hex_cell_of(const Point2& p, const HexGridConfig& h) {
    const Nearest n = nearest_center(p, h);
    if (n.margin < kHexBoundaryTolerance) {
        throw BoundaryError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                            ") lies on a hexagon boundary");
    }
    return n.cell;
}

HexGridConfig choose_hex_offset(std::span<const Point2> points) {
    if (points.empty()) throw PreconditionError("choose_hex_offset: empty point set");
    constexpr double kWantedMargin = 1e-9;
    constexpr int kTries = 256;
    // Additive recurrence over the fundamental domain of the hex lattice.
    constexpr double kA1 = 0.7548776662466927, kA2 = 0.5698402909980532;
    HexGridConfig best{};
    double best_margin = -1.0;
    for (int k = 0; k < kTries; ++k) {
        const double u = std::fmod(k * kA1, 1.0), v = std::fmod(k * kA2, 1.0);
        HexGridConfig h{{u * 1.5 * kR, v * kSqrt3 * kR}};
        double margin = std::numeric_limits<double>::infinity();
        for (const Point2& p : points) {
            margin = std::min(margin, nearest_center(p, h).margin);
            if (margin <= best_margin) break;
        }
        if (margin > best_margin) {
            best_margin = margin;
            best = h;
        }
        if (best_margin >= kWantedMargin) break;
    }
    if (best_margin < kHexBoundaryTolerance) {
        throw BoundaryError("choose_hex_offset: no offset clears the hexagon boundaries");
    }
    return best;
}

double hex_cell_gap(HexCoord d) {
    const HexGridConfig h{};
    const auto a = h.vertices({0, 0});
    const auto b = h.vertices(d);
    for (const Point2& p : a) {
        if (point_in_convex(p, b)) return 0.0;
    }
    for (const Point2& p : b) {
        if (point_in_convex(p, a)) return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            best = std::min(best, point_segment_distance(a[i], b[j], b[(j + 1) % 6]));
            best = std::min(best, point_segment_distance(b[i], a[j], a[(j + 1) % 6]));
        }
    }
    // Adjacent hexagons share an edge; rounding leaves a residue of ~1e-17.
    return best < 1e-12 ? 0.0 : best;
}

const std::vector<HexCoord>& hex_neighborhood_offsets() {
    static const std::vector<HexCoord> offsets = [] {
        std::vector<HexCoord> out;
        for (int q = -3; q <= 3; ++q) {
            for (int r = -3; r <= 3; ++r) {
                if ((q == 0 && r == 0) || std::abs(q + r) > 3) continue;
                if (hex_cell_gap({q, r}) < 1.0 - 1e-9) out.push_back({q, r});
            }
        }
        return out;
    }();
    return offsets;
}

std::size_t hex_neighborhood_pairs_bound() { return hex_neighborhood_offsets().size(); }

}  // namespace hopspan
