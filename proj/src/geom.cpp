#include "hopspan/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hopspan/exact.hpp"

namespace hopspan {

using exact::Expansion;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;
constexpr double kDistErrBound = 8.0 * kEps;
// Below this magnitude the filters may be invalidated by underflow.
constexpr double kTiny = 1e-280;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

Expansion squared_norm(const Expansion& dx, const Expansion& dy) {
    return dx * dx + dy * dy;
}

}  // namespace

Segment::Segment(Point2 a_, Point2 b_) : a(a_), b(b_) {
    if (a == b) throw DegenerateError("segment endpoints coincide");
}

Disk::Disk(Point2 c, double r) : center(c), radius(r) {
    if (!(r >= 0.0)) throw PreconditionError("disk radius must be nonnegative");
}

bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double squared_distance(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double distance(const Point2& a, const Point2& b) { return std::sqrt(squared_distance(a, b)); }

int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double bound = kCcwErrBound * (std::fabs(detleft) + std::fabs(detright));
    if (std::fabs(det) > bound && bound > kTiny) return sign_of(det);
    const Expansion acx = Expansion::diff(a.x, c.x);
    const Expansion bcy = Expansion::diff(b.y, c.y);
    const Expansion acy = Expansion::diff(a.y, c.y);
    const Expansion bcx = Expansion::diff(b.x, c.x);
    return (acx * bcy - acy * bcx).sign();
}

Orientation orientation(const Point2& a, const Point2& b, const Point2& c) {
    return static_cast<Orientation>(orient_sign(a, b, c));
}

int incircle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double bound = kIccErrBound * permanent;
    if (std::fabs(det) > bound && bound > kTiny) return sign_of(det);

    const Expansion eadx = Expansion::diff(a.x, d.x), eady = Expansion::diff(a.y, d.y);
    const Expansion ebdx = Expansion::diff(b.x, d.x), ebdy = Expansion::diff(b.y, d.y);
    const Expansion ecdx = Expansion::diff(c.x, d.x), ecdy = Expansion::diff(c.y, d.y);

    const Expansion ea = squared_norm(eadx, eady);
    const Expansion eb = squared_norm(ebdx, ebdy);
    const Expansion ec = squared_norm(ecdx, ecdy);

    const Expansion bc = ebdx * ecdy - ecdx * ebdy;
    const Expansion ca = ecdx * eady - eadx * ecdy;
    const Expansion ab = eadx * ebdy - ebdx * eady;
    return (ea * bc + eb * ca + ec * ab).sign();
}

CirclePosition in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                               const Point2& d) {
    const int o = orient_sign(a, b, c);
    if (o == 0) throw DegenerateError("in_circumcircle: triangle is collinear");
    return static_cast<CirclePosition>(o * incircle_sign(a, b, c, d));
}

int compare_squared_distance(const Point2& a, const Point2& b, const Point2& c,
                             const Point2& d) {
    const double d1 = squared_distance(a, b);
    const double d2 = squared_distance(c, d);
    const double bound = kDistErrBound * (d1 + d2);
    const double diff = d1 - d2;
    if (std::fabs(diff) > bound && bound > kTiny) return sign_of(diff);
    const Expansion e1 = squared_norm(Expansion::diff(a.x, b.x), Expansion::diff(a.y, b.y));
    const Expansion e2 = squared_norm(Expansion::diff(c.x, d.x), Expansion::diff(c.y, d.y));
    return exact::compare(e1, e2);
}

int compare_squared_distance(const Point2& a, const Point2& b, double r2) {
    const double d1 = squared_distance(a, b);
    const double bound = kDistErrBound * d1;
    const double diff = d1 - r2;
    if (std::fabs(diff) > bound && bound > kTiny) return sign_of(diff);
    const Expansion e1 = squared_norm(Expansion::diff(a.x, b.x), Expansion::diff(a.y, b.y));
    return exact::compare(e1, Expansion(r2));
}

bool on_segment_interior(const Point2& p, const Point2& a, const Point2& b) {
    if (p == a || p == b) return false;
    if (orient_sign(a, b, p) != 0) return false;
    if (a.x != b.x) {
        return std::min(a.x, b.x) < p.x && p.x < std::max(a.x, b.x);
    }
    return std::min(a.y, b.y) < p.y && p.y < std::max(a.y, b.y);
}

bool segments_properly_cross(const Point2& a, const Point2& b, const Point2& c,
                             const Point2& d) {
    const int o1 = orient_sign(a, b, c);
    const int o2 = orient_sign(a, b, d);
    const int o3 = orient_sign(c, d, a);
    const int o4 = orient_sign(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;

    if (o1 == 0 && o2 == 0) {
        // Collinear: crossing iff the overlap has positive length.
        const bool use_x = a.x != b.x;
        auto key = [use_x](const Point2& p) { return use_x ? p.x : p.y; };
        const double lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        const double lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        return std::max(lo1, lo2) < std::min(hi1, hi2);
    }
    return on_segment_interior(c, a, b) || on_segment_interior(d, a, b) ||
           on_segment_interior(a, c, d) || on_segment_interior(b, c, d);
}

bool segments_properly_cross(const Segment& s1, const Segment& s2) {
    return segments_properly_cross(s1.a, s1.b, s2.a, s2.b);
}

Disk diametral_disk(const Point2& p, const Point2& q) {
    if (p == q) throw DegenerateError("diametral_disk: p and q coincide");
    const Point2 center{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
    return Disk(center, 0.5 * distance(p, q));
}

bool in_diametral_disk(const Point2& p, const Point2& q, const Point2& x) {
    const double fx = (x.x - p.x) * (x.x - q.x);
    const double fy = (x.y - p.y) * (x.y - q.y);
    const double f = fx + fy;
    const double bound = 5.0 * kEps * (std::fabs(fx) + std::fabs(fy));
    if (std::fabs(f) > bound && bound > kTiny) return f < 0.0;
    const Expansion ex = Expansion::diff(x.x, p.x) * Expansion::diff(x.x, q.x);
    const Expansion ey = Expansion::diff(x.y, p.y) * Expansion::diff(x.y, q.y);
    return (ex + ey).sign() <= 0;
}

bool disk_contains(const Disk& d, const Point2& x) {
    const double d2 = squared_distance(x, d.center);
    const double r2 = d.radius * d.radius;
    const double bound = kDistErrBound * (d2 + r2);
    if (std::fabs(d2 - r2) > bound && bound > kTiny) return d2 < r2;
    const Expansion lhs =
        squared_norm(Expansion::diff(x.x, d.center.x), Expansion::diff(x.y, d.center.y));
    return exact::compare(lhs, Expansion::product(d.radius, d.radius)) <= 0;
}

double convex_reach_bound(double d, double pq_len) {
    if (!(d >= 0.0) || !(pq_len >= 0.0)) {
        throw PreconditionError("convex_reach_bound: lengths must be nonnegative");
    }
    return std::sqrt(d * d + pq_len * pq_len / 4.0);
}

}  // namespace hopspan
